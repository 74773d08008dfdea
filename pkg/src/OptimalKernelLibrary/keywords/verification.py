# Copyright 2020-     OptimalKernelLibrary contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from robotlibcore import keyword

from OptimalKernelLibrary.base import LibraryComponent
from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.kernels import KernelConstraints
from OptimalKernelLibrary.utils import (is_noney, is_truthy, to_float,
                                        to_int)
from OptimalKernelLibrary.variational import (ConstrainedKernelProblem,
                                              PerturbationTest,
                                              phi_functional, solve_kernel_qp,
                                              solve_with_free_theta,
                                              verify_frac_kernel,
                                              verify_poly_kernel)


class VerificationKeywords(LibraryComponent):

    @keyword
    def solve_kernel_qp(self, degree, r, theta, m, basis='monomial',
                        continuous=False):
        """Solves the kernel QP for a fixed support half-width ``theta``.

        Minimizes the integral of the squared ``r``-th derivative over
        even polynomials of ``degree`` under the constraints of order
        ``2m``. ``basis`` selects how even vanishing moments are read and
        ``continuous`` adds the boundary condition ``K(theta) = 0``.

        Returns the solution object; its ``coefficients``,
        ``objective_value`` and ``kkt_residual`` attributes can be used
        with extended variable syntax.

        Example:
        | ${solution} = | `Solve Kernel QP` | 2 | 0 | 2.23606797749979 | 1 |
        | Should Be True | ${solution.kkt_residual} < 1e-10 |
        """
        constraints = KernelConstraints.for_poly_order(
            to_int(m, 'order m'), basis, is_truthy(continuous))
        problem = ConstrainedKernelProblem(
            to_int(degree, 'degree'), to_int(r, 'objective order'),
            to_float(theta, 'theta'), constraints)
        solution = solve_kernel_qp(problem)
        self.debug('Solved %r: %r.' % (problem, solution))
        return solution

    @keyword
    def solve_with_free_theta(self, m, r=0, basis='legendre'):
        """Finds the support half-width and QP solution for order ``2m``.

        Returns the solution; ``${solution.theta}`` holds the half-width.
        """
        theta, solution = solve_with_free_theta(
            to_int(m, 'order m'), to_int(r, 'objective order'), basis)
        self.info('Free theta for m=%s, r=%s: %.17g.' % (m, r, theta))
        return solution

    @keyword
    def run_perturbation_test(self, kernel, trials=100, seed=None,
                              objective='v2', free_scale=False):
        """Returns the worst relative objective change over random moves.

        ``objective`` is ``v2`` or ``phi``. With ``free_scale`` the order
        moment is left free and every perturbed kernel is dilated back
        onto it. ``seed`` defaults to the seed given when importing the
        library.
        """
        test = PerturbationTest(kernel, objective=objective,
                                free_scale=is_truthy(free_scale),
                                split_rule=self.split_rule)
        worst = test.run(to_int(trials, 'trials'), self.get_seed(seed),
                         self.workers)
        self.info('Worst relative change over %s trials in %d feasible '
                  'directions: %.17g.' % (trials, test.dimension, worst))
        return worst

    @keyword
    def kernel_should_be_locally_optimal(self, kernel, trials=200, seed=None,
                                         objective='v2', free_scale=False,
                                         tolerance=1e-8, message=None):
        """Fails if a random feasible move decreases the objective.

        A decrease is tolerated down to ``-tolerance`` relative.
        """
        worst = self.run_perturbation_test(kernel, trials, seed, objective,
                                           free_scale)
        if worst < -to_float(tolerance, 'tolerance'):
            if is_noney(message):
                message = ('Kernel should have been locally optimal but a '
                           'perturbation changed the objective by %.17g.'
                           % worst)
            raise AssertionError(message)

    @keyword
    def get_phi_functional(self, kernel, beta):
        """Returns ``J_beta(K) * V_2(K)**(2 beta)``."""
        return phi_functional(kernel, to_float(beta, 'order beta'),
                              self.rule, self.split_rule)

    @keyword
    def verify_kernel(self, m=None, beta=None, paper_literal_theta=False,
                      trials=200, seed=0):
        """Cross-checks a closed-form kernel against the oracle.

        Exactly one of ``m`` and ``beta`` must be given. Returns the
        report as a dictionary whose ``passed`` item tells whether all
        checks passed.
        """
        if is_noney(m) == is_noney(beta):
            raise ParameterError('Exactly one of m and beta must be given.')
        trials, seed = to_int(trials, 'trials'), self.get_seed(seed)
        if is_noney(beta):
            report = verify_poly_kernel(to_int(m, 'order m'),
                                        is_truthy(paper_literal_theta),
                                        trials, seed, self.workers)
        else:
            report = verify_frac_kernel(to_float(beta, 'order beta'),
                                        trials, seed, self.workers)
        self.info('Verification of %s %s.' % (
            report['subject'], 'passed' if report['passed'] else 'failed'))
        return report

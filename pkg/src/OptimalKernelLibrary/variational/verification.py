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

import numpy as np
from robot.api import logger

from OptimalKernelLibrary.kernels import (LEGENDRE, MOMENT, ORDER, MASS,
                                          BOUNDARY, KernelConstraints,
                                          build_frac_kernel,
                                          build_poly_kernel, moment_residuals,
                                          v2, v2_closed_form)

from .kktsolver import solve_with_free_theta
from .perturbation import PHI_OBJECTIVE, perturbation_test


RESIDUAL_TOLERANCE = 1e-10
ORACLE_TOLERANCE = 1e-8
KKT_TOLERANCE = 1e-10
DECREASE_TOLERANCE = -1e-8
PHI_DECREASE_TOLERANCE = -1e-6
MAX_ORACLE_M = 4


def oracle_report(solution, worst_decrease=None):
    """Returns the JSON-ready oracle report of a QP solution."""
    return {'problem': solution.problem.describe(),
            'theta': solution.theta,
            'coefficients': np.asarray(solution.coefficients).tolist(),
            'objective': solution.objective_value,
            'kkt_residual': solution.kkt_residual,
            'worst_perturbation_decrease': worst_decrease}


class Verification(object):
    """Collects named checks and renders them as a report."""

    def __init__(self, subject):
        self.subject = subject
        self.checks = {}
        self.notes = []
        self.details = {}

    def check(self, name, value, limit, passed):
        self.checks[name] = {'value': value, 'limit': limit,
                             'passed': bool(passed)}
        if not passed:
            logger.info('%s: check %s failed with value %r (limit %r).'
                        % (self.subject, name, value, limit))

    def at_most(self, name, value, limit):
        self.check(name, value, limit, value < limit)

    def at_least(self, name, value, limit):
        self.check(name, value, limit, value >= limit)

    @property
    def passed(self):
        return all(check['passed'] for check in self.checks.values())

    def report(self):
        report = dict(self.details)
        report.update(subject=self.subject, checks=self.checks,
                      notes=self.notes, passed=self.passed)
        return report


def verify_poly_kernel(m, paper_literal_theta=False, trials=200, seed=0,
                       workers=1):
    """Cross-checks the closed-form kernel of order 2m.

    Checks the Legendre-reading residuals, the ``V_2`` closed form, the
    free-theta QP oracle (for ``m <= 4``) and the perturbation test.
    """
    kernel = build_poly_kernel(m, paper_literal_theta)
    verification = Verification('poly kernel m=%d' % kernel.m)
    constraints = KernelConstraints.for_poly_order(kernel.m, LEGENDRE,
                                                   theta=kernel.theta)
    residuals = moment_residuals(kernel, constraints)
    verification.details['moment_residuals'] = dict(
        (item.name, item.residual) for item in residuals)
    verification.at_most('moment_residuals',
                         max(abs(item.residual) for item in residuals),
                         RESIDUAL_TOLERANCE)
    energy = v2(kernel)
    verification.at_most('v2_closed_form',
                         abs(energy - v2_closed_form(kernel)),
                         RESIDUAL_TOLERANCE)
    verification.details.update(theta=kernel.theta,
                                coefficients=kernel.coeffs.tolist())
    if kernel.m <= MAX_ORACLE_M:
        theta, solution = solve_with_free_theta(kernel.m)
        verification.details.update(oracle_report(solution))
        verification.details['closed_form_theta'] = kernel.theta
        verification.at_most('oracle_theta', abs(theta - kernel.theta),
                             ORACLE_TOLERANCE)
        verification.at_most(
            'oracle_coefficients',
            float(np.max(np.abs(solution.coefficients - kernel.coeffs))),
            ORACLE_TOLERANCE)
        verification.at_most('kkt_residual', solution.kkt_residual,
                             KKT_TOLERANCE)
    else:
        verification.notes.append('QP cross-check skipped for m > %d.'
                                  % MAX_ORACLE_M)
    worst = perturbation_test(kernel, trials, seed, workers=workers)
    verification.details['worst_perturbation_decrease'] = worst
    verification.at_least('perturbation', worst, DECREASE_TOLERANCE)
    if paper_literal_theta:
        verification.notes.append('Kernel built on the printed support '
                                  'half-width.')
    return verification.report()


def verify_frac_kernel(beta, trials=200, seed=0, workers=1):
    """Cross-checks the closed-form kernel of fractional order beta.

    Even vanishing moments below beta are reported but not checked: the
    nonnegative closed form cannot annihilate them.
    """
    kernel = build_frac_kernel(beta)
    verification = Verification('frac kernel beta=%r' % kernel.beta)
    residuals = moment_residuals(kernel)
    verification.details['moment_residuals'] = dict(
        (item.name, item.residual) for item in residuals)
    checked = [item for item in residuals if _is_checked(item.name)]
    verification.at_most('moment_residuals',
                         max(abs(item.residual) for item in checked),
                         RESIDUAL_TOLERANCE)
    unchecked = [item.name for item in residuals if item not in checked]
    if unchecked:
        verification.notes.append('Not annihilated by the closed form: %s.'
                                  % ', '.join(unchecked))
    energy = v2(kernel)
    verification.details.update(theta=kernel.theta, objective=energy,
                                **{'lambda': kernel.lam, 'mu': kernel.mu})
    verification.at_most('v2_closed_form',
                         abs(energy - v2_closed_form(kernel)),
                         RESIDUAL_TOLERANCE)
    verification.check('nonnegative', kernel.minimum(), -1e-12,
                       kernel.minimum() >= -1e-12)
    worst = perturbation_test(kernel, trials, seed, workers=workers)
    verification.details['worst_perturbation_decrease'] = worst
    verification.at_least('perturbation', worst, DECREASE_TOLERANCE)
    worst_phi = perturbation_test(kernel, trials, seed, PHI_OBJECTIVE,
                                  free_scale=True, workers=workers)
    verification.details['worst_phi_decrease'] = worst_phi
    verification.at_least('phi_stationarity', worst_phi,
                          PHI_DECREASE_TOLERANCE)
    if kernel.beta == 2:
        grid = np.linspace(-kernel.theta, kernel.theta, 1001)
        difference = float(np.max(np.abs(kernel.eval(grid)
                                         - build_poly_kernel(1).eval(grid))))
        verification.at_most('coincides_with_m1', difference, 1e-12)
        verification.notes.append('Coincides with the m=1 polynomial '
                                  'kernel.')
    return verification.report()


def _is_checked(name):
    kind = name.split()[0]
    if kind == MOMENT:
        return int(name.split()[1]) % 2 == 1
    return kind in (MASS, ORDER, BOUNDARY)

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

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy import linalg

from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.kernels import (BOUNDARY, LEGENDRE_MOMENT, MASS,
                                          MOMENT, ORDER, j_beta, v2)
from OptimalKernelLibrary.orthopoly import legendre_eval
from OptimalKernelLibrary.quadrature import split_nodes


DELTAS = (1e-2, -1e-2, 1e-3, -1e-3)
FREE_SCALE_DELTAS = (1e-3, -1e-3, 1e-4, -1e-4)
V2_OBJECTIVE = 'v2'
PHI_OBJECTIVE = 'phi'
OBJECTIVES = (V2_OBJECTIVE, PHI_OBJECTIVE)


def phi_functional(kernel, beta, rule=None, split_rule=None):
    """Returns ``J_beta(K) * V_2(K)**(2 beta)``."""
    moment = j_beta(kernel, beta, split_rule)
    if not moment > 0:
        raise ParameterError('Phi needs a positive J_beta, got %.17g.'
                             % moment)
    return moment * v2(kernel, rule, split_rule) ** (2 * beta)


class PerturbationTest(object):
    """Checks local optimality of a kernel against random feasible moves.

    Perturbations ``g`` are even functions in the normalized variable
    ``z = y / theta``: powers ``z**0, z**2, ...`` two degrees past the
    kernel for polynomial kernels, ``1, |z|**beta, z**2, z**4, z**6`` for
    fractional ones. They are projected onto the null space of the
    constraint rows and scaled to the L2 norm of the kernel.

    With ``free_scale`` the order moment is left free and every
    perturbed kernel is dilated back onto it, which multiplies ``V_2`` by
    ``(J / target)**(1 / beta)``. Free-scale runs default to
    ``FREE_SCALE_DELTAS``.
    """

    def __init__(self, kernel, constraints=None, objective=V2_OBJECTIVE,
                 free_scale=False, deltas=None, split_rule=None):
        if objective not in OBJECTIVES:
            raise ParameterError("Objective must be one of %s, got '%s'."
                                 % (', '.join(OBJECTIVES), objective))
        self.kernel = kernel
        self.constraints = constraints or kernel.constraints()
        self.objective = objective
        self.free_scale = free_scale
        if deltas is None:
            deltas = FREE_SCALE_DELTAS if free_scale else DELTAS
        self.deltas = tuple(deltas)
        self.beta = float(self.constraints.order)
        self.target = self.constraints.order_target
        if objective == PHI_OBJECTIVE and not self.target > 0:
            raise ParameterError('Phi needs a positive order moment target.')
        theta = kernel.theta
        self._nodes, self._weights = split_nodes(-theta, theta, 0.0,
                                                 split_rule)
        self._moment_weights = (self._weights
                                * np.abs(self._nodes) ** self.beta)
        self._values = kernel.eval(self._nodes)
        self._norm = np.sqrt(np.dot(self._weights, self._values ** 2))
        self._basis = self._basis_values(self._nodes / theta)
        self._directions = self._feasible_directions()
        self._baseline = self._objective(self._values)

    @property
    def dimension(self):
        return self._directions.shape[1]

    def run(self, trials=100, seed=0, workers=1):
        """Returns the most negative relative objective change found."""
        if trials < 1:
            raise ParameterError('Trial count must be positive, got %s.'
                                 % trials)
        streams = np.random.SeedSequence(seed).spawn(int(trials))
        if workers and workers > 1:
            with ThreadPoolExecutor(max_workers=int(workers)) as pool:
                changes = list(pool.map(self._trial, streams))
        else:
            changes = [self._trial(stream) for stream in streams]
        return float(min(changes))

    def _trial(self, stream):
        generator = np.random.default_rng(stream)
        draw = generator.uniform(-1.0, 1.0, self._basis.shape[0])
        coefficients = self._directions.dot(self._directions.T.dot(draw))
        direction = coefficients.dot(self._basis)
        norm = np.sqrt(np.dot(self._weights, direction ** 2))
        if norm == 0:
            return 0.0
        direction *= self._norm / norm
        changes = []
        for delta in self.deltas:
            value = self._objective(self._values + delta * direction)
            if value is not None:
                changes.append(value / self._baseline - 1.0)
        return min(changes) if changes else 0.0

    def _objective(self, values):
        energy = np.dot(self._weights, values ** 2)
        moment = np.dot(self._moment_weights, values)
        if self.free_scale:
            ratio = moment / self.target
            if not ratio > 0:
                return None
            energy *= ratio ** (1.0 / self.beta)
            moment = self.target
        if self.objective == PHI_OBJECTIVE:
            return moment * energy ** (2 * self.beta)
        return energy

    def _basis_values(self, z):
        magnitude = np.abs(z)
        if self.kernel.is_polynomial:
            exponents = range(0, self.kernel.degree + 5, 2)
            return np.array([magnitude ** exponent for exponent in exponents])
        return np.array([np.ones_like(z), magnitude ** self.kernel.beta,
                         z ** 2, z ** 4, z ** 6])

    def _feasible_directions(self):
        rows = [self._row(row) for row in self.constraints.rows()
                if not (self.free_scale and row.kind == ORDER)]
        directions = linalg.null_space(np.array(rows))
        if not directions.shape[1]:
            raise ParameterError('Constraints leave no feasible perturbation '
                                 'direction.')
        return directions

    def _row(self, row):
        nodes, weights = self._nodes, self._weights
        if row.kind == MASS:
            return self._basis.dot(weights)
        if row.kind == MOMENT:
            return self._basis.dot(weights * nodes ** row.exponent)
        if row.kind == LEGENDRE_MOMENT:
            theta = self.constraints.support_halfwidth or self.kernel.theta
            return self._basis.dot(
                weights * legendre_eval(row.exponent, nodes / theta))
        if row.kind == ORDER:
            return self._basis.dot(self._moment_weights)
        if row.kind == BOUNDARY:
            return np.ones(self._basis.shape[0])
        raise ParameterError("Unknown constraint kind '%s'." % row.kind)


def perturbation_test(kernel, trials=100, seed=0, objective=V2_OBJECTIVE,
                      free_scale=False, constraints=None, workers=1):
    test = PerturbationTest(kernel, constraints, objective, free_scale)
    return test.run(trials, seed, workers)

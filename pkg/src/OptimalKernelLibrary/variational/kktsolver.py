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

from fractions import Fraction
from math import perm

import numpy as np
from robot.api import logger
from scipy import linalg, optimize

from OptimalKernelLibrary.errors import (BracketError, ParameterError,
                                         RankDeficiencyError)
from OptimalKernelLibrary.kernels import (BOUNDARY, LEGENDRE,
                                          LEGENDRE_MOMENT, MASS, MONOMIAL,
                                          MOMENT, ORDER, QUADRATIC_PROGRAM,
                                          KernelConstraints, PolyKernel)
from OptimalKernelLibrary.orthopoly import legendre_coefficients


MAX_DEGREE = 40
THETA_BRACKET = (0.5, 10.0)
THETA_TOLERANCE = 1e-12


def _even_exponents(degree):
    return list(range(0, int(degree) + 1, 2))


def gram_matrix(degree, r, theta):
    """Returns ``int (y**i)^(r) (y**j)^(r) dy`` over [-theta, theta].

    Rows and columns run over the even exponents ``0, 2, ..., degree``.
    """
    exponents = _even_exponents(degree)
    size = len(exponents)
    gram = np.zeros((size, size))
    for row, i in enumerate(exponents):
        for column, j in enumerate(exponents):
            if r > min(i, j):
                continue
            power = i + j - 2 * r + 1
            gram[row, column] = (perm(i, r) * perm(j, r) * 2.0
                                 * theta ** power / power)
    return gram


class ConstrainedKernelProblem(object):
    """Minimize ``int (K^(r))**2`` over even polynomials of ``poly_degree``.

    The kernel is written as ``K(y) = sum(c_k * (y / theta)**(2k))`` and
    the rows of ``constraints`` are imposed as linear equations on ``c``.
    Odd moments vanish for every even ansatz and are left out of the
    system.
    """

    def __init__(self, poly_degree, objective_order, theta, constraints):
        if int(poly_degree) != poly_degree or poly_degree % 2 \
                or not 0 <= poly_degree <= MAX_DEGREE:
            raise ParameterError('Ansatz degree must be an even integer '
                                 'between 0 and %d, got %s.'
                                 % (MAX_DEGREE, poly_degree))
        if int(objective_order) != objective_order or objective_order < 0:
            raise ParameterError('Objective order must be a nonnegative '
                                 'integer, got %s.' % objective_order)
        if theta is None:
            theta = constraints.support_halfwidth
        if theta is None or not theta > 0:
            raise ParameterError('Support half-width must be positive, '
                                 'got %s.' % theta)
        self.poly_degree = int(poly_degree)
        self.objective_order = int(objective_order)
        self.theta = float(theta)
        self.constraints = constraints
        rows = self.active_rows()
        if len(rows) > self.size:
            raise RankDeficiencyError(
                '%d constraints exceed the %d coefficients of a degree %d '
                'ansatz.' % (len(rows), self.size, self.poly_degree))

    @property
    def size(self):
        return self.poly_degree // 2 + 1

    def active_rows(self):
        return [row for row in self.constraints.rows()
                if not (row.kind == MOMENT and row.exponent % 2)]

    def objective_matrix(self):
        """Gram matrix in the normalized coefficients ``c``."""
        return (gram_matrix(self.poly_degree, self.objective_order, 1.0)
                * self.theta ** (1 - 2 * self.objective_order))

    def constraint_system(self):
        """Returns ``(A, b, names)`` with moment rows scaled by theta**-l."""
        rows = self.active_rows()
        matrix = np.zeros((len(rows), self.size))
        target = np.zeros(len(rows))
        for index, row in enumerate(rows):
            matrix[index], target[index] = self._row(row)
        return matrix, target, [row.name for row in rows]

    def _row(self, row):
        theta = self.theta
        powers = 2 * np.arange(self.size)
        if row.kind == MASS:
            return theta * 2.0 / (powers + 1), row.target
        if row.kind in (MOMENT, ORDER):
            exponent = row.exponent
            return (theta * 2.0 / (powers + exponent + 1),
                    row.target * theta ** (-exponent))
        if row.kind == LEGENDRE_MOMENT:
            return theta * _legendre_moments(row.exponent, powers), row.target
        if row.kind == BOUNDARY:
            return np.ones(self.size), row.target
        raise ParameterError("Unknown constraint kind '%s'." % row.kind)

    def describe(self):
        return {'poly_degree': self.poly_degree,
                'objective_order': self.objective_order,
                'theta': self.theta,
                'basis': self.constraints.basis,
                'constraints': [row.name for row in self.active_rows()]}

    def __repr__(self):
        return ('ConstrainedKernelProblem(poly_degree=%d, objective_order=%d, '
                'theta=%r)' % (self.poly_degree, self.objective_order,
                               self.theta))


class QPSolution(object):

    def __init__(self, problem, coefficients, multipliers, objective_value,
                 kkt_residual, constraint_names):
        self.problem = problem
        self.coefficients = coefficients
        self.multipliers = multipliers
        self.objective_value = objective_value
        self.kkt_residual = kkt_residual
        self.constraint_names = constraint_names

    @property
    def theta(self):
        return self.problem.theta

    def order_moment(self, exponent):
        """Returns ``int |y|**exponent K(y) dy`` from the coefficients."""
        powers = 2 * np.arange(self.problem.size)
        return float(self.theta ** (exponent + 1)
                     * np.dot(self.coefficients, 2.0 / (powers + exponent + 1)))

    def to_kernel(self, m=None, order_target=1.0):
        constraints = self.problem.constraints
        if m is None:
            m = int(constraints.order) // 2
        return PolyKernel(m, self.theta, self.coefficients,
                          r=self.problem.objective_order,
                          family=QUADRATIC_PROGRAM, basis=constraints.basis,
                          order_target=order_target)

    def __repr__(self):
        return ('QPSolution(theta=%r, objective_value=%r, kkt_residual=%r)'
                % (self.theta, self.objective_value, self.kkt_residual))


def solve_kernel_qp(problem):
    """Solves the equality constrained QP through its KKT system.

    ``[[2G, A.T], [A, 0]] [c, lambda] = [0, b]`` is factorized as a dense
    symmetric indefinite system. A rank deficient system raises
    ``RankDeficiencyError``.
    """
    gram = problem.objective_matrix()
    matrix, target, names = problem.constraint_system()
    size, count = problem.size, len(target)
    kkt = np.zeros((size + count, size + count))
    kkt[:size, :size] = 2 * gram
    kkt[:size, size:] = matrix.T
    kkt[size:, :size] = matrix
    rank = np.linalg.matrix_rank(kkt)
    if rank < size + count:
        logger.debug('KKT system of %r has rank %d of %d.'
                     % (problem, rank, size + count))
        raise RankDeficiencyError(
            'KKT system is rank deficient (rank %d of %d); the constraints '
            'are dependent or the objective is not definite on the feasible '
            'set.' % (rank, size + count))
    rhs = np.concatenate((np.zeros(size), target))
    solution = linalg.solve(kkt, rhs, assume_a='sym')
    coefficients, multipliers = solution[:size], solution[size:]
    stationarity = 2 * gram.dot(coefficients) + matrix.T.dot(multipliers)
    violation = matrix.dot(coefficients) - target
    residual = float(max(np.max(np.abs(stationarity), initial=0.0),
                         np.max(np.abs(violation), initial=0.0)))
    objective = float(coefficients.dot(gram).dot(coefficients))
    return QPSolution(problem, coefficients, multipliers, objective,
                      residual, names)


def solve_with_free_theta(m, r=0, basis=LEGENDRE, bracket=THETA_BRACKET,
                          xtol=THETA_TOLERANCE):
    """Finds theta so that the QP optimum has ``int y**2m K = +-1``.

    The QP is solved with the ``y**2m`` row removed and the boundary
    condition added; bisection on ``bracket`` then matches the evaluated
    moment. With the monomial basis the optimal shape may carry a
    negative ``y**2m`` moment; the target then is -1.

    Returns ``(theta, solution)``.
    """
    shape = KernelConstraints.for_poly_order(m, basis, continuous=True)
    shape = shape.without_order()
    degree = 2 * int(m) + 2 * int(r)

    def solve(theta):
        problem = ConstrainedKernelProblem(degree, r, theta, shape)
        return solve_kernel_qp(problem)

    target = free_theta_target(m, r, basis)

    def excess(theta):
        return solve(theta).order_moment(2 * m) - target

    lower, upper = bracket
    if excess(lower) * excess(upper) > 0:
        raise BracketError('No sign change of the y**%d moment excess on '
                           '[%s, %s].' % (2 * m, lower, upper))
    theta = optimize.bisect(excess, lower, upper, xtol=xtol, maxiter=200)
    return theta, solve(theta)


def free_theta_target(m, r=0, basis=LEGENDRE):
    """Sign of the ``y**2m`` moment of the optimal shape, as +1 or -1."""
    if basis == LEGENDRE:
        return 1.0
    shape = KernelConstraints.for_poly_order(m, basis, continuous=True)
    problem = ConstrainedKernelProblem(2 * int(m) + 2 * int(r), r, 1.0,
                                       shape.without_order())
    moment = solve_kernel_qp(problem).order_moment(2 * m)
    return 1.0 if moment > 0 else -1.0


def higher_order_kernel(m, r=0):
    """Returns the optimal kernel whose monomial moments vanish below 2m."""
    theta, solution = solve_with_free_theta(m, r, MONOMIAL)
    return solution.to_kernel(m, free_theta_target(m, r, MONOMIAL))


def _legendre_moments(degree, powers):
    coefficients = legendre_coefficients(degree)
    moments = []
    for power in powers:
        total = sum(value * Fraction(2, index + power + 1)
                    for index, value in enumerate(coefficients)
                    if (index + power) % 2 == 0)
        moments.append(float(total))
    return np.array(moments)

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

from collections import namedtuple

import numpy as np

from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.orthopoly import legendre_eval
from OptimalKernelLibrary.quadrature import (DEFAULT_NODES, SPLIT_NODES,
                                             gauss_legendre_rule, integrate,
                                             integrate_split)

from .constraints import BOUNDARY, LEGENDRE_MOMENT, MASS, MOMENT, ORDER
from .polykernel import CLOSED_FORM


MomentResidual = namedtuple('MomentResidual', 'name value target residual')


def evaluate(kernel, y):
    return kernel.eval(y)


def evaluate_deriv(kernel, r, y):
    return kernel.deriv(r, y)


def support_integral(kernel, integrand, rule=None, split_rule=None,
                     split=False):
    """Integrates ``integrand(y)`` over the kernel support.

    Polynomial integrands use one Gauss-Legendre rule over [-theta, theta];
    fractional kernels, and any call with ``split=True``, integrate the two
    halves separately.
    """
    lower, upper = kernel.support
    if kernel.is_polynomial and not split:
        return integrate(integrand, lower, upper,
                         rule or gauss_legendre_rule(DEFAULT_NODES))
    return integrate_split(integrand, lower, upper, 0.0,
                           split_rule or gauss_legendre_rule(SPLIT_NODES))


def v2(kernel, rule=None, split_rule=None):
    """Returns ``V_2(K)``, the integral of the squared kernel."""
    return support_integral(kernel, lambda y: kernel.eval(y) ** 2, rule,
                            split_rule)


def v2_closed_form(kernel):
    """Returns the exact ``V_2`` of a closed-form kernel or ``None``.

    For ``(1 - P_d(y / theta)) / (2 theta)`` the cross term vanishes and
    ``V_2 = (1 / (2 theta)) * (2d + 2) / (2d + 1)``; with ``d = 2m`` this is
    ``(1 / (2 theta)) * (4m + 2) / (4m + 1)``. For ``lambda - mu |y|**beta``
    on its optimal support it is ``(beta + 1)(2 beta + 1)**(-(beta + 1) / beta)``.
    """
    if kernel.family != CLOSED_FORM:
        return None
    if kernel.kind == 'frac':
        beta = kernel.beta
        return (beta + 1) * (2 * beta + 1) ** (-(beta + 1) / beta)
    degree = kernel.legendre_degree
    return (1.0 / (2 * kernel.theta)) * (2 * degree + 2) / (2 * degree + 1)


def v2_printed(m, theta):
    """The ``(4m + 3) / (4m + 1)`` constant as printed, kept for reports."""
    return (1.0 / (2 * theta)) * (4 * m + 3) / (4 * m + 1)


def j_beta(kernel, beta, split_rule=None):
    """Returns ``J_beta(K)``, the integral of ``|y|**beta K(y)``."""
    if beta < 0:
        raise ParameterError('Moment index must be nonnegative, got %s.'
                             % beta)
    return support_integral(
        kernel, lambda y: np.abs(y) ** beta * kernel.eval(y),
        split_rule=split_rule, split=True)


def roughness(kernel, r=0, rule=None, split_rule=None):
    """Returns ``V_{r,2}(K)``, the integral of the squared r-th derivative."""
    return support_integral(kernel, lambda y: kernel.deriv(r, y) ** 2, rule,
                            split_rule)


def moment_residuals(kernel, constraints=None, rule=None, split_rule=None):
    """Returns a ``MomentResidual`` per constraint row.

    ``constraints`` defaults to the kernel's own constraint set. The
    boundary row reports the kernel value at ``theta`` from inside the
    support.
    """
    if constraints is None:
        constraints = kernel.constraints()
    theta = constraints.support_halfwidth or kernel.theta
    residuals = []
    for row in constraints.rows():
        value = _row_value(kernel, row, theta, rule, split_rule)
        residuals.append(MomentResidual(row.name, value, row.target,
                                        value - row.target))
    return residuals


def max_abs_residual(residuals):
    return max(abs(item.residual) for item in residuals)


def _row_value(kernel, row, theta, rule, split_rule):
    if row.kind == MASS:
        return support_integral(kernel, kernel.eval, rule, split_rule)
    if row.kind == MOMENT:
        return support_integral(
            kernel, lambda y: y ** row.exponent * kernel.eval(y), rule,
            split_rule)
    if row.kind == LEGENDRE_MOMENT:
        return support_integral(
            kernel, lambda y: (legendre_eval(row.exponent, y / theta)
                               * kernel.eval(y)), rule, split_rule)
    if row.kind == ORDER:
        integer = float(row.exponent) == int(row.exponent)
        return support_integral(
            kernel, lambda y: np.abs(y) ** row.exponent * kernel.eval(y),
            rule, split_rule, split=not integer)
    if row.kind == BOUNDARY:
        return kernel.eval(kernel.theta)
    raise ParameterError("Unknown constraint kind '%s'." % row.kind)

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

from robot.api import logger

from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.orthopoly import legendre_coefficients, moment_mu

from .constraints import KernelConstraints, MONOMIAL
from .frackernel import FracKernel
from .functionals import moment_residuals
from .polykernel import CLOSED_FORM, PolyKernel
from .product import ProductKernel


MAX_M = 12
MAX_DERIV_DEGREE = 24


def theta_closed_form(m):
    """Support half-width ``[1/(2m+1) - mu(2m)]**(-1/(2m))``."""
    inner = Fraction(1, 2 * m + 1) - moment_mu(2 * m)
    return float(inner) ** (-1.0 / (2 * m))


def theta_printed(m):
    """Support half-width ``[1/(1 - mu(2m))]**(1/(2m))`` as printed."""
    inner = 1 / (1 - moment_mu(2 * m))
    return float(inner) ** (1.0 / (2 * m))


def theta_deriv_printed(m, r):
    degree = 2 * m + 2 * r
    return float(1 - moment_mu(degree)) ** (-1.0 / degree)


def legendre_form_coefficients(degree, theta):
    """Coefficients in ``z**(2k)`` of ``(1 - P_degree(z)) / (2 theta)``."""
    powers = legendre_coefficients(degree)
    even = [-powers[2 * k] for k in range(degree // 2 + 1)]
    even[0] += 1
    return [float(value) / (2 * theta) for value in even]


def build_poly_kernel(m, paper_literal_theta=False):
    """Builds the optimal kernel of order ``2m``.

    ``K(y) = (1 - P_2m(y / theta)) / (2 theta)`` on ``[-theta, theta]``
    with ``theta = [1/(2m+1) - mu(2m)]**(-1/(2m))``. With
    ``paper_literal_theta`` the printed half-width is used instead,
    which does not normalize the ``y**2m`` moment.
    """
    m = _validate_m(m)
    theta = theta_printed(m) if paper_literal_theta \
        else theta_closed_form(m)
    return PolyKernel(m, theta, legendre_form_coefficients(2 * m, theta),
                      family=CLOSED_FORM, legendre_degree=2 * m)


def build_frac_kernel(beta):
    """Builds the optimal kernel ``lambda - mu |y|**beta`` of order beta."""
    beta = float(beta)
    if not beta > 0:
        raise ParameterError('Order beta must be positive, got %s.' % beta)
    scale = (beta + 1) / (2 * beta)
    theta = (2 * beta + 1) ** (1 / beta)
    lam = scale * (2 * beta + 1) ** (-1 / beta)
    mu = scale * (2 * beta + 1) ** (-(beta + 1) / beta)
    return FracKernel(beta, theta, lam, mu)


def build_deriv_kernel(m, r):
    """Builds ``(1 - P_{2m+2r}(y / theta)) / (2 theta)`` for estimating f^(r).

    ``theta = (2m + 1)**(1/(2m))`` normalizes ``int y**2m K`` to one. The
    kernel does not annihilate the even moments below ``2m`` when
    ``m >= 2``; the monomial residuals are attached as ``report`` and the
    printed half-width as ``printed_theta``.
    """
    m = _validate_m(m)
    r = int(r)
    if r < 1 or 2 * m + 2 * r > MAX_DERIV_DEGREE:
        raise ParameterError('Derivative kernels need r >= 1 and '
                             '2m + 2r <= %d, got m=%d, r=%d.'
                             % (MAX_DERIV_DEGREE, m, r))
    degree = 2 * m + 2 * r
    theta = (2.0 * m + 1) ** (1.0 / (2 * m))
    kernel = PolyKernel(m, theta, legendre_form_coefficients(degree, theta),
                        r=r, family=CLOSED_FORM, legendre_degree=degree)
    monomial = KernelConstraints.for_poly_order(m, MONOMIAL, theta=theta)
    report = moment_residuals(kernel, monomial)
    violated = [item for item in report if abs(item.residual) > 1e-10]
    printed_theta = theta_deriv_printed(m, r)
    if violated:
        logger.info('Derivative kernel m=%d, r=%d (theta %.17g, printed '
                    'theta %.17g) violates: %s.'
                    % (m, r, theta, printed_theta,
                       ', '.join('%s residual %.17g' % (item.name,
                                                        item.residual)
                                 for item in violated)))
    return PolyKernel(m, theta, kernel.coeffs, r=r, family=CLOSED_FORM,
                      legendre_degree=degree, printed_theta=printed_theta,
                      report=report)


def build_product_kernel(base, d):
    return ProductKernel(d, base)


def _validate_m(m):
    if int(m) != m or not 1 <= m <= MAX_M:
        raise ParameterError('Order m must be an integer between 1 and %d, '
                             'got %s.' % (MAX_M, m))
    return int(m)

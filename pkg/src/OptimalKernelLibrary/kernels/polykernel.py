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
from numpy.polynomial import polynomial

from OptimalKernelLibrary.errors import ParameterError

from .constraints import KernelConstraints, LEGENDRE, MONOMIAL


CLOSED_FORM = 'closed-form'
QUADRATIC_PROGRAM = 'qp'
CUSTOM = 'custom'


class PolyKernel(object):
    """Even polynomial kernel supported on [-theta, theta].

    ``coeffs[k]`` is the coefficient of ``z**(2k)`` with ``z = y / theta``,
    so ``K(y) = sum(coeffs[k] * (y / theta)**(2k))`` inside the support
    and zero outside. Kernels are immutable.

    ``family`` tells where the coefficients come from: ``closed-form``
    kernels are ``(1 - P_d(z)) / (2 theta)`` with ``legendre_degree`` d,
    ``qp`` kernels come from the quadratic program oracle.
    """
    kind = 'poly'
    is_polynomial = True

    def __init__(self, m, theta, coeffs, r=0, family=CUSTOM,
                 legendre_degree=None, printed_theta=None, report=None,
                 basis=None, order_target=1.0):
        if not theta > 0:
            raise ParameterError('Support half-width must be positive, '
                                 'got %s.' % theta)
        if not len(coeffs):
            raise ParameterError('Kernel needs at least one coefficient.')
        self._m = int(m)
        self._r = int(r)
        self._theta = float(theta)
        self._coeffs = np.array(coeffs, dtype=float)
        self._coeffs.flags.writeable = False
        self._family = family
        self._legendre_degree = legendre_degree
        self._printed_theta = printed_theta
        self._report = tuple(report or ())
        self._basis = basis
        self._order_target = float(order_target)

    @property
    def m(self):
        return self._m

    @property
    def r(self):
        return self._r

    @property
    def theta(self):
        return self._theta

    @property
    def support(self):
        return -self._theta, self._theta

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return 2 * (len(self._coeffs) - 1)

    @property
    def order(self):
        return 2 * self._m

    @property
    def family(self):
        return self._family

    @property
    def legendre_degree(self):
        return self._legendre_degree

    @property
    def printed_theta(self):
        """Support half-width printed for derivative kernels, if any."""
        return self._printed_theta

    @property
    def report(self):
        """Moment residuals attached at construction, if any."""
        return self._report

    @property
    def order_target(self):
        """Value of the y**2m moment, +1 or -1 for signed shapes."""
        return self._order_target

    @property
    def basis(self):
        if self._basis:
            return self._basis
        return LEGENDRE if self._family == CLOSED_FORM else MONOMIAL

    def constraints(self, basis=None):
        constraints = KernelConstraints.for_poly_order(
            self._m, basis or self.basis, continuous=True, theta=self._theta)
        return constraints.with_order_target(self._order_target)

    def eval(self, y):
        y = np.asarray(y, dtype=float)
        z = y / self._theta
        values = polynomial.polyval(z * z, self._coeffs)
        result = np.where(np.abs(y) <= self._theta, values, 0.0)
        return float(result) if result.ndim == 0 else result

    def deriv(self, r, y):
        """Returns the ``r``-th derivative in ``y``.

        At ``|y| == theta`` the interior one-sided value is returned.
        """
        if r < 0:
            raise ParameterError('Derivative order must be nonnegative, '
                                 'got %s.' % r)
        if r == 0:
            return self.eval(y)
        y = np.asarray(y, dtype=float)
        full = np.zeros(2 * len(self._coeffs) - 1)
        full[::2] = self._coeffs
        derived = polynomial.polyder(full, int(r)) / self._theta ** r
        values = polynomial.polyval(y / self._theta, derived)
        result = np.where(np.abs(y) <= self._theta, values, 0.0)
        return float(result) if result.ndim == 0 else result

    def power_coefficients(self):
        """Coefficients of ``y**0, y**2, ...`` in the original variable."""
        powers = self._theta ** (-2.0 * np.arange(len(self._coeffs)))
        return self._coeffs * powers

    def minimum(self, count=10001):
        return float(np.min(self.eval(np.linspace(-self._theta, self._theta,
                                                  count))))

    def is_signed(self, count=10001, tolerance=1e-9):
        """Tells whether the minimum is below ``-tolerance * K(0)``."""
        return self.minimum(count) < -tolerance * abs(self.eval(0.0))

    def __repr__(self):
        return ('PolyKernel(m=%d, r=%d, theta=%r, family=%s)'
                % (self._m, self._r, self._theta, self._family))

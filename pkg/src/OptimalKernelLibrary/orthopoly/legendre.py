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
from math import comb

import numpy as np

from OptimalKernelLibrary.errors import ParameterError


def _as_array(x):
    values = np.asarray(x, dtype=float)
    return values, values.ndim == 0


def _result(values, scalar):
    return float(values) if scalar else values


def legendre_table(k, x):
    """Returns P_0..P_k at ``x`` as an array of shape ``(k + 1,) + x.shape``.

    Uses the three-term recurrence
    ``(j + 1) P_{j+1} = (2j + 1) x P_j - j P_{j-1}``.
    """
    k = _validate_degree(k)
    x = np.asarray(x, dtype=float)
    table = np.empty((k + 1,) + x.shape)
    table[0] = 1.0
    if k > 0:
        table[1] = x
    for j in range(1, k):
        table[j + 1] = ((2 * j + 1) * x * table[j] - j * table[j - 1]) / (j + 1)
    return table


def legendre_eval(k, x):
    """Evaluates the Legendre polynomial P_k at ``x``.

    ``x`` may be a scalar or an array. Values outside [-1, 1] are
    computed from the same recurrence; callers decide whether they
    make sense.
    """
    values, scalar = _as_array(x)
    return _result(legendre_table(k, values)[k], scalar)


def legendre_deriv(k, r, x):
    """Evaluates the ``r``-th derivative of P_k at ``x``.

    Differentiating the three-term recurrence ``r`` times gives
    ``(j + 1) P_{j+1}^(r) = (2j + 1)(x P_j^(r) + r P_j^(r-1)) - j P_{j-1}^(r)``,
    which is run once per derivative order on top of the previous order.
    """
    k = _validate_degree(k)
    if r < 0:
        raise ParameterError('Derivative order must be nonnegative, got %s.'
                             % r)
    values, scalar = _as_array(x)
    if r > k:
        return _result(np.zeros_like(values), scalar)
    lower = legendre_table(k, values)
    for order in range(1, r + 1):
        current = np.zeros_like(lower)
        for j in range(k):
            term = (2 * j + 1) * (values * current[j] + order * lower[j])
            previous = current[j - 1] if j > 0 else 0.0
            current[j + 1] = (term - j * previous) / (j + 1)
        lower = current
    return _result(lower[k], scalar)


def legendre_coefficients(k):
    """Returns the power coefficients of P_k as exact fractions.

    Index ``i`` of the returned list holds the coefficient of ``x**i``.
    """
    k = _validate_degree(k)
    coefficients = [Fraction(0)] * (k + 1)
    for j in range(k // 2 + 1):
        value = (-1) ** j * comb(k, j) * comb(2 * k - 2 * j, k)
        coefficients[k - 2 * j] = Fraction(value, 2 ** k)
    return coefficients


def moment_mu(k):
    """Returns ``mu(k) = (1/2) * integral of x**k P_k(x) over [-1, 1]``.

    The value is ``2**k / ((2k + 1) * C(2k, k))`` as an exact fraction.
    Use ``float()`` on the result for the real value.
    """
    k = _validate_degree(k)
    return Fraction(2 ** k, (2 * k + 1) * comb(2 * k, k))


def dilated_eval(polynomial, x):
    return polynomial.eval(x)


def _validate_degree(k):
    if k < 0 or int(k) != k:
        raise ParameterError('Degree must be a nonnegative integer, got %s.'
                             % k)
    return int(k)


class LegendreBasis(object):

    def __init__(self, max_degree):
        _validate_degree(max_degree)
        self._max_degree = int(max_degree)

    @property
    def max_degree(self):
        return self._max_degree

    def eval(self, k, x):
        self._validate(k)
        return legendre_eval(k, x)

    def deriv(self, k, r, x):
        self._validate(k)
        return legendre_deriv(k, r, x)

    def eval_all(self, x):
        """Returns all degrees up to ``max_degree`` at ``x`` row by row."""
        return legendre_table(self._max_degree, x)

    def _validate(self, k):
        if not 0 <= k <= self._max_degree:
            raise ParameterError('Degree %s is outside basis range 0..%d.'
                                 % (k, self._max_degree))

    def __repr__(self):
        return 'LegendreBasis(max_degree=%d)' % self._max_degree


class DilatedPolynomial(object):
    """Legendre polynomial rescaled to [-theta, theta].

    Evaluates ``(1 / theta) * P_k(x / theta)``. The value is not
    truncated outside the support.
    """

    def __init__(self, degree, theta):
        _validate_degree(degree)
        if not theta > 0:
            raise ParameterError('Support half-width must be positive, '
                                 'got %s.' % theta)
        self._degree = int(degree)
        self._theta = float(theta)

    @property
    def degree(self):
        return self._degree

    @property
    def theta(self):
        return self._theta

    def eval(self, x):
        values, scalar = _as_array(x)
        result = legendre_table(self._degree, values / self._theta)[-1]
        return _result(result / self._theta, scalar)

    def squared_norm(self):
        return (2.0 / self._theta) / (2 * self._degree + 1)

    def __repr__(self):
        return 'DilatedPolynomial(degree=%d, theta=%r)' % (self._degree,
                                                          self._theta)

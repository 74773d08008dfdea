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

from OptimalKernelLibrary.errors import ParameterError

from .constraints import KernelConstraints, MONOMIAL


class FracKernel(object):
    """Kernel ``lambda - mu * |y|**beta`` on [-theta, theta]."""
    kind = 'frac'
    is_polynomial = False
    family = 'closed-form'
    basis = MONOMIAL
    r = 0
    m = None
    report = ()

    def __init__(self, beta, theta, lam, mu):
        for name, value in (('beta', beta), ('theta', theta)):
            if not value > 0:
                raise ParameterError('%s must be positive, got %s.'
                                     % (name.capitalize(), value))
        self._beta = float(beta)
        self._theta = float(theta)
        self._lam = float(lam)
        self._mu = float(mu)

    @property
    def beta(self):
        return self._beta

    @property
    def order(self):
        return self._beta

    @property
    def theta(self):
        return self._theta

    @property
    def support(self):
        return -self._theta, self._theta

    @property
    def lam(self):
        return self._lam

    @property
    def mu(self):
        return self._mu

    def constraints(self, basis=None):
        return KernelConstraints.for_fractional_order(self._beta,
                                                      theta=self._theta)

    def eval(self, y):
        y = np.asarray(y, dtype=float)
        magnitude = np.abs(y)
        values = self._lam - self._mu * magnitude ** self._beta
        result = np.where(magnitude <= self._theta, values, 0.0)
        return float(result) if result.ndim == 0 else result

    def deriv(self, r, y):
        if r == 0:
            return self.eval(y)
        if r != 1:
            raise ParameterError('Fractional kernels support only the first '
                                 'derivative, got order %s.' % r)
        if self._beta < 1:
            raise ParameterError('Kernel with beta %s < 1 has no bounded '
                                 'first derivative.' % self._beta)
        y = np.asarray(y, dtype=float)
        magnitude = np.abs(y)
        values = (-self._mu * self._beta * np.sign(y)
                  * magnitude ** (self._beta - 1))
        result = np.where(magnitude <= self._theta, values, 0.0)
        return float(result) if result.ndim == 0 else result

    def minimum(self, count=10001):
        return float(np.min(self.eval(np.linspace(-self._theta, self._theta,
                                                  count))))

    def is_signed(self, count=10001, tolerance=1e-9):
        """Tells whether the minimum is below ``-tolerance * K(0)``."""
        return self.minimum(count) < -tolerance * abs(self.eval(0.0))

    def __repr__(self):
        return 'FracKernel(beta=%r, theta=%r)' % (self._beta, self._theta)

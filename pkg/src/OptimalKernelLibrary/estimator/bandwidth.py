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

from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.kernels import j_beta, roughness, v2
from OptimalKernelLibrary.utils import parse_number_list, to_float


def mise_bound(h, n, energy, moment, beta):
    """The bound ``V_2 / (n h) + h**(2 beta) J_beta**2``."""
    return energy / (n * h) + h ** (2 * beta) * moment ** 2


def mise_optimal_bandwidth(n, kernel, beta):
    """Returns ``h* = [V_2 / (2 beta n J_beta**2)]**(1 / (2 beta + 1))``."""
    return bound_minimizer(n, v2(kernel), _moment(kernel, beta), beta)


def bound_minimizer(n, energy, moment, beta):
    """Closed-form minimizer in h of ``mise_bound``."""
    n = _validate_size(n)
    return (energy / (2 * beta * n * moment ** 2)) ** (1 / (2 * beta + 1))


def mise_optimal_derivative_bandwidth(n, kernel, r, order=None):
    """Minimizer of ``V_{r,2} / (n h**(1+2r)) + h**(2 order) J**2``."""
    n = _validate_size(n)
    order = kernel.order if order is None else order
    energy = roughness(kernel, r)
    moment = abs(j_beta(kernel, order))
    if not moment > 0:
        raise ParameterError('Derivative bandwidth needs a nonzero order '
                             'moment.')
    scale = (1 + 2 * r) * energy / (2 * order * n * moment ** 2)
    return scale ** (1 / (2 * order + 1 + 2 * r))


def _moment(kernel, beta):
    if not beta > 0:
        raise ParameterError('Order beta must be positive, got %s.' % beta)
    moment = j_beta(kernel, beta)
    if not moment > 0:
        raise ParameterError('MISE optimal bandwidth needs a positive '
                             'J_beta, got %.17g.' % moment)
    return moment


def _validate_size(n):
    if int(n) != n or n < 1:
        raise ParameterError('Sample size must be a positive integer, got '
                             '%s.' % n)
    return int(n)


class BandwidthRule(object):
    """Maps the sample size n to a bandwidth h(n)."""
    variant = None

    def __call__(self, n):
        raise NotImplementedError


class FixedBandwidth(BandwidthRule):
    variant = 'fixed'

    def __init__(self, h):
        self.h = to_float(h, 'bandwidth')
        if not self.h > 0:
            raise ParameterError('Bandwidth must be positive, got %s.' % h)

    def __call__(self, n):
        return self.h

    def __repr__(self):
        return 'fixed:%r' % self.h


class PowerBandwidth(BandwidthRule):
    """``h(n) = c * n**(-gamma)`` with ``gamma`` in (0, 1)."""
    variant = 'power'

    def __init__(self, c=1.0, gamma=0.2):
        self.c = to_float(c, 'bandwidth constant')
        self.gamma = to_float(gamma, 'bandwidth exponent')
        if not self.c > 0:
            raise ParameterError('Bandwidth constant must be positive, got '
                                 '%s.' % c)
        if not 0 < self.gamma < 1:
            raise ParameterError('Bandwidth exponent must be in (0, 1) so '
                                 'that h -> 0 and nh -> inf, got %s.' % gamma)

    def validate_derivative(self, r):
        if not self.gamma < 1.0 / (1 + 2 * r):
            raise ParameterError('Derivative order %d needs a bandwidth '
                                 'exponent below %r, got %r.'
                                 % (r, 1.0 / (1 + 2 * r), self.gamma))

    def __call__(self, n):
        return self.c * n ** (-self.gamma)

    def __repr__(self):
        return 'power:%r,%r' % (self.c, self.gamma)


class MiseOptimalBandwidth(BandwidthRule):
    variant = 'mise'

    def __init__(self, kernel, beta):
        self.kernel = kernel
        self.beta = to_float(beta, 'order beta')
        _moment(kernel, self.beta)

    def __call__(self, n):
        return mise_optimal_bandwidth(n, self.kernel, self.beta)

    def __repr__(self):
        return 'mise:%r' % self.beta


def parse_bandwidth_rule(spec, kernel=None):
    """Parses ``fixed:h``, ``power:c,gamma`` or ``mise:beta``."""
    if isinstance(spec, BandwidthRule):
        return spec
    variant, _, arguments = str(spec).partition(':')
    variant = variant.strip().lower()
    if variant == 'fixed':
        return FixedBandwidth(arguments)
    if variant == 'power':
        values = parse_number_list(arguments, name='bandwidth rule value')
        if len(values) != 2:
            raise ParameterError("Power rule must be 'power:c,gamma', got "
                                 "'%s'." % spec)
        return PowerBandwidth(*values)
    if variant == 'mise':
        if kernel is None:
            raise ParameterError('MISE optimal rule needs a kernel.')
        return MiseOptimalBandwidth(kernel, arguments)
    raise ParameterError("Unknown bandwidth rule '%s'. Use 'fixed:h', "
                         "'power:c,gamma' or 'mise:beta'." % spec)

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

from functools import lru_cache

import numpy as np

from OptimalKernelLibrary.errors import ParameterError, QuadratureError
from OptimalKernelLibrary.orthopoly import legendre_table


DEFAULT_NODES = 64
SPLIT_NODES = 128
MAX_NODES = 256
NEWTON_TOLERANCE = 1e-15
NEWTON_ITERATIONS = 100


class QuadratureRule(object):
    """Gauss-Legendre nodes and weights on [-1, 1].

    Nodes are strictly increasing and symmetric about zero. The rule
    integrates polynomials of degree ``2n - 1`` exactly.
    """

    def __init__(self, nodes, weights):
        self._nodes = np.array(nodes, dtype=float)
        self._weights = np.array(weights, dtype=float)
        self._nodes.flags.writeable = False
        self._weights.flags.writeable = False

    @property
    def n(self):
        return len(self._nodes)

    @property
    def nodes(self):
        return self._nodes

    @property
    def weights(self):
        return self._weights

    def mapped(self, a, b):
        """Returns nodes and weights affinely mapped to [a, b]."""
        half = 0.5 * (b - a)
        middle = 0.5 * (a + b)
        return middle + half * self._nodes, half * self._weights

    def __repr__(self):
        return 'QuadratureRule(n=%d)' % self.n


@lru_cache(maxsize=None)
def gauss_legendre_rule(n):
    """Returns the ``n``-node Gauss-Legendre rule.

    Positive roots of P_n are found by Newton iteration seeded with
    ``cos(pi * (i - 0.25) / (n + 0.5))`` and mirrored to the negative
    half. Weights are ``2 / ((1 - x**2) * P_n'(x)**2)``.
    """
    if int(n) != n or not 1 <= n <= MAX_NODES:
        raise ParameterError('Node count must be an integer between 1 and '
                             '%d, got %s.' % (MAX_NODES, n))
    n = int(n)
    half = n // 2
    roots = np.cos(np.pi * (np.arange(1, half + 1) - 0.25) / (n + 0.5))
    for _ in range(NEWTON_ITERATIONS):
        value, slope = _value_and_slope(n, roots)
        step = value / slope
        roots = roots - step
        if not len(step) or np.max(np.abs(step)) < NEWTON_TOLERANCE:
            break
    else:
        raise QuadratureError('Newton iteration for %d Gauss-Legendre nodes '
                              'did not converge in %d iterations.'
                              % (n, NEWTON_ITERATIONS))
    positive = roots[::-1]
    if n % 2:
        positive = np.concatenate(([0.0], positive))
    _, slope = _value_and_slope(n, positive)
    weights = 2.0 / ((1.0 - positive ** 2) * slope ** 2)
    if n % 2:
        nodes = np.concatenate((-positive[:0:-1], positive))
        weights = np.concatenate((weights[:0:-1], weights))
    else:
        nodes = np.concatenate((-positive[::-1], positive))
        weights = np.concatenate((weights[::-1], weights))
    return QuadratureRule(nodes, weights)


def _value_and_slope(n, x):
    table = legendre_table(n, x)
    value = table[n]
    slope = n * (x * table[n] - table[n - 1]) / (x ** 2 - 1.0)
    return value, slope


def integrate(f, a, b, rule=None):
    """Integrates ``f`` over [a, b] with ``rule`` mapped to the interval.

    ``f`` is called once with the array of mapped nodes.
    """
    if not a < b:
        raise ParameterError('Integration bounds must satisfy a < b, got '
                             '[%s, %s].' % (a, b))
    rule = rule or gauss_legendre_rule(DEFAULT_NODES)
    nodes, weights = rule.mapped(a, b)
    values = np.broadcast_to(np.asarray(f(nodes), dtype=float), nodes.shape)
    return float(np.dot(weights, values))


def split_nodes(a, b, split=0.0, rule=None):
    """Returns nodes and weights on [a, b] graded towards ``split``.

    Each half is mapped with ``y = split +- length * u**2``, which turns
    integrands such as ``|y - split|**beta`` into smooth functions of
    ``u``; half-integer powers become polynomials and integrate exactly.
    Nodes are increasing.
    """
    if not a < split < b:
        raise ParameterError('Split point must satisfy a < split < b, got '
                             '%s, %s, %s.' % (a, split, b))
    rule = rule or gauss_legendre_rule(SPLIT_NODES)
    nodes, weights = rule.mapped(0.0, 1.0)
    left = split - (split - a) * nodes[::-1] ** 2
    right = split + (b - split) * nodes ** 2
    return (np.concatenate((left, right)),
            np.concatenate((2.0 * (split - a) * (nodes * weights)[::-1],
                            2.0 * (b - split) * nodes * weights)))


def integrate_split(f, a, b, split=0.0, rule=None):
    """Integrates over [a, split] and [split, b] separately.

    See ``split_nodes`` for the node placement. Falls back to ``integrate``
    when ``split`` is not inside the interval.
    """
    rule = rule or gauss_legendre_rule(SPLIT_NODES)
    if not a < split < b:
        return integrate(f, a, b, rule)
    nodes, weights = split_nodes(a, b, split, rule)
    values = np.broadcast_to(np.asarray(f(nodes), dtype=float), nodes.shape)
    return float(np.dot(weights, values))

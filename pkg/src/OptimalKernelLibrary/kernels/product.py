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

from functools import reduce

import numpy as np

from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.quadrature import (DEFAULT_NODES,
                                             gauss_legendre_rule, split_nodes)


class ProductKernel(object):
    """Factorized kernel ``V(x_1, ..., x_d) = K(x_1) * ... * K(x_d)``."""

    def __init__(self, d, base):
        if int(d) != d or d < 2:
            raise ParameterError('Product kernel dimension must be an '
                                 'integer >= 2, got %s.' % d)
        self._d = int(d)
        self._base = base

    @property
    def d(self):
        return self._d

    @property
    def base(self):
        return self._base

    @property
    def theta(self):
        return self._base.theta

    def eval(self, points):
        """Evaluates at points given as an array whose last axis is ``d``."""
        points = np.asarray(points, dtype=float)
        if points.shape[-1] != self._d:
            raise ParameterError('Expected points of dimension %d, got %d.'
                                 % (self._d, points.shape[-1]))
        result = np.prod(self._base.eval(points), axis=-1)
        return float(result) if result.ndim == 0 else result

    def integrate(self, rule=None):
        """Integrates over the support cube with a tensorized rule.

        Fractional bases use nodes graded towards zero on every axis.
        """
        rule = rule or gauss_legendre_rule(DEFAULT_NODES)
        theta = self._base.theta
        if self._base.is_polynomial:
            nodes, weights = rule.mapped(-theta, theta)
        else:
            nodes, weights = split_nodes(-theta, theta, 0.0, rule)
        axes = np.meshgrid(*([nodes] * self._d), indexing='ij')
        values = self.eval(np.stack(axes, axis=-1))
        cube = reduce(np.multiply.outer, [weights] * self._d)
        return float(np.sum(cube * values))

    def __repr__(self):
        return 'ProductKernel(d=%d, base=%r)' % (self._d, self._base)

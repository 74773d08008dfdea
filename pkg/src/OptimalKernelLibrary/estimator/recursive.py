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

from OptimalKernelLibrary.errors import DataError, ParameterError

from .estimate import DensityEstimate
from .parzen import _validate_grid, _validate_univariate, kernel_summary


class WolvertonWagnerEstimator(object):
    """Streaming recursive density estimate on a fixed grid.

    After ``n`` observations the grid values equal
    ``(1/n) sum_i K((x - xi_i) / h_i) / h_i`` with ``h_i = rule(i)``;
    each ``update`` costs one kernel evaluation per grid point.
    """

    def __init__(self, kernel, rule, grid):
        self.kernel = kernel
        self.rule = rule
        self.grid = _validate_grid(grid)
        self.n = 0
        self._values = np.zeros(len(self.grid))

    def update(self, x):
        h = self._bandwidth(self.n + 1)
        contribution = self.kernel.eval((self.grid - x) / h) / h
        self.n += 1
        self._values = ((self.n - 1) * self._values + contribution) / self.n
        return self

    def update_all(self, values):
        for value in np.asarray(values, dtype=float).reshape(-1):
            self.update(value)
        return self

    def estimate(self):
        if not self.n:
            raise DataError('No observations have been fed to the '
                            'recursive estimator.')
        return DensityEstimate(self.grid, self._values.copy(),
                               _meta(self.kernel, self.rule, self.n))

    def _bandwidth(self, n):
        h = self.rule(n)
        if not h > 0:
            raise ParameterError('Bandwidth rule %r gave h=%s for n=%d.'
                                 % (self.rule, h, n))
        return h


def wolverton_wagner(data, kernel, rule, grid):
    """Batch form ``(1/n) sum_i K((x - xi_i) / h_i) / h_i``.

    Observations are taken in arrival order; each one only touches the
    grid points within ``theta * h_i`` of it.
    """
    _validate_univariate(data)
    grid = _validate_grid(grid)
    sums = np.zeros(len(grid))
    for index, x in enumerate(data.values, start=1):
        h = rule(index)
        if not h > 0:
            raise ParameterError('Bandwidth rule %r gave h=%s for n=%d.'
                                 % (rule, h, index))
        reach = kernel.theta * h
        start = np.searchsorted(grid, x - reach, side='left')
        stop = np.searchsorted(grid, x + reach, side='right')
        sums[start:stop] += kernel.eval((grid[start:stop] - x) / h) / h
    return DensityEstimate(grid, sums / data.n, _meta(kernel, rule, data.n))


def _meta(kernel, rule, n):
    return {'kernel': kernel_summary(kernel), 'rule': repr(rule), 'n': n,
            'r': 0, 'recursive': True}

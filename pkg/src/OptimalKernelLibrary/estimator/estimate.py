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

import json

import numpy as np
from scipy.integrate import trapezoid

from OptimalKernelLibrary.errors import DataError
from OptimalKernelLibrary.utils import format_float


class DensityEstimate(object):
    """Estimated density, or density derivative, on a grid.

    ``grid`` is an increasing array for one-dimensional estimates and a
    tuple of axes for estimates on a lattice. ``meta`` records the
    kernel, the bandwidth, the sample size and the derivative order.
    """

    def __init__(self, grid, values, meta=None):
        self._grid = grid if isinstance(grid, tuple) \
            else np.asarray(grid, dtype=float)
        self._values = np.asarray(values, dtype=float)
        if not np.all(np.isfinite(self._values)):
            raise DataError('Estimate contains non-finite values.')
        self._meta = dict(meta or {})

    @property
    def grid(self):
        return self._grid

    @property
    def values(self):
        return self._values

    @property
    def meta(self):
        return self._meta

    @property
    def dimension(self):
        return len(self._grid) if isinstance(self._grid, tuple) else 1

    def mass(self):
        """Trapezoid integral over the grid, axis by axis on lattices."""
        if not isinstance(self._grid, tuple):
            return float(trapezoid(self._values, self._grid))
        values = self._values
        for axis in reversed(self._grid):
            values = trapezoid(values, axis, axis=-1)
        return float(values)

    def value_at(self, x):
        """Returns the value at grid point ``x`` of a 1-D estimate."""
        index = int(np.argmin(np.abs(self._grid - x)))
        return float(self._values[index])

    def to_dict(self):
        grid = [axis.tolist() for axis in self._grid] \
            if isinstance(self._grid, tuple) else self._grid.tolist()
        return {'grid': grid, 'values': self._values.tolist(),
                'meta': self._meta}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_tsv(self):
        lines = ['# %s: %s' % (key, _meta_text(self._meta[key]))
                 for key in sorted(self._meta)]
        if isinstance(self._grid, tuple):
            axes = np.meshgrid(*self._grid, indexing='ij')
            header = '\t'.join('x%d' % (index + 1)
                               for index in range(len(axes)))
            lines.append(header + '\tfhat')
            points = zip(*[axis.ravel() for axis in axes] +
                         [self._values.ravel()])
        else:
            lines.append('x\tfhat')
            points = zip(self._grid, self._values)
        lines.extend('\t'.join(format_float(value) for value in point)
                     for point in points)
        return '\n'.join(lines) + '\n'

    def write(self, path, output_format='tsv'):
        if output_format == 'json':
            content = self.to_json() + '\n'
        else:
            content = self.to_tsv()
        with open(path, 'w', encoding='utf-8') as output:
            output.write(content)
        return path

    def __repr__(self):
        return 'DensityEstimate(points=%d, meta=%r)' % (self._values.size,
                                                        self._meta)


def _meta_text(value):
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, sort_keys=True)
    return str(value)

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

import os

import numpy as np
from robotlibcore import keyword

from OptimalKernelLibrary.base import LibraryComponent
from OptimalKernelLibrary.estimator import (Dataset, WolvertonWagnerEstimator,
                                            derivative_estimate,
                                            interval_transform_estimate,
                                            log_transform_estimate,
                                            mise_optimal_bandwidth,
                                            parse_bandwidth_rule,
                                            parzen_rosenblatt,
                                            product_estimate, read_dataset)
from OptimalKernelLibrary.utils import (parse_grid_spec, parse_interval,
                                        parse_number_list, to_float, to_int)


class EstimationKeywords(LibraryComponent):

    @keyword
    def create_dataset(self, *values, dimension=1):
        """Creates a dataset from ``values``.

        Values can be given as separate arguments or as one list. With
        ``dimension`` greater than one the values are read row by row.

        Example:
        | ${data} = | `Create Dataset` | -1.5 | 0 | 2.25 |
        """
        if len(values) == 1 and not isinstance(values[0], str):
            values = values[0]
        return Dataset(parse_number_list(values, name='observation'),
                       to_int(dimension, 'dimension'))

    @keyword
    def load_dataset(self, path, column=0, dimension=1):
        """Reads a dataset from a CSV or JSONL file.

        ``column`` is a column index or a header name in CSV files.
        """
        data = read_dataset(path, column, to_int(dimension, 'dimension'))
        self.info('Read %d observations from %s.' % (data.n, path))
        return data

    @keyword
    def estimate_density(self, data, kernel, h, grid):
        """Returns the Parzen-Rosenblatt estimate on ``grid``.

        ``grid`` is given as ``min:max:count``.

        Example:
        | ${estimate} = | `Estimate Density` | ${data} | ${kernel} | 0.5 | -6:6:1201 |
        """
        return parzen_rosenblatt(data, kernel, to_float(h, 'bandwidth'),
                                 self._grid(grid))

    @keyword
    def estimate_density_recursively(self, data, kernel, rule, grid):
        """Returns the recursive Wolverton-Wagner estimate on ``grid``.

        ``rule`` is ``fixed:h``, ``power:c,gamma`` or ``mise:beta``. The
        observations are fed one at a time in their original order.
        """
        estimator = WolvertonWagnerEstimator(
            kernel, parse_bandwidth_rule(rule, kernel), self._grid(grid))
        return estimator.update_all(data.values).estimate()

    @keyword
    def estimate_density_derivative(self, data, kernel, r, h, grid):
        """Returns the ``r``-th derivative of the density estimate."""
        return derivative_estimate(data, kernel, to_int(r, 'order'),
                                   to_float(h, 'bandwidth'),
                                   self._grid(grid))

    @keyword
    def estimate_log_transformed_density(self, data, kernel, h, grid):
        """Estimates a density on ``(0, inf)`` through ``ln(x)``."""
        return log_transform_estimate(data, kernel, to_float(h, 'bandwidth'),
                                      self._grid(grid))

    @keyword
    def estimate_interval_transformed_density(self, data, kernel, h, grid,
                                              interval):
        """Estimates a density on ``interval`` given as ``a:b``."""
        lower, upper = parse_interval(interval)
        return interval_transform_estimate(data, kernel,
                                           to_float(h, 'bandwidth'),
                                           self._grid(grid), lower, upper)

    @keyword
    def estimate_product_density(self, data, kernel, h, *grids):
        """Estimates a multivariate density with a product kernel.

        One ``min:max:count`` grid is given per dimension.
        """
        return product_estimate(data, kernel, to_float(h, 'bandwidth'),
                                [self._grid(grid) for grid in grids])

    @keyword
    def get_mise_optimal_bandwidth(self, n, kernel, beta):
        """Returns the bandwidth minimizing the MISE bound for ``n``."""
        return mise_optimal_bandwidth(to_int(n, 'sample size'), kernel,
                                      to_float(beta, 'order beta'))

    @keyword
    def estimate_mass_should_be(self, estimate, expected=1, tolerance=1e-3,
                                message=None):
        """Fails unless the trapezoid integral of ``estimate`` is ``expected``."""
        self.assert_within('Estimate mass', estimate.mass(),
                           to_float(expected, 'expected mass'), tolerance,
                           message)

    @keyword
    def write_density_estimate(self, estimate, path, output_format='tsv'):
        """Writes ``estimate`` as TSV or JSON relative to the log directory."""
        path = os.path.join(self.log_dir, path)
        estimate.write(path, output_format.lower())
        self.info('Estimate written to %s.' % path)
        return path

    def _grid(self, grid):
        if isinstance(grid, str):
            return parse_grid_spec(grid)
        return np.asarray(grid, dtype=float)

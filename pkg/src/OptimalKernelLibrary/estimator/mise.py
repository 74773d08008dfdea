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

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.integrate import trapezoid
from scipy.stats import norm

from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.utils import format_float

from .dataset import Dataset
from .parzen import parzen_rosenblatt


MISE_GRID = (-8.0, 8.0, 2001)


class TargetDensity(object):
    """Mixture of normal components with analytic density."""

    def __init__(self, name, weights, means, scales):
        self.name = name
        self.weights = np.asarray(weights, dtype=float)
        self.means = np.asarray(means, dtype=float)
        self.scales = np.asarray(scales, dtype=float)

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        return sum(weight * norm.pdf(x, mean, scale)
                   for weight, mean, scale
                   in zip(self.weights, self.means, self.scales))

    def sample(self, generator, n):
        components = generator.choice(len(self.weights), size=n,
                                      p=self.weights)
        noise = generator.standard_normal(n)
        return self.means[components] + self.scales[components] * noise

    def __repr__(self):
        return 'TargetDensity(%s)' % self.name


TARGETS = {
    'normal': TargetDensity('normal', [1.0], [0.0], [1.0]),
    'mixture': TargetDensity('mixture', [0.5, 0.5], [-1.5, 1.5],
                             [0.5, 0.5]),
}


def builtin_target(name):
    try:
        return TARGETS[name.lower()]
    except KeyError:
        raise ParameterError("Unknown target density '%s'. Available: %s."
                             % (name, ', '.join(sorted(TARGETS))))


class MiseTable(object):

    def __init__(self, rows, slope, intercept):
        self.rows = rows
        self.slope = slope
        self.intercept = intercept

    @property
    def sizes(self):
        return [row[0] for row in self.rows]

    @property
    def mise(self):
        return [row[1] for row in self.rows]

    def slope_between(self, first, last):
        """Log-log slope between two rows given by index."""
        (n1, e1), (n2, e2) = self.rows[first], self.rows[last]
        return float(np.log(e2 / e1) / np.log(n2 / n1))

    def to_tsv(self):
        lines = ['n\tmise']
        lines.extend('%d\t%s' % (n, format_float(value))
                     for n, value in self.rows)
        lines.append('slope\t%s' % format_float(self.slope))
        return '\n'.join(lines) + '\n'


def mise_experiment(target, kernel, n_list, rule, replications=20, seed=0,
                    grid=None, workers=1):
    """Monte Carlo estimate of the MISE of the Parzen-Rosenblatt estimate.

    Replication ``j`` at the ``i``-th sample size draws from the stream
    seeded with ``[seed, i, j]``, so kernels compared on the same seed see
    the same samples and the table does not depend on ``workers``.
    """
    if isinstance(target, str):
        target = builtin_target(target)
    if replications < 1 or not len(n_list):
        raise ParameterError('Experiment needs at least one sample size and '
                             'one replication.')
    if grid is None:
        grid = np.linspace(*MISE_GRID)
    points = np.asarray(grid, dtype=float)
    truth = target.pdf(points)
    rows = []
    for index, n in enumerate(n_list):
        n = int(n)
        h = rule(n)

        def replicate(replication):
            generator = np.random.default_rng([int(seed), index, replication])
            data = Dataset(target.sample(generator, n))
            estimate = parzen_rosenblatt(data, kernel, h, points)
            return trapezoid((estimate.values - truth) ** 2, points)

        if workers and workers > 1:
            with ThreadPoolExecutor(max_workers=int(workers)) as pool:
                errors = list(pool.map(replicate, range(replications)))
        else:
            errors = [replicate(item) for item in range(replications)]
        rows.append((n, float(np.mean(errors))))
    sizes = np.log([row[0] for row in rows])
    values = np.log([row[1] for row in rows])
    if len(rows) > 1:
        slope, intercept = np.polyfit(sizes, values, 1)
    else:
        slope, intercept = float('nan'), float(values[0])
    return MiseTable(rows, float(slope), float(intercept))

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


DERIVATIVE_SIGN = 'derivative of f_n, argument (x - xi) / h'


def kernel_summary(kernel):
    summary = {'type': kernel.kind, 'theta': kernel.theta}
    if kernel.kind == 'frac':
        summary['beta'] = kernel.beta
    else:
        summary.update(m=kernel.m, r=kernel.r, family=kernel.family)
    return summary


def parzen_rosenblatt(data, kernel, h, grid):
    """Returns ``f_n(x) = (1/(n h)) sum K((x - xi_i) / h)`` on ``grid``.

    Only observations within ``theta * h`` of a grid point contribute;
    they are located by binary search in the sorted sample.
    """
    _validate_univariate(data)
    h = _validate_bandwidth(h)
    grid = _validate_grid(grid)
    values = _window_sums(data, kernel.eval, kernel.theta, h, grid)
    values /= data.n * h
    return DensityEstimate(grid, values, {'kernel': kernel_summary(kernel),
                                          'h': h, 'n': data.n, 'r': 0})


def derivative_estimate(data, kernel, r, h, grid):
    """Returns the r-th derivative of the Parzen-Rosenblatt curve.

    ``f_n^(r)(x) = (1/(n h**(1+r))) sum K^(r)((x - xi_i) / h)``.
    """
    _validate_univariate(data)
    r = int(r)
    if r < 0:
        raise ParameterError('Derivative order must be nonnegative, got %s.'
                             % r)
    if r >= 1 and not kernel.is_polynomial:
        raise ParameterError('Derivative estimation needs a polynomial '
                             'kernel.')
    h = _validate_bandwidth(h)
    grid = _validate_grid(grid)
    values = _window_sums(data, lambda y: kernel.deriv(r, y), kernel.theta,
                          h, grid)
    values /= data.n * h ** (1 + r)
    return DensityEstimate(grid, values, {'kernel': kernel_summary(kernel),
                                          'h': h, 'n': data.n, 'r': r,
                                          'sign_convention': DERIVATIVE_SIGN})


def log_transform_estimate(data, kernel, h, grid):
    """Estimates a density on (0, inf) through ``eta = ln(xi)``.

    ``f_xi(t) = f_eta(ln t) / t``.
    """
    _validate_univariate(data)
    values = data.values
    if np.any(values <= 0):
        raise DataError('Log transform needs positive observations.')
    grid = _validate_grid(grid)
    if np.any(grid <= 0):
        raise ParameterError('Log transform needs a grid on (0, inf).')
    transformed = parzen_rosenblatt(data.transformed(np.log), kernel, h,
                                    np.log(grid))
    meta = dict(transformed.meta, transform='log')
    return DensityEstimate(grid, transformed.values / grid, meta)


def interval_transform_estimate(data, kernel, h, grid, lower, upper):
    """Estimates a density on (lower, upper) through a logit transform.

    ``eta = ln((xi - a) / (b - xi))`` and
    ``f_xi(t) = f_eta(eta(t)) * (b - a) / ((t - a)(b - t))``.
    """
    _validate_univariate(data)
    if not upper > lower:
        raise ParameterError('Interval needs lower < upper, got (%s, %s).'
                             % (lower, upper))
    values = data.values
    if np.any(values <= lower) or np.any(values >= upper):
        raise DataError('Observations must lie strictly inside (%s, %s).'
                        % (lower, upper))
    grid = _validate_grid(grid)
    if np.any(grid <= lower) or np.any(grid >= upper):
        raise ParameterError('Grid must lie strictly inside (%s, %s).'
                             % (lower, upper))

    def logit(t):
        return np.log((t - lower) / (upper - t))

    transformed = parzen_rosenblatt(data.transformed(logit), kernel, h,
                                    logit(grid))
    jacobian = (upper - lower) / ((grid - lower) * (upper - grid))
    meta = dict(transformed.meta, transform='interval',
                interval=[lower, upper])
    return DensityEstimate(grid, transformed.values * jacobian, meta)


def product_estimate(data, kernel, h, grid):
    """Returns ``(1/(n h**d)) sum_i prod_j K((x_j - xi_ij) / h)``.

    ``grid`` holds one increasing axis per dimension; the estimate is
    evaluated on their lattice.
    """
    h = _validate_bandwidth(h)
    axes = tuple(_validate_grid(axis) for axis in grid)
    if data.dimension != kernel.d or len(axes) != kernel.d:
        raise DataError('Dimension mismatch: data %d, kernel %d, grid %d.'
                        % (data.dimension, kernel.d, len(axes)))
    if kernel.d not in (2, 3):
        raise ParameterError('Product estimation supports 2 or 3 '
                             'dimensions, got %d.' % kernel.d)
    factors = [kernel.base.eval((axis[np.newaxis, :]
                                 - data.values[:, index, np.newaxis]) / h)
               for index, axis in enumerate(axes)]
    subscripts = 'ia,ib->ab' if kernel.d == 2 else 'ia,ib,ic->abc'
    values = np.einsum(subscripts, *factors) / (data.n * h ** kernel.d)
    meta = {'kernel': dict(kernel_summary(kernel.base), d=kernel.d),
            'h': h, 'n': data.n, 'r': 0}
    return DensityEstimate(axes, values, meta)


def _window_sums(data, function, theta, h, grid):
    ordered = data.sorted_values
    reach = theta * h
    starts = np.searchsorted(ordered, grid - reach, side='left')
    stops = np.searchsorted(ordered, grid + reach, side='right')
    sums = np.zeros(len(grid))
    for index, (x, start, stop) in enumerate(zip(grid, starts, stops)):
        if stop > start:
            sums[index] = np.sum(function((x - ordered[start:stop]) / h))
    return sums


def _validate_univariate(data):
    if data.dimension != 1:
        raise DataError('Univariate estimation needs one-dimensional data, '
                        'got dimension %d.' % data.dimension)


def _validate_bandwidth(h):
    h = float(h)
    if not h > 0:
        raise ParameterError('Bandwidth must be positive, got %s.' % h)
    return h


def _validate_grid(grid):
    grid = np.asarray(grid, dtype=float).reshape(-1)
    if not len(grid):
        raise ParameterError('Grid is empty.')
    if len(grid) > 1 and not np.all(np.diff(grid) > 0):
        raise ParameterError('Grid must be strictly increasing.')
    return grid

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

from OptimalKernelLibrary.utils import format_float

from .constraints import LEGENDRE, MONOMIAL
from .functionals import (max_abs_residual, moment_residuals, v2,
                          v2_closed_form)


def kernel_table(kernel, count=201):
    """Returns ``y<TAB>K(y)`` rows over ``count`` points of the support."""
    grid = np.linspace(-kernel.theta, kernel.theta, int(count))
    lines = ['y\tK(y)']
    lines.extend('%s\t%s' % (format_float(y), format_float(value))
                 for y, value in zip(grid, kernel.eval(grid)))
    return '\n'.join(lines) + '\n'


def kernel_descriptor(kernel, rule=None, split_rule=None):
    """Returns a JSON-ready description of ``kernel``.

    Polynomial kernels list their residuals under both the Legendre and
    the monomial reading of the even vanishing moments.
    """
    descriptor = {'type': kernel.kind,
                  'r': kernel.r,
                  'theta': kernel.theta,
                  'v2': v2(kernel, rule, split_rule),
                  'v2_closed_form': v2_closed_form(kernel)}
    if kernel.kind == 'frac':
        descriptor.update(beta=kernel.beta, **{'lambda': kernel.lam,
                                               'mu': kernel.mu})
        descriptor['moment_residuals'] = _residual_map(
            moment_residuals(kernel, None, rule, split_rule))
        return descriptor
    descriptor.update(m=kernel.m, family=kernel.family,
                      coefficients=kernel.coeffs.tolist(),
                      power_coefficients=kernel.power_coefficients().tolist())
    own = moment_residuals(kernel, None, rule, split_rule)
    descriptor['basis'] = kernel.basis
    descriptor['moment_residuals'] = _residual_map(own)
    descriptor['max_abs_residual'] = max_abs_residual(own)
    other = MONOMIAL if kernel.basis == LEGENDRE else LEGENDRE
    descriptor['%s_residuals' % other] = _residual_map(
        moment_residuals(kernel, kernel.constraints(other), rule,
                         split_rule))
    if kernel.printed_theta is not None:
        descriptor['printed_theta'] = kernel.printed_theta
    if kernel.report:
        descriptor['residual_report'] = _residual_map(kernel.report)
    return descriptor


def _residual_map(residuals):
    return dict((item.name, item.residual) for item in residuals)

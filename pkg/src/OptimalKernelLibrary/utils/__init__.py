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

from .types import (is_falsy, is_noney, is_truthy, parse_number_list,
                    to_float, to_int, to_positive_float)


def format_float(value):
    """Formats with 17 significant digits so that output is byte-stable."""
    return '%.17g' % value


def parse_grid_spec(spec):
    """Parses a ``min:max:count`` grid into an increasing numpy array."""
    parts = spec.split(':') if isinstance(spec, str) else list(spec)
    if len(parts) != 3:
        raise ParameterError("Grid must be given as 'min:max:count', "
                             "got '%s'." % (spec,))
    lower = to_float(parts[0], 'grid minimum')
    upper = to_float(parts[1], 'grid maximum')
    count = to_int(parts[2], 'grid count')
    if not upper > lower or count < 2:
        raise ParameterError("Grid '%s' must have min < max and at least "
                             "two points." % (spec,))
    return np.linspace(lower, upper, count)


def parse_interval(spec):
    parts = spec.split(':') if isinstance(spec, str) else list(spec)
    if len(parts) != 2:
        raise ParameterError("Interval must be given as 'a:b', got '%s'."
                             % (spec,))
    lower, upper = (to_float(part, 'interval bound') for part in parts)
    if not upper > lower:
        raise ParameterError("Interval '%s' must have a < b." % (spec,))
    return lower, upper

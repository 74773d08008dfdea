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

# Robot Framework passes every keyword and import argument as a string
# unless the test data uses ${variables}, so conversions accept both.
from fractions import Fraction

from OptimalKernelLibrary.errors import ParameterError


FALSE_STRINGS = ('FALSE', 'NO', '', 'NONE', '0', 'OFF')


def is_truthy(item):
    if isinstance(item, str):
        return item.upper() not in FALSE_STRINGS
    return bool(item)


def is_falsy(item):
    return not is_truthy(item)


def is_noney(item):
    return item is None or isinstance(item, str) and item.upper() == 'NONE'


def to_float(value, name='value'):
    """Converts ``value`` to float, accepting fractions such as ``1/5``."""
    if isinstance(value, str):
        value = value.strip()
        if '/' in value:
            try:
                return float(Fraction(value))
            except (ValueError, ZeroDivisionError):
                raise ParameterError("Invalid %s '%s'." % (name, value))
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ParameterError("Invalid %s '%s'." % (name, value))


def to_int(value, name='value'):
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ParameterError("Invalid %s '%s'." % (name, value))
    if number != int(number):
        raise ParameterError("%s must be an integer, got '%s'."
                             % (name.capitalize(), value))
    return int(number)


def to_positive_float(value, name='value'):
    number = to_float(value, name)
    if not number > 0:
        raise ParameterError('%s must be positive, got %s.'
                             % (name.capitalize(), value))
    return number


def parse_number_list(value, converter=to_float, name='value'):
    """Parses ``1024,4096`` or an iterable into a list of numbers."""
    if isinstance(value, str):
        value = [item for item in value.split(',') if item.strip()]
    return [converter(item, name) for item in value]

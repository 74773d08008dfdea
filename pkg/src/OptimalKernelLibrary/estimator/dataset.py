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

import csv
import json
import os

import numpy as np

from OptimalKernelLibrary.errors import DataError


class Dataset(object):
    """Immutable sample ``xi_1, ..., xi_n`` in arrival order.

    Multivariate samples are stored row-major with shape ``(n, d)``.
    """

    def __init__(self, values, dimension=1):
        values = np.array(values, dtype=float)
        if dimension > 1:
            values = values.reshape(-1, int(dimension))
        else:
            values = values.reshape(-1)
        if not len(values):
            raise DataError('Dataset is empty.')
        if not np.all(np.isfinite(values)):
            raise DataError('Dataset contains non-finite values.')
        values.flags.writeable = False
        self._values = values
        self._sorted = None

    @property
    def values(self):
        return self._values

    @property
    def n(self):
        return len(self._values)

    @property
    def dimension(self):
        return 1 if self._values.ndim == 1 else self._values.shape[1]

    @property
    def sorted_values(self):
        if self._sorted is None:
            ordered = np.sort(self._values)
            ordered.flags.writeable = False
            self._sorted = ordered
        return self._sorted

    def concatenate(self, other):
        return Dataset(np.concatenate((self._values, other.values)),
                       self.dimension)

    def shifted(self, offset):
        return Dataset(self._values + offset, self.dimension)

    def transformed(self, function):
        return Dataset(function(self._values), self.dimension)

    def __len__(self):
        return self.n

    def __repr__(self):
        return 'Dataset(n=%d, dimension=%d)' % (self.n, self.dimension)


def read_dataset(path, column=0, dimension=1):
    """Reads observations from a CSV or JSONL file.

    JSONL lines hold ``{"x": value}`` or ``{"x": [x1, ..., xd]}``. CSV
    files have one observation per row; ``column`` is an index or a
    header name, and multivariate CSV data uses the first ``dimension``
    columns starting at ``column``.
    """
    if not os.path.isfile(path):
        raise DataError("Input file '%s' does not exist." % path)
    try:
        if os.path.splitext(path)[1].lower() in ('.jsonl', '.json'):
            return _read_jsonl(path, dimension)
        return _read_csv(path, column, dimension)
    except (OSError, UnicodeDecodeError) as error:
        raise DataError("Reading '%s' failed: %s" % (path, error))


def _read_jsonl(path, dimension):
    values = []
    with open(path, encoding='utf-8') as source:
        for number, line in enumerate(source, start=1):
            if not line.strip():
                continue
            try:
                values.append(json.loads(line)['x'])
            except (ValueError, KeyError, TypeError):
                raise DataError("Invalid JSONL record on line %d of '%s'."
                                % (number, path))
    return _to_dataset(values, dimension, path)


def _read_csv(path, column, dimension):
    with open(path, newline='', encoding='utf-8') as source:
        rows = [row for row in csv.reader(source) if row]
    if not rows:
        raise DataError("Input file '%s' is empty." % path)
    index = _column_index(column)
    if index is not None and not 0 <= index < len(rows[0]):
        raise DataError("Column %s not found in '%s'." % (column, path))
    if index is None or not _is_number(rows[0][index]):
        header, rows = rows[0], rows[1:]
        if index is None:
            index = _header_index(header, column, path)
    try:
        values = [[float(row[index + offset]) for offset in range(dimension)]
                  for row in rows]
    except (IndexError, ValueError):
        raise DataError("Column %s of '%s' does not hold %d numeric "
                        "value(s) on every row." % (column, path, dimension))
    return _to_dataset(values, dimension, path)


def _column_index(column):
    try:
        return int(column)
    except (TypeError, ValueError):
        return None


def _header_index(header, column, path):
    names = [name.strip() for name in header]
    if column not in names:
        raise DataError("Column '%s' not found in '%s'." % (column, path))
    return names.index(column)


def _is_number(text):
    try:
        float(text)
    except ValueError:
        return False
    return True


def _to_dataset(values, dimension, path):
    try:
        return Dataset(values, dimension)
    except ValueError:
        raise DataError("Observations in '%s' are not %d-dimensional."
                        % (path, dimension))

import json
import os
import shutil
import tempfile
import unittest

import numpy as np

from OptimalKernelLibrary.errors import DataError
from OptimalKernelLibrary.estimator import Dataset, read_dataset


class DatasetTests(unittest.TestCase):

    def test_values_are_read_only(self):
        data = Dataset([3.0, 1.0, 2.0])
        self.assertEqual(data.n, 3)
        self.assertEqual(len(data), 3)
        self.assertEqual(data.sorted_values.tolist(), [1.0, 2.0, 3.0])
        self.assertEqual(data.values.tolist(), [3.0, 1.0, 2.0])
        with self.assertRaises(ValueError):
            data.values[0] = 0.0

    def test_multivariate(self):
        data = Dataset([1, 2, 3, 4, 5, 6], dimension=2)
        self.assertEqual(data.dimension, 2)
        self.assertEqual(data.n, 3)
        self.assertEqual(data.values[2].tolist(), [5.0, 6.0])

    def test_derived_datasets(self):
        data = Dataset([1.0, 2.0])
        self.assertEqual(data.shifted(1).values.tolist(), [2.0, 3.0])
        self.assertEqual(data.concatenate(Dataset([0.5])).n, 3)
        self.assertEqual(data.transformed(np.log).values[0], 0.0)

    def test_invalid_values(self):
        for values in ([], [1.0, float('nan')], [float('inf')]):
            with self.assertRaises(DataError):
                Dataset(values)

    def test_repr(self):
        self.assertEqual(repr(Dataset([1.0])), 'Dataset(n=1, dimension=1)')


class ReadDatasetTests(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def write(self, name, content):
        path = os.path.join(self.directory, name)
        with open(path, 'w', encoding='utf-8') as output:
            output.write(content)
        return path

    def test_csv_without_header(self):
        path = self.write('data.csv', '1.5\n-2\n0.25\n')
        self.assertEqual(read_dataset(path).values.tolist(), [1.5, -2.0, 0.25])

    def test_csv_with_header_and_column_name(self):
        path = self.write('data.csv', 'id,x\n1,0.5\n2,1.5\n')
        self.assertEqual(read_dataset(path, 'x').values.tolist(), [0.5, 1.5])
        self.assertEqual(read_dataset(path, 1).values.tolist(), [0.5, 1.5])
        self.assertEqual(read_dataset(path, '0').values.tolist(), [1.0, 2.0])

    def test_csv_multivariate(self):
        path = self.write('data.csv', 'a,b\n1,2\n3,4\n')
        data = read_dataset(path, 0, dimension=2)
        self.assertEqual(data.values.tolist(), [[1.0, 2.0], [3.0, 4.0]])

    def test_jsonl(self):
        lines = [json.dumps({'x': value}) for value in (0.5, -1.0)]
        path = self.write('data.jsonl', '\n'.join(lines) + '\n\n')
        self.assertEqual(read_dataset(path).values.tolist(), [0.5, -1.0])

    def test_jsonl_multivariate(self):
        path = self.write('data.jsonl', '{"x": [1, 2]}\n{"x": [3, 4]}\n')
        self.assertEqual(read_dataset(path, dimension=2).n, 2)

    def test_errors(self):
        for name, content, column in [('empty.csv', '', 0),
                                      ('bad.csv', '1\nfoo\n', 0),
                                      ('header.csv', 'x\n1\n', 'y'),
                                      ('range.csv', '1,2\n', 5),
                                      ('bad.jsonl', '{"y": 1}\n', 0),
                                      ('nan.csv', '1\nnan\n', 0)]:
            with self.assertRaises(DataError, msg=name):
                read_dataset(self.write(name, content), column)

    def test_missing_file(self):
        with self.assertRaisesRegex(DataError, 'does not exist'):
            read_dataset(os.path.join(self.directory, 'missing.csv'))

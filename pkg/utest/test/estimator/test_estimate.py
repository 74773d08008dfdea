import json
import os
import shutil
import tempfile
import unittest

import numpy as np

from OptimalKernelLibrary.errors import DataError
from OptimalKernelLibrary.estimator import DensityEstimate


class DensityEstimateTests(unittest.TestCase):

    def setUp(self):
        self.estimate = DensityEstimate([0.0, 0.5, 1.0], [0.25, 0.5, 0.25],
                                        {'h': 0.5, 'n': 3,
                                         'kernel': {'type': 'poly'}})

    def test_mass(self):
        self.assertAlmostEqual(self.estimate.mass(), 0.375, places=15)
        self.assertEqual(self.estimate.dimension, 1)

    def test_value_at_nearest_point(self):
        self.assertEqual(self.estimate.value_at(0.45), 0.5)
        self.assertEqual(self.estimate.value_at(2), 0.25)

    def test_to_tsv(self):
        expected = ('# h: 0.5\n'
                    '# kernel: {"type": "poly"}\n'
                    '# n: 3\n'
                    'x\tfhat\n'
                    '0\t0.25\n'
                    '0.5\t0.5\n'
                    '1\t0.25\n')
        self.assertEqual(self.estimate.to_tsv(), expected)

    def test_to_json(self):
        content = json.loads(self.estimate.to_json())
        self.assertEqual(content['grid'], [0.0, 0.5, 1.0])
        self.assertEqual(content['values'], [0.25, 0.5, 0.25])
        self.assertEqual(content['meta']['n'], 3)

    def test_lattice(self):
        axes = (np.array([0.0, 1.0]), np.array([0.0, 2.0]))
        estimate = DensityEstimate(axes, np.ones((2, 2)))
        self.assertEqual(estimate.dimension, 2)
        self.assertAlmostEqual(estimate.mass(), 2.0, places=15)
        lines = estimate.to_tsv().splitlines()
        self.assertEqual(lines[0], 'x1\tx2\tfhat')
        self.assertEqual(lines[1:], ['0\t0\t1', '0\t2\t1', '1\t0\t1',
                                     '1\t2\t1'])
        self.assertEqual(estimate.to_dict()['grid'], [[0.0, 1.0],
                                                      [0.0, 2.0]])

    def test_non_finite_values(self):
        with self.assertRaises(DataError):
            DensityEstimate([0.0, 1.0], [0.0, float('nan')])

    def test_write(self):
        directory = tempfile.mkdtemp()
        try:
            path = self.estimate.write(os.path.join(directory, 'out.tsv'))
            with open(path, encoding='utf-8') as source:
                self.assertEqual(source.read(), self.estimate.to_tsv())
            path = self.estimate.write(os.path.join(directory, 'out.json'),
                                       'json')
            with open(path, encoding='utf-8') as source:
                self.assertEqual(source.read(),
                                 self.estimate.to_json() + '\n')
        finally:
            shutil.rmtree(directory)

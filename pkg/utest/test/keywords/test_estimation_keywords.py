import os
import shutil
import tempfile
import unittest

import numpy as np
from mockito import mock, unstub

from OptimalKernelLibrary.errors import DataError, ParameterError
from OptimalKernelLibrary.estimator import Dataset, FixedBandwidth, wolverton_wagner
from OptimalKernelLibrary.kernels import build_poly_kernel, build_product_kernel
from OptimalKernelLibrary.keywords import EstimationKeywords


class EstimationKeywordsTest(unittest.TestCase):

    def setUp(self):
        ctx = mock()
        ctx.tolerance = 1e-10
        self.keywords = EstimationKeywords(ctx)
        self.kernel = build_poly_kernel(1)
        generator = np.random.default_rng(42)
        self.data = Dataset(generator.standard_normal(500))

    def tearDown(self):
        unstub()

    def test_create_dataset(self):
        data = self.keywords.create_dataset('-1.5', '0', '2.25')
        self.assertEqual(data.values.tolist(), [-1.5, 0.0, 2.25])
        data = self.keywords.create_dataset([1, 2, 3, 4], dimension='2')
        self.assertEqual(data.dimension, 2)
        with self.assertRaises(DataError):
            self.keywords.create_dataset()
        with self.assertRaises(ParameterError):
            self.keywords.create_dataset('foo')

    def test_load_dataset(self):
        directory = tempfile.mkdtemp()
        try:
            path = os.path.join(directory, 'data.csv')
            with open(path, 'w', encoding='utf-8') as output:
                output.write('x\n1\n2\n')
            self.assertEqual(self.keywords.load_dataset(path, 'x').n, 2)
        finally:
            shutil.rmtree(directory)

    def test_estimate_density_and_mass(self):
        estimate = self.keywords.estimate_density(self.data, self.kernel,
                                                  '0.5', '-6:6:2001')
        self.assertEqual(len(estimate.grid), 2001)
        self.keywords.estimate_mass_should_be(estimate)
        with self.assertRaisesRegex(AssertionError,
                                    'Estimate mass should have been 2'):
            self.keywords.estimate_mass_should_be(estimate, '2')
        with self.assertRaisesRegex(AssertionError, '^foobar$'):
            self.keywords.estimate_mass_should_be(estimate, 2,
                                                  message='foobar')

    def test_grid_as_sequence(self):
        estimate = self.keywords.estimate_density(self.data, self.kernel, 0.5,
                                                  [-1, 0, 1])
        self.assertEqual(estimate.grid.tolist(), [-1.0, 0.0, 1.0])

    def test_recursive_keyword_matches_batch(self):
        estimate = self.keywords.estimate_density_recursively(
            self.data, self.kernel, 'fixed:0.5', '-5:5:101')
        batch = wolverton_wagner(self.data, self.kernel, FixedBandwidth(0.5),
                                 np.linspace(-5, 5, 101))
        self.assertLess(np.max(np.abs(estimate.values - batch.values)),
                        1e-12)

    def test_derivative_and_transforms(self):
        derivative = self.keywords.estimate_density_derivative(
            self.data, self.kernel, '1', '0.5', '-6:6:2001')
        self.assertAlmostEqual(derivative.mass(), 0.0, delta=1e-3)
        positive = Dataset(np.exp(self.data.values))
        estimate = self.keywords.estimate_log_transformed_density(
            positive, self.kernel, 0.5, '0.001:100:20001')
        self.assertEqual(estimate.meta['transform'], 'log')
        bounded = Dataset(1 / (1 + np.exp(-self.data.values)))
        estimate = self.keywords.estimate_interval_transformed_density(
            bounded, self.kernel, 0.5, '0.0001:0.9999:2001', '0:1')
        self.assertEqual(estimate.meta['interval'], [0.0, 1.0])

    def test_product_density(self):
        generator = np.random.default_rng(1)
        data = Dataset(generator.standard_normal((100, 2)), dimension=2)
        estimate = self.keywords.estimate_product_density(
            data, build_product_kernel(self.kernel, 2), '0.8', '-4:4:81',
            '-4:4:81')
        self.assertEqual(estimate.values.shape, (81, 81))

    def test_mise_optimal_bandwidth(self):
        h = self.keywords.get_mise_optimal_bandwidth('1000', self.kernel, '2')
        self.assertAlmostEqual(h, (3 * 5 ** 0.5 / 25 / 4000) ** 0.2,
                               places=10)

    def test_write_density_estimate(self):
        estimate = self.keywords.estimate_density(self.data, self.kernel,
                                                  0.5, '-1:1:3')
        directory = tempfile.mkdtemp()
        try:
            path = self.keywords.write_density_estimate(
                estimate, os.path.join(directory, 'estimate.json'), 'JSON')
            with open(path, encoding='utf-8') as source:
                self.assertEqual(source.read(), estimate.to_json() + '\n')
        finally:
            shutil.rmtree(directory)

import unittest

import numpy as np

from OptimalKernelLibrary.errors import DataError, ParameterError
from OptimalKernelLibrary.estimator import (Dataset, FixedBandwidth,
                                            PowerBandwidth,
                                            WolvertonWagnerEstimator,
                                            parzen_rosenblatt,
                                            wolverton_wagner)
from OptimalKernelLibrary.kernels import build_poly_kernel


class WolvertonWagnerTests(unittest.TestCase):

    def setUp(self):
        self.kernel = build_poly_kernel(1)
        generator = np.random.default_rng(42)
        self.data = Dataset(generator.standard_normal(1000))
        self.grid = np.linspace(-5, 5, 1001)

    def test_fixed_bandwidth_equals_parzen_rosenblatt(self):
        recursive = wolverton_wagner(self.data, self.kernel,
                                     FixedBandwidth(0.5), self.grid)
        plain = parzen_rosenblatt(self.data, self.kernel, 0.5, self.grid)
        self.assertLess(np.max(np.abs(recursive.values - plain.values)),
                        1e-12)

    def test_streaming_equals_batch(self):
        rule = PowerBandwidth(1.0, 0.2)
        batch = wolverton_wagner(self.data, self.kernel, rule, self.grid)
        streaming = WolvertonWagnerEstimator(self.kernel, rule, self.grid)
        streaming.update_all(self.data.values)
        self.assertEqual(streaming.n, 1000)
        self.assertLess(np.max(np.abs(streaming.estimate().values
                                      - batch.values)), 1e-12)

    def test_update_order_matters_for_shrinking_bandwidth(self):
        rule = PowerBandwidth(1.0, 0.5)
        forward = WolvertonWagnerEstimator(self.kernel, rule, self.grid)
        backward = WolvertonWagnerEstimator(self.kernel, rule, self.grid)
        forward.update(0.0).update(1.0)
        backward.update(1.0).update(0.0)
        self.assertGreater(np.max(np.abs(forward.estimate().values
                                         - backward.estimate().values)),
                           1e-3)

    def test_integrates_to_one(self):
        estimate = wolverton_wagner(self.data, self.kernel,
                                    PowerBandwidth(1.0, 0.2),
                                    np.linspace(-6, 6, 2001))
        self.assertAlmostEqual(estimate.mass(), 1.0, delta=1e-3)

    def test_meta(self):
        estimate = wolverton_wagner(self.data, self.kernel,
                                    PowerBandwidth(1.0, 0.2), [0.0])
        self.assertTrue(estimate.meta['recursive'])
        self.assertEqual(estimate.meta['rule'], 'power:1.0,0.2')
        self.assertEqual(estimate.meta['n'], 1000)

    def test_estimate_needs_observations(self):
        estimator = WolvertonWagnerEstimator(self.kernel, FixedBandwidth(1),
                                             self.grid)
        with self.assertRaises(DataError):
            estimator.estimate()

    def test_nonpositive_bandwidth_from_rule(self):
        estimator = WolvertonWagnerEstimator(self.kernel, lambda n: 0.0,
                                             self.grid)
        with self.assertRaises(ParameterError):
            estimator.update(0.0)
        with self.assertRaises(ParameterError):
            wolverton_wagner(self.data, self.kernel, lambda n: -1.0,
                             self.grid)

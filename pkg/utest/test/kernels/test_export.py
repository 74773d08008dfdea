import json
import os
import unittest

import numpy as np
from approvaltests.approvals import verify_all
from approvaltests.reporters.generic_diff_reporter_factory import GenericDiffReporterFactory

from OptimalKernelLibrary.kernels import (build_deriv_kernel,
                                          build_frac_kernel,
                                          build_poly_kernel,
                                          kernel_descriptor, kernel_table)


class KernelExportTests(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        path = os.path.dirname(__file__)
        reporter_json = os.path.abspath(os.path.join(path, os.pardir, 'approvals_reporters.json'))
        factory = GenericDiffReporterFactory()
        factory.load(reporter_json)
        cls.reporter = factory.get_first_working()

    def test_poly_descriptor_keys(self):
        descriptor = kernel_descriptor(build_poly_kernel(2))
        verify_all('keys', sorted(descriptor), reporter=self.reporter)

    def test_deriv_descriptor_keys(self):
        descriptor = kernel_descriptor(build_deriv_kernel(2, 1))
        verify_all('keys', sorted(descriptor), reporter=self.reporter)

    def test_frac_descriptor_keys(self):
        descriptor = kernel_descriptor(build_frac_kernel(1.5))
        verify_all('keys', sorted(descriptor), reporter=self.reporter)

    def test_descriptor_values(self):
        kernel = build_poly_kernel(2)
        descriptor = json.loads(json.dumps(kernel_descriptor(kernel)))
        self.assertEqual(descriptor['type'], 'poly')
        self.assertEqual(descriptor['basis'], 'legendre')
        self.assertEqual(descriptor['coefficients'], kernel.coeffs.tolist())
        self.assertLess(descriptor['max_abs_residual'], 1e-10)
        self.assertAlmostEqual(descriptor['v2'], descriptor['v2_closed_form'],
                               delta=1e-10)
        self.assertAlmostEqual(descriptor['monomial_residuals']['moment 2'],
                               kernel.theta ** 2 / 3, delta=1e-12)

    def test_frac_descriptor_values(self):
        descriptor = kernel_descriptor(build_frac_kernel(2))
        self.assertEqual(descriptor['beta'], 2.0)
        self.assertAlmostEqual(descriptor['lambda'], 3 / (4 * 5 ** 0.5),
                               delta=1e-12)
        self.assertIsNone(descriptor.get('m'))

    def test_kernel_table(self):
        kernel = build_poly_kernel(1)
        text = kernel_table(kernel, count=5)
        lines = text.splitlines()
        self.assertTrue(text.endswith('\n'))
        self.assertEqual(lines[0], 'y\tK(y)')
        self.assertEqual(len(lines), 6)
        rows = np.array([[float(value) for value in line.split('\t')]
                         for line in lines[1:]])
        np.testing.assert_allclose(rows[:, 0],
                                   np.linspace(-kernel.theta, kernel.theta, 5))
        np.testing.assert_allclose(rows[:, 1], kernel.eval(rows[:, 0]),
                                   rtol=0, atol=0)
        self.assertAlmostEqual(rows[0, 1], 0.0, delta=1e-15)

    def test_table_is_byte_stable(self):
        self.assertEqual(kernel_table(build_frac_kernel(1.5)),
                         kernel_table(build_frac_kernel(1.5)))

import math
import unittest

from mockito import mock, unstub

from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.kernels import PolyKernel, build_poly_kernel
from OptimalKernelLibrary.keywords import VerificationKeywords
from OptimalKernelLibrary.quadrature import gauss_legendre_rule


class VerificationKeywordsTest(unittest.TestCase):

    def setUp(self):
        ctx = mock()
        ctx.rule = gauss_legendre_rule(64)
        ctx.split_rule = gauss_legendre_rule(128)
        ctx.tolerance = 1e-10
        ctx.seed = None
        ctx.workers = 1
        self.ctx = ctx
        self.keywords = VerificationKeywords(ctx)

    def tearDown(self):
        unstub()

    def test_solve_kernel_qp(self):
        solution = self.keywords.solve_kernel_qp('2', '0', math.sqrt(5), '1')
        self.assertLess(solution.kkt_residual, 1e-10)
        self.assertAlmostEqual(solution.objective_value,
                               3 * math.sqrt(5) / 25, places=12)

    def test_solve_with_free_theta(self):
        solution = self.keywords.solve_with_free_theta('1')
        self.assertAlmostEqual(solution.theta, math.sqrt(5), places=10)

    def test_seed_is_required(self):
        with self.assertRaisesRegex(ParameterError, 'Seed is required'):
            self.keywords.run_perturbation_test(build_poly_kernel(1), 10)

    def test_seed_from_import(self):
        self.ctx.seed = 4
        first = self.keywords.run_perturbation_test(build_poly_kernel(1), 20)
        second = self.keywords.run_perturbation_test(build_poly_kernel(1), 20,
                                                     seed='4')
        self.assertEqual(first, second)

    def test_locally_optimal(self):
        self.keywords.kernel_should_be_locally_optimal(build_poly_kernel(2),
                                                       '50', '0')

    def test_uniform_kernel_is_not_locally_optimal(self):
        theta = math.sqrt(3)
        uniform = PolyKernel(1, theta, [1 / (2 * theta)])
        with self.assertRaisesRegex(AssertionError, 'locally optimal'):
            self.keywords.kernel_should_be_locally_optimal(
                uniform, 200, 0, free_scale='True')
        with self.assertRaisesRegex(AssertionError, '^foobar$'):
            self.keywords.kernel_should_be_locally_optimal(
                uniform, 200, 0, free_scale=True, message='foobar')

    def test_phi_functional(self):
        kernel = build_poly_kernel(1)
        expected = (3 * math.sqrt(5) / 25) ** 4
        self.assertAlmostEqual(self.keywords.get_phi_functional(kernel, '2'),
                               expected, places=12)

    def test_verify_kernel(self):
        report = self.keywords.verify_kernel(m='1', trials='20')
        self.assertTrue(report['passed'])
        report = self.keywords.verify_kernel(beta='3/2', trials=20, seed=1)
        self.assertTrue(report['passed'])
        report = self.keywords.verify_kernel(m=2, paper_literal_theta=True,
                                             trials=20)
        self.assertFalse(report['passed'])

    def test_verify_kernel_needs_exactly_one_order(self):
        for arguments in ({}, {'m': 1, 'beta': 2}, {'m': 'None',
                                                    'beta': 'None'}):
            with self.assertRaisesRegex(ParameterError, 'Exactly one'):
                self.keywords.verify_kernel(**arguments)

import math
import unittest

from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.kernels import (KernelConstraints, PolyKernel,
                                          build_frac_kernel,
                                          build_poly_kernel, v2)
from OptimalKernelLibrary.variational import (FREE_SCALE_DELTAS,
                                              PHI_OBJECTIVE, PerturbationTest,
                                              higher_order_kernel,
                                              perturbation_test,
                                              phi_functional)


def uniform_kernel():
    theta = math.sqrt(3)
    return PolyKernel(1, theta, [1 / (2 * theta)])


class PerturbationOptimalityTests(unittest.TestCase):

    def test_closed_form_kernels_are_locally_optimal(self):
        kernels = [build_poly_kernel(1), build_poly_kernel(2),
                   build_frac_kernel(1.5), build_frac_kernel(2)]
        for kernel in kernels:
            worst = perturbation_test(kernel, trials=200, seed=0)
            self.assertGreaterEqual(worst, -1e-8, repr(kernel))

    def test_higher_order_kernel_is_locally_optimal(self):
        worst = perturbation_test(higher_order_kernel(2), trials=100, seed=3)
        self.assertGreaterEqual(worst, -1e-8)

    def test_uniform_kernel_is_not_optimal(self):
        worst = perturbation_test(uniform_kernel(), trials=200, seed=0,
                                  free_scale=True)
        self.assertLess(worst, -1e-4)

    def test_phi_is_stationary_for_frac_kernels(self):
        for beta in (1.5, 2.0, 2.5):
            worst = perturbation_test(build_frac_kernel(beta), trials=200,
                                      seed=1, objective=PHI_OBJECTIVE,
                                      free_scale=True)
            self.assertGreaterEqual(worst, -1e-6, 'beta=%s' % beta)

    def test_seeded_runs_are_deterministic(self):
        test = PerturbationTest(build_poly_kernel(2))
        self.assertEqual(test.run(50, seed=11), test.run(50, seed=11))
        self.assertEqual(test.run(50, seed=11, workers=4),
                         test.run(50, seed=11))

    def test_free_scale_uses_small_steps(self):
        test = PerturbationTest(build_frac_kernel(1.5), free_scale=True)
        self.assertEqual(test.deltas, FREE_SCALE_DELTAS)
        self.assertGreater(test.dimension,
                           PerturbationTest(build_frac_kernel(1.5)).dimension)

    def test_invalid_arguments(self):
        kernel = build_poly_kernel(1)
        with self.assertRaises(ParameterError):
            PerturbationTest(kernel, objective='bias')
        with self.assertRaises(ParameterError):
            PerturbationTest(kernel).run(0)
        negative = KernelConstraints.for_poly_order(1).with_order_target(-1)
        with self.assertRaises(ParameterError):
            PerturbationTest(kernel, negative, objective=PHI_OBJECTIVE)

    def test_no_feasible_direction(self):
        kernel = PolyKernel(1, 1.0, [1.0])
        constraints = KernelConstraints(2, range(1, 9), support_halfwidth=1.0)
        with self.assertRaises(ParameterError):
            PerturbationTest(kernel, constraints)


class PhiFunctionalTests(unittest.TestCase):

    def test_value(self):
        kernel = build_frac_kernel(1.5)
        self.assertAlmostEqual(phi_functional(kernel, 1.5), v2(kernel) ** 3,
                               delta=1e-12)

    def test_needs_positive_moment(self):
        with self.assertRaises(ParameterError):
            phi_functional(higher_order_kernel(2), 4)

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

from .builders import (build_deriv_kernel, build_frac_kernel,
                       build_poly_kernel, build_product_kernel,
                       legendre_form_coefficients, theta_closed_form,
                       theta_deriv_printed, theta_printed)
from .constraints import (BOUNDARY, LEGENDRE, LEGENDRE_MOMENT, MASS,
                          MONOMIAL, MOMENT, ORDER, ConstraintRow,
                          KernelConstraints)
from .export import kernel_descriptor, kernel_table
from .frackernel import FracKernel
from .functionals import (MomentResidual, evaluate, evaluate_deriv,
                          j_beta, max_abs_residual, moment_residuals,
                          roughness, support_integral, v2, v2_closed_form,
                          v2_printed)
from .polykernel import CLOSED_FORM, CUSTOM, QUADRATIC_PROGRAM, PolyKernel
from .product import ProductKernel

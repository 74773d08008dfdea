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

from .kktsolver import (ConstrainedKernelProblem, QPSolution,
                        free_theta_target, gram_matrix, higher_order_kernel,
                        solve_kernel_qp, solve_with_free_theta)
from .perturbation import (DELTAS, FREE_SCALE_DELTAS, OBJECTIVES,
                           PHI_OBJECTIVE, V2_OBJECTIVE, PerturbationTest,
                           perturbation_test, phi_functional)
from .verification import (Verification, oracle_report, verify_frac_kernel,
                           verify_poly_kernel)

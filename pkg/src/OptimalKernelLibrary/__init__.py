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

from robotlibcore import DynamicCore

from OptimalKernelLibrary.errors import ParameterError
from OptimalKernelLibrary.keywords import (EstimationKeywords,
                                           KernelKeywords,
                                           SimulationKeywords,
                                           VerificationKeywords)
from OptimalKernelLibrary.quadrature import gauss_legendre_rule
from OptimalKernelLibrary.utils import is_noney, to_float, to_int


__version__ = '1.0.0.dev1'


class OptimalKernelLibrary(DynamicCore):
    """OptimalKernelLibrary builds optimal signed kernels for Robot Framework.

    The library constructs the compactly supported kernels that minimize
    the integral of the squared kernel under moment constraints, checks
    them against an independent quadratic program oracle, and uses them
    for kernel density and density derivative estimation.

    == Table of contents ==

    - `Kernels`
    - `Constraint readings`
    - `Estimation`
    - `Boolean arguments`
    - `Thread support`
    - `Importing`
    - `Shortcuts`
    - `Keywords`

    = Kernels =

    | = Kernel =       | = Keyword =                 | = Form =                                     |
    | order 2m         | `Build Poly Kernel`         | ``(1 - P_2m(y/theta)) / (2 theta)``          |
    | fractional beta  | `Build Frac Kernel`         | ``lambda - mu * abs(y)**beta``               |
    | derivative r     | `Build Deriv Kernel`        | ``(1 - P_(2m+2r)(y/theta)) / (2 theta)``     |
    | higher order     | `Build Higher Order Kernel` | QP optimum with moments ``1..2m-1`` vanishing |
    | product          | `Build Product Kernel`      | ``K(x_1) * ... * K(x_d)``                    |

    All kernels are zero outside ``[-theta, theta]`` and vanish at the
    boundary. Kernels are immutable and can be shared between tests.

    = Constraint readings =

    Even vanishing moments can be read in two ways. With the ``monomial``
    basis they are ``int y**l K(y) dy = 0``; with the ``legendre`` basis
    they are ``int P_l(y/theta) K(y) dy = 0``. The closed-form kernels of
    `Build Poly Kernel` satisfy the Legendre reading exactly and are
    nonnegative. Kernels whose monomial moments vanish, and which
    therefore reduce the bias to the order ``h**2m``, are built with
    `Build Higher Order Kernel`.

    = Estimation =

    Grids are given as ``min:max:count``. Bandwidth rules are given as
    ``fixed:h``, ``power:c,gamma`` for ``h = c * n**-gamma`` or
    ``mise:beta`` for the bandwidth minimizing the MISE bound.

    = Boolean arguments =

    If a Boolean argument is given as a string, it is considered false if
    it is either empty or case-insensitively equal to ``false``, ``no``,
    ``off``, ``0`` or ``none``. Other strings are considered true, and
    other argument types are tested using the same
    [https://docs.python.org/3/library/stdtypes.html#truth-value-testing|rules as in Python].

    | `Build Poly Kernel` | 2 | paper_literal_theta=True  | # Strings are generally true. |
    | `Build Poly Kernel` | 2 | paper_literal_theta=no    | # String no is false.         |

    = Thread support =

    Kernels, datasets and estimates are immutable. Perturbation trials and
    Monte Carlo replications can run on ``workers`` threads; their
    results do not depend on the number of workers.
    """
    ROBOT_LIBRARY_SCOPE = 'GLOBAL'
    ROBOT_LIBRARY_VERSION = __version__

    def __init__(self, nodes=64, split_nodes=128, tolerance=1e-10, seed=None,
                 workers=1):
        """OptimalKernelLibrary can be imported with several optional arguments.

        - ``nodes``:
          Gauss-Legendre node count for polynomial integrands.
        - ``split_nodes``:
          Node count on each half of the support for integrands with a
          kink at zero, such as ``|y|**beta``.
        - ``tolerance``:
          Default tolerance of the ``... Should ...`` keywords.
        - ``seed``:
          Default seed of stochastic keywords. If not given, the seed must
          be passed to each of them.
        - ``workers``:
          Number of threads for perturbation trials and Monte Carlo
          replications.
        """
        self.rule = gauss_legendre_rule(to_int(nodes, 'node count'))
        self.split_rule = gauss_legendre_rule(to_int(split_nodes,
                                                     'node count'))
        self.tolerance = to_float(tolerance, 'tolerance')
        self.seed = None if is_noney(seed) else to_int(seed, 'seed')
        self.workers = to_int(workers, 'worker count')
        if self.workers < 1:
            raise ParameterError('Worker count must be positive, got %s.'
                                 % workers)
        libraries = [
            EstimationKeywords(self),
            KernelKeywords(self),
            SimulationKeywords(self),
            VerificationKeywords(self)
        ]
        DynamicCore.__init__(self, libraries)

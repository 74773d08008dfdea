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

import os

from robotlibcore import keyword

from OptimalKernelLibrary.base import LibraryComponent
from OptimalKernelLibrary.kernels import (KernelConstraints, build_deriv_kernel,
                                          build_frac_kernel, build_poly_kernel,
                                          build_product_kernel, j_beta,
                                          kernel_descriptor, kernel_table,
                                          moment_residuals, roughness, v2)
from OptimalKernelLibrary.utils import (is_noney, is_truthy, to_float,
                                        to_int)
from OptimalKernelLibrary.variational import higher_order_kernel


class KernelKeywords(LibraryComponent):

    @keyword
    def build_poly_kernel(self, m, paper_literal_theta=False):
        """Builds the optimal polynomial kernel of order ``2m``.

        The kernel is ``(1 - P_2m(y / theta)) / (2 theta)`` on
        ``[-theta, theta]`` where ``P_2m`` is the Legendre polynomial.
        ``m`` must be between 1 and 12.

        If ``paper_literal_theta`` is given a true value, the kernel is
        built on the literal printed support half-width instead of the
        normalizing one. That kernel does not normalize the ``y**2m``
        moment and is only useful for comparison.

        Examples:
        | ${kernel} = | `Build Poly Kernel` | 1 |
        | ${kernel} = | `Build Poly Kernel` | 2 | paper_literal_theta=True |
        """
        kernel = build_poly_kernel(to_int(m, 'order m'),
                                   is_truthy(paper_literal_theta))
        self.info('Built %r.' % kernel)
        return kernel

    @keyword
    def build_frac_kernel(self, beta):
        """Builds the optimal kernel ``lambda - mu |y|**beta`` of order ``beta``.

        ``beta`` may be given as a fraction, for example ``3/2``.
        """
        kernel = build_frac_kernel(to_float(beta, 'order beta'))
        self.info('Built %r.' % kernel)
        return kernel

    @keyword
    def build_deriv_kernel(self, m, r):
        """Builds the kernel for estimating the ``r``-th density derivative.

        The moment residuals of the kernel are logged; for ``m >= 2`` the
        even moments below ``2m`` do not vanish.
        """
        kernel = build_deriv_kernel(to_int(m, 'order m'),
                                    to_int(r, 'derivative order'))
        for item in kernel.report:
            self.info('%s: %.17g' % (item.name, item.value))
        return kernel

    @keyword
    def build_higher_order_kernel(self, m):
        """Builds the optimal kernel whose moments ``1..2m-1`` vanish.

        The kernel is computed by the quadratic program oracle. Its
        ``y**2m`` moment is normalized to ``+1`` or ``-1`` depending on
        the sign of the optimal shape.
        """
        return higher_order_kernel(to_int(m, 'order m'))

    @keyword
    def build_product_kernel(self, base, d):
        """Builds the ``d``-dimensional product kernel of ``base``."""
        return build_product_kernel(base, to_int(d, 'dimension'))

    @keyword
    def evaluate_kernel(self, kernel, y):
        """Returns the value of ``kernel`` at ``y``. Zero outside the support."""
        return kernel.eval(to_float(y, 'argument'))

    @keyword
    def evaluate_kernel_derivative(self, kernel, r, y):
        """Returns the ``r``-th derivative of ``kernel`` at ``y``.

        At the support boundary the interior one-sided value is returned.
        """
        return kernel.deriv(to_int(r, 'derivative order'),
                            to_float(y, 'argument'))

    @keyword
    def get_v2(self, kernel):
        """Returns the integral of the squared kernel."""
        return v2(kernel, self.rule, self.split_rule)

    @keyword
    def get_j_beta(self, kernel, beta):
        """Returns the integral of ``|y|**beta`` times the kernel."""
        return j_beta(kernel, to_float(beta, 'order beta'), self.split_rule)

    @keyword
    def get_roughness(self, kernel, r=0):
        """Returns the integral of the squared ``r``-th kernel derivative."""
        return roughness(kernel, to_int(r, 'derivative order'), self.rule,
                         self.split_rule)

    @keyword
    def get_moment_residuals(self, kernel, basis=None):
        """Returns constraint residuals of ``kernel`` as a dictionary.

        ``basis`` selects how even vanishing moments are read:
        ``monomial`` or ``legendre``. By default the basis under which
        the kernel was constructed is used.
        """
        residuals = self._residuals(kernel, basis)
        return dict((item.name, item.residual) for item in residuals)

    @keyword
    def kernel_should_satisfy_constraints(self, kernel, basis=None,
                                          tolerance=None, message=None):
        """Fails unless every constraint residual is within ``tolerance``.

        The default tolerance is the one given when importing the library.

        Examples:
        | `Kernel Should Satisfy Constraints` | ${kernel} |
        | `Kernel Should Satisfy Constraints` | ${kernel} | basis=legendre | tolerance=1e-12 |
        """
        self.assert_residuals(self._residuals(kernel, basis), tolerance,
                              message)

    @keyword
    def kernel_should_be_nonnegative(self, kernel, tolerance=1e-10,
                                     message=None):
        """Fails if ``kernel`` is below ``-tolerance`` on a 10001 point grid."""
        minimum = kernel.minimum()
        if minimum < -to_float(tolerance, 'tolerance'):
            if is_noney(message):
                message = ('Kernel should have been nonnegative but its '
                           'minimum was %.17g.' % minimum)
            raise AssertionError(message)

    @keyword
    def export_kernel_table(self, kernel, path=None, count=201):
        """Writes the ``y<TAB>K(y)`` table of ``kernel`` and returns its path.

        ``path`` is relative to the directory where the log file is
        written. By default the file is ``kernel-table.tsv``.
        """
        path = os.path.join(self.log_dir, path or 'kernel-table.tsv')
        with open(path, 'w', encoding='utf-8') as output:
            output.write(kernel_table(kernel, to_int(count, 'row count')))
        self.info('Kernel table written to %s.' % path)
        return path

    @keyword
    def get_kernel_descriptor(self, kernel):
        """Returns the descriptor of ``kernel`` as a dictionary."""
        return kernel_descriptor(kernel, self.rule, self.split_rule)

    def _residuals(self, kernel, basis):
        constraints = None
        if not is_noney(basis):
            if kernel.kind == 'frac':
                constraints = KernelConstraints.for_fractional_order(
                    kernel.beta, theta=kernel.theta)
            else:
                constraints = kernel.constraints(basis.lower())
        return moment_residuals(kernel, constraints, self.rule,
                                self.split_rule)

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

import math
from collections import namedtuple

from OptimalKernelLibrary.errors import ParameterError


MONOMIAL = 'monomial'
LEGENDRE = 'legendre'
BASES = (MONOMIAL, LEGENDRE)

MASS = 'mass'
MOMENT = 'moment'
LEGENDRE_MOMENT = 'legendre'
ORDER = 'order'
BOUNDARY = 'boundary'


ConstraintRow = namedtuple('ConstraintRow', 'name kind exponent target')


class KernelConstraints(object):
    """Moment conditions an even kernel of a given order has to satisfy.

    ``order`` is the moment index normalized to ``order_target``: ``2m``
    for integer orders or ``beta`` for fractional ones. Even vanishing
    moments are read either as plain monomial moments ``int y**l K`` or,
    with the ``legendre`` basis, as moments against the dilated Legendre
    polynomials ``int P_l(y / theta) K``. Odd moments are always monomial.
    ``continuous`` adds the boundary condition ``K(theta) = 0``.
    """

    def __init__(self, order, vanishing_moments, support_halfwidth=None,
                 basis=MONOMIAL, continuous=True, order_target=1.0,
                 include_order=True):
        if not order > 0:
            raise ParameterError('Kernel order must be positive, got %s.'
                                 % order)
        if basis not in BASES:
            raise ParameterError("Basis must be one of %s, got '%s'."
                                 % (', '.join(BASES), basis))
        if support_halfwidth is not None and not support_halfwidth > 0:
            raise ParameterError('Support half-width must be positive, '
                                 'got %s.' % support_halfwidth)
        self.order = order
        self.vanishing_moments = tuple(int(l) for l in vanishing_moments)
        self.support_halfwidth = support_halfwidth
        self.basis = basis
        self.continuous = bool(continuous)
        self.order_target = float(order_target)
        self.include_order = bool(include_order)

    @classmethod
    def for_poly_order(cls, m, basis=MONOMIAL, continuous=True, theta=None):
        m = int(m)
        if m < 1:
            raise ParameterError('Order m must be at least 1, got %s.' % m)
        return cls(2 * m, range(1, 2 * m), theta, basis, continuous)

    @classmethod
    def for_fractional_order(cls, beta, continuous=True, theta=None):
        if not beta > 0:
            raise ParameterError('Order beta must be positive, got %s.'
                                 % beta)
        return cls(beta, range(1, int(math.ceil(beta))), theta, MONOMIAL,
                   continuous)

    @property
    def is_fractional(self):
        return float(self.order) != int(self.order)

    @property
    def free_theta(self):
        return self.support_halfwidth is None

    def rows(self):
        rows = [ConstraintRow(MASS, MASS, 0, 1.0)]
        for exponent in self.vanishing_moments:
            if self.basis == LEGENDRE and exponent % 2 == 0:
                rows.append(ConstraintRow('legendre %d' % exponent,
                                          LEGENDRE_MOMENT, exponent, 0.0))
            else:
                rows.append(ConstraintRow('moment %d' % exponent, MOMENT,
                                          exponent, 0.0))
        if self.include_order:
            rows.append(ConstraintRow('order %s' % _format_order(self.order),
                                      ORDER, self.order, self.order_target))
        if self.continuous:
            rows.append(ConstraintRow(BOUNDARY, BOUNDARY, None, 0.0))
        return rows

    def without_order(self):
        return self._copy(include_order=False)

    def with_order_target(self, target):
        return self._copy(order_target=target)

    def with_theta(self, theta):
        return self._copy(support_halfwidth=theta)

    def _copy(self, **changes):
        values = dict(order=self.order,
                      vanishing_moments=self.vanishing_moments,
                      support_halfwidth=self.support_halfwidth,
                      basis=self.basis, continuous=self.continuous,
                      order_target=self.order_target,
                      include_order=self.include_order)
        values.update(changes)
        return type(self)(**values)

    def __repr__(self):
        return ('KernelConstraints(order=%s, basis=%s, continuous=%s)'
                % (_format_order(self.order), self.basis, self.continuous))


def _format_order(order):
    if float(order) == int(order):
        return '%d' % order
    return '%r' % float(order)

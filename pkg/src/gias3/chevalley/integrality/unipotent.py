"""
FILE: unipotent.py
LAST MODIFIED: 13-09-2026
DESCRIPTION:
Unique factorization of u in U(Q) as an ordered product of positive root
elements, and the integrality test built on it.

For an order of the positive roots compatible with height, the entry of
u - 1 at a weight shift beta can only come from the chi_beta factor once
every root of smaller height has been peeled off, so

    t_beta = u[r, c] / x_beta[r, c]

at any nonzero entry (r, c) of x_beta, after which chi_beta(-t_beta) u is
the product of the remaining factors.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging

import numpy

from gias3.chevalley.errors import ConsistencyError
from gias3.chevalley.group.group_element import GroupElement, chi_left
from gias3.chevalley.group.words import Chi, GeneratorWord
from gias3.chevalley.tools import exact
from gias3.chevalley.tools.misc import format_rational

log = logging.getLogger(__name__)


class UnipotentCoords(object):
    """ Coefficients t_beta of u = prod_beta chi_beta(t_beta), in a declared
    order of the positive roots.
    """

    def __init__(self, order, coefficients):
        self.order = tuple(order)
        self.coefficients = {beta: exact.to_fraction(coefficients.get(beta, 0)) for beta in self.order}

    def __repr__(self):
        return 'UnipotentCoords({})'.format([(b, str(t)) for b, t in self.items() if t != 0])

    def __getitem__(self, beta):
        return self.coefficients[tuple(beta)]

    def __eq__(self, other):
        if not isinstance(other, UnipotentCoords):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def items(self):
        return [(beta, self.coefficients[beta]) for beta in self.order]

    def is_integral(self):
        return all(t.denominator == 1 for t in self.coefficients.values())

    def is_identity(self):
        return all(t == 0 for t in self.coefficients.values())

    def to_word(self):
        return GeneratorWord(Chi(beta, t) for beta, t in self.items() if t != 0)

    def to_json(self):
        return [{'root': list(beta), 't': format_rational(t)} for beta, t in self.items()]


# ======================================================================#
def check_order(rs, order):
    """ The order must list every positive root once, by nondecreasing height.
    """
    if order is None:
        return rs.height_order()
    order = [tuple(int(x) for x in beta) for beta in order]
    if sorted(order) != sorted(rs.positive_roots):
        raise ValueError('ERROR: unipotent_factorize: order is not a permutation of the positive roots')
    heights = [sum(beta) for beta in order]
    if any(a > b for a, b in zip(heights, heights[1:])):
        raise ValueError('ERROR: unipotent_factorize: order is not compatible with height')
    return order


def check_unipotent_structure(module, matrix):
    """ Raise ValueError unless matrix is 1 on the diagonal and every other
    nonzero entry raises the weight inside one summand.
    """
    off = matrix - exact.identity(module.dim)
    if any(x != 0 for x in numpy.diagonal(off)):
        raise ValueError('ERROR: unipotent_factorize: diagonal is not 1, element is not in U(Q)')
    rows, cols = numpy.nonzero(off != 0)
    if len(rows) == 0:
        return
    same = module.summand_of[rows] == module.summand_of[cols]
    shift = module.depth_vectors[cols] - module.depth_vectors[rows]
    raising = numpy.all(shift >= 0, axis=1) & (shift.sum(axis=1) > 0)
    if not numpy.all(same & raising):
        raise ValueError('ERROR: unipotent_factorize: element does not raise weights, not in U(Q)')


def _matrix_of(u):
    if isinstance(u, GroupElement):
        return u.matrix
    return numpy.asarray(u, dtype=object)


def unipotent_factorize(module, u, order=None):
    """ UnipotentCoords of u in the given order (default height order).
    """
    rs = module.rs
    order = check_order(rs, order)
    current = _matrix_of(u).copy()
    check_unipotent_structure(module, current)

    coeffs = {}
    for beta in order:
        (r, c), x = module.root_action(beta).first_entry()
        t = exact.to_fraction(current[r, c]) / x
        coeffs[beta] = t
        if t != 0:
            current = chi_left(module, beta, -t, current)

    if not exact.is_identity(current):
        raise ValueError('ERROR: unipotent_factorize: nonzero residue, element is not in U(Q)')
    return UnipotentCoords(order, coeffs)


def unipotent_integrality(module, lattice, u, order=None, verify=False):
    """ True iff every coordinate of u is an integer. With verify=True the
    answer is cross-checked against the lattice test.
    """
    if not module.has_regular_summand():
        log.warning('%s has no summand with regular highest weight; integrality is not guaranteed', module)
    coords = unipotent_factorize(module, u, order)
    integral = coords.is_integral()
    if verify:
        if not isinstance(u, GroupElement):
            u = GroupElement(module, _matrix_of(u))
        stable, _ = lattice.stabilizes(u.matrix, u.inverse)
        if stable != integral and module.has_regular_summand():
            raise ConsistencyError(
                'ERROR: unipotent_integrality: coordinates integral={} but lattice stable={}'.format(integral, stable)
            )
    return integral

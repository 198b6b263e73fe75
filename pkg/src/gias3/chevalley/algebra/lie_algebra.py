"""
FILE: lie_algebra.py
LAST MODIFIED: 05-09-2026
DESCRIPTION:
The Lie ring g_Z on the Chevalley basis {x_alpha, h_i}: elements, the
bracket and the Chevalley involution.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from fractions import Fraction

from gias3.chevalley.algebra.structure_constants import StructureConstants
from gias3.chevalley.tools.exact import to_fraction

log = logging.getLogger(__name__)


class LieElement(object):
    """ sum_i h_part[i] h_i + sum_alpha root_part[alpha] x_alpha.

    root_part is keyed by the root tuple and never stores zeros.
    """

    def __init__(self, rank, h_part=None, root_part=None):
        self.rank = rank
        if h_part is None:
            h_part = [0] * rank
        if len(h_part) != rank:
            raise ValueError('ERROR: LieElement: h_part has length {}, rank is {}'.format(len(h_part), rank))
        self.h_part = tuple(to_fraction(c) for c in h_part)
        self.root_part = {}
        for root, c in (root_part or {}).items():
            c = to_fraction(c)
            if c != 0:
                self.root_part[tuple(root)] = c

    def __repr__(self):
        terms = ['{}*h{}'.format(c, i + 1) for i, c in enumerate(self.h_part) if c != 0]
        terms += ['{}*x{}'.format(c, list(r)) for r, c in sorted(self.root_part.items())]
        return 'LieElement({})'.format(' + '.join(terms) if terms else '0')

    def __add__(self, other):
        root_part = dict(self.root_part)
        for r, c in other.root_part.items():
            root_part[r] = root_part.get(r, Fraction(0)) + c
        h_part = [a + b for a, b in zip(self.h_part, other.h_part)]
        return LieElement(self.rank, h_part, root_part)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = to_fraction(s)
        return LieElement(self.rank, [s * c for c in self.h_part],
                          {r: s * c for r, c in self.root_part.items()})

    def __rmul__(self, s):
        return self.scale(s)

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.h_part == other.h_part and self.root_part == other.root_part

    def __hash__(self):
        return hash((self.h_part, tuple(sorted(self.root_part.items()))))

    def is_zero(self):
        return not self.root_part and all(c == 0 for c in self.h_part)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.h_part) and \
            all(c.denominator == 1 for c in self.root_part.values())

    def support(self):
        """ Roots with nonzero coefficient, plus 'h' if the Cartan part is nonzero.
        """
        s = set(self.root_part)
        if any(c != 0 for c in self.h_part):
            s.add('h')
        return s


# ======================================================================#
class ChevalleyAlgebra(object):
    """ Chevalley basis of the simple Lie algebra of a root system.
    """

    def __init__(self, rs, constants=None):
        self.rs = rs
        self.rank = rs.rank
        self.constants = constants if constants is not None else StructureConstants(rs)

    def zero(self):
        return LieElement(self.rank)

    def h(self, i):
        return LieElement(self.rank, [int(j == i) for j in range(self.rank)])

    def x(self, root):
        root = self.rs.check_root(root, 'ChevalleyAlgebra.x')
        return LieElement(self.rank, None, {root: 1})

    def basis(self):
        """ x_alpha for the positive roots, x_-alpha in the same order, then
        h_1 ... h_l.
        """
        return [self.x(r) for r in self.rs.roots] + [self.h(i) for i in range(self.rank)]

    @property
    def dimension(self):
        return len(self.rs.roots) + self.rank

    def bracket(self, a, b):
        rs = self.rs
        h_out = [Fraction(0)] * self.rank
        roots_out = {}

        def add_root(r, c):
            roots_out[r] = roots_out.get(r, Fraction(0)) + c

        # [h, x_beta] = beta(h) x_beta
        for beta, cb in b.root_part.items():
            val = sum((a.h_part[i] * rs.pairing(beta, i) for i in range(self.rank)), Fraction(0))
            if val != 0:
                add_root(beta, val * cb)
        for alpha, ca in a.root_part.items():
            val = sum((b.h_part[i] * rs.pairing(alpha, i) for i in range(self.rank)), Fraction(0))
            if val != 0:
                add_root(alpha, -val * ca)

        for alpha, ca in a.root_part.items():
            for beta, cb in b.root_part.items():
                s = tuple(x + y for x, y in zip(alpha, beta))
                if not any(s):
                    # [x_alpha, x_-alpha] = h_alpha
                    for i, c in enumerate(rs.coroot_coords(alpha)):
                        h_out[i] += ca * cb * c
                else:
                    n = self.constants.n(alpha, beta)
                    if n:
                        add_root(s, ca * cb * n)
        return LieElement(self.rank, h_out, roots_out)

    def involution(self, a):
        """ theta(h) = -h, theta(x_alpha) = -x_-alpha.
        """
        return LieElement(self.rank, [-c for c in a.h_part],
                          {tuple(-x for x in r): -c for r, c in a.root_part.items()})


def bracket(algebra, a, b):
    return algebra.bracket(a, b)


def chevalley_involution(algebra, a):
    return algebra.involution(a)

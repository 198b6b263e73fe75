"""
FILE: structure_constants.py
LAST MODIFIED: 05-09-2026
DESCRIPTION:
Integer structure constants N(a, b) of a Chevalley basis, [x_a, x_b] =
N(a, b) x_{a+b}, fixed by the extraspecial-pair method.

For every non-simple positive root xi the extraspecial pair (alpha, beta)
has alpha the first positive root in height order with xi - alpha positive,
and N(alpha, beta) = +(r + 1) where r is the largest integer with
beta - r alpha a root. All other constants follow from

    N(b, a) = -N(a, b)
    N(-a, -b) = -N(a, b)
    N(a, b) / l(c) = N(b, c) / l(a) = N(c, a) / l(b)      (a + b + c = 0)

and the four-root relation that expresses a special pair of xi through its
extraspecial pair. l() is the squared root length with short roots 1.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from fractions import Fraction

from gias3.chevalley.errors import ConsistencyError

log = logging.getLogger(__name__)

SIGN_CONVENTION = 'extraspecial-positive'


def _add(a, b, k=1):
    return tuple(x + k * y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


class StructureConstants(object):
    """ Table of N(a, b) for all ordered root pairs with a + b a root.
    """

    def __init__(self, rs):
        self.rs = rs
        self.convention = SIGN_CONVENTION
        self.extraspecial = {}
        self._positive = {}
        self._compute_positive()

        self.table = {}
        for a in rs.roots:
            for b in rs.roots:
                if rs.is_root(_add(a, b)):
                    self.table[(a, b)] = self._general(a, b)
        log.debug('%s: %d structure constants', rs.cartan_type, len(self.table))

    def __call__(self, a, b):
        return self.n(a, b)

    def n(self, a, b):
        """ N(a, b), or 0 when a + b is not a root.
        """
        return self.table.get((tuple(a), tuple(b)), 0)

    def __len__(self):
        return len(self.table)

    # ==================================================================#
    def _length(self, root):
        return self.rs.root_lengths[root]

    def _special_pairs(self, xi):
        pairs = []
        for g in self.rs.positive_roots:
            d = _add(xi, g, -1)
            if self.rs.is_positive_root(d) and self.rs.positive_index(g) < self.rs.positive_index(d):
                pairs.append((g, d))
        return pairs

    def _store(self, a, b, value):
        if value.denominator != 1:
            raise ConsistencyError(
                'ERROR: structure constants: N{} = {} is not an integer'.format((a, b), value)
            )
        value = int(value)
        r = self.rs.string_below(a, b)
        if abs(value) != r + 1:
            raise ConsistencyError(
                'ERROR: structure constants: |N{}| = {} but r + 1 = {}'.format((a, b), abs(value), r + 1)
            )
        self._positive[(a, b)] = value
        self._positive[(b, a)] = -value

    def _compute_positive(self):
        ell = self._length
        for xi in self.rs.positive_roots:
            if sum(xi) == 1:
                continue
            pairs = self._special_pairs(xi)
            alpha, beta = pairs[0]
            self.extraspecial[xi] = (alpha, beta)
            self._store(alpha, beta, Fraction(self.rs.string_below(alpha, beta) + 1))
            n_ab = self._positive[(alpha, beta)]

            for gamma, delta in pairs[1:]:
                total = Fraction(0)
                b_g = _add(beta, gamma, -1)
                if self.rs.is_root(b_g):
                    total += Fraction(
                        self._general(beta, _neg(gamma)) * self._general(alpha, _neg(delta)), ell(b_g)
                    )
                a_g = _add(alpha, gamma, -1)
                if self.rs.is_root(a_g):
                    total += Fraction(
                        self._general(_neg(gamma), alpha) * self._general(beta, _neg(delta)), ell(a_g)
                    )
                self._store(gamma, delta, Fraction(ell(xi), n_ab) * total)

    def _general(self, a, b):
        """ N(a, b) for arbitrary roots, reduced to positive pairs of smaller
        height.
        """
        s = _add(a, b)
        if not self.rs.is_root(s):
            return 0
        pa = self.rs.is_positive_root(a)
        pb = self.rs.is_positive_root(b)
        if pa and pb:
            return self._positive[(a, b)]
        if not pa and not pb:
            return -self._positive[(_neg(a), _neg(b))]
        if not pa:
            return -self._general(b, a)

        # a positive, b negative, c = -(a + b)
        c = _neg(s)
        ell = self._length
        if self.rs.is_positive_root(s):
            # N(a, b) / l(c) = N(b, c) / l(a), with b, c negative
            value = Fraction(ell(c), ell(a)) * -self._positive[(_neg(b), _neg(c))]
        else:
            # N(a, b) / l(c) = N(c, a) / l(b), with c, a positive
            value = Fraction(ell(c), ell(b)) * self._positive[(c, a)]
        if value.denominator != 1:
            raise ConsistencyError('ERROR: structure constants: N{} = {}'.format((a, b), value))
        return int(value)

    # ==================================================================#
    def addable_pairs(self, positive_only=False):
        pairs = sorted(self.table)
        if positive_only:
            pairs = [(a, b) for a, b in pairs
                     if self.rs.is_positive_root(a) and self.rs.is_positive_root(b)]
        return pairs

    def as_records(self):
        """ [{"alpha", "beta", "n"}] in a fixed order, for export.
        """
        order = {r: k for k, r in enumerate(self.rs.roots)}
        keys = sorted(self.table, key=lambda ab: (order[ab[0]], order[ab[1]]))
        return [{'alpha': list(a), 'beta': list(b), 'n': self.table[(a, b)]} for a, b in keys]


def compute_structure_constants(rs):
    return StructureConstants(rs)

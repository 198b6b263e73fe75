"""
FILE: root_system.py
LAST MODIFIED: 04-09-2026
DESCRIPTION:
Finite crystallographic root systems built from a Cartan type.

Roots are tuples of ints in simple-root coordinates, weights are tuples of
ints in fundamental-weight coordinates (entry i = <mu, h_i>) and coweights
are tuples of Fractions in h_i coordinates. Positive roots are grown by
the root-string procedure and kept in a fixed height order: by height,
then lexicographically larger coordinate vectors first, which puts the
simple roots in index order.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from fractions import Fraction

import numpy

from gias3.chevalley.roots import cartan_types
from gias3.chevalley.tools import exact
from gias3.chevalley.tools import normalforms

log = logging.getLogger(__name__)


def _add(a, b, k=1):
    return tuple(x + k * y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _order_key(root):
    return sum(root), tuple(-x for x in root)


# ======================================================================#
class RootSystem(object):
    """ Roots, coroots, pairings and Weyl group machinery of one Cartan type.

    Immutable after construction.
    """

    def __init__(self, cartan_type):
        self.cartan_type = cartan_types.parse_cartan_type(cartan_type)
        self.rank = self.cartan_type.rank
        self.cartan_matrix = cartan_types.cartan_matrix(self.cartan_type)
        self.simple_lengths = cartan_types.symmetrizer(self.cartan_matrix)
        self.gram = numpy.diag(self.simple_lengths).dot(self.cartan_matrix)
        self._cartan_inverse = exact.inverse(self.cartan_matrix)

        self.simple_roots = [
            tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)
        ]
        self.positive_roots = self._grow_positive_roots()
        self.negative_roots = [_neg(b) for b in self.positive_roots]
        self.roots = self.positive_roots + self.negative_roots
        self._root_set = frozenset(self.roots)
        self._positive_index = {b: n for n, b in enumerate(self.positive_roots)}
        self.root_lengths = {b: self.root_length(b) for b in self.roots}
        self._coroots = {b: self._compute_coroot(b) for b in self.roots}

        log.debug('root system %s: %d positive roots', self.cartan_type, len(self.positive_roots))

    def __repr__(self):
        return 'RootSystem({})'.format(self.cartan_type)

    # ==================================================================#
    # construction
    def _grow_positive_roots(self):
        positive = set(self.simple_roots)
        level = list(self.simple_roots)
        while level:
            nxt = []
            for beta in level:
                for i, alpha in enumerate(self.simple_roots):
                    if beta == alpha:
                        continue
                    # alpha_i-string through beta: beta - r alpha_i ... beta + q alpha_i
                    r = 0
                    while _add(beta, alpha, -(r + 1)) in positive:
                        r += 1
                    q = r - self.pairing(beta, i)
                    gamma = _add(beta, alpha)
                    if q > 0 and gamma not in positive:
                        positive.add(gamma)
                        nxt.append(gamma)
            level = nxt
        return sorted(positive, key=_order_key)

    # ==================================================================#
    # membership and simple data
    def is_root(self, v):
        return tuple(v) in self._root_set

    def is_positive_root(self, v):
        return tuple(v) in self._positive_index

    def check_root(self, v, caller='RootSystem'):
        v = tuple(int(x) for x in v)
        if v not in self._root_set:
            raise ValueError('ERROR: {}: {} is not a root of {}'.format(caller, v, self.cartan_type))
        return v

    def positive_index(self, root):
        return self._positive_index[tuple(root)]

    def simple_index(self, root):
        """ i if root is alpha_i or -alpha_i, else None.
        """
        root = tuple(root)
        for i, a in enumerate(self.simple_roots):
            if root == a or root == _neg(a):
                return i
        return None

    def height(self, root):
        root = self.check_root(root, 'height')
        return sum(root)

    @property
    def highest_root(self):
        return self.positive_roots[-1]

    @property
    def rho(self):
        return tuple([1] * self.rank)

    def height_order(self, first=None):
        """ Positive roots in height order, optionally with the simple root
        alpha_first moved to the front. Either order is compatible with
        height.
        """
        order = list(self.positive_roots)
        if first is not None:
            a = self.simple_roots[first]
            order.remove(a)
            order.insert(0, a)
        return order

    # ==================================================================#
    # pairings
    def pairing(self, root, i):
        """ <root, h_i> for a root (or any vector) in simple-root coordinates.
        """
        return int(sum(int(self.cartan_matrix[i, j]) * root[j] for j in range(self.rank)))

    def root_to_weight(self, root):
        """ Fundamental-weight coordinates of a root.
        """
        return tuple(self.pairing(root, i) for i in range(self.rank))

    def weight_to_root_coords(self, mu):
        """ Simple-root coordinates (Fractions) of a weight.
        """
        return tuple(
            sum((self._cartan_inverse[i, j] * mu[j] for j in range(self.rank)), Fraction(0))
            for i in range(self.rank)
        )

    def root_inner(self, a, b):
        """ Symmetric form on simple-root coordinates, (alpha, alpha) = 2 for
        short roots.
        """
        return int(numpy.asarray(a, dtype=int).dot(self.gram).dot(numpy.asarray(b, dtype=int)))

    def weight_inner(self, mu, nu):
        """ The same form on fundamental-weight coordinates.
        """
        x = self.weight_to_root_coords(mu)
        return sum((x[j] * int(self.simple_lengths[j]) * nu[j] for j in range(self.rank)), Fraction(0))

    def root_length(self, root):
        """ Squared length relative to the short roots (short roots give 1).
        """
        return self.root_inner(root, root) // 2

    def coroot_coords(self, root):
        """ h_alpha = sum_i c_i h_i, with c_i = a_i d_i / length(alpha).
        """
        root = tuple(root)
        if root not in self._coroots:
            self.check_root(root, 'coroot_coords')
        return self._coroots[root]

    def _compute_coroot(self, root):
        ell = self.root_length(root)
        c = []
        for i in range(self.rank):
            x = Fraction(root[i] * int(self.simple_lengths[i]), ell)
            if x.denominator != 1:
                raise ValueError('ERROR: coroot_coords: non-integral coroot for {}'.format(root))
            c.append(int(x))
        return tuple(c)

    def weight_pairing(self, mu, root):
        """ <mu, h_alpha> for a weight mu in fundamental coordinates.
        """
        return sum(c * m for c, m in zip(self.coroot_coords(root), mu))

    def coweight_pairing(self, mu, coweight):
        """ <mu, varpi> for a coweight in h_i coordinates. Returns a Fraction.
        """
        return sum((exact.to_fraction(x) * m for x, m in zip(coweight, mu)), Fraction(0))

    # ==================================================================#
    # Weyl group
    def simple_reflection_root(self, i, v):
        v = tuple(v)
        k = self.pairing(v, i)
        return tuple(x - k * (j == i) for j, x in enumerate(v))

    def simple_reflection_weight(self, i, mu):
        k = mu[i]
        return tuple(m - k * int(self.cartan_matrix[j, i]) for j, m in enumerate(mu))

    def reflect(self, v, alpha, weight=False):
        """ w_alpha(v) for a root (simple-root coordinates) or, with
        weight=True, a weight (fundamental coordinates).
        """
        alpha = self.check_root(alpha, 'reflect')
        v = tuple(v)
        if weight:
            k = self.weight_pairing(v, alpha)
            return _add(v, self.root_to_weight(alpha), -k)
        k = self.weight_pairing(self.root_to_weight(v), alpha)
        return _add(v, alpha, -k)

    def apply_word(self, word, v, weight=False):
        """ Apply s_{i1} s_{i2} ... s_{ik} to v (rightmost letter first).
        """
        v = tuple(v)
        for i in reversed(tuple(word)):
            if weight:
                v = self.simple_reflection_weight(i, v)
            else:
                v = self.simple_reflection_root(i, v)
        return v

    def reduced_word(self, word):
        """ A reduced word for the Weyl group element represented by word,
        read off by descending w.rho to the dominant chamber.
        """
        v = self.apply_word(word, self.rho, weight=True)
        letters = []
        while True:
            neg = [i for i, m in enumerate(v) if m < 0]
            if not neg:
                break
            i = neg[0]
            v = self.simple_reflection_weight(i, v)
            letters.append(i)
        return tuple(letters)

    def weyl_length(self, word):
        return len(self.reduced_word(word))

    def express_root(self, root):
        """ (i, w) with root = w . alpha_i and w reduced.
        """
        root = self.check_root(root, 'express_root')
        if not self.is_positive_root(root):
            raise ValueError('ERROR: express_root: {} is not a positive root'.format(root))
        letters = []
        current = root
        while sum(current) > 1:
            j = next(j for j in range(self.rank) if self.pairing(current, j) > 0)
            current = self.simple_reflection_root(j, current)
            letters.append(j)
        i = self.simple_index(current)
        word = self.reduced_word(letters)
        if self.apply_word(word, self.simple_roots[i]) != root:
            raise RuntimeError('ERROR: express_root: word does not reproduce {}'.format(root))
        return i, word

    # ==================================================================#
    # root strings
    def p_chain(self, alpha, beta):
        """ Largest p with beta, beta + alpha, ..., beta + p alpha all roots.
        """
        alpha = self.check_root(alpha, 'p_chain')
        beta = self.check_root(beta, 'p_chain')
        if beta == alpha or beta == _neg(alpha):
            raise ValueError('ERROR: p_chain: beta must not be +-alpha')
        p = 0
        while self.is_root(_add(beta, alpha, p + 1)):
            p += 1
        return p

    def string_below(self, alpha, beta):
        """ Largest r with beta - r alpha a root.
        """
        alpha = self.check_root(alpha, 'string_below')
        beta = self.check_root(beta, 'string_below')
        if beta == alpha or beta == _neg(alpha):
            raise ValueError('ERROR: string_below: beta must not be +-alpha')
        r = 0
        while self.is_root(_add(beta, alpha, -(r + 1))):
            r += 1
        return r

    # ==================================================================#
    # weights
    def is_dominant(self, mu):
        return all(m >= 0 for m in mu)

    def is_regular_dominant(self, mu):
        return all(m > 0 for m in mu)

    def depth(self, mu, lam):
        """ ht(lam - mu), defined when lam - mu is in Q+.
        """
        diff = self.weight_to_root_coords(_add(lam, mu, -1))
        if any(x.denominator != 1 or x < 0 for x in diff):
            raise ValueError('ERROR: depth: {} - {} is not in Q+'.format(lam, mu))
        return int(sum(diff))

    def weyl_dimension(self, lam):
        """ Weyl dimension formula for V^lam.
        """
        lam = tuple(lam)
        shifted = tuple(m + 1 for m in lam)
        num = Fraction(1)
        for alpha in self.positive_roots:
            c = self.coroot_coords(alpha)
            num *= Fraction(sum(x * m for x, m in zip(c, shifted)), sum(c))
        if num.denominator != 1:
            raise RuntimeError('ERROR: weyl_dimension: non-integral dimension for {}'.format(lam))
        return int(num)

    def fundamental_group(self):
        return normalforms.invariant_factors(self.cartan_matrix)

    def simple_root_weights(self):
        """ Columns: the simple roots in fundamental coordinates.
        """
        return numpy.array(self.cartan_matrix, dtype=int)


# ======================================================================#
class WeightLattice(object):
    """ L_V = Z wts(V), generated by Q and the highest weights, with its dual
    L_V* in h_i coordinates.
    """

    def __init__(self, rs, highest_weights):
        self.rs = rs
        self.highest_weights = [tuple(int(m) for m in lam) for lam in highest_weights]
        if not self.highest_weights:
            raise ValueError('ERROR: WeightLattice: need at least one highest weight')
        for lam in self.highest_weights:
            if len(lam) != rs.rank or not rs.is_dominant(lam):
                raise ValueError('ERROR: WeightLattice: {} is not a dominant weight'.format(lam))

        gens = numpy.hstack([
            rs.simple_root_weights(),
            numpy.array(self.highest_weights, dtype=int).T,
        ])
        self.basis = normalforms.lattice_basis_from_generators(gens)
        self.index = abs(int(exact.determinant(self.basis)))
        self._basis_inverse = exact.inverse(self.basis)
        # columns are a Z-basis of L_V*, coweights in h_i coordinates
        self.dual_basis = self._basis_inverse.T.copy()

    def contains(self, mu):
        x = self._basis_inverse.dot(numpy.array([exact.to_fraction(m) for m in mu], dtype=object))
        return exact.is_integral(x)

    def contains_coweight(self, coweight):
        x = numpy.array([exact.to_fraction(c) for c in coweight], dtype=object)
        return exact.is_integral(self.basis.T.dot(x))

    def dual_basis_vectors(self):
        return [tuple(self.dual_basis[:, k]) for k in range(self.rs.rank)]

    def classify_form(self):
        """ 'adjoint' when L_V = Q, 'simply_connected' when L_V = P,
        otherwise 'intermediate'. Types with trivial P/Q are both.
        """
        labels = []
        if self.index == abs(int(exact.determinant(self.rs.cartan_matrix))):
            labels.append('adjoint')
        if self.index == 1:
            labels.append('simply_connected')
        if not labels:
            labels.append('intermediate')
        return tuple(labels)


# ======================================================================#
def enumerate_positive_roots(cartan_type):
    return RootSystem(cartan_type)


def fundamental_group(cartan_type):
    return normalforms.invariant_factors(cartan_types.cartan_matrix(cartan_type))


def weight_lattice_of_module(rs, highest_weights):
    return WeightLattice(rs, highest_weights)

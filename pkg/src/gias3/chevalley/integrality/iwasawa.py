"""
FILE: iwasawa.py
LAST MODIFIED: 15-09-2026
DESCRIPTION:
Constructive decomposition G(Q) = G(Z) B(Q) of an element given as a word
over the simple-root alphabet.

The sweep reads the word left to right and keeps g = gamma u h with gamma
an integral word, u in U(Q) and h in H(Q). Torus letters join h and a
positive letter chi_beta(s) passes through h as chi_beta(s beta(h)). A
letter chi_-alpha_i(t) becomes chi_-alpha_i(t') with t' = t / alpha_i(h),
and then, writing u = chi_alpha_i(s) u',

    u chi_-alpha_i(t') = phi_i([[1 + s t', s], [t', 1]]) u''
    u'' = chi_-alpha_i(-t') u' chi_-alpha_i(t')

where u'' stays in the subgroup generated by the positive roots other
than alpha_i. The rank-one matrix is split as gamma_2 b_2 in SL2, gamma_2
joins gamma and b_2 = [[a, b], [0, 1/a]] = chi(ab) h(a) is pushed into u
and h.

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
from sympy import igcd
from sympy.core.intfunc import igcdex

from gias3.chevalley.group.group_element import (
    chi_left, chi_right, evaluate, sl2_letters, torus_diagonal,
)
from gias3.chevalley.group.words import GeneratorWord, Torus, WeylLift
from gias3.chevalley.integrality.unipotent import unipotent_factorize
from gias3.chevalley.tools import exact

log = logging.getLogger(__name__)


# ======================================================================#
# SL2
def sl2_iwasawa(M):
    """ (gamma2, b2) with M = gamma2 b2, gamma2 in SL2(Z) and b2 upper
    triangular.
    """
    M = exact.fraction_array(M)
    if M.shape != (2, 2):
        raise ValueError('ERROR: sl2_iwasawa: expected a 2x2 matrix')
    p, q, r, s = M[0, 0], M[0, 1], M[1, 0], M[1, 1]
    if p * s - q * r != 1:
        raise ValueError('ERROR: sl2_iwasawa: determinant is {}, expected 1'.format(p * s - q * r))
    if exact.is_integral(M):
        return M.copy(), exact.identity(2)

    # bottom row (c, d) of gamma2^-1 kills the first column: c p + d r = 0
    den = exact.common_denominator([p, r])
    P, R = int(p * den), int(r * den)
    g = int(igcd(R, P))
    c, d = R // g, -P // g
    a, b, g = (int(x) for x in igcdex(d, -c))
    if g != 1:
        raise ArithmeticError('ERROR: sl2_iwasawa: gcd({}, {}) = {}'.format(c, d, g))
    ginv = exact.fraction_array([[a, b], [c, d]])
    gamma2 = exact.fraction_array([[d, -b], [-c, a]])
    b2 = ginv.dot(M)
    if b2[1, 0] != 0:
        raise ArithmeticError('ERROR: sl2_iwasawa: split is not upper triangular')
    return gamma2, b2


def is_sl2_iwasawa_split(M, gamma2, b2):
    """ True if M = gamma2 b2 with gamma2 in SL2(Z) and b2 upper triangular.
    """
    M = exact.fraction_array(M)
    gamma2 = exact.fraction_array(gamma2)
    b2 = exact.fraction_array(b2)
    return (
        exact.is_integral(gamma2)
        and exact.determinant(gamma2) == 1
        and b2[1, 0] == 0
        and exact.arrays_equal(gamma2.dot(b2), M)
    )


def integral_coset_representative(t):
    """ Integral split of chi(t) w, w = [[0, 1], [-1, 0]], modulo the upper
    triangular subgroup.
    """
    t = exact.to_fraction(t)
    return sl2_iwasawa([[-t, 1], [-1, 0]])


# ======================================================================#
class BNormalForm(object):
    """ b = u h with u given by its coordinates and h by torus letters.
    """

    def __init__(self, unipotent, torus):
        self.unipotent = unipotent
        self.torus = list(torus)

    def to_word(self):
        return self.unipotent.to_word() + GeneratorWord(self.torus)


class IwasawaDecomposition(object):

    def __init__(self, gamma, b, exact_check):
        self.gamma = gamma
        self.b = b
        self.exact = exact_check

    def __repr__(self):
        return 'IwasawaDecomposition(len(gamma)={}, exact={})'.format(len(self.gamma), self.exact)

    def to_word(self):
        return self.gamma + self.b.to_word()

    def to_json(self):
        h = []
        for letter in self.b.torus:
            entry = letter.to_json()
            entry.pop('gen')
            h.append(entry)
        return {
            'gamma': self.gamma.to_json(),
            'u': self.b.unipotent.to_json(),
            'h': h,
            'exact': self.exact,
        }


class _Sweep(object):
    """ g = gamma u h during the left to right sweep.
    """

    def __init__(self, module):
        self.module = module
        self.rs = module.rs
        self.gamma = []
        self.u = exact.identity(module.dim)
        self.torus = []
        self.root_actions = [module.root_action(a).first_entry() for a in self.rs.simple_roots]

    def root_character(self, root):
        """ beta(h) for the current torus part.
        """
        value = Fraction(1)
        weight = self.rs.root_to_weight(root)
        for letter in self.torus:
            if letter.i is not None:
                e = weight[letter.i]
            else:
                e = self.rs.coweight_pairing(weight, letter.coweight)
            value *= letter.t ** int(e)
        return value

    def push_torus(self, letter):
        self.torus.append(letter)

    def push_positive(self, root, s):
        s = s * self.root_character(root)
        self.u = chi_right(self.module, self.u, root, s)

    def push_negative_simple(self, i, t):
        rs = self.rs
        alpha = rs.simple_roots[i]
        neg = tuple(-x for x in alpha)
        t = t / self.root_character(alpha)

        (r, c), x = self.root_actions[i]
        s = self.u[r, c] / x
        u1 = chi_left(self.module, alpha, -s, self.u)
        u2 = chi_right(self.module, chi_left(self.module, neg, -t, u1), neg, t)

        gamma2, b2 = sl2_iwasawa([[1 + s * t, s], [t, 1]])
        self.gamma.extend(sl2_letters(rs, i, gamma2))
        a, b = b2[0, 0], b2[0, 1]

        # h_i(a) u2 h_i(a)^-1 scales entry (r, c) by a^(mu_r - mu_c)_i
        d = torus_diagonal(self.module, a, i=i)
        u3 = u2 * d[:, None] / d[None, :]
        self.u = chi_left(self.module, alpha, a * b, u3)
        self.torus.append(Torus(a, i=i))

    def push(self, letter):
        rs = self.rs
        if isinstance(letter, Torus):
            self.push_torus(letter)
            return
        if isinstance(letter, WeylLift):
            for chi in letter.expand():
                self.push(chi)
            return
        root = rs.check_root(letter.root, 'iwasawa_decompose')
        i = rs.simple_index(root)
        if i is None:
            raise ValueError('ERROR: iwasawa_decompose: {} is not a simple root letter'.format(root))
        if letter.t == 0:
            return
        if rs.is_positive_root(root):
            self.push_positive(root, letter.t)
        else:
            self.push_negative_simple(i, letter.t)


def iwasawa_decompose(module, word, check=True):
    """ IwasawaDecomposition gamma b of a word over chi_{+-alpha_i}, torus
    letters and w~_{+-alpha_i}. With check=True the recomposition is
    compared against the evaluated word.
    """
    for letter in word:
        if isinstance(letter, Torus) and letter.t == 0:
            raise ValueError('ERROR: iwasawa_decompose: zero torus parameter')
    sweep = _Sweep(module)
    for letter in word:
        sweep.push(letter)

    coords = unipotent_factorize(module, sweep.u)
    gamma = GeneratorWord(sweep.gamma)
    b = BNormalForm(coords, sweep.torus)
    ok = None
    if check:
        target = evaluate(module, word).matrix
        G = evaluate(module, gamma).matrix
        d = numpy.ones(module.dim, dtype=object)
        for letter in sweep.torus:
            d = d * torus_diagonal(module, letter.t, letter.i, letter.coweight)
        ok = gamma.is_integral() and exact.arrays_equal(G.dot(sweep.u) * d[None, :], target)
        if not ok:
            log.error('iwasawa_decompose: recomposition failed for %s', word)
    log.debug('iwasawa: %d letters -> gamma of length %d', len(word), len(gamma))
    return IwasawaDecomposition(gamma, b, ok)


def bnormal_matrix(module, b):
    """ Dense matrix of u h.
    """
    u = evaluate(module, b.unipotent.to_word()).matrix
    d = numpy.ones(module.dim, dtype=object)
    for letter in b.torus:
        d = d * torus_diagonal(module, letter.t, letter.i, letter.coweight)
    return u * d[None, :]

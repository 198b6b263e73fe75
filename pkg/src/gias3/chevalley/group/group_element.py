"""
FILE: group_element.py
LAST MODIFIED: 11-09-2026
DESCRIPTION:
Elements of the Chevalley group G_V(Q) as exact matrices on a weight module,
with their inverses carried along so that lattice tests never need a
matrix inversion.

The generators are

    chi_alpha(t) = sum_m t^m x_alpha^(m)
    h_varpi(t)   = t^<mu, varpi> on V_mu
    w~_alpha(s)  = chi_alpha(s) chi_-alpha(-1/s) chi_alpha(s)

and the rank-one embedding phi_i: SL2(Q) -> G_V sends the upper and lower
unitriangular matrices to chi_{+-alpha_i}.

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

from gias3.chevalley.group.words import Chi, GeneratorWord, Torus, WeylLift
from gias3.chevalley.tools import exact

log = logging.getLogger(__name__)


class GroupElement(object):
    """ An invertible exact matrix on the module basis, its inverse and
    optionally a word that evaluates to it. Equality is matrix equality.
    """

    def __init__(self, module, matrix, inverse=None, word=None):
        self.module = module
        self.matrix = matrix
        if inverse is None:
            inverse = exact.inverse(matrix)
        self.inverse = inverse
        self.word = word

    def __repr__(self):
        return 'GroupElement(dim={}, word={})'.format(self.module.dim, self.word)

    def __mul__(self, other):
        if other.module is not self.module:
            raise ValueError('ERROR: GroupElement.__mul__: elements live on different modules')
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return GroupElement(self.module, self.matrix.dot(other.matrix),
                            other.inverse.dot(self.inverse), word)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return exact.arrays_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(tuple(self.matrix.flat))

    def inv(self):
        word = self.word.inverse() if self.word is not None else None
        return GroupElement(self.module, self.inverse, self.matrix, word)

    def apply(self, v):
        return self.matrix.dot(numpy.asarray(v, dtype=object))

    def is_identity(self):
        return exact.is_identity(self.matrix)

    def is_diagonal(self):
        off = self.matrix.copy()
        numpy.fill_diagonal(off, exact.ZERO)
        return not numpy.any(off != 0)


# ======================================================================#
# letters acting on dense matrices, one sparse pass per divided power
def _chi_terms(module, root, t):
    terms = []
    tm = Fraction(1)
    for Xm in module.divided_powers(root):
        tm *= t
        terms.append((Xm, tm))
    return terms


def chi_left(module, root, t, a):
    """ chi_root(t) @ a.
    """
    out = a.copy()
    if t == 0:
        return out
    for Xm, tm in _chi_terms(module, root, t):
        out = out + Xm.left_multiply(a) * tm
    return out


def chi_right(module, a, root, t):
    """ a @ chi_root(t).
    """
    out = a.copy()
    if t == 0:
        return out
    for Xm, tm in _chi_terms(module, root, t):
        out = out + Xm.right_multiply(a) * tm
    return out


def torus_diagonal(module, t, i=None, coweight=None):
    """ Diagonal of h_i(t) or h_varpi(t) in the module basis.
    """
    t = exact.to_fraction(t)
    if t == 0:
        raise ValueError('ERROR: torus: parameter must be nonzero')
    rs = module.rs
    diag = []
    for mu in module.weight_of:
        if coweight is None:
            e = Fraction(mu[i])
        else:
            e = rs.coweight_pairing(mu, coweight)
        if e.denominator != 1:
            raise ValueError('ERROR: torus: coweight {} is not in L_V*, <{}, varpi> = {}'.format(coweight, mu, e))
        diag.append(t ** int(e))
    return numpy.array(diag, dtype=object)


def letter_left(module, letter, a):
    """ letter @ a.
    """
    if isinstance(letter, Chi):
        return chi_left(module, letter.root, letter.t, a)
    if isinstance(letter, Torus):
        d = torus_diagonal(module, letter.t, letter.i, letter.coweight)
        return a * d[:, None]
    for chi in reversed(letter.expand()):
        a = chi_left(module, chi.root, chi.t, a)
    return a


def letter_right(module, a, letter):
    """ a @ letter.
    """
    if isinstance(letter, Chi):
        return chi_right(module, a, letter.root, letter.t)
    if isinstance(letter, Torus):
        d = torus_diagonal(module, letter.t, letter.i, letter.coweight)
        return a * d[None, :]
    for chi in letter.expand():
        a = chi_right(module, a, chi.root, chi.t)
    return a


def _check_letter(module, letter):
    if isinstance(letter, Torus):
        if letter.i is not None and not 0 <= letter.i < module.rank:
            raise ValueError('ERROR: evaluate: simple index {} out of range'.format(letter.i))
        if letter.coweight is not None and len(letter.coweight) != module.rank:
            raise ValueError('ERROR: evaluate: coweight {} has the wrong length'.format(letter.coweight))
    else:
        module.rs.check_root(letter.root, 'evaluate')


# ======================================================================#
def identity(module):
    return GroupElement(module, exact.identity(module.dim), exact.identity(module.dim), GeneratorWord())


def evaluate(module, word):
    """ GroupElement of a GeneratorWord, letters multiplied left to right.
    """
    if not isinstance(word, GeneratorWord):
        word = GeneratorWord(word)
    g = exact.identity(module.dim)
    ginv = exact.identity(module.dim)
    for letter in word:
        _check_letter(module, letter)
        g = letter_right(module, g, letter)
        ginv = letter_left(module, letter.inverse(), ginv)
    return GroupElement(module, g, ginv, word)


def chi(module, root, t):
    root = module.rs.check_root(root, 'chi')
    return evaluate(module, GeneratorWord([Chi(root, t)]))


def torus(module, t, i=None, coweight=None):
    return evaluate(module, GeneratorWord([Torus(t, i=i, coweight=coweight)]))


def wtilde(module, root, s):
    root = module.rs.check_root(root, 'wtilde')
    return evaluate(module, GeneratorWord([WeylLift(root, s)]))


def apply_word_to_vector(module, word, v):
    """ word . v without forming the matrix.
    """
    col = numpy.asarray(v, dtype=object).reshape((-1, 1))
    for letter in reversed(tuple(word)):
        col = letter_left(module, letter, col)
    return col[:, 0]


# ======================================================================#
# the rank-one embeddings
def _elementary(rs, i, upper, t):
    root = rs.simple_roots[i] if upper else tuple(-x for x in rs.simple_roots[i])
    return Chi(root, t)


def sl2_letters(rs, i, M):
    """ A GeneratorWord for phi_i(M), M in SL2(Q). An integral M gives an
    integral word through the Euclidean algorithm on its first column.
    """
    M = exact.fraction_array(M)
    if M.shape != (2, 2):
        raise ValueError('ERROR: sl2_embed: expected a 2x2 matrix')
    a, b, c, d = M[0, 0], M[0, 1], M[1, 0], M[1, 1]
    if a * d - b * c != 1:
        raise ValueError('ERROR: sl2_embed: determinant is {}, expected 1'.format(a * d - b * c))
    if not 0 <= i < rs.rank:
        raise ValueError('ERROR: sl2_embed: simple index {} out of range'.format(i))

    if exact.is_integral(M):
        return _euclid_letters(rs, i, a, b, c, d)
    if c != 0:
        letters = [
            _elementary(rs, i, True, (a - 1) / c),
            _elementary(rs, i, False, c),
            _elementary(rs, i, True, (d - 1) / c),
        ]
    else:
        letters = [Torus(a, i=i), _elementary(rs, i, True, b / a)]
        if a == 1:
            letters = letters[1:]
    return GeneratorWord(x for x in letters if not (isinstance(x, Chi) and x.t == 0))


def _euclid_letters(rs, i, a, b, c, d):
    # row operations E_k ... E_1 M = [[e, b'], [0, e]] with e = +-1
    ops = []

    def upper(q):
        nonlocal a, b
        a, b = a + q * c, b + q * d
        ops.append((True, q))

    def lower(q):
        nonlocal c, d
        c, d = c + q * a, d + q * b
        ops.append((False, q))

    while c != 0:
        q = a // c
        if q:
            upper(-q)
        if a == 0:
            upper(1)
        q = c // a
        if q:
            lower(-q)

    letters = [_elementary(rs, i, up, -q) for up, q in ops]
    if a == -1:
        letters.append(Torus(-1, i=i))
    if b != 0:
        letters.append(_elementary(rs, i, True, a * b))
    return GeneratorWord(letters)


def sl2_embed(module, i, M):
    """ phi_i(M) as a GroupElement carrying its factorization.
    """
    return evaluate(module, sl2_letters(module.rs, i, M))

"""
FILE: cartan_types.py
LAST MODIFIED: 03-09-2026
DESCRIPTION:
Cartan types of the finite crystallographic root systems, their Cartan
matrices, symmetrizers and Coxeter matrices, and a constructor function
that parses type strings such as "A2" or "g2".

Conventions: A[i, j] = <alpha_j, h_i> with Bourbaki node numbering.
B_n has alpha_n short, C_n has alpha_n long, D_n forks at node n-2, E_n
has alpha_2 attached to alpha_4, F_4 has alpha_1 and alpha_2 long, and
G_2 has alpha_1 short and alpha_2 long, so that

    G2: A = [[ 2, -3],
             [-1,  2]]

(the transpose is the matrix in the convention A[i, j] = <alpha_i, h_j>).
Node indices are 0-based in the Python API and 1-based in JSON and on
the command line.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
import re
from fractions import Fraction

import numpy
import sympy

log = logging.getLogger(__name__)

SERIES = 'ABCDEFG'

# series: (min rank, max rank or None)
RANK_LIMITS = {
    'A': (1, None),
    'B': (2, None),
    'C': (2, None),
    'D': (3, None),
    'E': (6, 8),
    'F': (4, 4),
    'G': (2, 2),
}

# A[i, j] * A[j, i] -> order of s_i s_j
COXETER_ORDERS = {0: 2, 1: 3, 2: 4, 3: 6}

_TYPE_RE = re.compile(r'^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$')


# ======================================================================#
class CartanType(object):
    """ Series letter and rank of a simple Lie algebra.
    """

    def __init__(self, series, rank):
        series = series.upper()
        if series not in SERIES:
            raise NotImplementedError('Cartan series ' + series + ' not implemented')
        rank = int(rank)
        lo, hi = RANK_LIMITS[series]
        if rank < lo or (hi is not None and rank > hi):
            raise ValueError(
                'ERROR: CartanType: invalid rank {} for series {}'.format(rank, series)
            )
        self.series = series
        self.rank = rank

    def __repr__(self):
        return 'CartanType({!r}, {})'.format(self.series, self.rank)

    def __str__(self):
        return '{}{}'.format(self.series, self.rank)

    def __eq__(self, other):
        if not isinstance(other, CartanType):
            return NotImplemented
        return (self.series, self.rank) == (other.series, other.rank)

    def __hash__(self):
        return hash((self.series, self.rank))


def parse_cartan_type(s):
    """ Parse "A2", "g2", "E_8" into a CartanType.
    """
    if isinstance(s, CartanType):
        return s
    m = _TYPE_RE.match(s)
    if m is None:
        raise ValueError('ERROR: parse_cartan_type: cannot parse Cartan type {!r}'.format(s))
    return CartanType(m.group(1), int(m.group(2)))


def _chain(A, nodes):
    for a, b in zip(nodes[:-1], nodes[1:]):
        A[a, b] = -1
        A[b, a] = -1


def cartan_matrix(cartan_type):
    """ Integer Cartan matrix, A[i, j] = <alpha_j, h_i>.
    """
    ct = parse_cartan_type(cartan_type)
    n = ct.rank
    A = 2 * numpy.eye(n, dtype=int)
    if ct.series == 'A':
        _chain(A, list(range(n)))
    elif ct.series == 'B':
        _chain(A, list(range(n)))
        # alpha_n short
        A[n - 2, n - 1] = -1
        A[n - 1, n - 2] = -2
    elif ct.series == 'C':
        _chain(A, list(range(n)))
        # alpha_n long
        A[n - 2, n - 1] = -2
        A[n - 1, n - 2] = -1
    elif ct.series == 'D':
        _chain(A, list(range(n - 1)))
        A[n - 3, n - 1] = -1
        A[n - 1, n - 3] = -1
    elif ct.series == 'E':
        # 1 - 3 - 4 - ... - n with 2 hanging off 4
        _chain(A, [0] + list(range(2, n)))
        A[1, 3] = -1
        A[3, 1] = -1
    elif ct.series == 'F':
        _chain(A, [0, 1, 2, 3])
        A[1, 2] = -1
        A[2, 1] = -2
    elif ct.series == 'G':
        A[0, 1] = -3
        A[1, 0] = -1
    return A


def symmetrizer(A):
    """ Minimal positive integers d_i with d_i A[i, j] = d_j A[j, i].

    d_i is the squared length of alpha_i relative to the short roots, so
    short simple roots get d_i = 1 and diag(d) A is the symmetric Gram
    matrix of the simple roots scaled so that (alpha_i, alpha_i) = 2 d_i.
    """
    n = A.shape[0]
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and A[i, j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(int(A[i, j]), int(A[j, i]))
                stack.append(j)
    if any(x is None for x in d):
        raise ValueError('ERROR: symmetrizer: Dynkin diagram is not connected')
    scale = 1
    for x in d:
        scale = int(sympy.ilcm(scale, x.denominator))
    ints = [int(x * scale) for x in d]
    g = 0
    for x in ints:
        g = int(sympy.igcd(g, x))
    d = numpy.array([x // g for x in ints], dtype=int)

    B = numpy.diag(d).dot(A)
    if not (B == B.T).all():
        raise ValueError('ERROR: symmetrizer: Cartan matrix is not symmetrizable')
    return d


def coxeter_matrix(cartan_type):
    """ m[i, j] = order of s_i s_j in the Weyl group.
    """
    A = cartan_matrix(cartan_type)
    n = A.shape[0]
    m = numpy.ones((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            if i != j:
                m[i, j] = COXETER_ORDERS[int(A[i, j] * A[j, i])]
    return m

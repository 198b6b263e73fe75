"""
FILE: exact.py
LAST MODIFIED: 02-09-2026
DESCRIPTION: Exact rational matrices as numpy object arrays of Fractions,
conversion to and from sympy, and a sparse matrix class for the nilpotent
root actions.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
import numbers
from fractions import Fraction

import numpy
import sympy

log = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(x):
    """ Convert an int, str ("p/q"), Fraction or sympy Rational to a Fraction.
    Foreign integer types (numpy, gmpy2) are normalised to int.
    """
    if isinstance(x, Fraction):
        if type(x.numerator) is int and type(x.denominator) is int:
            return x
        return Fraction(int(x.numerator), int(x.denominator))
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, sympy.Basic):
        if not x.is_Rational:
            raise ValueError('ERROR: to_fraction: {} is not rational'.format(x))
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, float):
        raise TypeError('ERROR: to_fraction: floats are not exact, got {}'.format(x))
    if isinstance(x, numbers.Rational):
        return Fraction(int(x.numerator), int(x.denominator))
    return Fraction(x)


def fraction_array(rows):
    """ Object array of Fractions from any nested sequence.
    """
    a = numpy.array(rows, dtype=object)
    out = numpy.empty(a.shape, dtype=object)
    for idx, v in numpy.ndenumerate(a):
        out[idx] = to_fraction(v)
    return out


def zeros(n, m=None):
    if m is None:
        out = numpy.empty(n, dtype=object)
    else:
        out = numpy.empty((n, m), dtype=object)
    out.fill(ZERO)
    return out


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def unit_vector(n, i):
    v = zeros(n)
    v[i] = ONE
    return v


def is_integral(a):
    """ True if every entry of the array has denominator 1.
    """
    return all(to_fraction(x).denominator == 1 for x in numpy.asarray(a, dtype=object).flat)


def first_non_integral(a):
    """ Index of the first entry with nontrivial denominator, or None.
    """
    for idx, x in numpy.ndenumerate(a):
        if to_fraction(x).denominator != 1:
            return idx
    return None


def arrays_equal(a, b):
    a = numpy.asarray(a, dtype=object)
    b = numpy.asarray(b, dtype=object)
    if a.shape != b.shape:
        return False
    return bool(numpy.all(a == b))


def is_identity(a):
    return arrays_equal(a, identity(a.shape[0]))


def common_denominator(values):
    d = 1
    for x in values:
        d = int(sympy.ilcm(d, to_fraction(x).denominator))
    return int(d)


def _rational(x):
    x = to_fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def to_sympy(a):
    a = numpy.asarray(a, dtype=object)
    if a.ndim == 1:
        a = a.reshape((-1, 1))
    return sympy.Matrix(a.shape[0], a.shape[1],
                        [_rational(x) for x in a.flat])


def from_sympy(m):
    out = numpy.empty((m.rows, m.cols), dtype=object)
    for i in range(m.rows):
        for j in range(m.cols):
            out[i, j] = to_fraction(m[i, j])
    return out


def inverse(a):
    m = to_sympy(a)
    if m.det() == 0:
        raise ValueError('ERROR: inverse: matrix is singular')
    return from_sympy(m.inv())


def determinant(a):
    return to_fraction(to_sympy(a).det())


def rref(a):
    """ Reduced row echelon form and pivot columns of a rational matrix.
    """
    r, pivots = to_sympy(a).rref()
    return from_sympy(r), tuple(pivots)


def format_matrix(a):
    return [[str(x) for x in row] for row in numpy.asarray(a, dtype=object)]


# ======================================================================#
class SparseMatrix(object):
    """ Square exact matrix held as a dict {(row, col): Fraction} of its
    nonzero entries. The root actions on a weight module are very sparse,
    so products against dense matrices are done entry by entry.
    """

    def __init__(self, size, entries=None):
        self.size = size
        self.entries = {}
        if entries:
            for k, v in entries.items():
                v = to_fraction(v)
                if v != 0:
                    self.entries[k] = v

    @classmethod
    def from_dense(cls, a):
        out = cls(a.shape[0])
        rows, cols = numpy.nonzero(a != 0)
        for r, c in zip(rows, cols):
            out.entries[(int(r), int(c))] = a[r, c]
        return out

    def copy(self):
        return SparseMatrix(self.size, dict(self.entries))

    def is_zero(self):
        return len(self.entries) == 0

    @property
    def nnz(self):
        return len(self.entries)

    def dense(self):
        out = zeros(self.size, self.size)
        for (r, c), v in self.entries.items():
            out[r, c] = v
        return out

    def scale(self, x):
        x = to_fraction(x)
        if x == 0:
            return SparseMatrix(self.size)
        return SparseMatrix(self.size, {k: v * x for k, v in self.entries.items()})

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k, ZERO) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return SparseMatrix(self.size, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.size == other.size and self.entries == other.entries

    def __matmul__(self, other):
        """ Sparse times sparse.
        """
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                out[(r, c)] = out.get((r, c), ZERO) + v * w
        return SparseMatrix(self.size, out)

    def commutator(self, other):
        return (self @ other) - (other @ self)

    def apply(self, v):
        """ Matrix times vector.
        """
        out = zeros(self.size)
        for (r, c), x in self.entries.items():
            if v[c] != 0:
                out[r] += x * v[c]
        return out

    def left_multiply(self, a):
        """ self @ a for a dense matrix a.
        """
        out = zeros(self.size, a.shape[1])
        for (r, c), x in self.entries.items():
            out[r, :] += x * a[c, :]
        return out

    def right_multiply(self, a):
        """ a @ self for a dense matrix a.
        """
        out = zeros(a.shape[0], self.size)
        for (r, c), x in self.entries.items():
            out[:, c] += x * a[:, r]
        return out

    def first_entry(self):
        """ The nonzero entry with the smallest (row, col) index.
        """
        if not self.entries:
            raise ValueError('ERROR: SparseMatrix.first_entry: matrix is zero')
        k = min(self.entries)
        return k, self.entries[k]

"""
FILE: normalforms.py
LAST MODIFIED: 02-09-2026
DESCRIPTION: Lattice helpers on top of sympy's Hermite and Smith normal
forms, and exact solving of rational linear systems.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging

import numpy
import sympy
from sympy import ZZ
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_form

from gias3.chevalley.tools import exact

log = logging.getLogger(__name__)


def invariant_factors(int_matrix):
    """ Nontrivial Smith invariant factors of an integer matrix, i.e. the
    torsion of the cokernel. Factors equal to 1 are dropped.
    """
    m = sympy.Matrix(numpy.asarray(int_matrix, dtype=object).tolist())
    snf = smith_normal_form(m, domain=ZZ)
    factors = []
    for i in range(min(snf.shape)):
        d = abs(int(snf[i, i]))
        if d != 1:
            factors.append(d)
    return sorted(factors)


def hnf_column_basis(vectors, length):
    """ Column-style HNF basis of the Z-span of a list of rational vectors.

    Returns an object array of shape (length, rank) whose columns form a
    Z-basis of the lattice spanned by `vectors`. Vectors are scaled to
    integers by their common denominator before the HNF and scaled back
    afterwards.
    """
    vectors = [numpy.asarray(v, dtype=object) for v in vectors]
    vectors = [v for v in vectors if any(x != 0 for x in v)]
    if not vectors:
        return exact.zeros(length, 0)

    d = exact.common_denominator(x for v in vectors for x in v)
    cols = [[int(x * d) for x in v] for v in vectors]
    m = sympy.Matrix(length, len(cols), lambda i, j: cols[j][i])
    h = hermite_normal_form(m)

    keep = [j for j in range(h.cols) if any(h[i, j] != 0 for i in range(h.rows))]
    out = exact.zeros(length, len(keep))
    for jj, j in enumerate(keep):
        for i in range(length):
            out[i, jj] = exact.to_fraction(h[i, j]) / d
    return out


def lattice_basis_from_generators(int_matrix):
    """ Square HNF basis of the full-rank integer lattice spanned by the
    columns of int_matrix.
    """
    m = sympy.Matrix(numpy.asarray(int_matrix, dtype=object).tolist())
    h = hermite_normal_form(m)
    keep = [j for j in range(h.cols) if any(h[i, j] != 0 for i in range(h.rows))]
    if len(keep) != h.rows:
        raise ValueError('ERROR: lattice_basis_from_generators: generators do not have full rank')
    return numpy.array([[int(h[i, j]) for j in keep] for i in range(h.rows)], dtype=object)


def lattice_index(int_matrix):
    """ Covolume of the Z-span of the columns of an integer matrix, as the
    product of its Smith invariant factors. 0 unless the columns span a
    full rank lattice.
    """
    m = sympy.Matrix(numpy.asarray(int_matrix, dtype=object).tolist())
    if m.cols < m.rows:
        return 0
    snf = smith_normal_form(m, domain=ZZ)
    index = 1
    for i in range(m.rows):
        index *= abs(int(snf[i, i]))
    return index


def solve_unique(a, b):
    """ Unique rational solution x of a x = b.

    Returns None if the system is inconsistent. Raises ValueError if the
    solution is not unique.
    """
    m = exact.to_sympy(a)
    rhs = exact.to_sympy(b)
    try:
        sol, params = m.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    if params.shape[0] != 0:
        raise ValueError('ERROR: solve_unique: system has {} free parameters'.format(params.shape[0]))
    return exact.from_sympy(sol)[:, 0]

"""
FILE: toral.py
LAST MODIFIED: 13-09-2026
DESCRIPTION:
Recover torus parameters from a diagonal group element.

h = prod_k h_{c_k}(t_k) acts on V_mu by s_mu = prod_k t_k^{<mu, c_k>}. For
every prime p the valuations satisfy the integer system

    v_p(s_mu) = sum_k <mu, c_k> v_p(t_k)

and the signs are fixed by trying all 2^l sign vectors.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import itertools
import logging
from fractions import Fraction

import numpy
from sympy import factorint

from gias3.chevalley.group.group_element import GroupElement, torus_diagonal
from gias3.chevalley.group.words import GeneratorWord, Torus
from gias3.chevalley.tools import exact
from gias3.chevalley.tools import normalforms
from gias3.chevalley.tools.misc import format_rational

log = logging.getLogger(__name__)


class TorusCoords(object):
    """ h = prod_k h_{c_k}(t_k) for a coweight basis c_k. With the standard
    basis the letters are h_i(t_i).
    """

    def __init__(self, coweights, params, standard=False):
        self.coweights = [tuple(exact.to_fraction(x) for x in c) for c in coweights]
        self.params = [exact.to_fraction(t) for t in params]
        self.standard = standard

    def __repr__(self):
        return 'TorusCoords({})'.format([str(t) for t in self.params])

    def is_unit(self):
        return all(t in (1, -1) for t in self.params)

    def letters(self):
        out = []
        for k, (c, t) in enumerate(zip(self.coweights, self.params)):
            if t == 1:
                continue
            if self.standard:
                out.append(Torus(t, i=k))
            else:
                out.append(Torus(t, coweight=c))
        return out

    def to_word(self):
        return GeneratorWord(self.letters())

    def to_json(self):
        if self.standard:
            return [{'i': k + 1, 't': format_rational(t)} for k, t in enumerate(self.params)]
        return [{'coweight': [format_rational(x) for x in c], 't': format_rational(t)}
                for c, t in zip(self.coweights, self.params)]


def _standard_basis(rank):
    return [tuple(Fraction(int(j == k)) for j in range(rank)) for k in range(rank)]


def _weight_scalars(module, diag):
    scalars = {}
    for mu, s in zip(module.weight_of, diag):
        s = exact.to_fraction(s)
        if s == 0:
            raise ValueError('ERROR: toral_factorize: zero diagonal entry, element is not invertible')
        if scalars.setdefault(mu, s) != s:
            raise ValueError('ERROR: toral_factorize: element is not scalar on the weight space {}'.format(mu))
    return scalars


def toral_factorize(module, h, coweight_basis=None):
    """ TorusCoords with prod_k h_{c_k}(t_k) = h. coweight_basis defaults to
    h_1 ... h_l.
    """
    rs = module.rs
    standard = coweight_basis is None
    basis = _standard_basis(rs.rank) if standard else [tuple(c) for c in coweight_basis]

    if isinstance(h, GroupElement):
        matrix = h.matrix
    else:
        matrix = numpy.asarray(h, dtype=object)
    if matrix.ndim == 2:
        off = matrix.copy()
        numpy.fill_diagonal(off, exact.ZERO)
        if numpy.any(off != 0):
            raise ValueError('ERROR: toral_factorize: element is not diagonal')
        diag = numpy.diagonal(matrix)
    else:
        diag = matrix

    scalars = _weight_scalars(module, diag)
    weights = list(scalars)
    E = exact.zeros(len(weights), len(basis))
    for r, mu in enumerate(weights):
        for k, c in enumerate(basis):
            e = rs.coweight_pairing(mu, c)
            if e.denominator != 1:
                raise ValueError('ERROR: toral_factorize: coweight {} is not in L_V*'.format(c))
            E[r, k] = e

    primes = set()
    for s in scalars.values():
        primes.update(factorint(abs(s.numerator)))
        primes.update(factorint(s.denominator))

    magnitudes = [Fraction(1)] * len(basis)
    for p in sorted(primes):
        b = exact.zeros(len(weights))
        for r, mu in enumerate(weights):
            s = scalars[mu]
            b[r] = factorint(abs(s.numerator)).get(p, 0) - factorint(s.denominator).get(p, 0)
        v = normalforms.solve_unique(E, b)
        if v is None or not exact.is_integral(v):
            raise ValueError('ERROR: toral_factorize: scalars are not the image of any torus element')
        for k in range(len(basis)):
            magnitudes[k] *= Fraction(p) ** int(v[k])

    params = None
    for signs in itertools.product((1, -1), repeat=len(basis)):
        ok = True
        for r, mu in enumerate(weights):
            sign = 1
            for k in range(len(basis)):
                if signs[k] < 0 and int(E[r, k]) % 2:
                    sign = -sign
            if (scalars[mu] > 0) != (sign > 0):
                ok = False
                break
        if ok:
            params = [sg * m for sg, m in zip(signs, magnitudes)]
            break
    if params is None:
        raise ValueError('ERROR: toral_factorize: no sign choice reproduces the scalars')

    coords = TorusCoords(basis, params, standard)
    check = numpy.ones(module.dim, dtype=object)
    for letter in coords.letters():
        check = check * torus_diagonal(module, letter.t, letter.i, letter.coweight)
    if not exact.arrays_equal(check, numpy.asarray(diag, dtype=object)):
        raise ValueError('ERROR: toral_factorize: recovered parameters do not reproduce the element')
    return coords

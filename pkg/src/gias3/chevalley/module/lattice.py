"""
FILE: lattice.py
LAST MODIFIED: 18-10-2026
DESCRIPTION:
The admissible lattice V_Z spanned by the Kostant monomials applied to the
highest weight vectors, and the test of whether a group element stabilises
it.

V_Z is the direct sum of its weight components, so it is stored as one
square basis per (summand, weight) block. The lattice basis matrix L is
block diagonal in the module basis order and g stabilises V_Z iff
L^-1 g L and L^-1 g^-1 L are integral. stabilizes_by_index repeats the
test on the unreduced monomial spanning sets through Smith form indices.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from collections import namedtuple

import numpy

from gias3.chevalley.errors import ConsistencyError
from gias3.chevalley.tools import exact
from gias3.chevalley.tools import normalforms

log = logging.getLogger(__name__)

Witness = namedtuple('Witness', ['direction', 'summand', 'weight', 'vector', 'image'])
Witness.__doc__ = """ A lattice basis vector whose image under g (direction 'g') or
g^-1 (direction 'g_inverse') leaves V_Z. """


class AdmissibleLattice(object):

    def __init__(self, module):
        self.module = module
        self.blocks = {}
        self._spanning = None
        for j, lam in enumerate(module.summands):
            self._build_summand(j, lam)
        self._check()
        log.debug('admissible lattice of %s built on %d blocks', module, len(self.blocks))

    def _embed(self, key, local):
        start, size = self.module.blocks[key]
        v = exact.zeros(self.module.dim)
        v[start:start + size] = local
        return v

    def _local(self, key, v):
        start, size = self.module.blocks[key]
        return v[start:start + size]

    def _orbit(self, j, lam, reduce):
        """ Kostant monomials x_-b1^(m1) ... x_-bN^(mN) v_lam of summand j,
        grouped by weight. reduce(mu, vectors) replaces the vectors of weight
        mu after every root.
        """
        module = self.module
        rs = module.rs
        vecs = {lam: [exact.unit_vector(1, 0)]}
        for beta in reversed(rs.height_order()):
            neg = tuple(-x for x in beta)
            powers = module.divided_powers(neg)
            step = rs.root_to_weight(beta)
            new = {mu: list(vs) for mu, vs in vecs.items()}
            for mu, vs in vecs.items():
                for v in vs:
                    g = self._embed((j, mu), v)
                    for m, Xm in enumerate(powers, start=1):
                        target = tuple(a - m * b for a, b in zip(mu, step))
                        if (j, target) not in module.blocks:
                            break
                        w = self._local((j, target), Xm.apply(g))
                        if any(x != 0 for x in w):
                            new.setdefault(target, []).append(w)
            vecs = {mu: reduce(mu, vs) for mu, vs in new.items()}
        return vecs

    def _build_summand(self, j, lam):
        module = self.module

        def hnf(mu, vs):
            basis = normalforms.hnf_column_basis(vs, module.blocks[(j, mu)][1])
            return [basis[:, k] for k in range(basis.shape[1])]

        vecs = self._orbit(j, lam, hnf)
        for mu in module.summand_weights(j):
            size = module.blocks[(j, mu)][1]
            cols = vecs.get(mu, [])
            if len(cols) != size:
                raise ConsistencyError(
                    'ERROR: build_lattice: weight {} of summand {} has rank {} of {}'.format(mu, j, len(cols), size)
                )
            B = exact.zeros(size, size)
            for k, c in enumerate(cols):
                B[:, k] = c
            self.blocks[(j, mu)] = (B, exact.inverse(B))

    def _check(self):
        for j, start in enumerate(self.module.highest_weight_vectors):
            B, _ = self.blocks[(j, self.module.summands[j])]
            if B[0, 0] not in (1, -1):
                raise ConsistencyError('ERROR: build_lattice: highest weight line of summand {} is not Z v'.format(j))

    # ==================================================================#
    def _ranges(self):
        for key, (start, size) in self.module.blocks.items():
            B, Binv = self.blocks[key]
            yield key, start, size, B, Binv

    def basis_matrix(self):
        """ Block diagonal L; its columns are a Z-basis of V_Z.
        """
        L = exact.zeros(self.module.dim, self.module.dim)
        for _, s, n, B, _ in self._ranges():
            L[s:s + n, s:s + n] = B
        return L

    def inverse_basis_matrix(self):
        Linv = exact.zeros(self.module.dim, self.module.dim)
        for _, s, n, _, Binv in self._ranges():
            Linv[s:s + n, s:s + n] = Binv
        return Linv

    def coordinates(self, v):
        """ Coordinates of v in the lattice basis.
        """
        v = numpy.asarray([exact.to_fraction(x) for x in v], dtype=object)
        if v.shape[0] != self.module.dim:
            raise ValueError('ERROR: coordinates: vector has length {}, module has dimension {}'.format(
                v.shape[0], self.module.dim))
        out = exact.zeros(self.module.dim)
        for _, s, n, _, Binv in self._ranges():
            out[s:s + n] = Binv.dot(v[s:s + n])
        return out

    def contains(self, v):
        return exact.is_integral(self.coordinates(v))

    def conjugate(self, g):
        """ L^-1 g L for a dense matrix g, computed block by block.
        """
        dim = self.module.dim
        gl = exact.zeros(dim, dim)
        for _, s, n, B, _ in self._ranges():
            gl[:, s:s + n] = g[:, s:s + n].dot(B)
        out = exact.zeros(dim, dim)
        for _, s, n, _, Binv in self._ranges():
            out[s:s + n, :] = Binv.dot(gl[s:s + n, :])
        return out

    def _column_witness(self, direction, g, col):
        key = self.module.block_of(col)
        start = self.module.blocks[key][0]
        B, _ = self.blocks[key]
        vector = exact.zeros(self.module.dim)
        vector[start:start + B.shape[0]] = B[:, col - start]
        return Witness(direction, key[0], key[1], vector, g.dot(vector))

    def stabilizes(self, matrix, inverse):
        """ (True, None) if g V_Z = V_Z, otherwise (False, witness).
        """
        for direction, g in (('g', matrix), ('g_inverse', inverse)):
            bad = exact.first_non_integral(self.conjugate(g))
            if bad is not None:
                return False, self._column_witness(direction, g, bad[1])
        return True, None

    def spanning_sets(self):
        """ The Kostant monomial images of every block, kept unreduced apart
        from dropping repeats up to sign.
        """
        if self._spanning is None:
            spanning = {}
            for j, lam in enumerate(self.module.summands):
                spanning.update(((j, mu), vs) for mu, vs in self._orbit(j, lam, _distinct).items())
            self._spanning = spanning
        return self._spanning

    def stabilizes_by_index(self, matrix, inverse):
        """ g V_Z = V_Z tested without the lattice basis: the images of the
        monomial spanning vectors are added to each block's spanning set and
        the lattice index, from the Smith form, must not drop.
        """
        spanning = self.spanning_sets()
        for g in (matrix, inverse):
            images = {}
            for key, vs in spanning.items():
                for v in vs:
                    w = g.dot(self._embed(key, v))
                    targets = {self.module.block_of(i) for i, x in enumerate(w) if x != 0}
                    for target in targets:
                        images.setdefault(target, []).append(self._local(target, w))
            for key, extra in images.items():
                gens = spanning[key]
                d = exact.common_denominator(x for v in gens + extra for x in v)
                before = _integer_columns(gens, d)
                after = _integer_columns(gens + extra, d)
                if normalforms.lattice_index(after) != normalforms.lattice_index(before):
                    return False
        return True

    # ==================================================================#
    def stabilizer_algebra(self):
        """ Check that the Z-form spanned by x_alpha and the h_varpi,
        varpi in L_V*, preserves V_Z. Returns {'roots': [...], 'coweights':
        [...], 'preserved': bool}.
        """
        module = self.module
        rs = module.rs
        preserved = True
        for root in rs.roots:
            if not exact.is_integral(self.conjugate(module.root_matrix(root))):
                log.warning('x_%s does not preserve the lattice', root)
                preserved = False
        coweights = module.weight_lattice().dual_basis_vectors()
        for cw in coweights:
            diag = [rs.coweight_pairing(mu, cw) for mu in module.weight_of]
            if any(x.denominator != 1 for x in diag):
                preserved = False
        return {'roots': list(rs.roots), 'coweights': coweights, 'preserved': preserved}


def _distinct(mu, vs):
    seen = set()
    out = []
    for v in vs:
        key = tuple(v)
        if key not in seen and tuple(-x for x in v) not in seen:
            seen.add(key)
            out.append(v)
    return out


def _integer_columns(vectors, d):
    return numpy.array([[int(v[i] * d) for v in vectors] for i in range(len(vectors[0]))], dtype=object)


def build_lattice(module):
    return AdmissibleLattice(module)


def lattice_contains(lattice, v):
    return lattice.contains(v)


def stabilizes(lattice, element):
    return lattice.stabilizes(element.matrix, element.inverse)


def lattice_stabilizer_algebra(module, lattice=None):
    if lattice is None:
        lattice = AdmissibleLattice(module)
    return lattice.stabilizer_algebra()

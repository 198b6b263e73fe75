"""
FILE: weight_module.py
LAST MODIFIED: 08-09-2026
DESCRIPTION:
Finite-dimensional highest-weight modules V = V^{lam_1} + ... + V^{lam_k}
over Q with exact action matrices for every Chevalley basis vector.

Each summand is built depth by depth below its highest weight. The
candidates spanning V_mu are f_i b for the basis vectors b of V_{mu+alpha_i}.
A vector of V_mu (mu below lam) is zero exactly when every e_j kills it, so
the candidates are compared through their images e_j f_i b, computed by
commuting e_j past f_i:

    e_j f_i b = f_i (e_j b) + delta_ij <mu + alpha_i, h_i> b

The pivot columns of the stacked image matrix give a basis of V_mu; the
same matrix gives the e_j blocks on that basis and its reduced row echelon
form gives the f_i blocks into it. Root vectors for non-simple roots are
commutators over the extraspecial pairs.

The global basis is ordered by summand, then depth, then weight (first-seen
order), then index within the weight space.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from collections import namedtuple
from fractions import Fraction

import numpy
import sympy
from scipy.special import factorial

from gias3.chevalley.algebra.structure_constants import StructureConstants
from gias3.chevalley.errors import ConsistencyError
from gias3.chevalley.roots.root_system import WeightLattice
from gias3.chevalley.tools import exact
from gias3.chevalley.tools.exact import SparseMatrix

log = logging.getLogger(__name__)

BasisLabel = namedtuple('BasisLabel', ['summand', 'weight', 'index'])


def _add(a, b, k=1):
    return tuple(x + k * y for x, y in zip(a, b))


# ======================================================================#
class _Summand(object):
    """ Weight spaces and simple root blocks of one irreducible V^lam.
    """

    def __init__(self, rs, lam):
        self.rs = rs
        self.lam = lam
        self.alpha_weights = [rs.root_to_weight(a) for a in rs.simple_roots]
        self.dims = {lam: 1}
        self.depth = {lam: 0}
        self.levels = [[lam]]
        self.e_blocks = {}  # (j, mu) -> V_mu to V_{mu + alpha_j}
        self.f_blocks = {}  # (i, nu) -> V_nu to V_{nu - alpha_i}
        if any(lam):
            self._build()

    def _build(self):
        while True:
            candidates = []
            seen = set()
            for nu in self.levels[-1]:
                for a in self.alpha_weights:
                    mu = _add(nu, a, -1)
                    if mu not in seen:
                        seen.add(mu)
                        candidates.append(mu)
            level = [mu for mu in candidates if self._build_weight_space(mu, len(self.levels))]
            if not level:
                break
            self.levels.append(level)

    def _build_weight_space(self, mu, depth):
        rank = self.rs.rank
        cands = []
        for i in range(rank):
            nu = _add(mu, self.alpha_weights[i])
            for k in range(self.dims.get(nu, 0)):
                cands.append((i, k))
        if not cands:
            return False

        targets = [j for j in range(rank) if _add(mu, self.alpha_weights[j]) in self.dims]
        offsets = {}
        n_rows = 0
        for j in targets:
            offsets[j] = n_rows
            n_rows += self.dims[_add(mu, self.alpha_weights[j])]

        M = exact.zeros(n_rows, len(cands))
        for col, (i, k) in enumerate(cands):
            nu = _add(mu, self.alpha_weights[i])
            for j in targets:
                vec = exact.zeros(self.dims[_add(mu, self.alpha_weights[j])])
                if (j, nu) in self.e_blocks:
                    nu2 = _add(nu, self.alpha_weights[j])
                    vec = vec + self.f_blocks[(i, nu2)].dot(self.e_blocks[(j, nu)][:, k])
                if i == j:
                    vec[k] += nu[i]
                M[offsets[j]:offsets[j] + len(vec), col] = vec

        R, pivots = exact.rref(M)
        r = len(pivots)
        if r == 0:
            return False

        self.dims[mu] = r
        self.depth[mu] = depth
        piv = list(pivots)
        for j in targets:
            n = self.dims[_add(mu, self.alpha_weights[j])]
            self.e_blocks[(j, mu)] = M[offsets[j]:offsets[j] + n, :][:, piv]
        for i in range(rank):
            cols = [c for c, (ii, _) in enumerate(cands) if ii == i]
            if cols:
                self.f_blocks[(i, _add(mu, self.alpha_weights[i]))] = R[:r, :][:, cols]
        return True

    def ordered_weights(self):
        return [mu for level in self.levels for mu in level]

    @property
    def dim(self):
        return sum(self.dims.values())


# ======================================================================#
class WeightModule(object):
    """ Direct sum of irreducible highest-weight modules with exact root
    actions. Immutable after construction; root actions and divided powers
    are computed on first use and cached.
    """

    def __init__(self, rs, highest_weights, constants=None):
        self.rs = rs
        self.rank = rs.rank
        lams = [tuple(int(m) for m in lam) for lam in highest_weights]
        if not lams:
            raise ValueError('ERROR: build_module: empty list of highest weights')
        for lam in lams:
            if len(lam) != rs.rank or not rs.is_dominant(lam):
                raise ValueError('ERROR: build_module: {} is not a dominant weight'.format(lam))
        if not any(any(lam) for lam in lams):
            raise ValueError('ERROR: build_module: all highest weights are zero, module is not faithful')
        self.summands = lams
        self.constants = constants if constants is not None else StructureConstants(rs)

        self._parts = [_Summand(rs, lam) for lam in lams]
        for lam, part in zip(lams, self._parts):
            expected = rs.weyl_dimension(lam)
            if part.dim != expected:
                raise ConsistencyError(
                    'ERROR: build_module: V^{} has dimension {}, Weyl formula gives {}'.format(lam, part.dim, expected)
                )

        self._assemble()
        self._root_actions = {}
        self._divided = {}
        log.debug('module %s over %s: dim %d', lams, rs.cartan_type, self.dim)

    def __repr__(self):
        return 'WeightModule({}, {})'.format(self.rs.cartan_type, self.summands)

    def _assemble(self):
        self.basis = []
        self.blocks = {}
        self.highest_weight_vectors = []
        depth_vectors = []
        for j, part in enumerate(self._parts):
            self.highest_weight_vectors.append(len(self.basis))
            for mu in part.ordered_weights():
                self.blocks[(j, mu)] = (len(self.basis), part.dims[mu])
                dv = self.rs.weight_to_root_coords(_add(part.lam, mu, -1))
                for k in range(part.dims[mu]):
                    self.basis.append(BasisLabel(j, mu, k))
                    depth_vectors.append([int(x) for x in dv])
        self.dim = len(self.basis)
        self.weight_of = [b.weight for b in self.basis]
        self.summand_of = numpy.array([b.summand for b in self.basis], dtype=int)
        # simple-root coordinates of lam_j - mu per basis vector
        self.depth_vectors = numpy.array(depth_vectors, dtype=int).reshape((self.dim, self.rank))

        self._e = [SparseMatrix(self.dim) for _ in range(self.rank)]
        self._f = [SparseMatrix(self.dim) for _ in range(self.rank)]
        for j, part in enumerate(self._parts):
            for (i, mu), block in part.e_blocks.items():
                self._place(self._e[i], block, (j, _add(mu, part.alpha_weights[i])), (j, mu))
            for (i, nu), block in part.f_blocks.items():
                self._place(self._f[i], block, (j, _add(nu, part.alpha_weights[i], -1)), (j, nu))

    def _place(self, target, block, row_key, col_key):
        r0, _ = self.blocks[row_key]
        c0, _ = self.blocks[col_key]
        for (r, c), x in numpy.ndenumerate(block):
            if x != 0:
                target.entries[(r0 + r, c0 + c)] = x

    # ==================================================================#
    # weights
    def weights(self):
        """ {weight: multiplicity} over all summands.
        """
        out = {}
        for (j, mu), (_, n) in self.blocks.items():
            out[mu] = out.get(mu, 0) + n
        return out

    def weight_indices(self, mu):
        mu = tuple(mu)
        return [k for k, w in enumerate(self.weight_of) if w == mu]

    def summand_weights(self, j):
        return self._parts[j].ordered_weights()

    def block_of(self, index):
        b = self.basis[index]
        return b.summand, b.weight

    def weight_lattice(self):
        return WeightLattice(self.rs, self.summands)

    def check_fundamental_weights_hypothesis(self):
        """ (True, []) if every fundamental weight is a weight of V, else
        (False, missing indices).
        """
        wts = self.weights()
        missing = []
        for i in range(self.rank):
            omega = tuple(int(j == i) for j in range(self.rank))
            if omega not in wts:
                missing.append(i)
        return not missing, missing

    def has_regular_summand(self):
        return any(self.rs.is_regular_dominant(lam) for lam in self.summands)

    # ==================================================================#
    # actions
    def action_e(self, i):
        return self._e[i]

    def action_f(self, i):
        return self._f[i]

    def root_action(self, root):
        """ rho(x_alpha) as a SparseMatrix.
        """
        root = self.rs.check_root(root, 'root_action')
        if root in self._root_actions:
            return self._root_actions[root]

        i = self.rs.simple_index(root)
        if i is not None:
            X = self._e[i] if self.rs.is_positive_root(root) else self._f[i]
        else:
            positive = self.rs.is_positive_root(root)
            xi = root if positive else tuple(-x for x in root)
            alpha, beta = self.constants.extraspecial[xi]
            if not positive:
                alpha = tuple(-x for x in alpha)
                beta = tuple(-x for x in beta)
            n = self.constants.n(alpha, beta)
            X = self.root_action(alpha).commutator(self.root_action(beta)).scale(Fraction(1, n))
        self._root_actions[root] = X
        return X

    def root_matrix(self, root):
        return self.root_action(root).dense()

    def divided_powers(self, root):
        """ [x^(1), x^(2), ...] up to the last nonzero divided power.
        """
        root = self.rs.check_root(root, 'divided_powers')
        if root not in self._divided:
            X = self.root_action(root)
            powers = []
            power = X
            m = 1
            while not power.is_zero():
                powers.append(power.scale(Fraction(1, int(factorial(m, exact=True)))))
                m += 1
                power = power @ X
            self._divided[root] = powers
        return self._divided[root]

    def nilpotency_degree(self, root):
        """ Smallest m with rho(x_alpha)^m = 0.
        """
        return len(self.divided_powers(root)) + 1

    def divided_power(self, root, m):
        if m < 0:
            raise ValueError('ERROR: divided_power: negative exponent {}'.format(m))
        if m == 0:
            return SparseMatrix(self.dim, {(k, k): 1 for k in range(self.dim)})
        powers = self.divided_powers(root)
        if m > len(powers):
            return SparseMatrix(self.dim)
        return powers[m - 1]

    def h_action(self, i):
        return SparseMatrix(self.dim, {(k, k): mu[i] for k, mu in enumerate(self.weight_of)})

    def binomial_h_action(self, i, m):
        """ (h_i choose m), diagonal with entries binom(<mu, h_i>, m).
        """
        if m < 0:
            raise ValueError('ERROR: binomial_h_action: negative m {}'.format(m))
        out = exact.identity(self.dim)
        for k, mu in enumerate(self.weight_of):
            out[k, k] = Fraction(int(sympy.binomial(mu[i], m)))
        return out

    def apply_lie_element(self, element):
        """ rho(x) for a LieElement x.
        """
        out = SparseMatrix(self.dim)
        for i, c in enumerate(element.h_part):
            if c != 0:
                out = out + self.h_action(i).scale(c)
        for root, c in element.root_part.items():
            out = out + self.root_action(root).scale(c)
        return out


# ======================================================================#
def build_module(rs, highest_weights, constants=None):
    return WeightModule(rs, highest_weights, constants)


def root_action(module, root):
    return module.root_matrix(root)


def divided_power(module, root, m):
    return module.divided_power(root, m).dense()


def binomial_h_action(module, i, m):
    return module.binomial_h_action(i, m)


def check_fundamental_weights_hypothesis(module):
    return module.check_fundamental_weights_hypothesis()

"""
FILE: verify.py
LAST MODIFIED: 20-09-2026
DESCRIPTION:
Seeded verification suites. Each suite runs a list of named checks on one
Cartan type and records pass or fail with a short detail string; no check
can abort the suite. Randomised sweeps draw one generator per case from
the root seed, so a report depends only on the seed and the case counts.

    algebra      structure constants, Jacobi identity, Chevalley involution
    module       weights, dimensions, admissible lattice stability
    group        generator identities, SL2 embeddings, commutator constants
    integrality  factorizations, Iwasawa sweep, the integrality decider

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from gias3.chevalley.algebra.lie_algebra import ChevalleyAlgebra
from gias3.chevalley.algebra.structure_constants import StructureConstants
from gias3.chevalley.group import commutators
from gias3.chevalley.group.group_element import (
    chi, evaluate, identity, sl2_embed, torus, torus_diagonal, wtilde,
)
from gias3.chevalley.group.words import Chi, GeneratorWord, Torus, WeylLift
from gias3.chevalley.integrality.decide import InGZ, NotIntegral, integrality_decide
from gias3.chevalley.integrality.iwasawa import (
    integral_coset_representative, is_sl2_iwasawa_split, iwasawa_decompose, sl2_iwasawa,
)
from gias3.chevalley.integrality.toral import toral_factorize
from gias3.chevalley.integrality.unipotent import UnipotentCoords, unipotent_factorize
from gias3.chevalley.module.lattice import AdmissibleLattice
from gias3.chevalley.module.weight_module import WeightModule
from gias3.chevalley.module.weights import weights_and_mults
from gias3.chevalley.roots.root_system import RootSystem
from gias3.chevalley.tools import exact
from gias3.chevalley.tools.config import (
    ALGEBRA_TYPES, DEFAULT_TYPES, LARGE_TYPES, fundamental_weight, parse_module_spec,
)
from gias3.chevalley.tools.misc import (
    case_generators, random_integer, random_nonzero_rational, random_rational, random_sweep_coordinate,
)

log = logging.getLogger(__name__)

SUITES = ('algebra', 'module', 'group', 'integrality')

DEFAULT_CASES = {
    'stabilizer': 200,
    'factorize': 100,
    'toral': 50,
    'iwasawa': 100,
    'decide': 50,
    'oracle': 10,
    'group': 20,
}

# entropy tags so that every sweep draws from its own seed sequence
_SWEEP_TAGS = {name: k for k, name in enumerate(sorted(DEFAULT_CASES))}

COMMUTATOR_TYPES = ('A2', 'B2', 'G2')
ORACLE_MAX_DIM = 30


class SuiteReport(object):

    def __init__(self, suite, type_name, module_spec=None):
        self.suite = suite
        self.type_name = type_name
        self.module_spec = module_spec
        self.checks = []
        self.audit = {}

    def check(self, name, fn):
        """ Run fn, which returns a bool or (bool, detail), and record it.
        """
        try:
            result = fn()
            if isinstance(result, tuple):
                passed, detail = result
            else:
                passed, detail = result, ''
        except Exception as e:
            log.debug('check %s raised', name, exc_info=True)
            passed, detail = False, '{}: {}'.format(type(e).__name__, e)
        self.checks.append({'check': name, 'passed': bool(passed), 'detail': str(detail)})
        if not passed:
            log.warning('%s %s: check failed: %s (%s)', self.suite, self.type_name, name, detail)
        return passed

    @property
    def passed(self):
        return all(c['passed'] for c in self.checks)

    def to_json(self):
        d = {
            'suite': self.suite,
            'type': self.type_name,
            'passed': self.passed,
            'checks': self.checks,
        }
        if self.module_spec is not None:
            d['module'] = self.module_spec
        if self.audit:
            d['audit'] = self.audit
        return d


class _Context(object):
    """ Objects shared by the suites of one type, built on first use.
    """

    def __init__(self, type_name, module_spec, seed, cases):
        self.type_name = type_name
        self.module_spec = module_spec or 'sc-default'
        self.seed = seed
        self.cases = dict(DEFAULT_CASES)
        if cases is not None:
            for k in self.cases:
                self.cases[k] = min(self.cases[k], cases)
        self._rs = None
        self._module = None
        self._lattice = None

    @property
    def rs(self):
        if self._rs is None:
            self._rs = RootSystem(self.type_name)
        return self._rs

    @property
    def module(self):
        if self._module is None:
            self._module = WeightModule(self.rs, parse_module_spec(self.rs, self.module_spec))
        return self._module

    @property
    def lattice(self):
        if self._lattice is None:
            self._lattice = AdmissibleLattice(self.module)
        return self._lattice

    def generators(self, sweep):
        n = self.cases[sweep]
        return case_generators([self.seed, _SWEEP_TAGS[sweep]], n)


# ======================================================================#
# random words
def _simple_root(rs, i, sign):
    a = rs.simple_roots[i]
    return a if sign > 0 else tuple(-x for x in a)


def random_simple_word(rs, rng, max_length=12, bound=5):
    """ A word over chi_{+-alpha_i}, h_i and w~_{alpha_i} with parameters
    of denominator at most 5.
    """
    letters = []
    for _ in range(int(rng.integers(1, max_length + 1))):
        i = int(rng.integers(rs.rank))
        kind = int(rng.integers(4))
        if kind == 0:
            letters.append(Chi(_simple_root(rs, i, 1), random_rational(rng, bound)))
        elif kind == 1:
            letters.append(Chi(_simple_root(rs, i, -1), random_rational(rng, bound)))
        elif kind == 2:
            letters.append(Torus(random_nonzero_rational(rng, bound), i=i))
        else:
            letters.append(WeylLift(rs.simple_roots[i], random_nonzero_rational(rng, bound)))
    return GeneratorWord(letters)


def random_integral_word(rs, rng, max_length=8, bound=3):
    """ An integral word, including root elements of non-simple roots.
    """
    letters = []
    for _ in range(int(rng.integers(1, max_length + 1))):
        kind = int(rng.integers(4))
        if kind < 2:
            root = rs.roots[int(rng.integers(len(rs.roots)))]
            letters.append(Chi(root, random_integer(rng, bound)))
        elif kind == 2:
            letters.append(Torus(-1, i=int(rng.integers(rs.rank))))
        else:
            sign = 1 if rng.random() < 0.5 else -1
            letters.append(WeylLift(rs.simple_roots[int(rng.integers(rs.rank))], sign))
    return GeneratorWord(letters)


def random_non_integral_word(rs, rng):
    """ An integral word with one letter made non-integral.
    """
    word = list(random_integral_word(rs, rng))
    k = int(rng.integers(len(word) + 1))
    if rng.random() < 0.5:
        root = rs.roots[int(rng.integers(len(rs.roots)))]
        bad = Chi(root, Fraction(int(rng.integers(1, 5)) * 2 + 1, int(rng.choice([2, 3, 5]))))
    else:
        bad = Torus(int(rng.choice([2, 3, -2])), i=int(rng.integers(rs.rank)))
    word.insert(k, bad)
    return GeneratorWord(word)


def random_sl2(rng, integral=False):
    """ A random element of SL2(Z) or SL2(Q) as a product of elementary
    matrices.
    """
    m = exact.identity(2)
    for _ in range(3):
        s = random_integer(rng, 3) if integral else random_rational(rng, 3)
        t = random_integer(rng, 3) if integral else random_rational(rng, 3)
        m = m.dot(exact.fraction_array([[1, s], [0, 1]])).dot(exact.fraction_array([[1, 0], [t, 1]]))
    return m


# ======================================================================#
def suite_algebra(ctx, report):
    rs = ctx.rs
    report.check('root system size', lambda: (
        len(rs.roots) + rs.rank == ChevalleyAlgebra(rs).dimension,
        '{} roots'.format(len(rs.roots)),
    ))

    constants = {}

    def build():
        constants['N'] = StructureConstants(rs)
        return True, '{} constants'.format(len(constants['N']))
    if not report.check('structure constants are integers with |N| = r + 1', build):
        return
    N = constants['N']
    algebra = ChevalleyAlgebra(rs, N)
    basis = algebra.basis()

    def signs():
        for (a, b), n in N.table.items():
            neg = (tuple(-x for x in a), tuple(-x for x in b))
            if N.n(*neg) != -n or N.n(b, a) != -n:
                return False, 'N{} = {}'.format((a, b), n)
        return True
    report.check('N(b, a) = N(-a, -b) = -N(a, b)', signs)

    def antisymmetry():
        for a, b in itertools.combinations_with_replacement(basis, 2):
            if algebra.bracket(a, b) != -algebra.bracket(b, a):
                return False, '{} {}'.format(a, b)
        return True
    report.check('bracket is antisymmetric', antisymmetry)

    def jacobi():
        n = 0
        for a, b, c in itertools.combinations(basis, 3):
            s = algebra.bracket(a, algebra.bracket(b, c)) + algebra.bracket(b, algebra.bracket(c, a)) + \
                algebra.bracket(c, algebra.bracket(a, b))
            if not s.is_zero():
                return False, '{} {} {}'.format(a, b, c)
            n += 1
        return True, '{} triples'.format(n)
    report.check('Jacobi identity on basis triples', jacobi)

    def integral_brackets():
        return all(algebra.bracket(a, b).is_integral() for a in basis for b in basis)
    report.check('brackets of basis vectors are integral', integral_brackets)

    def involution():
        for a in basis:
            if algebra.involution(algebra.involution(a)) != a:
                return False, 'theta^2 {}'.format(a)
        for a in basis:
            for b in basis:
                lhs = algebra.involution(algebra.bracket(a, b))
                rhs = algebra.bracket(algebra.involution(a), algebra.involution(b))
                if lhs != rhs:
                    return False, '{} {}'.format(a, b)
        return True
    report.check('Chevalley involution is an involutive automorphism', involution)

    # upward string reading, reported only
    upward = sum(1 for (a, b), n in N.table.items()
                 if rs.is_positive_root(a) and rs.is_positive_root(b) and abs(n) == rs.p_chain(a, b) + 1)
    positive = len(N.addable_pairs(positive_only=True))
    report.audit['upward_string_matches'] = '{}/{}'.format(upward, positive)


def _stabilises(lattice, matrix):
    return exact.is_integral(lattice.conjugate(matrix))


def suite_module(ctx, report):
    rs = ctx.rs
    rank = rs.rank

    def irreducibles():
        for lam in [fundamental_weight(rank, i) for i in range(rank)] + [rs.rho]:
            m = WeightModule(rs, [lam])
            if m.dim != rs.weyl_dimension(lam):
                return False, 'V^{} has dimension {}'.format(lam, m.dim)
        return True
    report.check('dimensions of V^omega_i and V^rho match the Weyl formula', irreducibles)

    module = ctx.module
    report.audit['dim'] = module.dim

    def freudenthal():
        for j, lam in enumerate(module.summands):
            expected = weights_and_mults(rs, lam)
            built = {mu: module.blocks[(j, mu)][1] for mu in module.summand_weights(j)}
            if expected != built:
                return False, 'summand {}'.format(lam)
        return True
    report.check('weight multiplicities agree with the Freudenthal recursion', freudenthal)

    def weyl_invariance():
        wts = module.weights()
        for mu, m in wts.items():
            for i in range(rank):
                if wts.get(rs.simple_reflection_weight(i, mu)) != m:
                    return False, 'mu = {}, i = {}'.format(mu, i + 1)
        return True
    report.check('multiplicities are Weyl invariant', weyl_invariance)

    def grading():
        for root in rs.roots:
            step = rs.root_to_weight(root)
            for (r, c) in module.root_action(root).entries:
                if module.summand_of[r] != module.summand_of[c] or \
                        module.weight_of[r] != tuple(a + b for a, b in zip(module.weight_of[c], step)):
                    return False, 'x_{} at ({}, {})'.format(root, r, c)
        return True
    report.check('root actions respect the weight grading', grading)

    def faithful():
        return all(not module.root_action(root).is_zero() for root in rs.roots)
    report.check('module is faithful', faithful)

    def highest():
        for k in module.highest_weight_vectors:
            v = exact.unit_vector(module.dim, k)
            for root in rs.positive_roots:
                if any(x != 0 for x in module.root_action(root).apply(v)):
                    return False, 'x_{} v_{}'.format(root, k)
        return True
    report.check('positive root vectors kill the highest weight vectors', highest)

    def integral_weights():
        return all(Fraction(rs.weight_pairing(mu, a)).denominator == 1
                   for mu in module.weights() for a in rs.positive_roots)
    report.check('<mu, h_alpha> is an integer', integral_weights)

    holder = {}

    def lattice():
        holder['L'] = ctx.lattice
        for j, lam in enumerate(module.summands):
            B, _ = holder['L'].blocks[(j, lam)]
            if B.shape != (1, 1) or abs(B[0, 0]) != 1:
                return False, 'V_lambda,Z for {}'.format(lam)
        return True, '{} blocks'.format(len(holder['L'].blocks))
    if not report.check('lattice has full rank per weight and V_lambda,Z = Z v_lambda', lattice):
        return
    L = holder['L']

    def divided_powers():
        n = 0
        for root in rs.roots:
            for Xm in module.divided_powers(root):
                if not _stabilises(L, Xm.dense()):
                    return False, 'x_{}^({})'.format(root, n)
                n += 1
        return True, '{} divided powers'.format(n)
    report.check('divided powers stabilise the lattice', divided_powers)

    def binomials():
        top = max(abs(m) for mu in module.weights() for m in mu)
        for i in range(rank):
            for m in range(top + 2):
                if not _stabilises(L, module.binomial_h_action(i, m)):
                    return False, '(h_{} choose {})'.format(i + 1, m)
        return True
    report.check('binomials (h_i choose m) stabilise the lattice', binomials)

    def xx_identity():
        n_checked = 0
        for root in rs.roots:
            step = rs.root_to_weight(root)
            neg = tuple(-x for x in root)
            for (j, mu), (start, size) in module.blocks.items():
                n = rs.weight_pairing(mu, root)
                above = tuple(a + b for a, b in zip(mu, step))
                if n <= 0 or (j, above) in module.blocks:
                    continue
                down = module.divided_power(neg, n)
                up = module.divided_power(root, n)
                B, _ = L.blocks[(j, mu)]
                for k in range(size):
                    v = exact.zeros(module.dim)
                    v[start:start + size] = B[:, k]
                    if not exact.arrays_equal(up.apply(down.apply(v)), v):
                        return False, 'alpha = {}, mu = {}'.format(root, mu)
                    n_checked += 1
        return True, '{} vectors'.format(n_checked)
    report.check('x_alpha^(n) x_-alpha^(n) v = v on extremal weight spaces', xx_identity)

    def stabilizer_algebra():
        return L.stabilizer_algebra()['preserved']
    report.check('x_alpha and h_varpi, varpi in L_V*, preserve the lattice', stabilizer_algebra)


def suite_group(ctx, report):
    rs = ctx.rs
    module = ctx.module
    lattice = ctx.lattice
    rngs = ctx.generators('group')

    if ctx.type_name == 'A1':
        _golden_sl2(rs, report)

    def one_parameter():
        for rng in rngs:
            root = rs.roots[int(rng.integers(len(rs.roots)))]
            s, t = random_rational(rng, 5), random_rational(rng, 5)
            if chi(module, root, s) * chi(module, root, t) != chi(module, root, s + t):
                return False, 'root {}, s = {}, t = {}'.format(root, s, t)
        return True
    report.check('chi_alpha(s) chi_alpha(t) = chi_alpha(s + t)', one_parameter)

    def torus_laws():
        for rng in rngs:
            i, j = int(rng.integers(rs.rank)), int(rng.integers(rs.rank))
            s, t = random_nonzero_rational(rng, 5), random_nonzero_rational(rng, 5)
            if torus(module, s, i=i) * torus(module, t, i=i) != torus(module, s * t, i=i):
                return False, 'h_{}({}) h_{}({})'.format(i + 1, s, i + 1, t)
            if torus(module, s, i=i) * torus(module, t, i=j) != torus(module, t, i=j) * torus(module, s, i=i):
                return False, 'h_{} and h_{} do not commute'.format(i + 1, j + 1)
        return True
    report.check('torus elements multiply and commute', torus_laws)

    def coroot_torus():
        for rng in rngs[:5]:
            t = random_nonzero_rational(rng, 4)
            for alpha in rs.positive_roots:
                lhs = wtilde(module, alpha, t) * wtilde(module, alpha, 1).inv()
                rhs = identity(module)
                for i, c in enumerate(rs.coroot_coords(alpha)):
                    if c:
                        rhs = rhs * torus(module, t ** c, i=i)
                if lhs != rhs:
                    return False, 'alpha = {}, t = {}'.format(alpha, t)
        return True
    report.check('w~_alpha(t) w~_alpha(1)^-1 = prod h_i(t^c_i)', coroot_torus)

    def weyl_permutes():
        for alpha in rs.positive_roots:
            w = wtilde(module, alpha, 1).matrix
            for r, c in zip(*w.nonzero()):
                if module.weight_of[r] != rs.reflect(module.weight_of[c], alpha, weight=True):
                    return False, 'alpha = {}'.format(alpha)
        return True
    report.check('w~_alpha maps V_mu onto V_{w_alpha mu}', weyl_permutes)

    def integral_words():
        for rng in rngs:
            g = evaluate(module, random_integral_word(rs, rng))
            if not lattice.stabilizes(g.matrix, g.inverse)[0]:
                return False, str(g.word)
        return True
    report.check('integral words stabilise the lattice', integral_words)

    def sl2_homomorphism():
        for rng in rngs[:5]:
            i = int(rng.integers(rs.rank))
            a, b = random_sl2(rng), random_sl2(rng)
            if sl2_embed(module, i, a.dot(b)) != sl2_embed(module, i, a) * sl2_embed(module, i, b):
                return False, 'i = {}'.format(i + 1)
        g = sl2_embed(module, 0, [[2, 1], [3, 2]])
        if not g.word.is_integral() or not lattice.stabilizes(g.matrix, g.inverse)[0]:
            return False, '[[2, 1], [3, 2]]'
        return True
    report.check('sl2 embeddings are homomorphisms and integral on SL2(Z)', sl2_homomorphism)

    ok, _ = module.check_fundamental_weights_hypothesis()
    if ok and rs.rank <= 3:
        def injective():
            grid = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2)]
            seen = set()
            for ts in itertools.product(grid, repeat=rs.rank):
                d = None
                for i, t in enumerate(ts):
                    di = torus_diagonal(module, t, i=i)
                    d = di if d is None else d * di
                seen.add(tuple(d))
            return len(seen) == len(grid) ** rs.rank
        report.check('prod h_i(t_i) is injective on a sample grid', injective)

    if ctx.type_name in COMMUTATOR_TYPES:
        holder = {}

        def constants():
            holder['table'] = commutators.commutator_table(module, ctx.seed)
            return True, '{} pairs'.format(len(holder['table']))
        if report.check('commutator constants are integers stable across sample sets', constants):
            report.audit['commutators'] = [
                {k: r[k] for k in ('alpha', 'beta', 'constants', 'c11', 'n_alpha_beta', 'p_chain', 'c11_equals_n')}
                for r in holder['table']
            ]

        def audit():
            other = WeightModule(rs, parse_module_spec(rs, 'fundamental'))
            result = commutators.commutator_audit([module, other], ctx.seed)
            return result['agree'], '{} lattice classes'.format(len(result['groups']))
        report.check('commutator tables agree across modules with equal L_V', audit)


def _golden_sl2(rs, report):
    V = WeightModule(rs, [(1,)])
    a, na = rs.simple_roots[0], (-1,)
    F = exact.fraction_array

    report.check('chi_alpha(s) and chi_-alpha(t) on V^omega', lambda: (
        exact.arrays_equal(chi(V, a, Fraction(3, 2)).matrix, F([[1, '3/2'], [0, 1]]))
        and exact.arrays_equal(chi(V, na, Fraction(-2, 5)).matrix, F([[1, 0], ['-2/5', 1]]))
    ))
    report.check('h_alpha(1/2) = diag(1/2, 2)', lambda: exact.arrays_equal(
        torus(V, Fraction(1, 2), i=0).matrix, F([['1/2', 0], [0, 2]])))
    report.check('w~_alpha(1) = [[0, 1], [-1, 0]]', lambda: exact.arrays_equal(
        wtilde(V, a, 1).matrix, F([[0, 1], [-1, 0]])))

    gamma = F([[1, 1], [1, 2]])
    w1 = GeneratorWord([Chi(a, Fraction(1, 2)), Torus(Fraction(1, 2), i=0), Chi(na, Fraction(1, 2))])
    w2 = GeneratorWord([Chi(na, 1), Chi(a, 1)])
    report.check('chi(1/2) h(1/2) chi_-(1/2) = [[1, 1], [1, 2]] = chi_-(1) chi(1)', lambda: (
        exact.arrays_equal(evaluate(V, w1).matrix, gamma) and exact.arrays_equal(evaluate(V, w2).matrix, gamma)
    ))
    L = AdmissibleLattice(V)

    def gamma_stable():
        g = evaluate(V, w1)
        return L.stabilizes(g.matrix, g.inverse)[0]
    report.check('[[1, 1], [1, 2]] stabilises Z + Z', gamma_stable)

    def witness():
        g = chi(V, a, Fraction(1, 2))
        ok, w = L.stabilizes(g.matrix, g.inverse)
        return (not ok and list(w.vector) == [0, 1] and list(w.image) == [Fraction(1, 2), 1]), str(w)
    report.check('chi_alpha(1/2) moves (0, 1) to (1/2, 1)', witness)

    def decide():
        v = integrality_decide(V, L, w1)
        return isinstance(v, InGZ) and exact.arrays_equal(evaluate(V, v.certificate).matrix, gamma)
    report.check('decider certifies [[1, 1], [1, 2]]', decide)


def suite_integrality(ctx, report):
    rs = ctx.rs
    module = ctx.module
    lattice = ctx.lattice
    order = rs.height_order()

    def sl2_golden():
        M = [[Fraction(1, 2), 0], [Fraction(3, 4), 2]]
        g2, b2 = sl2_iwasawa(M)
        known = is_sl2_iwasawa_split(M, [[2, 1], [3, 2]], [[Fraction(1, 4), -2], [0, 4]])
        g3, b3 = integral_coset_representative(Fraction(1, 2))
        coset = is_sl2_iwasawa_split([[Fraction(-1, 2), 1], [-1, 0]], g3, b3)
        return is_sl2_iwasawa_split(M, g2, b2) and known and coset
    report.check('SL2 Iwasawa splits of [[1/2, 0], [3/4, 2]]', sl2_golden)

    def random_coords(rng, integral):
        coeffs = {}
        for beta in order:
            coeffs[beta] = random_integer(rng, 6) if integral else random_sweep_coordinate(rng)
        return UnipotentCoords(order, coeffs)

    def round_trip():
        for rng in ctx.generators('factorize'):
            coords = random_coords(rng, False)
            u = evaluate(module, coords.to_word())
            if unipotent_factorize(module, u) != coords:
                return False, repr(coords)
        return True, '{} cases'.format(ctx.cases['factorize'])
    report.check('unipotent factorization inverts evaluation', round_trip)

    def stabilizer_sweep():
        agree = 0
        for k, rng in enumerate(ctx.generators('stabilizer')):
            coords = random_coords(rng, k % 2 == 0)
            u = evaluate(module, coords.to_word())
            stable, _ = lattice.stabilizes(u.matrix, u.inverse)
            if stable != coords.is_integral():
                return False, repr(coords)
            agree += 1
        return True, '{}/{}'.format(agree, ctx.cases['stabilizer'])
    if not module.has_regular_summand():
        log.warning('%s: no regular summand, unipotent integrality is not guaranteed', module)
    report.check('u stabilises V_Z iff its coordinates are integers', stabilizer_sweep)

    def oracle():
        # the index test is slow, large modules are checked on the fundamental ones
        if module.dim > ORACLE_MAX_DIM:
            target = WeightModule(rs, [fundamental_weight(rs.rank, i) for i in range(rs.rank)])
            target_lattice = AdmissibleLattice(target)
        else:
            target, target_lattice = module, lattice
        for k, rng in enumerate(ctx.generators('oracle')):
            u = evaluate(target, random_coords(rng, k % 2 == 0).to_word())
            fast, _ = target_lattice.stabilizes(u.matrix, u.inverse)
            if fast != target_lattice.stabilizes_by_index(u.matrix, u.inverse):
                return False
        return True, 'dim {}'.format(target.dim)
    report.check('lattice basis test agrees with the Smith index test', oracle)

    def toral():
        for rng in ctx.generators('toral'):
            ts = [random_nonzero_rational(rng, 6) for _ in range(rs.rank)]
            h = identity(module)
            for i, t in enumerate(ts):
                h = h * torus(module, t, i=i)
            got = toral_factorize(module, h)
            if got.params != ts:
                return False, '{} != {}'.format(got.params, ts)
        return True
    ok, _ = module.check_fundamental_weights_hypothesis()
    if ok:
        report.check('toral factorization recovers prod h_i(t_i)', toral)

    def iwasawa():
        for rng in ctx.generators('iwasawa'):
            word = random_simple_word(rs, rng)
            dec = iwasawa_decompose(module, word)
            G = evaluate(module, dec.gamma)
            if not dec.exact or not dec.gamma.is_integral() or not lattice.stabilizes(G.matrix, G.inverse)[0]:
                return False, str(word)
        return True, '{} words'.format(ctx.cases['iwasawa'])
    report.check('gamma u h recomposes exactly with gamma integral', iwasawa)

    if not ok or not module.has_regular_summand():
        report.audit['decider'] = 'skipped: module hypotheses do not hold'
        return

    def decide_integral():
        for rng in ctx.generators('decide'):
            word = random_integral_word(rs, rng)
            v = integrality_decide(module, lattice, word)
            if not isinstance(v, InGZ):
                return False, str(word)
            c = evaluate(module, v.certificate)
            if c != evaluate(module, word) or not lattice.stabilizes(c.matrix, c.inverse)[0]:
                return False, 'certificate for {}'.format(word)
        return True
    report.check('integral words are certified in G(Z)', decide_integral)

    def decide_non_integral():
        found = 0
        for rng in ctx.generators('decide'):
            for _ in range(20):
                word = random_non_integral_word(rs, rng)
                g = evaluate(module, word)
                if not lattice.stabilizes(g.matrix, g.inverse)[0]:
                    break
            else:
                continue
            v = integrality_decide(module, lattice, word)
            if not isinstance(v, NotIntegral) or lattice.contains(v.witness.image):
                return False, str(word)
            found += 1
        return found > 0, '{} words'.format(found)
    report.check('non-integral words get escaping witnesses', decide_non_integral)


_RUNNERS = {
    'algebra': suite_algebra,
    'module': suite_module,
    'group': suite_group,
    'integrality': suite_integrality,
}


# ======================================================================#
def run_type(type_name, suites, module_spec='sc-default', seed=0, cases=None):
    """ Run the named suites on one type, in order. Returns SuiteReports.
    """
    ctx = _Context(type_name, module_spec, seed, cases)
    reports = []
    for name in suites:
        report = SuiteReport(name, type_name, None if name == 'algebra' else ctx.module_spec)
        try:
            _RUNNERS[name](ctx, report)
        except Exception as e:
            log.exception('suite %s on %s aborted', name, type_name)
            report.checks.append({'check': 'suite completed', 'passed': False,
                                  'detail': '{}: {}'.format(type(e).__name__, e)})
        reports.append(report)
    return reports


def run_verification(plan, module_spec='sc-default', seed=0, cases=None, workers=1):
    """ Run a plan, a list of (type, suites) pairs, one task per type. The
    report lists types in plan order, whatever order the tasks finish in.
    """
    for _, suites in plan:
        for name in suites:
            if name not in _RUNNERS:
                raise ValueError('ERROR: run_verification: unknown suite {!r}'.format(name))
    args = [(str(t), suites, module_spec, seed, cases) for t, suites in plan if suites]
    if workers > 1 and len(args) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda a: run_type(*a), args))
    else:
        results = [run_type(*a) for a in args]
    reports = [r for rs in results for r in rs]
    return {
        'seed': seed,
        'passed': all(r.passed for r in reports),
        'suites': [r.to_json() for r in reports],
    }


def verification_plan(suites, types=None, large=False):
    """ (type, suites) pairs. With no types given the algebra suite runs on
    ALGEBRA_TYPES and the module-based suites on DEFAULT_TYPES, plus
    LARGE_TYPES when large is set.
    """
    if types:
        return [(str(t), list(suites)) for t in types]
    module_types = list(DEFAULT_TYPES) + (list(LARGE_TYPES) if large else [])
    plan = []
    for t in ALGEBRA_TYPES + tuple(x for x in module_types if x not in ALGEBRA_TYPES):
        chosen = [s for s in suites if t in (ALGEBRA_TYPES if s == 'algebra' else module_types)]
        if chosen:
            plan.append((t, chosen))
    return plan

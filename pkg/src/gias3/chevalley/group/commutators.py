"""
FILE: commutators.py
LAST MODIFIED: 17-09-2026
DESCRIPTION:
Commutator constants of root elements,

    (chi_a(t), chi_b(u)) = prod_{i,j > 0} chi_{ia+jb}(c_ij t^i u^j)

with the product taken in height order. The constants are measured by
factorizing the commutator at rational sample points and dividing each
coordinate by its monomial; every sample must give the same integer.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging

from gias3.chevalley.errors import ConsistencyError
from gias3.chevalley.group.group_element import evaluate
from gias3.chevalley.group.words import Chi, GeneratorWord
from gias3.chevalley.integrality.unipotent import unipotent_factorize
from gias3.chevalley.tools.misc import case_generators, random_nonzero_rational

log = logging.getLogger(__name__)

SAMPLES_PER_SET = 3


def _combination(alpha, beta, gamma):
    """ (i, j) with gamma = i alpha + j beta, i, j > 0, or None.
    """
    for i in range(1, 4):
        for j in range(1, 4):
            if all(i * a + j * b == g for a, b, g in zip(alpha, beta, gamma)):
                return i, j
    return None


def sample_sets(seed, n=SAMPLES_PER_SET):
    """ Two disjoint lists of nonzero rational pairs (t, u).
    """
    rng_a, rng_b = case_generators(seed, 2)
    first = []
    while len(first) < n:
        p = (random_nonzero_rational(rng_a, 5), random_nonzero_rational(rng_a, 5))
        if p not in first:
            first.append(p)
    second = []
    while len(second) < n:
        p = (random_nonzero_rational(rng_b, 5), random_nonzero_rational(rng_b, 5))
        if p not in first and p not in second:
            second.append(p)
    return first, second


def commutator_word(alpha, beta, t, u):
    return GeneratorWord([Chi(alpha, t), Chi(beta, u), Chi(alpha, -t), Chi(beta, -u)])


def _fit(module, alpha, beta, samples, combos):
    constants = {}
    for t, u in samples:
        g = evaluate(module, commutator_word(alpha, beta, t, u))
        coords = unipotent_factorize(module, g)
        for gamma, coeff in coords.items():
            ij = combos.get(gamma)
            if ij is None:
                if coeff != 0:
                    raise ConsistencyError(
                        'ERROR: commutator_constants: root {} outside the span of {} and {}'.format(gamma, alpha, beta)
                    )
                continue
            c = coeff / (t ** ij[0] * u ** ij[1])
            if c.denominator != 1:
                raise ConsistencyError('ERROR: commutator_constants: c{} = {} is not an integer'.format(ij, c))
            if constants.setdefault(ij, int(c)) != c:
                raise ConsistencyError('ERROR: commutator_constants: c{} depends on the sample'.format(ij))
    return constants


def commutator_constants(module, alpha, beta, seed=0):
    """ {(i, j): c_ij} for positive roots alpha != beta.
    """
    rs = module.rs
    alpha = rs.check_root(alpha, 'commutator_constants')
    beta = rs.check_root(beta, 'commutator_constants')
    if not (rs.is_positive_root(alpha) and rs.is_positive_root(beta)) or alpha == beta:
        raise ValueError('ERROR: commutator_constants: need two distinct positive roots')
    combos = {}
    for gamma in rs.height_order():
        ij = _combination(alpha, beta, gamma)
        if ij is not None:
            combos[gamma] = ij

    first, second = sample_sets(seed)
    a = _fit(module, alpha, beta, first, combos)
    b = _fit(module, alpha, beta, second, combos)
    if a != b:
        raise ConsistencyError('ERROR: commutator_constants: sample sets disagree {} != {}'.format(a, b))
    for ij in combos.values():
        a.setdefault(ij, 0)
    return a


def commutator_table(module, seed=0):
    """ Constants for every ordered pair of positive roots alpha before beta
    with alpha + beta a root, with the c11 comparison against the bracket
    constants.
    """
    rs = module.rs
    records = []
    for k, alpha in enumerate(rs.positive_roots):
        for beta in rs.positive_roots[k + 1:]:
            if not rs.is_root(tuple(a + b for a, b in zip(alpha, beta))):
                continue
            c = commutator_constants(module, alpha, beta, seed)
            n = module.constants.n(alpha, beta)
            records.append({
                'alpha': list(alpha),
                'beta': list(beta),
                'constants': {'{},{}'.format(i, j): v for (i, j), v in sorted(c.items())},
                'c11': c[(1, 1)],
                'n_alpha_beta': n,
                'p_chain': rs.p_chain(alpha, beta),
                'c11_equals_n': c[(1, 1)] == n,
            })
    return records


def commutator_audit(modules, seed=0):
    """ Commutator tables of modules with equal weight lattices must agree.
    """
    groups = {}
    for module in modules:
        key = tuple(map(tuple, module.weight_lattice().basis.tolist()))
        groups.setdefault(key, []).append(module)
    report = {'groups': [], 'agree': True}
    for key, members in groups.items():
        tables = [commutator_table(m, seed) for m in members]
        agree = all(t == tables[0] for t in tables[1:])
        if not agree:
            log.warning('commutator tables differ between %s', members)
        report['agree'] = report['agree'] and agree
        report['groups'].append({
            'modules': [[list(lam) for lam in m.summands] for m in members],
            'agree': agree,
            'table': tables[0],
        })
    return report

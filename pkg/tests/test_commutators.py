from fractions import Fraction

import pytest

from gias3.chevalley.group.commutators import (
    commutator_audit, commutator_constants, commutator_table, commutator_word, sample_sets,
)
from gias3.chevalley.group.group_element import chi, evaluate
from gias3.chevalley.module.weight_module import WeightModule


def test_sample_sets_are_disjoint():
    first, second = sample_sets(7)
    assert len(first) == len(second) == 3
    assert not set(first) & set(second)
    assert all(t != 0 and u != 0 for t, u in first + second)
    assert sample_sets(7) == (first, second)


def test_a2_table(a2_fundamental):
    table = commutator_table(a2_fundamental)
    assert len(table) == 1
    record = table[0]
    assert record['alpha'] == [1, 0] and record['beta'] == [0, 1]
    assert record['constants'] == {'1,1': 1}
    assert record['c11'] == record['n_alpha_beta'] == 1
    assert record['p_chain'] == 1
    assert record['c11_equals_n']


def test_b2_table(b2_fundamental):
    table = commutator_table(b2_fundamental)
    assert [(r['alpha'], r['beta']) for r in table] == [([1, 0], [0, 1]), ([0, 1], [1, 1])]
    for record in table:
        assert record['c11_equals_n']
        assert all(isinstance(v, int) for v in record['constants'].values())
    first = table[0]['constants']
    assert set(first) == {'1,1', '1,2'}
    assert abs(first['1,2']) == 1


def test_g2_short_long_pair(g2):
    module = WeightModule(g2, [(1, 0)])
    c = commutator_constants(module, (1, 0), (0, 1))
    assert set(c) == {(1, 1), (2, 1), (3, 1), (3, 2)}
    assert c[(1, 1)] == module.constants.n((1, 0), (0, 1))
    assert abs(c[(2, 1)]) == 1
    assert abs(c[(3, 1)]) == 1
    assert c[(3, 2)] != 0


def test_constants_reproduce_the_commutator(b2_fundamental):
    m = b2_fundamental
    alpha, beta = (1, 0), (0, 1)
    c = commutator_constants(m, alpha, beta)
    t, u = Fraction(2, 3), Fraction(-5, 2)
    g = evaluate(m, commutator_word(alpha, beta, t, u))
    product = evaluate(m, [])
    for (i, j) in sorted(c, key=lambda ij: ij[0] + ij[1]):
        gamma = tuple(i * a + j * b for a, b in zip(alpha, beta))
        product = product * chi(m, gamma, c[(i, j)] * t ** i * u ** j)
    assert g == product


def test_bad_pairs(a2_fundamental):
    with pytest.raises(ValueError):
        commutator_constants(a2_fundamental, (1, 0), (1, 0))
    with pytest.raises(ValueError):
        commutator_constants(a2_fundamental, (1, 0), (0, -1))
    with pytest.raises(ValueError):
        commutator_constants(a2_fundamental, (1, 0), (2, 0))


def test_audit_agrees_across_modules(a2_fundamental, a2_module):
    report = commutator_audit([a2_fundamental, a2_module])
    assert report['agree']
    assert len(report['groups']) == 1
    assert report['groups'][0]['modules'] == [[[1, 0], [0, 1]], [[1, 1], [1, 0], [0, 1]]]

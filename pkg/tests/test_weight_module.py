from fractions import Fraction

import pytest

from gias3.chevalley.module.weight_module import (
    WeightModule, binomial_h_action, build_module, check_fundamental_weights_hypothesis, divided_power,
    root_action,
)
from gias3.chevalley.module.weights import weights_and_mults
from gias3.chevalley.roots.root_system import RootSystem
from gias3.chevalley.tools import exact


def test_freudenthal_small(a2, g2, b2):
    adjoint = weights_and_mults(a2, (1, 1))
    assert adjoint[(0, 0)] == 2
    assert adjoint[(1, 1)] == 1
    assert sum(adjoint.values()) == 8
    assert weights_and_mults(a2, (1, 0)) == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}
    assert weights_and_mults(g2, (1, 0))[(0, 0)] == 1
    assert weights_and_mults(b2, (1, 0))[(0, 0)] == 1
    assert weights_and_mults(g2, (0, 1))[(0, 0)] == 2


@pytest.mark.parametrize('name,lam', [
    ('A2', (2, 1)), ('A3', (1, 0, 1)), ('B2', (1, 1)), ('C3', (0, 1, 0)), ('G2', (1, 1)),
])
def test_freudenthal_total_is_weyl_dimension(name, lam):
    rs = RootSystem(name)
    assert sum(weights_and_mults(rs, lam).values()) == rs.weyl_dimension(lam)


def test_sc_default_dimensions(a2_module, b2_module):
    assert a2_module.dim == 14
    assert b2_module.dim == 25
    assert a2_module.summands == [(1, 1), (1, 0), (0, 1)]
    assert a2_module.highest_weight_vectors == [0, 8, 11]


def test_module_matches_freudenthal(a2_module, a2):
    for j, lam in enumerate(a2_module.summands):
        built = {mu: a2_module.blocks[(j, mu)][1] for mu in a2_module.summand_weights(j)}
        assert built == weights_and_mults(a2, lam)


def test_basis_order(a2_module):
    labels = a2_module.basis
    assert labels[0].weight == (1, 1)
    assert [b.summand for b in labels] == sorted(b.summand for b in labels)
    zero = a2_module.blocks[(0, (0, 0))]
    assert zero[1] == 2
    assert a2_module.weight_indices((0, 0)) == [zero[0], zero[0] + 1]


def test_rejects_bad_highest_weights(a2):
    with pytest.raises(ValueError):
        WeightModule(a2, [])
    with pytest.raises(ValueError):
        WeightModule(a2, [(1, -1)])
    with pytest.raises(ValueError):
        WeightModule(a2, [(0, 0)])
    with pytest.raises(ValueError):
        WeightModule(a2, [(1, 0, 0)])


def test_sl2_actions(sl2_module):
    assert sl2_module.weight_of == [(1,), (-1,)]
    assert exact.arrays_equal(root_action(sl2_module, (1,)), [[0, 1], [0, 0]])
    assert exact.arrays_equal(root_action(sl2_module, (-1,)), [[0, 0], [1, 0]])
    assert sl2_module.nilpotency_degree((1,)) == 2


def test_grading_and_highest_weights(a2_module, a2):
    for root in a2.roots:
        step = a2.root_to_weight(root)
        for (r, c) in a2_module.root_action(root).entries:
            assert a2_module.summand_of[r] == a2_module.summand_of[c]
            assert a2_module.weight_of[r] == tuple(x + y for x, y in zip(a2_module.weight_of[c], step))
    for k in a2_module.highest_weight_vectors:
        v = exact.unit_vector(a2_module.dim, k)
        for root in a2.positive_roots:
            assert not any(a2_module.root_action(root).apply(v))


def test_root_actions_represent_the_algebra(b2_fundamental, b2):
    m = b2_fundamental
    N = m.constants
    for a in b2.roots:
        for b in b2.roots:
            comm = m.root_action(a).commutator(m.root_action(b))
            s = tuple(x + y for x, y in zip(a, b))
            if not any(s):
                expected = exact.SparseMatrix(m.dim)
                for i, c in enumerate(b2.coroot_coords(a)):
                    expected = expected + m.h_action(i).scale(c)
            elif b2.is_root(s):
                expected = m.root_action(s).scale(N.n(a, b))
            else:
                expected = exact.SparseMatrix(m.dim)
            assert comm == expected


def test_divided_powers(g2):
    m = WeightModule(g2, [(1, 0)])
    X = m.root_action((1, 0))
    # the short root string through the 7-dimensional module has length 3
    assert m.nilpotency_degree((1, 0)) == 3
    assert divided_power(m, (1, 0), 2).tolist() == (X @ X).scale(Fraction(1, 2)).dense().tolist()
    assert exact.is_identity(divided_power(m, (1, 0), 0))
    assert not divided_power(m, (1, 0), 5).any()
    with pytest.raises(ValueError):
        m.divided_power((1, 0), -1)


def test_binomial_h(sl2_module):
    B = binomial_h_action(sl2_module, 0, 1)
    assert B.tolist() == [[1, 0], [0, -1]]
    B = binomial_h_action(sl2_module, 0, 2)
    # binom(-1, 2) = 1
    assert B.tolist() == [[0, 0], [0, 1]]
    assert exact.is_identity(sl2_module.binomial_h_action(0, 0))


def test_fundamental_weights_hypothesis(a2, a2_module):
    assert check_fundamental_weights_hypothesis(a2_module) == (True, [])
    adjoint = build_module(a2, [(1, 1)])
    assert adjoint.check_fundamental_weights_hypothesis() == (False, [0, 1])
    assert adjoint.has_regular_summand()
    fundamental = build_module(a2, [(1, 0), (0, 1)])
    assert not fundamental.has_regular_summand()


def test_apply_lie_element(a2_module):
    from gias3.chevalley.algebra.lie_algebra import ChevalleyAlgebra
    algebra = ChevalleyAlgebra(a2_module.rs, a2_module.constants)
    x = algebra.x((1, 1)) + algebra.h(0).scale(2)
    expected = a2_module.root_action((1, 1)) + a2_module.h_action(0).scale(2)
    assert a2_module.apply_lie_element(x) == expected

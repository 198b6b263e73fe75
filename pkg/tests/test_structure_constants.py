import itertools

import pytest

from gias3.chevalley.algebra.lie_algebra import ChevalleyAlgebra, bracket, chevalley_involution
from gias3.chevalley.algebra.structure_constants import StructureConstants, compute_structure_constants
from gias3.chevalley.roots.root_system import RootSystem

ALGEBRA_TYPES = ['A1', 'A2', 'A3', 'B2', 'C3', 'D4', 'G2']


def test_a2_table(a2):
    N = compute_structure_constants(a2)
    assert len(N) == 12
    assert N.extraspecial == {(1, 1): ((1, 0), (0, 1))}
    assert N.n((1, 0), (0, 1)) == 1
    assert N.n((0, 1), (1, 0)) == -1
    assert N.n((-1, 0), (-1, -1)) == 0
    assert len(N.addable_pairs(positive_only=True)) == 2


@pytest.mark.parametrize('name', ALGEBRA_TYPES)
def test_magnitudes_and_signs(name):
    rs = RootSystem(name)
    N = StructureConstants(rs)
    for (a, b), n in N.table.items():
        assert abs(n) == rs.string_below(a, b) + 1
        assert N.n(b, a) == -n
        assert N.n(tuple(-x for x in a), tuple(-x for x in b)) == -n
    for xi, (alpha, beta) in N.extraspecial.items():
        assert N.n(alpha, beta) > 0
        assert tuple(x + y for x, y in zip(alpha, beta)) == xi


def test_g2_extraspecial_values(g2):
    N = StructureConstants(g2)
    # alpha_1 short: the alpha_1-string through alpha_2 has length 3
    assert N.n((1, 0), (0, 1)) == 1
    assert N.n((1, 0), (1, 1)) == 2
    assert N.n((1, 0), (2, 1)) == 3
    assert N.n((0, 1), (3, 1)) == 1


def test_records(a2):
    records = StructureConstants(a2).as_records()
    assert len(records) == 12
    assert records[0] == {'alpha': [1, 0], 'beta': [0, 1], 'n': 1}


@pytest.mark.parametrize('name', ['A2', 'B2', 'G2'])
def test_jacobi_on_basis(name):
    algebra = ChevalleyAlgebra(RootSystem(name))
    basis = algebra.basis()
    assert len(basis) == algebra.dimension
    for a, b, c in itertools.combinations(basis, 3):
        s = bracket(algebra, a, bracket(algebra, b, c)) \
            + bracket(algebra, b, bracket(algebra, c, a)) \
            + bracket(algebra, c, bracket(algebra, a, b))
        assert s.is_zero()


@pytest.mark.parametrize('name', ['A2', 'B2', 'G2'])
def test_brackets_are_integral_and_antisymmetric(name):
    algebra = ChevalleyAlgebra(RootSystem(name))
    basis = algebra.basis()
    for a in basis:
        assert algebra.bracket(a, a).is_zero()
        for b in basis:
            ab = algebra.bracket(a, b)
            assert ab.is_integral()
            assert ab == -algebra.bracket(b, a)


def test_cartan_brackets(b2):
    algebra = ChevalleyAlgebra(b2)
    # [h_i, x_alpha] = <alpha, h_i> x_alpha
    for alpha in b2.roots:
        for i in range(2):
            assert algebra.bracket(algebra.h(i), algebra.x(alpha)) == \
                algebra.x(alpha).scale(b2.pairing(alpha, i))
    # [x_alpha, x_-alpha] = h_alpha
    h = algebra.bracket(algebra.x((1, 1)), algebra.x((-1, -1)))
    assert h.h_part == (2, 1)
    assert not h.root_part


@pytest.mark.parametrize('name', ['A2', 'B2', 'G2'])
def test_involution_is_automorphism(name):
    algebra = ChevalleyAlgebra(RootSystem(name))
    basis = algebra.basis()
    for a in basis:
        assert chevalley_involution(algebra, chevalley_involution(algebra, a)) == a
        for b in basis:
            assert algebra.involution(algebra.bracket(a, b)) == \
                algebra.bracket(algebra.involution(a), algebra.involution(b))


def test_lie_element_arithmetic(a2):
    algebra = ChevalleyAlgebra(a2)
    x = algebra.x((1, 0)) + algebra.h(1).scale(3)
    assert (x - x).is_zero()
    assert x.support() == {(1, 0), 'h'}
    assert (2 * x).root_part == {(1, 0): 2}
    with pytest.raises(ValueError):
        algebra.x((1, -1))

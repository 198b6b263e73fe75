import functools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gias3.chevalley.group.group_element import chi, evaluate, torus
from gias3.chevalley.group.words import Chi, GeneratorWord
from gias3.chevalley.integrality.unipotent import (
    UnipotentCoords, check_order, unipotent_factorize, unipotent_integrality,
)
from gias3.chevalley.module.weight_module import WeightModule
from gias3.chevalley.roots.root_system import RootSystem


def test_single_root_element(a2_module):
    coords = unipotent_factorize(a2_module, chi(a2_module, (1, 1), 3))
    assert coords[(1, 1)] == 3
    assert coords[(1, 0)] == 0 and coords[(0, 1)] == 0
    assert coords.to_word() == GeneratorWord([Chi((1, 1), 3)])
    assert unipotent_factorize(a2_module, evaluate(a2_module, [])).is_identity()


@pytest.mark.parametrize('fixture', ['a2_module', 'b2_module'])
def test_round_trip(request, fixture):
    module = request.getfixturevalue(fixture)
    positive = module.rs.positive_roots
    # positive letters in reverse height order, so the factorization has to
    # move every letter past the others
    word = GeneratorWord(Chi(beta, Fraction(k + 1, 3)) for k, beta in enumerate(reversed(positive)))
    u = evaluate(module, word)
    coords = unipotent_factorize(module, u)
    assert [beta for beta, _ in coords.items()] == module.rs.height_order()
    assert evaluate(module, coords.to_word()) == u


def test_alternative_order(a2_module):
    u = chi(a2_module, (1, 0), 2) * chi(a2_module, (0, 1), 5)
    default = unipotent_factorize(a2_module, u)
    swapped = unipotent_factorize(a2_module, u, order=[(0, 1), (1, 0), (1, 1)])
    assert default[(1, 0)] == 2 and default[(0, 1)] == 5 and default[(1, 1)] == 0
    assert swapped[(1, 0)] == 2 and swapped[(0, 1)] == 5
    # chi_a(2) chi_b(5) = chi_b(5) chi_a(2) chi_{a+b}(N 10)
    assert abs(swapped[(1, 1)]) == 10
    assert evaluate(a2_module, swapped.to_word()) == u
    assert default != swapped


def test_order_checks(a2):
    assert check_order(a2, None) == a2.height_order()
    with pytest.raises(ValueError):
        check_order(a2, [(1, 0), (0, 1)])
    with pytest.raises(ValueError):
        check_order(a2, [(1, 1), (1, 0), (0, 1)])
    with pytest.raises(ValueError):
        check_order(a2, [(1, 0), (0, 1), (1, 1), (1, 1)])


def test_rejects_non_unipotent(a2_module):
    with pytest.raises(ValueError):
        unipotent_factorize(a2_module, torus(a2_module, 2, i=0))
    with pytest.raises(ValueError):
        unipotent_factorize(a2_module, chi(a2_module, (-1, 0), 1))
    with pytest.raises(ValueError):
        unipotent_factorize(a2_module, chi(a2_module, (1, 0), 1) * chi(a2_module, (0, -1), 1))


def test_unipotent_integrality(a2_module, a2_lattice):
    integral = chi(a2_module, (1, 0), 4) * chi(a2_module, (1, 1), -1) * chi(a2_module, (0, 1), 7)
    assert unipotent_integrality(a2_module, a2_lattice, integral, verify=True)
    rational = chi(a2_module, (1, 0), 1) * chi(a2_module, (0, 1), Fraction(1, 2))
    assert not unipotent_integrality(a2_module, a2_lattice, rational, verify=True)
    # reordering only adds integral commutator terms
    order = [(0, 1), (1, 0), (1, 1)]
    assert unipotent_integrality(a2_module, a2_lattice, integral, order=order)


def test_coords_json(a2):
    coords = UnipotentCoords(a2.height_order(), {(1, 1): Fraction(-1, 2)})
    assert coords.to_json() == [
        {'root': [1, 0], 't': '0'}, {'root': [0, 1], 't': '0'}, {'root': [1, 1], 't': '-1/2'},
    ]
    assert not coords.is_integral()


@settings(max_examples=20, deadline=None)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=5), min_size=3, max_size=3))
def test_round_trip_property(values):
    module = _a2_fundamental()
    order = module.rs.height_order()
    coords = UnipotentCoords(order, dict(zip(order, values)))
    u = evaluate(module, coords.to_word())
    assert unipotent_factorize(module, u) == coords
    assert coords.is_integral() == all(v.denominator == 1 for v in values)


@functools.lru_cache(maxsize=None)
def _a2_fundamental():
    return WeightModule(RootSystem('A2'), [(1, 0), (0, 1)])

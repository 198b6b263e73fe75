from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gias3.chevalley.group.group_element import evaluate
from gias3.chevalley.group.words import Chi, GeneratorWord, Torus, WeylLift
from gias3.chevalley.integrality.iwasawa import (
    bnormal_matrix, integral_coset_representative, is_sl2_iwasawa_split, iwasawa_decompose, sl2_iwasawa,
)
from gias3.chevalley.tools import exact

HALF = Fraction(1, 2)
M = [[HALF, 0], [Fraction(3, 4), 2]]


def test_worked_sl2_split():
    assert is_sl2_iwasawa_split(M, [[2, 1], [3, 2]], [[Fraction(1, 4), -2], [0, 4]])
    gamma2, b2 = sl2_iwasawa(M)
    assert is_sl2_iwasawa_split(M, gamma2, b2)
    assert exact.is_integral(gamma2)
    assert b2[1, 0] == 0
    # the split is unique up to an integral upper triangular unit
    assert abs(b2[0, 0]) == Fraction(1, 4)


@pytest.mark.parametrize('matrix', [
    [[Fraction(1, 3), 0], [0, 3]],
    [[0, -1], [1, Fraction(5, 7)]],
    [[Fraction(-2, 5), Fraction(1, 5)], [-1, Fraction(-2, 1)]],
    [[Fraction(3, 2), Fraction(5, 6)], [Fraction(6, 5), Fraction(4, 3)]],
])
def test_sl2_splits(matrix):
    gamma2, b2 = sl2_iwasawa(matrix)
    assert is_sl2_iwasawa_split(matrix, gamma2, b2)


def test_integral_input_is_its_own_gamma():
    gamma2, b2 = sl2_iwasawa([[2, 1], [3, 2]])
    assert gamma2.tolist() == [[2, 1], [3, 2]]
    assert exact.is_identity(b2)


def test_sl2_split_errors():
    with pytest.raises(ValueError):
        sl2_iwasawa([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        sl2_iwasawa([[1]])
    assert not is_sl2_iwasawa_split(M, [[2, 1], [3, 2]], [[Fraction(1, 4), -2], [0, 5]])
    assert not is_sl2_iwasawa_split(M, exact.identity(2), M)


@pytest.mark.parametrize('t', [HALF, Fraction(-7, 3), Fraction(5), Fraction(0)])
def test_coset_representatives(t):
    gamma2, b2 = integral_coset_representative(t)
    assert is_sl2_iwasawa_split([[-t, 1], [-1, 0]], gamma2, b2)


def _check(module, word):
    dec = iwasawa_decompose(module, word)
    assert dec.exact
    assert dec.gamma.is_integral()
    G = evaluate(module, dec.gamma).matrix
    assert exact.arrays_equal(G.dot(bnormal_matrix(module, dec.b)), evaluate(module, word).matrix)
    return dec


def test_sl2_words(sl2_module):
    dec = _check(sl2_module, GeneratorWord([Chi((-1,), HALF)]))
    assert dec.to_json()['exact'] is True
    _check(sl2_module, GeneratorWord([Chi((1,), HALF), Torus(HALF, i=0), Chi((-1,), HALF)]))
    _check(sl2_module, GeneratorWord([WeylLift((1,), Fraction(2, 3)), Chi((-1,), 4)]))


def test_empty_word(a2_module):
    dec = _check(a2_module, GeneratorWord())
    assert len(dec.gamma) == 0
    assert dec.b.unipotent.is_identity()
    assert dec.b.torus == []


A2_WORDS = [
    [Chi((-1, 0), HALF), Chi((0, -1), Fraction(1, 3))],
    [Chi((1, 0), 2), Chi((0, -1), Fraction(-3, 4)), Torus(Fraction(2, 5), i=1), Chi((-1, 0), 3)],
    [Torus(3, i=0), Chi((-1, 0), Fraction(1, 6)), Chi((0, 1), Fraction(5, 2)), Chi((-1, 0), -2),
     Chi((0, -1), Fraction(7, 3))],
    [WeylLift((1, 0), Fraction(1, 2)), WeylLift((0, -1), 3), Chi((-1, 0), 1)],
    [Torus(Fraction(-1, 2), coweight=(1, 1)), Chi((0, -1), Fraction(4, 9))],
]


@pytest.mark.parametrize('letters', A2_WORDS)
def test_a2_words(a2_module, letters):
    _check(a2_module, GeneratorWord(letters))


def test_b2_word(b2_module):
    _check(b2_module, GeneratorWord([
        Chi((0, -1), Fraction(1, 3)), Chi((-1, 0), Fraction(3, 2)), Chi((0, 1), 2), Chi((0, -1), -1),
    ]))


def test_json_layout(sl2_module):
    data = iwasawa_decompose(sl2_module, [Chi((-1,), HALF)]).to_json()
    assert set(data) == {'gamma', 'u', 'h', 'exact'}
    assert all('gen' not in entry for entry in data['h'])
    assert data['u'][0]['root'] == [1]


def test_rejects_non_simple_letters(a2_module):
    with pytest.raises(ValueError):
        iwasawa_decompose(a2_module, [Chi((1, 1), 1)])
    with pytest.raises(ValueError):
        iwasawa_decompose(a2_module, [WeylLift((-1, -1), 1)])


small = st.fractions(min_value=-3, max_value=3, max_denominator=6)


@settings(max_examples=50, deadline=None)
@given(small, small, small)
def test_sl2_split_of_elementary_products(s, t, u):
    # [[1, s], [0, 1]] [[1, 0], [t, 1]] [[1, u], [0, 1]] has determinant 1
    m = exact.fraction_array([[1, s], [0, 1]]).dot(
        exact.fraction_array([[1, 0], [t, 1]])).dot(exact.fraction_array([[1, u], [0, 1]]))
    gamma2, b2 = sl2_iwasawa(m)
    assert is_sl2_iwasawa_split(m, gamma2, b2)

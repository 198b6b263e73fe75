import numpy
import pytest

from gias3.chevalley.roots.cartan_types import (
    CartanType, cartan_matrix, coxeter_matrix, parse_cartan_type, symmetrizer,
)

ALL_TYPES = ['A1', 'A2', 'A5', 'B2', 'B4', 'C3', 'D4', 'D5', 'E6', 'E7', 'E8', 'F4', 'G2']


def test_parse_cartan_type():
    assert parse_cartan_type('A2') == CartanType('A', 2)
    assert parse_cartan_type('g2') == CartanType('G', 2)
    assert parse_cartan_type('E_8') == CartanType('E', 8)
    assert str(parse_cartan_type(' d4 ')) == 'D4'
    ct = CartanType('B', 3)
    assert parse_cartan_type(ct) is ct


@pytest.mark.parametrize('name', ['B1', 'C1', 'D2', 'E5', 'E9', 'F3', 'G3', 'A0'])
def test_invalid_rank(name):
    with pytest.raises(ValueError):
        parse_cartan_type(name)


@pytest.mark.parametrize('text', ['', 'A', '2A', 'Z3', 'A-1'])
def test_unparseable(text):
    with pytest.raises(ValueError):
        parse_cartan_type(text)


def test_unknown_series():
    with pytest.raises(NotImplementedError):
        CartanType('H', 3)


def test_small_cartan_matrices():
    assert cartan_matrix('A1').tolist() == [[2]]
    assert cartan_matrix('A2').tolist() == [[2, -1], [-1, 2]]
    assert cartan_matrix('B2').tolist() == [[2, -1], [-2, 2]]
    assert cartan_matrix('C2').tolist() == [[2, -2], [-1, 2]]
    assert cartan_matrix('G2').tolist() == [[2, -3], [-1, 2]]


@pytest.mark.parametrize('name', ALL_TYPES)
def test_cartan_matrix_axioms(name):
    A = cartan_matrix(name)
    n = A.shape[0]
    assert all(A[i, i] == 2 for i in range(n))
    for i in range(n):
        for j in range(n):
            if i != j:
                assert A[i, j] <= 0
                assert (A[i, j] == 0) == (A[j, i] == 0)
    d = symmetrizer(A)
    B = numpy.diag(d).dot(A)
    assert (B == B.T).all()
    assert min(d) == 1


def test_symmetrizer_lengths():
    assert symmetrizer(cartan_matrix('B2')).tolist() == [2, 1]
    assert symmetrizer(cartan_matrix('C3')).tolist() == [1, 1, 2]
    assert symmetrizer(cartan_matrix('G2')).tolist() == [1, 3]
    assert symmetrizer(cartan_matrix('E6')).tolist() == [1] * 6


def test_coxeter_matrix():
    assert coxeter_matrix('A2')[0, 1] == 3
    assert coxeter_matrix('B2')[0, 1] == 4
    assert coxeter_matrix('G2')[0, 1] == 6
    m = coxeter_matrix('D4')
    assert m[0, 3] == 2
    assert m[1, 2] == 3

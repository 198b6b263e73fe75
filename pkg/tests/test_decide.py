from fractions import Fraction

import pytest

from gias3.chevalley.errors import HypothesisError
from gias3.chevalley.group.group_element import evaluate, sl2_letters
from gias3.chevalley.group.words import Chi, GeneratorWord, Torus, WeylLift
from gias3.chevalley.integrality.decide import InGZ, NotIntegral, check_hypotheses, integrality_decide
from gias3.chevalley.module.lattice import AdmissibleLattice
from gias3.chevalley.module.weight_module import WeightModule

HALF = Fraction(1, 2)
SL2_WORD = GeneratorWord([Chi((1,), HALF), Torus(HALF, i=0), Chi((-1,), HALF)])


def test_rational_word_with_integral_value(sl2_module, sl2_lattice):
    result = integrality_decide(sl2_module, sl2_lattice, SL2_WORD, strict=True)
    assert isinstance(result, InGZ)
    assert result.certificate.is_integral()
    assert evaluate(sl2_module, result.certificate).matrix.tolist() == [[1, 1], [1, 2]]
    data = result.to_json()
    assert data['verdict'] == 'in_GZ'
    assert isinstance(data['certificate'], list)


def test_root_element_with_rational_parameter(sl2_module, sl2_lattice):
    result = integrality_decide(sl2_module, sl2_lattice, [Chi((1,), HALF)], strict=True)
    assert isinstance(result, NotIntegral)
    assert result.to_json() == {
        'verdict': 'not_integral',
        'witness': {'map': 'g', 'summand': 1, 'mu': [-1], 'vector': ['0', '1'], 'image': ['1/2', '1']},
    }


def test_torus_element(sl2_module, sl2_lattice):
    result = integrality_decide(sl2_module, sl2_lattice, [Torus(2, i=0)])
    assert isinstance(result, NotIntegral)
    assert not sl2_lattice.contains(result.witness.image)
    assert isinstance(integrality_decide(sl2_module, sl2_lattice, [Torus(-1, i=0)]), InGZ)


@pytest.mark.parametrize('letters', [
    [Chi((1, 1), HALF), Chi((1, 1), HALF)],
    [Chi((-1, 0), Fraction(1, 3)), Chi((0, 1), 2), Chi((-1, 0), Fraction(-1, 3))],
    [WeylLift((1, 1), 1), Torus(-1, i=1), Chi((0, -1), 5)],
    [Torus(Fraction(2, 3), i=0), Torus(Fraction(3, 2), i=0)],
])
def test_a2_integral_values(a2_module, a2_lattice, letters):
    result = integrality_decide(a2_module, a2_lattice, letters, strict=True)
    assert isinstance(result, InGZ)
    assert evaluate(a2_module, result.certificate) == evaluate(a2_module, letters)


def test_a2_embedded_sl2(a2_module, a2_lattice):
    word = GeneratorWord([Chi((0, 1), HALF), Torus(HALF, i=1), Chi((0, -1), HALF)])
    assert isinstance(integrality_decide(a2_module, a2_lattice, word), InGZ)
    integral = sl2_letters(a2_module.rs, 0, [[7, 3], [-5, -2]])
    assert isinstance(integrality_decide(a2_module, a2_lattice, integral), InGZ)


@pytest.mark.parametrize('letters', [
    [Chi((1, 1), Fraction(1, 3))],
    [Chi((0, -1), HALF), Chi((1, 0), 1)],
    [Torus(3, i=1), Chi((1, 0), 1)],
    [WeylLift((1, 0), 2)],
])
def test_a2_rational_values(a2_module, a2_lattice, letters):
    result = integrality_decide(a2_module, a2_lattice, letters, strict=True)
    assert isinstance(result, NotIntegral)
    assert not a2_lattice.contains(result.witness.image)


def test_hypotheses(a2, a2_module):
    assert check_hypotheses(a2_module, strict=True)
    adjoint = WeightModule(a2, [(1, 1)])
    assert not check_hypotheses(adjoint)
    with pytest.raises(HypothesisError):
        check_hypotheses(adjoint, strict=True)
    with pytest.raises(HypothesisError):
        integrality_decide(adjoint, AdmissibleLattice(adjoint), [Chi((1, 0), 1)], strict=True)


def test_lenient_mode_still_answers(a2):
    adjoint = WeightModule(a2, [(1, 1)])
    lattice = AdmissibleLattice(adjoint)
    result = integrality_decide(adjoint, lattice, [Chi((1, 0), HALF)])
    assert isinstance(result, NotIntegral)
    assert isinstance(integrality_decide(adjoint, lattice, [Chi((1, 0), 3)]), InGZ)

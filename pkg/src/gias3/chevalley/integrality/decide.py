"""
FILE: decide.py
LAST MODIFIED: 16-09-2026
DESCRIPTION:
Decide whether an element of G(Q), given as a word, lies in G(Z). The
answer is either a certificate (an integral word evaluating to the same
matrix) or a lattice vector that the element or its inverse moves out of
V_Z.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging

import numpy

from gias3.chevalley.errors import ConsistencyError, HypothesisError
from gias3.chevalley.group.group_element import evaluate, torus_diagonal
from gias3.chevalley.group.reduction import reduce_to_simple_alphabet
from gias3.chevalley.group.words import GeneratorWord, Torus
from gias3.chevalley.integrality.iwasawa import bnormal_matrix, iwasawa_decompose
from gias3.chevalley.integrality.toral import toral_factorize
from gias3.chevalley.tools import exact
from gias3.chevalley.tools.misc import format_rational

log = logging.getLogger(__name__)


class InGZ(object):
    verdict = 'in_GZ'

    def __init__(self, certificate, decomposition=None):
        self.certificate = certificate
        self.decomposition = decomposition

    def __repr__(self):
        return 'InGZ(certificate of length {})'.format(len(self.certificate))

    def to_json(self):
        return {'verdict': self.verdict, 'certificate': self.certificate.to_json()}


class NotIntegral(object):
    verdict = 'not_integral'

    def __init__(self, witness, decomposition=None):
        self.witness = witness
        self.decomposition = decomposition

    def __repr__(self):
        return 'NotIntegral({}, weight {})'.format(self.witness.direction, self.witness.weight)

    def to_json(self):
        w = self.witness
        return {
            'verdict': self.verdict,
            'witness': {
                'map': w.direction,
                'summand': w.summand + 1,
                'mu': list(w.weight),
                'vector': [format_rational(x) for x in w.vector],
                'image': [format_rational(x) for x in w.image],
            },
        }


def check_hypotheses(module, strict=False):
    """ Report whether the module carries the guarantees of the decider.
    With strict=True a failure raises HypothesisError, otherwise it is
    logged. Returns True when both hypotheses hold.
    """
    ok, missing = module.check_fundamental_weights_hypothesis()
    problems = []
    if not ok:
        problems.append('fundamental weights {} are not weights of the module'.format([i + 1 for i in missing]))
    if not module.has_regular_summand():
        problems.append('no summand has a regular highest weight')
    for p in problems:
        if strict:
            raise HypothesisError('ERROR: integrality_decide: {}'.format(p))
        log.warning('integrality_decide: %s', p)
    return not problems


def _unit_letters(coords):
    letters = []
    for k, (c, t) in enumerate(zip(coords.coweights, coords.params)):
        if t != -1:
            continue
        if coords.standard:
            letters.append(Torus(-1, i=k))
        else:
            letters.append(Torus(-1, coweight=c))
    return letters


def integrality_decide(module, lattice, word, strict=False):
    """ InGZ or NotIntegral for the element evaluated from word.
    """
    guaranteed = check_hypotheses(module, strict)
    if not isinstance(word, GeneratorWord):
        word = GeneratorWord(word)
    g = evaluate(module, word)

    dec = iwasawa_decompose(module, reduce_to_simple_alphabet(module, word), check=False)
    G = evaluate(module, dec.gamma)
    if not exact.arrays_equal(G.matrix.dot(bnormal_matrix(module, dec.b)), g.matrix):
        raise ConsistencyError('ERROR: integrality_decide: decomposition does not recompose')
    dec.exact = True

    # torus part in the dual basis of L_V, which is h_1 ... h_l when L_V = P
    diag = numpy.ones(module.dim, dtype=object)
    for letter in dec.b.torus:
        diag = diag * torus_diagonal(module, letter.t, letter.i, letter.coweight)
    weights = module.weight_lattice()
    basis = None if exact.is_identity(weights.dual_basis) else weights.dual_basis_vectors()
    try:
        coords = toral_factorize(module, diag, basis)
    except ValueError:
        # torus map not injective on this module
        coords = None

    if dec.b.unipotent.is_integral() and coords is not None and coords.is_unit():
        certificate = dec.gamma + dec.b.unipotent.to_word() + GeneratorWord(_unit_letters(coords))
        if not certificate.is_integral() or evaluate(module, certificate) != g:
            raise ConsistencyError('ERROR: integrality_decide: certificate does not evaluate to the element')
        return InGZ(certificate, dec)

    stable, witness = lattice.stabilizes(g.matrix, g.inverse)
    if stable:
        if guaranteed:
            raise ConsistencyError('ERROR: integrality_decide: element stabilises V_Z but its decomposition is not integral')
        raise HypothesisError('ERROR: integrality_decide: element stabilises V_Z but the module hypotheses fail, no verdict')
    if lattice.contains(witness.image):
        raise ConsistencyError('ERROR: integrality_decide: witness image lies in the lattice')
    return NotIntegral(witness, dec)

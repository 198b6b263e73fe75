"""
FILE: reduction.py
LAST MODIFIED: 12-09-2026
DESCRIPTION:
Rewriting generator words over the simple-root alphabet
{chi_{+-alpha_i}(t), h(t), w~_{alpha_i}(s)}, and integral simple words over
the unit generators {chi_{+-alpha_i}(+-1), h_i(-1)}.

A non-simple root element is conjugated from a simple one,

    chi_beta(t) = w^ chi_{+-alpha_i}(eps t) w^^-1,    w^ = w~_{j1}(1) ... w~_{jk}(1)

where beta = s_j1 ... s_jk alpha_i and the sign eps = +-1 is read from the
module.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
import weakref

from gias3.chevalley.errors import ConsistencyError
from gias3.chevalley.group.group_element import evaluate
from gias3.chevalley.group.words import Chi, GeneratorWord, Torus, WeylLift
from gias3.chevalley.tools import exact

log = logging.getLogger(__name__)

_conjugators = weakref.WeakKeyDictionary()


def _neg(a):
    return tuple(-x for x in a)


def simple_conjugator(module, root):
    """ (w^ letters, simple root letter root, eps) with
    w^ x_simple w^^-1 = eps x_root.
    """
    cache = _conjugators.setdefault(module, {})
    if root in cache:
        return cache[root]

    rs = module.rs
    positive = rs.is_positive_root(root)
    i, reflections = rs.express_root(root if positive else _neg(root))
    simple = rs.simple_roots[i] if positive else _neg(rs.simple_roots[i])
    what = GeneratorWord(WeylLift(rs.simple_roots[j], 1) for j in reflections)

    W = evaluate(module, what)
    conj = W.matrix.dot(module.root_action(simple).left_multiply(W.inverse))
    X = module.root_action(root)
    (r, c), x = X.first_entry()
    eps = conj[r, c] / x
    if eps not in (1, -1) or not exact.arrays_equal(conj, X.dense() * eps):
        raise ConsistencyError('ERROR: reduce_to_simple_alphabet: conjugate of x_{} is not +-x_{}'.format(simple, root))
    cache[root] = (what, simple, int(eps))
    return cache[root]


def _reduce_chi(module, letter):
    if module.rs.simple_index(letter.root) is not None:
        return [letter]
    what, simple, eps = simple_conjugator(module, letter.root)
    return list(what) + [Chi(simple, eps * letter.t)] + list(what.inverse())


def reduce_to_simple_alphabet(module, word):
    """ An equivalent word whose root letters are all simple or negative
    simple. Integral words stay integral.
    """
    rs = module.rs
    out = []
    for letter in word:
        if isinstance(letter, Torus):
            out.append(letter)
            continue
        rs.check_root(letter.root, 'reduce_to_simple_alphabet')
        if isinstance(letter, WeylLift):
            if rs.simple_index(letter.root) is not None:
                out.append(letter)
            else:
                for chi in letter.expand():
                    out.extend(_reduce_chi(module, chi))
        else:
            out.extend(_reduce_chi(module, letter))
    return GeneratorWord(out)


def unit_generator_word(module, word):
    """ Rewrite an integral word over chi_{+-alpha_i}(+-1) and h_i(-1), using
    chi(n) = chi(sign n)^|n|.
    """
    rs = module.rs
    word = reduce_to_simple_alphabet(module, word)
    if not word.is_integral():
        raise ValueError('ERROR: unit_generator_word: word is not integral')
    out = []
    for letter in word:
        if isinstance(letter, WeylLift):
            letters = letter.expand()
        else:
            letters = [letter]
        for x in letters:
            if isinstance(x, Chi):
                step = 1 if x.t > 0 else -1
                out.extend(Chi(x.root, step) for _ in range(abs(int(x.t))))
            elif x.t == -1:
                if x.i is not None:
                    out.append(Torus(-1, i=x.i))
                    continue
                if any(c.denominator != 1 for c in x.coweight):
                    raise ValueError('ERROR: unit_generator_word: h_varpi(-1) with varpi {} not in the coroot lattice'.format(x.coweight))
                # h_varpi(-1) = prod_i h_i(-1)^c_i
                out.extend(Torus(-1, i=i) for i, c in enumerate(x.coweight) if int(c) % 2)
    log.debug('unit word of length %d over %s', len(out), rs.cartan_type)
    return GeneratorWord(out)

"""
FILE: weights.py
LAST MODIFIED: 04-09-2026
DESCRIPTION:
Weight multiplicities of irreducible highest-weight modules by the
Freudenthal recursion, level by level below the highest weight.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from fractions import Fraction

log = logging.getLogger(__name__)


def _shift(mu):
    return tuple(m + 1 for m in mu)


def weights_and_mults(rs, lam):
    """ {weight: multiplicity} for V^lam, weights in fundamental coordinates.
    """
    lam = tuple(int(m) for m in lam)
    if len(lam) != rs.rank or not rs.is_dominant(lam):
        raise ValueError('ERROR: weights_and_mults: {} is not a dominant weight'.format(lam))

    top = rs.weight_inner(_shift(lam), _shift(lam))
    positive = [(sum(alpha), rs.root_to_weight(alpha)) for alpha in rs.positive_roots]
    simple_weights = [rs.root_to_weight(a) for a in rs.simple_roots]

    mults = {lam: 1}
    level = [lam]
    depth = 0
    while level:
        depth += 1
        candidates = []
        seen = set()
        for nu in level:
            for a in simple_weights:
                mu = tuple(x - y for x, y in zip(nu, a))
                if mu not in seen:
                    seen.add(mu)
                    candidates.append(mu)

        nxt = []
        for mu in candidates:
            denom = top - rs.weight_inner(_shift(mu), _shift(mu))
            if denom == 0:
                # not a weight: only lam lies on this sphere
                continue
            num = Fraction(0)
            for ht, aw in positive:
                for k in range(1, depth // ht + 1):
                    nu = tuple(m + k * x for m, x in zip(mu, aw))
                    if nu in mults:
                        num += mults[nu] * rs.weight_inner(nu, aw)
            m = 2 * num / denom
            if m.denominator != 1 or m < 0:
                raise RuntimeError('ERROR: weights_and_mults: bad multiplicity {} at {}'.format(m, mu))
            if m > 0:
                mults[mu] = int(m)
                nxt.append(mu)
        level = nxt

    log.debug('V^%s: %d weights, dim %d', lam, len(mults), sum(mults.values()))
    return mults

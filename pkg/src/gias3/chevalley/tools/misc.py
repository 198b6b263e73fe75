"""
FILE: misc.py
LAST MODIFIED: 03-09-2026
DESCRIPTION:
miscellaneous helper functions: rational string formats and seeded
random draws for the verification sweeps.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from fractions import Fraction

import numpy

from gias3.chevalley.tools.exact import to_fraction

log = logging.getLogger(__name__)

SWEEP_DENOMINATORS = (2, 3, 5)


def format_rational(x):
    """ "p/q" in lowest terms, "p" when q = 1.
    """
    x = to_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return '{}/{}'.format(x.numerator, x.denominator)


def parse_rational(s):
    """ Parse "p/q", "p" or a JSON integer into a Fraction.
    """
    if isinstance(s, bool):
        raise ValueError('ERROR: parse_rational: booleans are not rationals')
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError('ERROR: parse_rational: expected "p/q" string, got {!r}'.format(s))
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError('ERROR: parse_rational: cannot parse {!r}'.format(s))


def case_generators(root_seed, n_cases):
    """ One independent generator per sweep case, spawned from the root seed
    so that results do not depend on the order cases are run in.
    """
    children = numpy.random.SeedSequence(root_seed).spawn(n_cases)
    return [numpy.random.default_rng(c) for c in children]


def random_integer(rng, bound):
    return Fraction(int(rng.integers(-bound, bound + 1)))


def random_rational(rng, bound, denominators=(1, 2, 3, 4, 5)):
    num = int(rng.integers(-bound, bound + 1))
    den = int(rng.choice(denominators))
    return Fraction(num, den)


def random_nonzero_rational(rng, bound, denominators=(1, 2, 3, 4, 5)):
    while True:
        x = random_rational(rng, bound, denominators)
        if x != 0:
            return x


def random_sweep_coordinate(rng, bound=6):
    """ A coordinate drawn from the integers or from k/2, k/3, k/5.
    """
    if rng.random() < 0.5:
        return random_integer(rng, bound)
    den = int(rng.choice(SWEEP_DENOMINATORS))
    return Fraction(int(rng.integers(-bound, bound + 1)), den)

"""
FILE: words.py
LAST MODIFIED: 10-09-2026
DESCRIPTION:
Generator words for Chevalley group elements. A word is a sequence of
letters, each one of

    Chi(root, t)                  the root element chi_root(t)
    Torus(t, i=k)                 h_k(t), k a 0-based simple index
    Torus(t, coweight=varpi)      h_varpi(t), varpi in h_i coordinates
    WeylLift(root, s)             w~_root(s) = chi(s) chi_-root(-1/s) chi(s)

and evaluates left to right as a matrix product. The JSON form of a letter
uses 1-based simple indices and "p/q" strings for parameters.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging
from collections import namedtuple

from gias3.chevalley.errors import WordParseError
from gias3.chevalley.tools.exact import to_fraction
from gias3.chevalley.tools.misc import format_rational, parse_rational

log = logging.getLogger(__name__)


class Chi(namedtuple('Chi', ['root', 't'])):
    __slots__ = ()
    gen = 'chi'

    def __new__(cls, root, t):
        return super(Chi, cls).__new__(cls, tuple(int(x) for x in root), to_fraction(t))

    def is_integral(self):
        return self.t.denominator == 1

    def inverse(self):
        return Chi(self.root, -self.t)

    def to_json(self):
        return {'gen': 'chi', 'root': list(self.root), 't': format_rational(self.t)}


class Torus(namedtuple('Torus', ['t', 'i', 'coweight'])):
    __slots__ = ()
    gen = 'h'

    def __new__(cls, t, i=None, coweight=None):
        t = to_fraction(t)
        if t == 0:
            raise ValueError('ERROR: Torus: parameter must be nonzero')
        if (i is None) == (coweight is None):
            raise ValueError('ERROR: Torus: give exactly one of i and coweight')
        if coweight is not None:
            coweight = tuple(to_fraction(c) for c in coweight)
        else:
            i = int(i)
        return super(Torus, cls).__new__(cls, t, i, coweight)

    def is_integral(self):
        return self.t in (1, -1)

    def inverse(self):
        return Torus(1 / self.t, self.i, self.coweight)

    def to_json(self):
        out = {'gen': 'h'}
        if self.i is not None:
            out['i'] = self.i + 1
        else:
            out['coweight'] = [format_rational(c) for c in self.coweight]
        out['t'] = format_rational(self.t)
        return out


class WeylLift(namedtuple('WeylLift', ['root', 's'])):
    __slots__ = ()
    gen = 'w'

    def __new__(cls, root, s):
        s = to_fraction(s)
        if s == 0:
            raise ValueError('ERROR: WeylLift: parameter must be nonzero')
        return super(WeylLift, cls).__new__(cls, tuple(int(x) for x in root), s)

    def is_integral(self):
        return self.s in (1, -1)

    def inverse(self):
        # w~(s)^-1 = w~(-s)
        return WeylLift(self.root, -self.s)

    def expand(self):
        neg = tuple(-x for x in self.root)
        return [Chi(self.root, self.s), Chi(neg, -1 / self.s), Chi(self.root, self.s)]

    def to_json(self):
        return {'gen': 'w', 'root': list(self.root), 's': format_rational(self.s)}


# ======================================================================#
class GeneratorWord(object):
    """ An immutable sequence of generator letters.
    """

    def __init__(self, letters=()):
        self.letters = tuple(letters)
        for letter in self.letters:
            if not isinstance(letter, (Chi, Torus, WeylLift)):
                raise TypeError('ERROR: GeneratorWord: {!r} is not a generator letter'.format(letter))

    def __repr__(self):
        return 'GeneratorWord({})'.format(list(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return GeneratorWord(self.letters[k])
        return self.letters[k]

    def __add__(self, other):
        return GeneratorWord(self.letters + tuple(other))

    def _key(self):
        # namedtuple letters of different kinds can hold equal fields
        return tuple((letter.gen,) + tuple(letter) for letter in self.letters)

    def __eq__(self, other):
        if not isinstance(other, GeneratorWord):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def is_integral(self):
        return all(letter.is_integral() for letter in self.letters)

    def inverse(self):
        return GeneratorWord(letter.inverse() for letter in reversed(self.letters))

    def roots(self):
        return [letter.root for letter in self.letters if not isinstance(letter, Torus)]

    def to_json(self):
        return [letter.to_json() for letter in self.letters]


# ======================================================================#
def _int_vector(value, rank, what, n):
    if not isinstance(value, list) or len(value) != rank:
        raise WordParseError('ERROR: parse_word: letter {}: {} must be a list of {} integers'.format(n, what, rank))
    if any(isinstance(x, bool) or not isinstance(x, int) for x in value):
        raise WordParseError('ERROR: parse_word: letter {}: {} must contain integers'.format(n, what))
    return tuple(value)


def _rational(entry, key, n):
    if key not in entry:
        raise WordParseError('ERROR: parse_word: letter {}: missing "{}"'.format(n, key))
    try:
        return parse_rational(entry[key])
    except ValueError as e:
        raise WordParseError('ERROR: parse_word: letter {}: {}'.format(n, e))


def parse_letter(entry, rank, n=0):
    """ One letter from its JSON object.
    """
    if not isinstance(entry, dict) or 'gen' not in entry:
        raise WordParseError('ERROR: parse_word: letter {} is not an object with a "gen" field'.format(n))
    gen = entry['gen']
    try:
        if gen == 'chi':
            return Chi(_int_vector(entry.get('root'), rank, 'root', n), _rational(entry, 't', n))
        if gen == 'w':
            return WeylLift(_int_vector(entry.get('root'), rank, 'root', n), _rational(entry, 's', n))
        if gen == 'h':
            t = _rational(entry, 't', n)
            if 'i' in entry:
                i = entry['i']
                if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= rank:
                    raise WordParseError('ERROR: parse_word: letter {}: "i" must be in 1..{}'.format(n, rank))
                return Torus(t, i=i - 1)
            if 'coweight' in entry:
                cw = entry['coweight']
                if not isinstance(cw, list) or len(cw) != rank:
                    raise WordParseError('ERROR: parse_word: letter {}: coweight must have length {}'.format(n, rank))
                try:
                    return Torus(t, coweight=[parse_rational(c) for c in cw])
                except ValueError as e:
                    raise WordParseError('ERROR: parse_word: letter {}: {}'.format(n, e))
            raise WordParseError('ERROR: parse_word: letter {}: torus letter needs "i" or "coweight"'.format(n))
    except WordParseError:
        raise
    except ValueError as e:
        # zero torus or Weyl parameters
        raise WordParseError('ERROR: parse_word: letter {}: {}'.format(n, e))
    raise WordParseError('ERROR: parse_word: letter {}: unknown generator {!r}'.format(n, gen))


def parse_word(data, rank):
    """ GeneratorWord from the decoded JSON array.
    """
    if not isinstance(data, list):
        raise WordParseError('ERROR: parse_word: a word is a JSON array of letters')
    return GeneratorWord(parse_letter(entry, rank, n) for n, entry in enumerate(data))


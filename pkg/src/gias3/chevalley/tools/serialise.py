"""
FILE: serialise.py
LAST MODIFIED: 18-09-2026
DESCRIPTION:
JSON writer and reader classes for root systems, modules, generator words
and the reports of the decision procedures. Rationals are written as
"p/q" strings in lowest terms ("p" when q = 1); simple indices are 1-based.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import json
import logging
import os
import sys

from gias3.chevalley.errors import WordParseError
from gias3.chevalley.group.words import parse_word
from gias3.chevalley.tools.misc import format_rational

log = logging.getLogger(__name__)


def _rows(a):
    return [[format_rational(x) for x in row] for row in a]


def dumps(d):
    """ The canonical text of a report: sorted keys, fixed indent.
    """
    return json.dumps(d, indent=4, sort_keys=True)


def write_json(d, filename=None):
    """ Write a report to filename, or to stdout when filename is None.
    """
    text = dumps(d)
    if filename is None:
        sys.stdout.write(text + '\n')
    else:
        with open(filename, 'w') as f:
            f.write(text + '\n')
    return filename


class RootSystemJSONWriter(object):

    def __init__(self, rs, constants=None):
        """
        Writer class for serialising a root system, and optionally its
        structure constants, to a JSON format file or string.
        """
        self.rs = rs
        self.constants = constants

    def write(self, filename, filedir=None):
        if filedir is not None:
            filename = os.path.join(filedir, filename)
        return write_json(self.serialise(), filename)

    def serialise(self):
        d = {}
        self._serialise_meta(d)
        self._serialise_roots(d)
        if self.constants is not None:
            d['structure_constants'] = {
                'convention': self.constants.convention,
                'table': self.constants.as_records(),
            }
        return d

    def _serialise_meta(self, d):
        rs = self.rs
        d['type'] = str(rs.cartan_type)
        d['rank'] = rs.rank
        d['cartan_matrix'] = [[int(x) for x in row] for row in rs.cartan_matrix]
        d['symmetrizer'] = [int(x) for x in rs.simple_lengths]
        d['fundamental_group'] = rs.fundamental_group()
        d['highest_root'] = list(rs.highest_root)

    def _serialise_roots(self, d):
        rs = self.rs
        # root_lengths and heights run parallel to positive_roots
        d['positive_roots'] = [[int(x) for x in r] for r in rs.positive_roots]
        d['root_lengths'] = [int(rs.root_lengths[r]) for r in rs.positive_roots]
        d['heights'] = [int(rs.height(r)) for r in rs.positive_roots]
        d['height_order'] = [[int(x) for x in r] for r in rs.height_order()]


class ModuleJSONWriter(object):

    def __init__(self, module, lattice=None):
        """
        Writer class for a weight module summary: summands, weights with
        multiplicities and, when a lattice is given, its per-weight bases.
        """
        self.module = module
        self.lattice = lattice

    def write(self, filename, filedir=None):
        if filedir is not None:
            filename = os.path.join(filedir, filename)
        return write_json(self.serialise(), filename)

    def serialise(self):
        module = self.module
        d = {
            'type': str(module.rs.cartan_type),
            'summands': [list(lam) for lam in module.summands],
            'dim': module.dim,
        }
        wts = module.weights()
        order = []
        for mu in module.weight_of:
            if mu not in order:
                order.append(mu)
        d['weights'] = [{'mu': list(mu), 'mult': wts[mu]} for mu in order]

        ok, missing = module.check_fundamental_weights_hypothesis()
        d['fundamental_weights_hypothesis'] = {'holds': ok, 'missing': [i + 1 for i in missing]}
        d['regular_summand'] = module.has_regular_summand()

        lv = module.weight_lattice()
        d['weight_lattice'] = {
            'basis': [[int(x) for x in row] for row in lv.basis],
            'index': lv.index,
            'form': list(lv.classify_form()),
            'coweight_basis': [[format_rational(x) for x in c] for c in lv.dual_basis_vectors()],
        }
        if self.lattice is not None:
            self._serialise_lattice(d)
        return d

    def _serialise_lattice(self, d):
        blocks = []
        for (j, mu), (B, _) in sorted(self.lattice.blocks.items(), key=lambda kv: self.module.blocks[kv[0]][0]):
            # rows of the HNF are the basis vectors in weight space coordinates
            blocks.append({'summand': j + 1, 'mu': list(mu), 'basis': _rows(B.T)})
        d['lattice'] = blocks


class WordJSONReader(object):

    def __init__(self, rank):
        """
        Reader class for generator words stored as JSON arrays of letters.
        """
        self.rank = rank

    def read(self, filename, filedir=None):
        if filedir is not None:
            filename = os.path.join(filedir, filename)
        try:
            with open(filename, 'r') as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise WordParseError('ERROR: WordJSONReader.read: {} is not valid JSON: {}'.format(filename, e))
        except OSError as e:
            raise WordParseError('ERROR: WordJSONReader.read: cannot read {}: {}'.format(filename, e))
        return self.deserialise(data)

    def deserialise(self, data):
        word = parse_word(data, self.rank)
        log.debug('parsed word of %d letters', len(word))
        return word


class WordJSONWriter(object):

    def __init__(self, word):
        self.word = word

    def write(self, filename, filedir=None):
        if filedir is not None:
            filename = os.path.join(filedir, filename)
        return write_json(self.serialise(), filename)

    def serialise(self):
        return self.word.to_json()


def load_word(filename, rank, filedir=None):
    return WordJSONReader(rank).read(filename, filedir)


def save_word(filename, word, filedir=None):
    return WordJSONWriter(word).write(filename, filedir)


def matrix_to_json(a):
    """ Row-major array of rational strings.
    """
    return _rows(a)

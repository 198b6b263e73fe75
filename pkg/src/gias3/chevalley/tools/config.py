"""
FILE: config.py
LAST MODIFIED: 18-10-2026
DESCRIPTION:
Run configuration for the command-line front end: the Cartan type, the
module specification and the sweep parameters, taken from parsed
arguments.

===============================================================================
This file is part of GIAS3. (https://github.com/musculoskeletal/gias3)

This Source Code Form is subject to the terms of the Mozilla Public
License, v. 2.0. If a copy of the MPL was not distributed with this
file, You can obtain one at http://mozilla.org/MPL/2.0/.
===============================================================================
"""
import logging

from gias3.chevalley.roots.cartan_types import parse_cartan_type

log = logging.getLogger(__name__)

PRESETS = ('sc-default', 'adjoint', 'fundamental')
# dim V^rho beyond desk scale
LARGE_TYPES = ('D4', 'F4', 'E6', 'E7', 'E8')
DEFAULT_TYPES = ('A1', 'A2', 'A3', 'B2', 'C3', 'G2')
ALGEBRA_TYPES = ('A1', 'A2', 'A3', 'B2', 'C3', 'D4', 'G2')


def fundamental_weight(rank, i):
    return tuple(int(j == i) for j in range(rank))


def parse_module_spec(rs, spec):
    """ Highest weights of the module named by spec: a preset or an
    explicit list "a,b;c,d" of summands in fundamental coordinates.
    """
    rank = rs.rank
    if spec is None or spec == 'sc-default':
        # rho = omega_1 in rank one, a summand is listed once
        weights = [rs.rho]
        for i in range(rank):
            if fundamental_weight(rank, i) not in weights:
                weights.append(fundamental_weight(rank, i))
        return weights
    if spec == 'fundamental':
        return [fundamental_weight(rank, i) for i in range(rank)]
    if spec == 'adjoint':
        return [rs.root_to_weight(rs.highest_root)]

    weights = []
    for part in spec.split(';'):
        part = part.strip()
        if not part:
            continue
        try:
            lam = tuple(int(x) for x in part.split(','))
        except ValueError:
            raise ValueError('ERROR: parse_module_spec: cannot read summand {!r}'.format(part))
        if len(lam) != rank:
            raise ValueError('ERROR: parse_module_spec: summand {} has length {}, rank is {}'.format(lam, len(lam), rank))
        if not rs.is_dominant(lam):
            raise ValueError('ERROR: parse_module_spec: summand {} is not dominant'.format(lam))
        weights.append(lam)
    if not weights:
        raise ValueError('ERROR: parse_module_spec: no summands in {!r}'.format(spec))
    return weights


class RunConfig(object):

    def __init__(self, cartan_type=None, module='sc-default', seed=0, json=False, out=None,
                 large=False, workers=1, cases=None, strict=True, verbose=False):
        self.cartan_type = parse_cartan_type(cartan_type) if isinstance(cartan_type, str) else cartan_type
        self.module = module
        self.seed = int(seed)
        self.json = json
        self.out = out
        self.large = large
        self.workers = max(1, int(workers))
        self.cases = cases
        self.strict = strict
        self.verbose = verbose

    def __repr__(self):
        return 'RunConfig(type={}, module={}, seed={})'.format(self.cartan_type, self.module, self.seed)

    @classmethod
    def from_args(cls, args):
        return cls(
            cartan_type=getattr(args, 'type', None),
            module=getattr(args, 'module', 'sc-default'),
            seed=getattr(args, 'seed', 0),
            json=getattr(args, 'json', False),
            out=getattr(args, 'out', None),
            large=getattr(args, 'large', False),
            workers=getattr(args, 'workers', 1),
            cases=getattr(args, 'cases', None),
            strict=not getattr(args, 'force', False),
            verbose=getattr(args, 'verbose', False),
        )

    def check_size(self, type_name=None):
        """ Refuse the large types for module-based work unless asked for.
        """
        name = type_name or str(self.cartan_type)
        if name in LARGE_TYPES and not self.large and self.module in (None, 'sc-default'):
            raise ValueError('ERROR: the sc-default module of {} is large, pass --large to build it'.format(name))

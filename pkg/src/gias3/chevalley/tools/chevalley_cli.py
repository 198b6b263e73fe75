"""
Command-line front end for root systems, weight modules, generator words
and the integrality decision procedure.

    chevalley roots --type G2
    chevalley module --type A2 --module 1,1 --json
    chevalley verify all --type A1 --seed 42
    chevalley decide --type A2 --word word.json
    chevalley iwasawa --type A1 --module 1 --word word.json
    chevalley factorize --type A2 --word word.json

Exit status: 0 success, 1 failed verification or unsupported element,
2 bad input, 3 element not integral, 4 module hypotheses not met,
99 unexpected error.
"""

import argparse
import logging
import sys

from gias3.chevalley import __version__
from gias3.chevalley.algebra.structure_constants import StructureConstants
from gias3.chevalley.errors import HypothesisError, WordParseError
from gias3.chevalley.group.group_element import evaluate
from gias3.chevalley.group.reduction import reduce_to_simple_alphabet
from gias3.chevalley.group.words import Torus
from gias3.chevalley.integrality.decide import InGZ, check_hypotheses, integrality_decide
from gias3.chevalley.integrality.iwasawa import iwasawa_decompose
from gias3.chevalley.integrality.toral import toral_factorize
from gias3.chevalley.integrality.unipotent import unipotent_factorize
from gias3.chevalley.module.lattice import AdmissibleLattice
from gias3.chevalley.module.weight_module import WeightModule
from gias3.chevalley.roots.root_system import RootSystem
from gias3.chevalley.tools import serialise
from gias3.chevalley.tools.config import RunConfig, parse_module_spec
from gias3.chevalley.tools.exact import format_matrix
from gias3.chevalley.tools.misc import format_rational
from gias3.chevalley.tools.verify import SUITES, run_verification, verification_plan

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_NOT_INTEGRAL = 3
EXIT_HYPOTHESIS = 4
EXIT_UNEXPECTED = 99


# =============================================================================#
def _emit(config, data, lines):
    """ Write the JSON document or the text lines to --out or stdout.
    """
    if config.json:
        serialise.write_json(data, config.out)
        return
    text = '\n'.join(lines) + '\n'
    if config.out is None:
        sys.stdout.write(text)
    else:
        with open(config.out, 'w') as f:
            f.write(text)


def _build_module(config, rs):
    module = WeightModule(rs, parse_module_spec(rs, config.module))
    log.debug('built %s', module)
    return module


def _read_word(args, rs, module):
    if args.word is None:
        raise WordParseError('ERROR: --word is required for this command')
    word = serialise.WordJSONReader(rs.rank).read(args.word)
    for root in word.roots():
        if not rs.is_root(root):
            raise WordParseError('ERROR: {} is not a root of {}'.format(list(root), rs.cartan_type))
    weights = module.weights()
    for letter in word:
        if isinstance(letter, Torus) and letter.coweight is not None:
            if any(rs.coweight_pairing(mu, letter.coweight).denominator != 1 for mu in weights):
                raise WordParseError(
                    'ERROR: coweight {} is not integral on the weights of the module'.format(
                        [format_rational(c) for c in letter.coweight])
                )
    return word


# =============================================================================#
def cmd_roots(config, rs, args):
    constants = StructureConstants(rs) if args.constants else None
    data = serialise.RootSystemJSONWriter(rs, constants).serialise()

    lines = [
        'type: {}'.format(data['type']),
        'rank: {}'.format(data['rank']),
        'cartan matrix:',
    ]
    lines += ['    {}'.format(row) for row in data['cartan_matrix']]
    lines.append('fundamental group: {}'.format(data['fundamental_group']))
    lines.append('positive roots ({}):'.format(len(data['positive_roots'])))
    for r, h, length in zip(data['positive_roots'], data['heights'], data['root_lengths']):
        lines.append('    {}  height {}  length {}'.format(r, h, length))
    if constants is not None:
        lines.append('structure constants ({}):'.format(constants.convention))
        for rec in data['structure_constants']['table']:
            lines.append('    N({}, {}) = {}'.format(rec['alpha'], rec['beta'], rec['n']))
    _emit(config, data, lines)
    return EXIT_OK


def cmd_module(config, rs, args):
    module = _build_module(config, rs)
    lattice = AdmissibleLattice(module)
    data = serialise.ModuleJSONWriter(module, lattice).serialise()

    lines = [
        'type: {}'.format(data['type']),
        'summands: {}'.format(data['summands']),
        'dimension: {}'.format(data['dim']),
        'weights:',
    ]
    lines += ['    {}  mult {}'.format(w['mu'], w['mult']) for w in data['weights']]
    hyp = data['fundamental_weights_hypothesis']
    lines.append('fundamental weights hypothesis: {}{}'.format(
        hyp['holds'], '' if hyp['holds'] else ' (missing {})'.format(hyp['missing'])))
    lines.append('regular summand: {}'.format(data['regular_summand']))
    lv = data['weight_lattice']
    lines.append('L_V: {} (index {} over Q)'.format(lv['form'][0], lv['index']))
    _emit(config, data, lines)
    return EXIT_OK


def cmd_verify(config, args):
    suites = list(SUITES) if args.suite == 'all' else [args.suite]
    types = [str(config.cartan_type)] if config.cartan_type is not None else None
    plan = verification_plan(suites, types, config.large)
    report = run_verification(plan, config.module, config.seed, config.cases, config.workers)

    lines = []
    for s in report['suites']:
        lines.append('{} {} {}'.format(s['suite'], s['type'], 'passed' if s['passed'] else 'FAILED'))
        for c in s['checks']:
            detail = '  ({})'.format(c['detail']) if c['detail'] else ''
            lines.append('    [{}] {}{}'.format('ok' if c['passed'] else 'FAIL', c['check'], detail))
    lines.append('seed {}: {}'.format(report['seed'], 'all checks passed' if report['passed'] else 'FAILURES'))
    _emit(config, report, lines)
    return EXIT_OK if report['passed'] else EXIT_FAILED


def cmd_decide(config, rs, args):
    module = _build_module(config, rs)
    word = _read_word(args, rs, module)
    check_hypotheses(module, strict=config.strict)
    lattice = AdmissibleLattice(module)
    verdict = integrality_decide(module, lattice, word, strict=config.strict)
    data = verdict.to_json()

    if isinstance(verdict, InGZ):
        lines = ['in G(Z)', 'certificate:'] + ['    {}'.format(letter) for letter in data['certificate']]
        status = EXIT_OK
    else:
        w = data['witness']
        lines = [
            'not integral',
            'witness: {} maps a lattice vector of weight {} in summand {} outside the lattice'.format(
                w['map'], w['mu'], w['summand']),
            '    vector {}'.format(w['vector']),
            '    image  {}'.format(w['image']),
        ]
        status = EXIT_NOT_INTEGRAL
    _emit(config, data, lines)
    return status


def cmd_iwasawa(config, rs, args):
    module = _build_module(config, rs)
    word = _read_word(args, rs, module)
    dec = iwasawa_decompose(module, reduce_to_simple_alphabet(module, word))
    data = dec.to_json()

    lines = ['gamma:'] + ['    {}'.format(letter) for letter in data['gamma']]
    lines += ['u:'] + ['    {}'.format(c) for c in data['u']]
    lines += ['h:'] + ['    {}'.format(h) for h in data['h']]
    lines.append('exact: {}'.format(data['exact']))
    _emit(config, data, lines)
    return EXIT_OK if dec.exact else EXIT_FAILED


def cmd_factorize(config, rs, args):
    """ Unipotent coordinates of the evaluated word, or torus parameters
    when the element is diagonal.
    """
    module = _build_module(config, rs)
    word = _read_word(args, rs, module)
    g = evaluate(module, word)
    try:
        coords = unipotent_factorize(module, g)
        data = {'kind': 'unipotent', 'coords': coords.to_json(),
                'exact': evaluate(module, coords.to_word()) == g}
        lines = ['unipotent, height order:'] + ['    {}'.format(c) for c in data['coords']]
    except ValueError:
        if not g.is_diagonal():
            log.error('element is neither unipotent nor diagonal: %s', format_matrix(g.matrix))
            return EXIT_FAILED
        coords = toral_factorize(module, g)
        data = {'kind': 'torus', 'h': coords.to_json(),
                'exact': evaluate(module, coords.to_word()) == g}
        lines = ['torus:'] + ['    {}'.format(h) for h in data['h']]
    lines.append('exact: {}'.format(data['exact']))
    _emit(config, data, lines)
    return EXIT_OK if data['exact'] else EXIT_FAILED


def cmd_evaluate(config, rs, args):
    module = _build_module(config, rs)
    word = _read_word(args, rs, module)
    g = evaluate(module, word)
    stable, _ = AdmissibleLattice(module).stabilizes(g.matrix, g.inverse)
    data = {
        'word': word.to_json(),
        'matrix': serialise.matrix_to_json(g.matrix),
        'stabilizes_lattice': stable,
    }
    lines = ['    ' + '  '.join(row) for row in format_matrix(g.matrix)]
    lines.append('stabilizes lattice: {}'.format(stable))
    _emit(config, data, lines)
    return EXIT_OK


COMMANDS = {
    'roots': cmd_roots,
    'module': cmd_module,
    'decide': cmd_decide,
    'iwasawa': cmd_iwasawa,
    'factorize': cmd_factorize,
    'evaluate': cmd_evaluate,
}


# =============================================================================#
def _add_common(parser, needs_type=True):
    parser.add_argument(
        '-t', '--type',
        required=needs_type,
        help='Cartan type, e.g. A2, B3, G2.'
    )
    parser.add_argument(
        '-m', '--module',
        default='sc-default',
        help='Module: sc-default, fundamental, adjoint, or summands "a,b;c,d" in fundamental weight coordinates.'
    )
    parser.add_argument(
        '--json',
        action='store_true',
        help='Write JSON instead of text.'
    )
    parser.add_argument(
        '-o', '--out',
        help='Output filename. Default is stdout.'
    )
    parser.add_argument(
        '--large',
        action='store_true',
        help='Allow the sc-default module of D4, F4 and type E.'
    )
    parser.add_argument(
        '-v', '--verbose',
        action='store_true',
        help='Extra info.'
    )


def make_parser():
    parser = argparse.ArgumentParser(
        prog='chevalley',
        description='Exact computations in Chevalley groups over Q and Z.'
    )
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('roots', help='Root system data and structure constants.')
    _add_common(p)
    p.add_argument(
        '--constants',
        action='store_true',
        help='Include the Chevalley basis structure constants.'
    )

    sub_module = sub.add_parser('module', help='Weights and admissible lattice of a module.')
    _add_common(sub_module)

    p = sub.add_parser('verify', help='Run the seeded verification suites.')
    p.add_argument('suite', choices=SUITES + ('all',))
    _add_common(p, needs_type=False)
    p.add_argument('-s', '--seed', type=int, default=0, help='Root seed of the random sweeps.')
    p.add_argument('-w', '--workers', type=int, default=1, help='Worker threads, one type per task.')
    p.add_argument('--cases', type=int, help='Cap on the number of cases per sweep.')

    for name, text in (
            ('decide', 'Decide whether a word evaluates into G(Z).'),
            ('iwasawa', 'Split a word as gamma u h with gamma in G(Z).'),
            ('factorize', 'Coordinates of a unipotent or diagonal element.'),
            ('evaluate', 'Matrix of a word and its lattice test.')):
        p = sub.add_parser(name, help=text)
        _add_common(p)
        p.add_argument('-i', '--word', help='JSON word file.')
        p.add_argument(
            '--force',
            action='store_true',
            help='Warn instead of stopping when the module hypotheses fail.'
        )
    return parser


def run(args):
    try:
        config = RunConfig.from_args(args)
        if args.command == 'verify':
            if config.cartan_type is not None:
                RootSystem(config.cartan_type)
                if args.suite != 'algebra':
                    config.check_size()
            rs = None
        else:
            rs = RootSystem(config.cartan_type)
            if args.command != 'roots':
                parse_module_spec(rs, config.module)
                config.check_size()
    except (ValueError, NotImplementedError) as e:
        log.error('%s', e)
        return EXIT_PARSE
    log.debug('%s', config)

    if args.command == 'verify':
        return cmd_verify(config, args)
    return COMMANDS[args.command](config, rs, args)


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s'
    )

    try:
        return run(args)
    except WordParseError as e:
        log.error('%s', e)
        return EXIT_PARSE
    except HypothesisError as e:
        log.error('%s (use --force to continue)', e)
        return EXIT_HYPOTHESIS
    except (ValueError, NotImplementedError) as e:
        log.error('%s', e)
        return EXIT_FAILED
    except Exception as e:
        log.exception('Unexpected exception %s', e)
        return EXIT_UNEXPECTED


if __name__ == '__main__':
    sys.exit(main())

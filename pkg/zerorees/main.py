#!/usr/bin/env python3
# Copyright (c) OpenMMLab. All rights reserved.
"""zerorees binary."""
import argparse
import json
import os
import sys

from loguru import logger
from termcolor import colored

from .primitive import (ErrorCode, GenerationError, ZeroReesError,
                        format_matrix, load_instance, profile, run_closure)
from .service import (FAMILIES, GeneratorSpec, analyze,
                      build_closure_table, build_commuting_graph,
                      build_mismatch_table, build_report_table,
                      build_simplified_graph, cross_check, dump_report_json,
                      export_dot, generate, histogram, load_config, run_fuzz,
                      tag_components)
from .version import __version__


def parse_args(argv=None):
    """Parse args."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--config_path',
        default='config.ini',
        type=str,
        help='zerorees configuration path. Default value is config.ini')
    common.add_argument('--log_level',
                        default=None,
                        type=str,
                        help='Override `[log] level` of the config file.')

    parser = argparse.ArgumentParser(
        description='Commuting graphs of completely 0-simple semigroups.')
    parser.add_argument('--version',
                        action='version',
                        version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    analyze_parser = sub.add_parser('analyze',
                                    parents=[common],
                                    help='Report every graph property.')
    analyze_parser.add_argument('path', type=str, help='Instance file.')
    analyze_parser.add_argument('--oracle',
                                action='store_true',
                                default=False,
                                help='Cross check against brute force.')
    analyze_parser.add_argument('--dot',
                                type=str,
                                default=None,
                                help='Write the commuting graph as DOT; the '
                                'simplified graph goes next to it.')
    output = analyze_parser.add_mutually_exclusive_group()
    output.add_argument('--json',
                        action='store_true',
                        default=True,
                        help='JSON report, the default.')
    output.add_argument('--table',
                        action='store_true',
                        default=False,
                        help='Human readable table instead of JSON.')
    analyze_parser.add_argument('--fastpath',
                                action='store_true',
                                default=False,
                                help='Skip closure runs the simplification '
                                'rules make redundant.')

    closure_parser = sub.add_parser('closure',
                                    parents=[common],
                                    help='Trace one 0-closure run.')
    closure_parser.add_argument('path', type=str, help='Instance file.')
    closure_parser.add_argument('row', type=int, help='1-based row.')
    closure_parser.add_argument('col', type=int, help='1-based column.')

    generate_parser = sub.add_parser('generate',
                                     parents=[common],
                                     help='Print a matrix family member.')
    generate_parser.add_argument('family', type=str, help='/'.join(FAMILIES))
    generate_parser.add_argument(
        'params',
        type=float,
        nargs='*',
        help='n for banded/clique/brandt; rows cols zero_prob for random.')
    generate_parser.add_argument('--seed', type=int, default=0)

    fuzz_parser = sub.add_parser('fuzz',
                                 parents=[common],
                                 help='Formula against oracle on random '
                                 'instances.')
    fuzz_parser.add_argument('--count', type=int, default=None)
    fuzz_parser.add_argument('--max_rows', type=int, default=None)
    fuzz_parser.add_argument('--max_cols', type=int, default=None)
    fuzz_parser.add_argument('--max_order', type=int, default=None)
    fuzz_parser.add_argument('--zero_prob', type=float, default=None)
    fuzz_parser.add_argument('--seed', type=int, default=None)

    args = parser.parse_args(argv)
    return args


def setup_logger(config: dict, level: str = None):
    logger.remove()
    logger.add(sys.stderr, level=(level or config['log']['level']).upper())
    if config['log']['path']:
        logger.add(config['log']['path'], rotation='4MB')


def cmd_analyze(args, config: dict) -> int:
    instance = load_instance(args.path)
    matrix, group = instance.structural, instance.group
    report = analyze(matrix,
                     profile(group),
                     fastpath=args.fastpath,
                     max_biclique_dim=config['matrix']['max_biclique_dim'])

    oracle = config['oracle']
    mismatches = {}
    extra = {}
    if args.oracle:
        mismatches = cross_check(
            matrix,
            report,
            group,
            instance.sandwich,
            max_vertices=oracle['max_vertices'],
            max_chromatic_vertices=oracle['max_chromatic_vertices'],
            max_left_path_len=oracle['max_left_path_len'])
        extra['oracle'] = {'mismatches': mismatches}

    if args.dot:
        graph = build_commuting_graph(group, instance.sandwich,
                                      oracle['max_vertices'])
        tag_components(graph)
        export_dot(graph, args.dot, name='commuting')
        stem, ext = os.path.splitext(args.dot)
        simplified = build_simplified_graph(matrix)
        tag_components(simplified)
        export_dot(simplified, f'{stem}.simplified{ext or ".dot"}',
                   name='simplified')

    if args.table:
        print(build_report_table(report))
        if mismatches:
            print(build_mismatch_table(mismatches))
    else:
        print(dump_report_json(report, extra))

    if mismatches:
        logger.error(f'{len(mismatches)} fields disagree with the oracle')
        return int(ErrorCode.ORACLE_MISMATCH)
    return int(ErrorCode.SUCCESS)


def cmd_closure(args, config: dict) -> int:
    matrix = load_instance(args.path).structural
    run = run_closure(matrix, args.row - 1, args.col - 1)
    print(build_closure_table(run))
    print(f'z = {run.z_index}, block {run.block}')
    return int(ErrorCode.SUCCESS)


def _int_param(params: list, idx: int, name: str) -> int:
    if len(params) <= idx or params[idx] != int(params[idx]):
        raise GenerationError(f'`{name}` must be an integer')
    return int(params[idx])


def cmd_generate(args, config: dict) -> int:
    params = args.params
    if args.family == 'random':
        if len(params) != 3:
            raise GenerationError('random needs rows cols zero_prob')
        spec = GeneratorSpec(
            family='random',
            rows=_int_param(params, 0, 'rows'),
            cols=_int_param(params, 1, 'cols'),
            zero_prob=params[2],
            seed=args.seed,
            max_rejections=config['generator']['max_rejections'])
    else:
        spec = GeneratorSpec(family=args.family,
                             n=_int_param(params, 0, 'n'))
    print(format_matrix(generate(spec)))
    return int(ErrorCode.SUCCESS)


def cmd_fuzz(args, config: dict) -> int:
    fuzz = dict(config['fuzz'])
    for key in fuzz:
        if getattr(args, key, None) is not None:
            fuzz[key] = getattr(args, key)
    oracle = config['oracle']
    summary = run_fuzz(count=fuzz['count'],
                       max_rows=fuzz['max_rows'],
                       max_cols=fuzz['max_cols'],
                       max_order=fuzz['max_order'],
                       zero_prob=fuzz['zero_prob'],
                       seed=fuzz['seed'],
                       max_vertices=oracle['max_vertices'],
                       max_chromatic_vertices=oracle['max_chromatic_vertices'],
                       max_left_path_len=oracle['max_left_path_len'],
                       max_rejections=config['generator']['max_rejections'])
    logger.info('semigroup sizes\n' + histogram(summary.vertex_counts))

    tally = f'{summary.passed} passed, {summary.failed} failed'
    if summary.failed:
        print(colored(tally, 'red'))
        print(summary.first_counterexample, end='')
        print(json.dumps(summary.first_mismatches, sort_keys=True, indent=2))
        return int(ErrorCode.ORACLE_MISMATCH)
    print(colored(tally, 'green'))
    return int(ErrorCode.SUCCESS)


COMMANDS = {
    'analyze': cmd_analyze,
    'closure': cmd_closure,
    'generate': cmd_generate,
    'fuzz': cmd_fuzz,
}


def main(argv=None) -> int:
    args = parse_args(argv)
    config = load_config(args.config_path)
    setup_logger(config, args.log_level)
    try:
        return COMMANDS[args.command](args, config)
    except ZeroReesError as e:
        logger.error(json.dumps(e.to_dict(), ensure_ascii=False))
        return int(e.code)
    except OSError as e:
        logger.error(str(e))
        return int(ErrorCode.PARSE_ERROR)


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()

# Copyright (c) OpenMMLab. All rights reserved.
import json
from typing import Dict, List

from texttable import Texttable

from ..primitive import ClosureRun, ErrorCode, step_entries  # noqa E401
from .engine import AnalysisReport, ext_to_json, report_to_dict


def dump_report_json(report: AnalysisReport, extra: dict = None) -> str:
    """Byte-stable JSON: sorted keys, components in classification order."""
    content = report_to_dict(report)
    if extra:
        content.update(extra)
    return json.dumps(content, sort_keys=True, indent=2, ensure_ascii=False)


def _describe(entry: dict) -> str:
    if entry['kind'] == 'single':
        return f'cols {entry["cols"]} x rows {entry["rows"]}'
    if entry['kind'] == 'pair':
        q, m = entry['q'], entry['m']
        return (f'cols {q["cols"]} x rows {m["rows"]} + '
                f'cols {m["cols"]} x rows {q["rows"]}')
    return f'col {entry["col"]}, row {entry["row"]}'


def build_report_table(report: AnalysisReport) -> str:
    table = Texttable()
    table.set_cols_valign(['t', 't', 't'])
    table.header(['Component', 'Vertex cells', 'Diameter'])
    for idx, entry in enumerate(report_to_dict(report)['components']):
        table.add_row([f'{idx + 1} {entry["kind"]}', _describe(entry),
                       entry['diameter']])

    summary = Texttable()
    summary.set_cols_valign(['t', 't'])
    summary.header(['Property', 'Value'])
    summary.add_rows([
        ['connected', report.connected],
        ['diameter', ext_to_json(report.diameter)],
        ['clique number', report.clique_number],
        ['girth', ext_to_json(report.girth)],
        ['chromatic number',
         f'{report.chromatic_lower} .. '
         f'{min(report.chromatic_upper_edges, report.chromatic_upper_degree)}'],
        ['knit degree', report.knit_degree],
    ], header=False)
    return table.draw() + '\n' + summary.draw()


def build_closure_table(run: ClosureRun) -> str:
    """Q_0 .. Q_z with the cells marked at every step, 1-based."""
    table = Texttable()
    table.set_cols_valign(['t', 't', 't', 't'])
    table.header(['Step', 'Columns', 'Rows', 'New cells (row,col)'])
    for k, step in enumerate(run.steps):
        cells = sorted(step_entries(run, k))
        table.add_row([
            k, ','.join(str(c + 1) for c in step.cols),
            ','.join(str(r + 1) for r in step.rows),
            ' '.join(f'({r + 1},{c + 1})' for r, c in cells)
        ])
    return table.draw()


def build_mismatch_table(mismatches: Dict[str, dict]) -> str:
    table = Texttable()
    table.header(['Field', 'Formula', 'Oracle'])
    for name, item in mismatches.items():
        table.add_row([name, str(item['formula']), str(item['oracle'])])
    return table.draw()


def histogram(values: List[int]) -> str:
    """One line per distinct value with its share, plus avg and median."""
    values = sorted(values)
    if len(values) <= 1:
        return ''

    median = values[round((len(values) - 1) / 2)]
    log_str = 'count {}, avg {}, median {}\n'.format(
        len(values), round(sum(values) / len(values), 2), median)
    for value in sorted(set(values)):
        log_str += f'{value}  {100 * values.count(value) / len(values):.2f}%\n'
    return log_str

# Copyright (c) OpenMMLab. All rights reserved.
"""Instance files.

Grammar, one directive per line, `#` starts a comment::

    group cyclic <n> | group dihedral <n> | group quaternion
    group table <n>              followed by n lines of n indices
    matrix <rows> <cols>         followed by rows lines of cols tokens

Matrix tokens are `0` (zero), `x` (non-zero) and `g<k>` (group element k);
`x` stands for the identity when the sandwich matrix is built.
"""
import re
from dataclasses import dataclass
from typing import List, Optional, Union

from loguru import logger

from .error import ParseError
from .group import (FiniteGroup, make_cyclic, make_dihedral, make_from_table,
                    make_quaternion)
from .matrix import SandwichMatrix, StructuralMatrix, structural


@dataclass(frozen=True)
class Instance:
    group: FiniteGroup
    sandwich: SandwichMatrix

    @property
    def structural(self) -> StructuralMatrix:
        return structural(self.sandwich)


def _strip(line: str) -> str:
    return line.split('#', 1)[0].strip()


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f'line {lineno}: {what} must be an integer, got '
                         f'`{token}`',
                         line=lineno)


def _parse_token(token: str, lineno: int) -> Union[str, int]:
    if token == '0':
        return '0'
    if token in ('x', 'X', '×'):
        return 'x'
    match = re.fullmatch(r'g(\d+)', token)
    if match:
        return int(match.group(1))
    raise ParseError(f'line {lineno}: unknown matrix token `{token}`',
                     line=lineno)


def parse_instance(text: str) -> Instance:
    lines = [(idx + 1, _strip(line)) for idx, line in enumerate(text.splitlines())]
    lines = [(no, line) for no, line in lines if line]

    group: Optional[FiniteGroup] = None
    grid: Optional[List[List[Union[str, int]]]] = None
    pos = 0
    while pos < len(lines):
        lineno, line = lines[pos]
        words = line.split()
        pos += 1
        if words[0] == 'group':
            if group is not None:
                raise ParseError(f'line {lineno}: duplicate group', line=lineno)
            if len(words) == 3 and words[1] == 'cyclic':
                group = make_cyclic(_int(words[2], lineno, 'order'))
            elif len(words) == 3 and words[1] == 'dihedral':
                group = make_dihedral(_int(words[2], lineno, 'n'))
            elif len(words) == 2 and words[1] == 'quaternion':
                group = make_quaternion()
            elif len(words) == 3 and words[1] == 'table':
                order = _int(words[2], lineno, 'order')
                if pos + order > len(lines):
                    raise ParseError(
                        f'line {lineno}: expected {order} table rows',
                        line=lineno)
                table = [[
                    _int(v, no, 'table entry') for v in row.split()
                ] for no, row in lines[pos:pos + order]]
                pos += order
                group = make_from_table(table)
            else:
                raise ParseError(f'line {lineno}: bad group spec `{line}`',
                                 line=lineno)
        elif words[0] == 'matrix':
            if grid is not None:
                raise ParseError(f'line {lineno}: duplicate matrix',
                                 line=lineno)
            if len(words) != 3:
                raise ParseError(f'line {lineno}: expected `matrix <rows> '
                                 '<cols>`',
                                 line=lineno)
            rows = _int(words[1], lineno, 'rows')
            cols = _int(words[2], lineno, 'cols')
            if rows < 1 or cols < 1:
                raise ParseError(f'line {lineno}: empty matrix', line=lineno)
            if pos + rows > len(lines):
                raise ParseError(f'line {lineno}: expected {rows} matrix rows',
                                 line=lineno)
            grid = []
            for no, row in lines[pos:pos + rows]:
                tokens = row.split()
                if len(tokens) != cols:
                    raise ParseError(
                        f'line {no}: expected {cols} tokens, got '
                        f'{len(tokens)}',
                        line=no)
                grid.append([_parse_token(t, no) for t in tokens])
            pos += rows
        else:
            raise ParseError(f'line {lineno}: unknown directive `{words[0]}`',
                             line=lineno)

    if grid is None:
        raise ParseError('instance has no matrix')
    if group is None:
        logger.debug('no group given, using the trivial group')
        group = make_cyclic(1)

    cells = tuple(
        tuple(None if v == '0' else group.identity if v == 'x' else v
              for v in row) for row in grid)
    return Instance(group=group, sandwich=SandwichMatrix(cells=cells,
                                                         group=group))


def load_instance(path: str) -> Instance:
    try:
        with open(path, encoding='utf8') as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise ParseError(f'{path} is not UTF-8 text: {e.reason} at byte '
                         f'{e.start}',
                         path=path)
    logger.info(f'load instance {path}')
    return parse_instance(text)


def format_matrix(matrix: Union[StructuralMatrix, SandwichMatrix]) -> str:
    if isinstance(matrix, SandwichMatrix):
        rows = [' '.join('0' if v is None else f'g{v}' for v in row)
                for row in matrix.cells]
    else:
        rows = [' '.join(row) for row in matrix.tokens()]
    return '\n'.join([f'matrix {matrix.rows} {matrix.cols}'] + rows)


def format_group(group: FiniteGroup) -> str:
    match = re.fullmatch(r'(cyclic|dihedral)\((\d+)\)', group.name)
    if match and group == {
            'cyclic': make_cyclic,
            'dihedral': make_dihedral
    }[match.group(1)](int(match.group(2))):
        return f'group {match.group(1)} {match.group(2)}'
    if group.name == 'quaternion' and group == make_quaternion():
        return 'group quaternion'
    rows = [' '.join(str(v) for v in row) for row in group.table]
    return '\n'.join([f'group table {group.order}'] + rows)


def format_instance(instance: Instance) -> str:
    return format_group(instance.group) + '\n' + format_matrix(
        instance.sandwich) + '\n'

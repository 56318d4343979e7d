# Copyright (c) OpenMMLab. All rights reserved.
"""Structural {0, x} matrices, sandwich matrices and pattern search.

Internal row (Lambda) and column (I) indices are 0-based; files and reports
use 1-based labels.
"""
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum, unique
from functools import cached_property
from itertools import permutations
from typing import List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from loguru import logger

from .error import InvalidMatrixError, NoZeroError, ParseError, SizeLimitError
from .group import FiniteGroup


@unique
class Cell(Enum):
    ZERO = '0'
    STAR = 'x'


def parse_cell(token) -> Cell:
    if isinstance(token, Cell):
        return token
    text = str(token).strip()
    if text == '0':
        return Cell.ZERO
    if text in ('x', 'X', '×'):
        return Cell.STAR
    raise ParseError(f'unknown structural token `{token}`', token=token)


def _split_row(row) -> List:
    if isinstance(row, str):
        return row.split() if ' ' in row.strip() else list(row.strip())
    return list(row)


@dataclass(frozen=True)
class StructuralMatrix:
    """The Lambda x I grid over {Zero, Star}.

    Example:

        .. code-block:: python

            from zerorees.primitive import StructuralMatrix

            d2 = StructuralMatrix.from_rows(['x0', '0x'])
            assert d2.is_zero(0, 1)
    """
    cells: Tuple[Tuple[Cell, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(parse_cell(c) for c in row) for row in self.cells)
        if len(cells) < 1 or len(cells[0]) < 1:
            raise InvalidMatrixError('matrix needs at least one row and column')
        width = len(cells[0])
        for idx, row in enumerate(cells):
            if len(row) != width:
                raise InvalidMatrixError(
                    f'row {idx + 1} has {len(row)} cells, expected {width}')
        object.__setattr__(self, 'cells', cells)

    @classmethod
    def from_rows(cls, rows: Sequence) -> 'StructuralMatrix':
        return cls(cells=tuple(tuple(_split_row(row)) for row in rows))

    @classmethod
    def from_mask(cls, mask) -> 'StructuralMatrix':
        """Build from a boolean grid, True marks a zero."""
        return cls(cells=tuple(
            tuple(Cell.ZERO if v else Cell.STAR for v in row) for row in mask))

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @cached_property
    def zero_mask(self) -> np.ndarray:
        mask = np.array([[c is Cell.ZERO for c in row] for row in self.cells],
                        dtype=bool)
        mask.setflags(write=False)
        return mask

    @cached_property
    def row_masks(self) -> Tuple[int, ...]:
        """Per row, the bitset of columns holding a zero."""
        return tuple(
            sum(1 << col for col, c in enumerate(row) if c is Cell.ZERO)
            for row in self.cells)

    def is_zero(self, row: int, col: int) -> bool:
        return self.cells[row][col] is Cell.ZERO

    def tokens(self) -> List[List[str]]:
        return [[c.value for c in row] for row in self.cells]

    def __str__(self) -> str:
        return '\n'.join(' '.join(row) for row in self.tokens())

    def __repr__(self) -> str:
        return f'StructuralMatrix({self.rows}x{self.cols})'


@dataclass(frozen=True)
class SandwichMatrix:
    """The Lambda x I grid over G with a zero; `None` marks a zero entry."""
    cells: Tuple[Tuple[Optional[int], ...], ...]
    group: FiniteGroup = field(repr=False)

    def __post_init__(self):
        cells = tuple(
            tuple(None if v is None else int(v) for v in row)
            for row in self.cells)
        if len(cells) < 1 or len(cells[0]) < 1:
            raise InvalidMatrixError('matrix needs at least one row and column')
        width = len(cells[0])
        for idx, row in enumerate(cells):
            if len(row) != width:
                raise InvalidMatrixError(
                    f'row {idx + 1} has {len(row)} cells, expected {width}')
            for col, value in enumerate(row):
                if value is not None and not 0 <= value < self.group.order:
                    raise InvalidMatrixError(
                        f'entry ({idx + 1},{col + 1}) = g{value} is not an '
                        f'element of {self.group}',
                        row=idx + 1,
                        col=col + 1)
        object.__setattr__(self, 'cells', cells)

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    def entry(self, row: int, col: int) -> Optional[int]:
        return self.cells[row][col]

    def __str__(self) -> str:
        return '\n'.join(' '.join('0' if v is None else f'g{v}' for v in row)
                         for row in self.cells)


@dataclass(frozen=True)
class Pattern:
    """A small named structural matrix searched for as a <->-submatrix."""
    name: str
    matrix: StructuralMatrix

    @property
    def rows(self) -> int:
        return self.matrix.rows

    @property
    def cols(self) -> int:
        return self.matrix.cols

    def transposed(self) -> 'Pattern':
        return Pattern(name=f'{self.name}^T', matrix=transpose(self.matrix))


@dataclass(frozen=True)
class ZeroBlock:
    """Rows and columns whose intersections are all zero."""
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.cols)

    @property
    def area(self) -> int:
        return self.n * self.m


def structural(sandwich: SandwichMatrix) -> StructuralMatrix:
    return StructuralMatrix(cells=tuple(
        tuple(Cell.ZERO if v is None else Cell.STAR for v in row)
        for row in sandwich.cells))


def sandwich_from_structural(matrix: StructuralMatrix,
                             group: FiniteGroup,
                             element: int = None) -> SandwichMatrix:
    """Put `element` (the identity by default) in every Star cell."""
    element = group.identity if element is None else element
    return SandwichMatrix(cells=tuple(
        tuple(None if c is Cell.ZERO else element for c in row)
        for row in matrix.cells),
                          group=group)


def transpose(matrix: StructuralMatrix) -> StructuralMatrix:
    return StructuralMatrix(cells=tuple(zip(*matrix.cells)))


def submatrix(matrix: StructuralMatrix, rows: Sequence[int],
              cols: Sequence[int]) -> StructuralMatrix:
    return StructuralMatrix(cells=tuple(
        tuple(matrix.cells[r][c] for c in cols) for r in rows))


def is_regular(matrix: StructuralMatrix) -> bool:
    stars = ~matrix.zero_mask
    return bool(stars.any(axis=1).all() and stars.any(axis=0).all())


def zero_cells(matrix: StructuralMatrix) -> List[Tuple[int, int]]:
    """(row, col) of every zero, row-major."""
    return [(int(r), int(c)) for r, c in np.argwhere(matrix.zero_mask)]


def row_zero_counts(matrix: StructuralMatrix) -> List[int]:
    return [int(v) for v in matrix.zero_mask.sum(axis=1)]


def col_zero_counts(matrix: StructuralMatrix) -> List[int]:
    return [int(v) for v in matrix.zero_mask.sum(axis=0)]


def diagonal_pattern(n: int) -> Pattern:
    """D_n: Star on the diagonal, zero elsewhere."""
    mask = ~np.eye(n, dtype=bool)
    return Pattern(name=f'D{n}', matrix=StructuralMatrix.from_mask(mask))


def zero_pattern(n: int, m: int) -> Pattern:
    return Pattern(name=f'O{n}x{m}',
                   matrix=StructuralMatrix.from_mask(np.ones((n, m), bool)))


GIRTH_A = Pattern(name='A', matrix=StructuralMatrix.from_rows(['00xx', 'xx00']))
GIRTH_B = Pattern(name='B', matrix=StructuralMatrix.from_rows(['00x', 'x00']))


def _column_keys(mask: np.ndarray) -> List[bytes]:
    return [col.tobytes() for col in np.ascontiguousarray(mask.T)]


def contains_pattern(matrix: StructuralMatrix,
                     pattern: Union[Pattern, StructuralMatrix]) -> bool:
    """Whether `pattern` is <->-equivalent to a submatrix of `matrix`.

    Rows of the matrix are tried as ordered selections; for each one the
    pattern columns must be matched injectively by equal column vectors,
    which is a multiset inclusion.
    """
    target = pattern.matrix if isinstance(pattern, Pattern) else pattern
    if target.rows > matrix.rows or target.cols > matrix.cols:
        return False
    mask, tmask = matrix.zero_mask, target.zero_mask
    if target.rows > target.cols:
        mask, tmask = mask.T, tmask.T

    wanted = Counter(_column_keys(tmask))
    for picked in permutations(range(mask.shape[0]), tmask.shape[0]):
        available = Counter(_column_keys(mask[list(picked), :]))
        if all(available[key] >= count for key, count in wanted.items()):
            if isinstance(pattern, Pattern):
                logger.debug(f'pattern {pattern.name} found on rows {picked}')
            return True
    return False


def _popcount(bits: int) -> int:
    return bin(bits).count('1')


def max_zero_block(matrix: StructuralMatrix, max_dim: int = 20) -> ZeroBlock:
    """Largest-area all-zero <->-submatrix, by depth-first enumeration of
    subsets of the smaller dimension."""
    if not matrix.zero_mask.any():
        raise NoZeroError('matrix has no zero entry')
    transposed = matrix.rows > matrix.cols
    work = transpose(matrix) if transposed else matrix
    if work.rows > max_dim:
        raise SizeLimitError(
            f'zero-block search enumerates 2^{work.rows} subsets, guard is '
            f'{max_dim}',
            dim=work.rows)

    masks = work.row_masks
    best = {'area': 0, 'rows': (), 'cols': 0}

    def extend(start: int, chosen: Tuple[int, ...], common: int):
        for row in range(start, work.rows):
            shared = common & masks[row]
            if not shared:
                continue
            picked = chosen + (row, )
            area = len(picked) * _popcount(shared)
            if area > best['area']:
                best.update(area=area, rows=picked, cols=shared)
            extend(row + 1, picked, shared)

    extend(0, (), (1 << work.cols) - 1)
    cols = tuple(c for c in range(work.cols) if best['cols'] >> c & 1)
    rows = best['rows']
    if transposed:
        rows, cols = cols, rows
    block = ZeroBlock(rows=tuple(rows), cols=tuple(cols))
    logger.debug(f'max zero block {block.n}x{block.m} at rows {block.rows}')
    return block


def _bipartite(matrix: StructuralMatrix) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from((('row', r) for r in range(matrix.rows)), side='row')
    graph.add_nodes_from((('col', c) for c in range(matrix.cols)), side='col')
    graph.add_edges_from(
        (('row', r), ('col', c)) for r, c in zero_cells(matrix))
    return graph


def equivalent(left: StructuralMatrix,
               right: StructuralMatrix,
               max_dim: int = 12) -> bool:
    """Whether a row and a column permutation map `left` onto `right`.

    Zeros are the edges of a bipartite graph between rows and columns, so
    this is a side-preserving graph isomorphism test.
    """
    largest = max(left.rows, left.cols, right.rows, right.cols)
    if largest > max_dim:
        raise SizeLimitError(
            f'equivalence check limited to {max_dim} rows and columns',
            dim=largest)
    if left.shape != right.shape:
        return False
    if sorted(row_zero_counts(left)) != sorted(row_zero_counts(right)):
        return False
    if sorted(col_zero_counts(left)) != sorted(col_zero_counts(right)):
        return False
    return nx.is_isomorphic(_bipartite(left),
                            _bipartite(right),
                            node_match=lambda a, b: a['side'] == b['side'])

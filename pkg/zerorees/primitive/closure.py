# Copyright (c) OpenMMLab. All rights reserved.
"""The 0-closure method.

Starting from a zero entry, the block Q_k = (rows, cols) grows one step at a
time: every zero lying in a row of Q_k or a column of Q_k but outside Q_k is
marked, and its row and column join Q_{k+1}. The method halts when nothing
is marked; the number of steps taken is z(i, lambda).
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Set, Tuple

import numpy as np
from loguru import logger

from .error import NoZeroError, NotAZeroError, StepRangeError
from .matrix import StructuralMatrix, zero_cells


def _labels(indices: Iterable[int]) -> str:
    return '{' + ','.join(str(v + 1) for v in indices) + '}'


@dataclass(frozen=True)
class ClosureSubmatrix:
    """A block of rows x cols kept in the original matrix order."""
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'rows',
                           tuple(sorted({int(r)
                                         for r in self.rows})))
        object.__setattr__(self, 'cols',
                           tuple(sorted({int(c)
                                         for c in self.cols})))

    def contains(self, row: int, col: int) -> bool:
        return row in self.rows and col in self.cols

    def cells(self) -> List[Tuple[int, int]]:
        return [(r, c) for r in self.rows for c in self.cols]

    def zero_cells(self, matrix: StructuralMatrix) -> List[Tuple[int, int]]:
        return [(r, c) for r, c in self.cells() if matrix.is_zero(r, c)]

    def is_all_zero(self, matrix: StructuralMatrix) -> bool:
        return bool(matrix.zero_mask[np.ix_(self.rows, self.cols)].all())

    def is_singleton(self) -> bool:
        return len(self.rows) == 1 and len(self.cols) == 1

    def __str__(self) -> str:
        return f'cols {_labels(self.cols)} x rows {_labels(self.rows)}'


@dataclass(frozen=True)
class ClosureRun:
    """Blocks Q_0 .. Q_z of one 0-closure run; `start` is (row, col)."""
    start: Tuple[int, int]
    steps: Tuple[ClosureSubmatrix, ...]

    @property
    def z_index(self) -> int:
        return len(self.steps) - 1

    @property
    def block(self) -> ClosureSubmatrix:
        return self.steps[-1]


def run_closure(matrix: StructuralMatrix, row: int, col: int) -> ClosureRun:
    if not (0 <= row < matrix.rows and 0 <= col < matrix.cols):
        raise NotAZeroError(
            f'start ({row + 1},{col + 1}) lies outside the '
            f'{matrix.rows}x{matrix.cols} matrix',
            row=row + 1,
            col=col + 1)
    if not matrix.is_zero(row, col):
        raise NotAZeroError(
            f'entry ({row + 1},{col + 1}) is not a zero, the 0-closure '
            'method must start at a zero entry',
            row=row + 1,
            col=col + 1)

    mask = matrix.zero_mask
    in_rows = np.zeros(matrix.rows, dtype=bool)
    in_cols = np.zeros(matrix.cols, dtype=bool)
    in_rows[row] = True
    in_cols[col] = True
    steps = [ClosureSubmatrix(rows=(row, ), cols=(col, ))]

    while True:
        new_cols = mask[in_rows].any(axis=0) & ~in_cols
        new_rows = mask[:, in_cols].any(axis=1) & ~in_rows
        if not new_cols.any() and not new_rows.any():
            break
        in_cols |= new_cols
        in_rows |= new_rows
        steps.append(
            ClosureSubmatrix(rows=tuple(np.flatnonzero(in_rows)),
                             cols=tuple(np.flatnonzero(in_cols))))
        logger.debug(f'closure from ({row + 1},{col + 1}) step '
                     f'{len(steps) - 1}: {steps[-1]}')

    return ClosureRun(start=(row, col), steps=tuple(steps))


def closure_block(matrix: StructuralMatrix, row: int,
                  col: int) -> ClosureSubmatrix:
    return run_closure(matrix, row, col).block


def all_closure_submatrices(
        matrix: StructuralMatrix) -> List[ClosureSubmatrix]:
    """Every 0-closure submatrix, scanning zeros in row-major order."""
    zeros = zero_cells(matrix)
    if not zeros:
        raise NoZeroError('matrix has no zero entry, no 0-closure submatrix')

    blocks: List[ClosureSubmatrix] = []
    for row, col in zeros:
        if any(block.contains(row, col) for block in blocks):
            continue
        block = closure_block(matrix, row, col)
        for other in blocks:
            assert not set(other.rows) & set(block.rows)
            assert not set(other.cols) & set(block.cols)
        blocks.append(block)
    logger.debug(f'{len(blocks)} closure submatrices')
    return blocks


def block_of(blocks: List[ClosureSubmatrix],
             row: int = None,
             col: int = None) -> Optional[int]:
    """Index of the block owning `row` (or `col`), None when the row (or
    column) holds no zero."""
    for idx, block in enumerate(blocks):
        if row is not None and row in block.rows:
            return idx
        if col is not None and col in block.cols:
            return idx
    return None


def step_entries(run: ClosureRun, k: int) -> Set[Tuple[int, int]]:
    """Cells (row, col) selected exactly at step k."""
    if not 0 <= k <= run.z_index:
        raise StepRangeError(f'step {k} outside 0..{run.z_index}',
                             k=k,
                             z_index=run.z_index)
    if k == 0:
        return {run.start}
    return set(run.steps[k].cells()) - set(run.steps[k - 1].cells())

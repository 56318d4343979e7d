# Copyright (c) OpenMMLab. All rights reserved.
"""Closed formulas for the commuting graph of M0[G; I, Lambda; P].

Everything here is computed from the structural matrix and a GroupProfile
only, so two sandwich matrices with zeros in the same positions always get
the same answers.
"""
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import ClassVar, Dict, List, Optional, Tuple, Union

import numpy as np
from loguru import logger

from ..primitive import (ClosureSubmatrix, ComponentMismatchError,
                         CompletelySimpleError, GroupProfile,
                         InvalidMatrixError, StructuralMatrix,
                         all_closure_submatrices, block_of, col_zero_counts,
                         contains_pattern, diagonal_pattern, is_regular,
                         max_zero_block, row_zero_counts, run_closure,
                         zero_cells, zero_pattern, GIRTH_A, GIRTH_B)

INF = math.inf
ExtNat = Union[int, float]

D2, D3 = diagonal_pattern(2), diagonal_pattern(3)
O1X2, O2X1 = zero_pattern(1, 2), zero_pattern(2, 1)
O1X3, O3X1, O2X2 = zero_pattern(1, 3), zero_pattern(3, 1), zero_pattern(2, 2)
GIRTH_FOUR_PATTERNS = (GIRTH_A, GIRTH_A.transposed(), GIRTH_B,
                       GIRTH_B.transposed())


@dataclass(frozen=True)
class SingleClosure:
    """Component with vertex set I_Q x G x Lambda_Q."""
    block: ClosureSubmatrix
    kind: ClassVar[str] = 'single'

    def cells(self) -> List[Tuple[int, int]]:
        return self.block.cells()


@dataclass(frozen=True)
class PairClosure:
    """Component with vertex set (I_Q x G x Lambda_M) u (I_M x G x
    Lambda_Q)."""
    block_q: ClosureSubmatrix
    block_m: ClosureSubmatrix
    kind: ClassVar[str] = 'pair'

    def cells(self) -> List[Tuple[int, int]]:
        q, m = self.block_q, self.block_m
        return sorted([(r, c) for r in m.rows for c in q.cols] +
                      [(r, c) for r in q.rows for c in m.cols])


@dataclass(frozen=True)
class StarCell:
    """Component {i} x G x {lambda} whose row or column has no zero."""
    row: int
    col: int
    kind: ClassVar[str] = 'star'

    def cells(self) -> List[Tuple[int, int]]:
        return [(self.row, self.col)]


ComponentDescriptor = Union[SingleClosure, PairClosure, StarCell]


@dataclass(frozen=True)
class ComponentReport:
    descriptor: ComponentDescriptor
    diameter: int


@dataclass
class AnalysisReport:
    connected: bool
    components: List[ComponentReport]
    diameter: ExtNat
    clique_number: int
    girth: ExtNat
    chromatic_lower: int
    chromatic_upper_edges: int
    chromatic_upper_degree: int
    knit_degree: Optional[int] = None
    profile: GroupProfile = field(default=None, repr=False)

    def __post_init__(self):
        if self.chromatic_lower > min(self.chromatic_upper_edges,
                                      self.chromatic_upper_degree):
            raise ValueError(
                f'chromatic lower bound {self.chromatic_lower} exceeds the '
                f'upper bounds {self.chromatic_upper_edges}, '
                f'{self.chromatic_upper_degree}')
        if self.connected and self.diameter < 2:
            raise ValueError(
                f'connected commuting graph with diameter {self.diameter}')
        if self.knit_degree not in (None, 1):
            raise ValueError(f'knit degree must be 1, got {self.knit_degree}')


def require_analyzable(matrix: StructuralMatrix):
    """Raise unless the matrix is regular and has a zero entry."""
    if not is_regular(matrix):
        raise InvalidMatrixError(
            'sandwich matrix is not regular, every row and every column '
            'needs a non-zero entry',
            shape=matrix.shape)
    if not matrix.zero_mask.any():
        raise CompletelySimpleError(shape=matrix.shape)


@lru_cache(maxsize=256)
def closure_blocks(matrix: StructuralMatrix) -> Tuple[ClosureSubmatrix, ...]:
    """All 0-closure submatrices, ordered by least column."""
    return tuple(
        sorted(all_closure_submatrices(matrix), key=lambda b: b.cols[0]))


@lru_cache(maxsize=4096)
def z_index(matrix: StructuralMatrix, row: int, col: int) -> int:
    return run_closure(matrix, row, col).z_index


def is_connected_formula(matrix: StructuralMatrix) -> bool:
    require_analyzable(matrix)
    row, col = zero_cells(matrix)[0]
    block = run_closure(matrix, row, col).block
    return len(block.rows) == matrix.rows and len(block.cols) == matrix.cols


def classify_components(
        matrix: StructuralMatrix) -> List[ComponentDescriptor]:
    """Single closures by least column, then pairs, then star cells in
    row-major order."""
    require_analyzable(matrix)
    blocks = closure_blocks(matrix)
    descriptors: List[ComponentDescriptor] = [
        SingleClosure(block) for block in blocks
    ]
    descriptors += [PairClosure(q, m) for q, m in combinations(blocks, 2)]

    row_has_zero = matrix.zero_mask.any(axis=1)
    col_has_zero = matrix.zero_mask.any(axis=0)
    descriptors += [
        StarCell(row, col) for row in range(matrix.rows)
        for col in range(matrix.cols)
        if not row_has_zero[row] or not col_has_zero[col]
    ]
    logger.debug(f'{len(blocks)} closure blocks, {len(descriptors)} '
                 'components')
    return descriptors


def classify_cell(matrix: StructuralMatrix, row: int,
                  col: int) -> ComponentDescriptor:
    """The component owning vertex set {col} x G x {row}."""
    require_analyzable(matrix)
    blocks = list(closure_blocks(matrix))
    by_col, by_row = block_of(blocks, col=col), block_of(blocks, row=row)
    if by_col is None or by_row is None:
        return StarCell(row, col)
    if by_col == by_row:
        return SingleClosure(blocks[by_col])
    # blocks are ordered by least column
    lo, hi = sorted([by_col, by_row])
    return PairClosure(blocks[lo], blocks[hi])


def component_cells(descriptor: ComponentDescriptor,
                    matrix: StructuralMatrix = None) -> List[Tuple[int, int]]:
    return descriptor.cells()


def _has_common_zeros(block: ClosureSubmatrix,
                      matrix: StructuralMatrix) -> bool:
    """Every two rows of the block share a zero column and every two
    columns share a zero row."""
    sub = matrix.zero_mask[np.ix_(block.rows, block.cols)].astype(np.int64)
    return bool((sub @ sub.T > 0).all() and (sub.T @ sub > 0).all())


def fastpath_starts(matrix: StructuralMatrix,
                    block: ClosureSubmatrix) -> List[Tuple[int, int]]:
    """Zeros of the block still worth a closure run once the component
    diameter is known to be at least 3.

    The row (or column) of the block with the most zeros spans an all-zero
    submatrix whose zeros can be skipped; among the rest, equal rows and
    equal columns of the block give equal z-indices, so one representative
    per class is kept.
    """
    sub = matrix.zero_mask[np.ix_(block.rows, block.cols)]
    row_counts, col_counts = sub.sum(axis=1), sub.sum(axis=0)
    if row_counts.max() >= col_counts.max():
        pivot = int(np.argmax(row_counts))
        skipped = {block.cols[c] for c in np.flatnonzero(sub[pivot])}
        candidates = [(r, c) for r, c in block.zero_cells(matrix)
                      if c not in skipped]
    else:
        pivot = int(np.argmax(col_counts))
        skipped = {block.rows[r] for r in np.flatnonzero(sub[:, pivot])}
        candidates = [(r, c) for r, c in block.zero_cells(matrix)
                      if r not in skipped]

    row_rep: Dict[bytes, int] = {}
    col_rep: Dict[bytes, int] = {}
    rep_of_row = {
        r: row_rep.setdefault(sub[idx].tobytes(), r)
        for idx, r in enumerate(block.rows)
    }
    rep_of_col = {
        c: col_rep.setdefault(np.ascontiguousarray(sub[:, idx]).tobytes(), c)
        for idx, c in enumerate(block.cols)
    }
    starts = sorted({(rep_of_row[r], rep_of_col[c]) for r, c in candidates})
    logger.debug(f'fast path keeps {len(starts)} of '
                 f'{len(block.zero_cells(matrix))} closure starts')
    return starts


def _closure_diameter(block: ClosureSubmatrix, matrix: StructuralMatrix,
                      profile: GroupProfile, fastpath: bool) -> int:
    if block.is_singleton():
        return 0 if profile.trivial else 1
    if block.is_all_zero(matrix):
        return 1
    if _has_common_zeros(block, matrix):
        return 2
    if fastpath:
        starts = fastpath_starts(matrix, block)
        return max([3] + [z_index(matrix, r, c) for r, c in starts])
    return max(z_index(matrix, r, c) for r, c in block.zero_cells(matrix))


def component_diameter(descriptor: ComponentDescriptor,
                       matrix: StructuralMatrix,
                       profile: GroupProfile,
                       fastpath: bool = False) -> int:
    require_analyzable(matrix)
    blocks = closure_blocks(matrix)
    if isinstance(descriptor, SingleClosure):
        if descriptor.block not in blocks:
            raise ComponentMismatchError(
                f'{descriptor.block} is not a 0-closure submatrix of this '
                'matrix')
        return _closure_diameter(descriptor.block, matrix, profile, fastpath)

    if isinstance(descriptor, PairClosure):
        q, m = descriptor.block_q, descriptor.block_m
        if q == m or q not in blocks or m not in blocks:
            raise ComponentMismatchError(
                f'({q}, {m}) is not a pair of distinct 0-closure submatrices')
        if q.is_singleton() and m.is_singleton() and profile.abelian \
                and not profile.trivial:
            return 1
        return 1 + max(_closure_diameter(q, matrix, profile, fastpath),
                       _closure_diameter(m, matrix, profile, fastpath))

    if isinstance(descriptor, StarCell):
        row, col = descriptor.row, descriptor.col
        inside = 0 <= row < matrix.rows and 0 <= col < matrix.cols
        if not inside or (matrix.zero_mask[row].any()
                          and matrix.zero_mask[:, col].any()):
            raise ComponentMismatchError(
                f'cell ({row + 1},{col + 1}) does not form a star-cell '
                'component')
        if profile.trivial:
            return 0
        return 1 if profile.abelian else 2

    raise ComponentMismatchError(f'unknown descriptor {descriptor!r}')


def _diameter(matrix: StructuralMatrix, profile: GroupProfile,
              fastpath: bool) -> ExtNat:
    descriptors = classify_components(matrix)
    if len(descriptors) > 1:
        return INF
    return component_diameter(descriptors[0], matrix, profile, fastpath)


def diameter_formula(matrix: StructuralMatrix,
                     profile: GroupProfile) -> ExtNat:
    return _diameter(matrix, profile, fastpath=False)


def diameter_fastpath(matrix: StructuralMatrix,
                      profile: GroupProfile) -> ExtNat:
    return _diameter(matrix, profile, fastpath=True)


def clique_number_formula(matrix: StructuralMatrix,
                          profile: GroupProfile,
                          max_dim: int = 20) -> int:
    require_analyzable(matrix)
    if profile.abelian and contains_pattern(matrix, D3) and not any(
            contains_pattern(matrix, p) for p in (O1X3, O3X1, O2X2)):
        return 3 * profile.order
    if profile.abelian and contains_pattern(matrix, D2) and not any(
            contains_pattern(matrix, p) for p in (O1X2, O2X1)):
        return 2 * profile.order
    return profile.order * max_zero_block(matrix, max_dim).area


def girth_formula(matrix: StructuralMatrix, profile: GroupProfile) -> ExtNat:
    require_analyzable(matrix)
    if profile.order >= 3:
        return 3
    if profile.order == 2:
        return 3 if len(zero_cells(matrix)) >= 2 else INF
    if any(contains_pattern(matrix, p) for p in (D3, O1X3, O3X1, O2X2)):
        return 3
    if any(contains_pattern(matrix, p) for p in GIRTH_FOUR_PATTERNS):
        return 4
    return INF


def chromatic_upper_edges(matrix: StructuralMatrix,
                          profile: GroupProfile) -> int:
    require_analyzable(matrix)
    blocks = closure_blocks(matrix)
    counts = [len(block.zero_cells(matrix)) for block in blocks]
    if len(blocks) == 1:
        return counts[0] * profile.order
    return max([2] + counts) * profile.order


def _degree_term(block: ClosureSubmatrix, matrix: StructuralMatrix) -> int:
    """c*r, less one unless the block is all zero or a Star sits where a
    column with c zeros meets a row with r zeros."""
    sub = matrix.zero_mask[np.ix_(block.rows, block.cols)]
    row_counts, col_counts = sub.sum(axis=1), sub.sum(axis=0)
    r, c = int(row_counts.max()), int(col_counts.max())
    if sub.all():
        return c * r
    crossing = np.outer(row_counts == r, col_counts == c)
    if (crossing & ~sub).any():
        return c * r
    return c * r - 1


def chromatic_upper_degree(matrix: StructuralMatrix,
                           profile: GroupProfile) -> int:
    require_analyzable(matrix)
    blocks = closure_blocks(matrix)
    terms = [_degree_term(block, matrix) for block in blocks]
    if len(blocks) == 1:
        return terms[0] * profile.order
    return max([2] + terms) * profile.order


def knit_degree_formula(matrix: StructuralMatrix,
                        profile: GroupProfile) -> Optional[int]:
    require_analyzable(matrix)
    if profile.order > 1 or contains_pattern(matrix, O1X2) \
            or contains_pattern(matrix, O2X1):
        return 1
    return None


def simplified_degree(matrix: StructuralMatrix, row: int, col: int) -> int:
    """Degree of (col, row) in the simplified graph."""
    c_i = col_zero_counts(matrix)[col]
    r_lambda = row_zero_counts(matrix)[row]
    return c_i * r_lambda - int(matrix.is_zero(row, col))


def analyze(matrix: StructuralMatrix,
            profile: GroupProfile,
            fastpath: bool = False,
            max_biclique_dim: int = 20) -> AnalysisReport:
    require_analyzable(matrix)
    components = [
        ComponentReport(descriptor=d,
                        diameter=component_diameter(d, matrix, profile,
                                                    fastpath))
        for d in classify_components(matrix)
    ]
    connected = is_connected_formula(matrix)
    if connected:
        diameter = components[0].diameter
    else:
        diameter = INF
    clique = clique_number_formula(matrix, profile, max_biclique_dim)
    report = AnalysisReport(
        connected=connected,
        components=components,
        diameter=diameter,
        clique_number=clique,
        girth=girth_formula(matrix, profile),
        chromatic_lower=clique,
        chromatic_upper_edges=chromatic_upper_edges(matrix, profile),
        chromatic_upper_degree=chromatic_upper_degree(matrix, profile),
        knit_degree=knit_degree_formula(matrix, profile),
        profile=profile)
    logger.info(f'analyzed {matrix.rows}x{matrix.cols} matrix, '
                f'{len(components)} components, diameter {diameter}')
    return report


def ext_to_json(value: ExtNat):
    return 'inf' if value == INF else int(value)


def _labels(indices) -> List[int]:
    return [v + 1 for v in indices]


def descriptor_to_dict(descriptor: ComponentDescriptor) -> dict:
    if isinstance(descriptor, SingleClosure):
        return {
            'kind': descriptor.kind,
            'cols': _labels(descriptor.block.cols),
            'rows': _labels(descriptor.block.rows)
        }
    if isinstance(descriptor, PairClosure):
        return {
            'kind': descriptor.kind,
            'q': {
                'cols': _labels(descriptor.block_q.cols),
                'rows': _labels(descriptor.block_q.rows)
            },
            'm': {
                'cols': _labels(descriptor.block_m.cols),
                'rows': _labels(descriptor.block_m.rows)
            }
        }
    return {
        'kind': descriptor.kind,
        'col': descriptor.col + 1,
        'row': descriptor.row + 1
    }


def report_to_dict(report: AnalysisReport) -> dict:
    components = []
    for item in report.components:
        entry = descriptor_to_dict(item.descriptor)
        entry['diameter'] = item.diameter
        components.append(entry)
    return {
        'connected': report.connected,
        'components': components,
        'diameter': ext_to_json(report.diameter),
        'clique_number': report.clique_number,
        'girth': ext_to_json(report.girth),
        'chromatic_lower': report.chromatic_lower,
        'chromatic_upper_edges': report.chromatic_upper_edges,
        'chromatic_upper_degree': report.chromatic_upper_degree,
        'knit_degree': report.knit_degree,
    }

# Copyright (c) OpenMMLab. All rights reserved.
"""Formula against oracle on seeded random instances."""
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
from loguru import logger
from tqdm import tqdm

from ..primitive import (GenerationError, Instance, OracleMismatchError,
                         SandwichMatrix, SizeLimitError, format_instance,
                         profile, sandwich_from_structural)
from .engine import analyze
from .generators import random_group, random_regular_with_zeros
from .oracle import ZERO, cross_check, psi_isomorphism, semigroup_center


@dataclass
class FuzzSummary:
    seed: int
    total: int = 0
    passed: int = 0
    first_counterexample: Optional[str] = None
    first_mismatches: Dict[str, dict] = field(default_factory=dict)
    vertex_counts: List[int] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return self.total - self.passed


def random_instance(rng: np.random.Generator,
                    max_rows: int = 4,
                    max_cols: int = 4,
                    max_order: int = 4,
                    zero_prob: float = 0.4,
                    max_rejections: int = 10000) -> Instance:
    """Random group, random regular pattern, random group elements in the
    Star cells."""
    rows = int(rng.integers(2, max_rows + 1))
    cols = int(rng.integers(2, max_cols + 1))
    group = random_group(max_order, rng)
    matrix = random_regular_with_zeros(rows,
                                       cols,
                                       zero_prob,
                                       seed=int(rng.integers(2**31)),
                                       max_rejections=max_rejections)
    cells = tuple(
        tuple(None if matrix.is_zero(r, c) else int(rng.integers(group.order))
              for c in range(cols)) for r in range(rows))
    return Instance(group=group,
                    sandwich=SandwichMatrix(cells=cells, group=group))


def check_instance(instance: Instance,
                   max_vertices: int = 2000,
                   max_chromatic_vertices: int = 40,
                   max_left_path_len: int = 3) -> Dict[str, dict]:
    """All formula fields, the centre and psi against the oracle."""
    group, sandwich, matrix = (instance.group, instance.sandwich,
                               instance.structural)
    report = analyze(matrix, profile(group))
    mismatches = cross_check(matrix,
                             report,
                             group,
                             sandwich,
                             max_vertices=max_vertices,
                             max_chromatic_vertices=max_chromatic_vertices,
                             max_left_path_len=max_left_path_len)

    centre = semigroup_center(group, sandwich, max_vertices)
    if centre != {ZERO}:
        mismatches['center'] = {
            'formula': ['0'],
            'oracle': sorted(map(str, centre))
        }
    try:
        psi_isomorphism(sandwich, sandwich_from_structural(matrix, group),
                        group, max_vertices)
    except OracleMismatchError as e:
        mismatches['psi'] = {'formula': 'isomorphism', 'oracle': e.message}
    return mismatches


def run_fuzz(count: int = 100,
             max_rows: int = 4,
             max_cols: int = 4,
             max_order: int = 4,
             zero_prob: float = 0.4,
             seed: int = 0,
             max_vertices: int = 2000,
             max_chromatic_vertices: int = 40,
             max_left_path_len: int = 3,
             max_rejections: int = 10000,
             progress: bool = True) -> FuzzSummary:
    if max_rows < 2 or max_cols < 2:
        raise GenerationError('fuzzing needs max_rows and max_cols >= 2')
    largest = max_rows * max_cols * max_order
    if largest > max_vertices:
        raise SizeLimitError(
            f'bounds allow {largest} semigroup elements, the oracle guard is '
            f'{max_vertices}',
            vertices=largest,
            guard=max_vertices)

    rng = np.random.default_rng(seed)
    summary = FuzzSummary(seed=seed)
    for _ in tqdm(range(count), disable=not progress):
        instance = random_instance(rng, max_rows, max_cols, max_order,
                                   zero_prob, max_rejections)
        summary.total += 1
        summary.vertex_counts.append(instance.sandwich.rows *
                                     instance.sandwich.cols *
                                     instance.group.order)
        mismatches = check_instance(instance, max_vertices,
                                    max_chromatic_vertices, max_left_path_len)
        if not mismatches:
            summary.passed += 1
            continue
        if summary.first_counterexample is None:
            summary.first_counterexample = format_instance(instance)
            summary.first_mismatches = mismatches
            logger.error(f'counterexample:\n{summary.first_counterexample}')

    logger.info(f'fuzz seed {seed}: {summary.passed}/{summary.total} pass')
    return summary

# Copyright (c) OpenMMLab. All rights reserved.
"""Matrix families and seeded random instances."""
from dataclasses import dataclass

import numpy as np
from loguru import logger

from ..primitive import (FiniteGroup, GenerationError, StructuralMatrix,
                         is_regular, make_cyclic, make_dihedral,
                         make_from_table, make_quaternion)

FAMILIES = ('banded', 'clique', 'brandt', 'random')


@dataclass(frozen=True)
class GeneratorSpec:
    """Which family to build and with what parameters.

    `n` feeds banded, clique and brandt; `rows`, `cols`, `zero_prob` and
    `seed` feed random.
    """
    family: str
    n: int = 2
    rows: int = 3
    cols: int = 3
    zero_prob: float = 0.4
    seed: int = 0
    max_rejections: int = 10000

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GenerationError(
                f'unknown family `{self.family}`, choose from '
                f'{", ".join(FAMILIES)}',
                family=self.family)
        if self.family == 'random':
            if self.rows < 1 or self.cols < 1:
                raise GenerationError(
                    f'random matrix needs rows, cols >= 1, got '
                    f'{self.rows}x{self.cols}')
            if not 0 < self.zero_prob < 1:
                raise GenerationError(
                    f'zero_prob must lie in (0, 1), got {self.zero_prob}')


def banded_diameter_family(n: int) -> StructuralMatrix:
    """(n+1)x(n+1); row lambda has zeros in columns lambda and lambda+1,
    cyclically. The commuting graph is connected with diameter n."""
    if n < 2:
        raise GenerationError(f'banded family needs n >= 2, got {n}', n=n)
    size = n + 1
    mask = np.zeros((size, size), dtype=bool)
    for row in range(size):
        mask[row, row] = True
        mask[row, (row + 1) % size] = True
    return StructuralMatrix.from_mask(mask)


def clique_family(n: int) -> StructuralMatrix:
    """2x(n+1): n zeros then a Star, over a row of Stars. Clique and
    chromatic number n for the trivial group."""
    if n < 1:
        raise GenerationError(f'clique family needs n >= 1, got {n}', n=n)
    mask = np.zeros((2, n + 1), dtype=bool)
    mask[0, :n] = True
    return StructuralMatrix.from_mask(mask)


def brandt_pattern(n: int) -> StructuralMatrix:
    """D_n, Stars on the diagonal."""
    if n < 2:
        raise GenerationError(f'brandt pattern needs n >= 2, got {n}', n=n)
    return StructuralMatrix.from_mask(~np.eye(n, dtype=bool))


def random_regular_with_zeros(rows: int,
                              cols: int,
                              zero_prob: float,
                              seed: int = 0,
                              max_rejections: int = 10000) -> StructuralMatrix:
    """Each cell is a zero with probability `zero_prob`; draws are rejected
    until the matrix is regular and has a zero."""
    GeneratorSpec(family='random',
                  rows=rows,
                  cols=cols,
                  zero_prob=zero_prob,
                  seed=seed)
    if rows < 2 or cols < 2:
        # the column (row) of a zero in a single-row (column) matrix has no
        # Star left
        raise GenerationError(
            f'a regular {rows}x{cols} matrix cannot contain a zero',
            rows=rows,
            cols=cols)

    rng = np.random.default_rng(seed)
    for attempt in range(max_rejections):
        mask = rng.random((rows, cols)) < zero_prob
        if not mask.any():
            continue
        matrix = StructuralMatrix.from_mask(mask)
        if is_regular(matrix):
            logger.debug(f'seed {seed}: regular {rows}x{cols} after '
                         f'{attempt + 1} draws')
            return matrix
    raise GenerationError(
        f'no regular {rows}x{cols} matrix with a zero after '
        f'{max_rejections} draws',
        seed=seed)


_KLEIN = ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))


def random_group(order_bound: int, rng: np.random.Generator) -> FiniteGroup:
    """A cyclic, Klein, dihedral or quaternion group of order at most
    `order_bound`."""
    if order_bound < 1:
        raise GenerationError(f'order bound must be >= 1, got {order_bound}')
    choices = [('cyclic', n) for n in range(1, order_bound + 1)]
    if order_bound >= 4:
        choices.append(('klein', 4))
    choices += [('dihedral', n) for n in range(3, order_bound // 2 + 1)]
    if order_bound >= 8:
        choices.append(('quaternion', 8))

    kind, n = choices[int(rng.integers(len(choices)))]
    if kind == 'cyclic':
        return make_cyclic(n)
    if kind == 'klein':
        return make_from_table(_KLEIN, identity=0, name='klein')
    if kind == 'dihedral':
        return make_dihedral(n)
    return make_quaternion()


def generate(spec: GeneratorSpec) -> StructuralMatrix:
    if spec.family == 'banded':
        return banded_diameter_family(spec.n)
    if spec.family == 'clique':
        return clique_family(spec.n)
    if spec.family == 'brandt':
        return brandt_pattern(spec.n)
    return random_regular_with_zeros(spec.rows,
                                     spec.cols,
                                     spec.zero_prob,
                                     seed=spec.seed,
                                     max_rejections=spec.max_rejections)

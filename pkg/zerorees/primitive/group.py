# Copyright (c) OpenMMLab. All rights reserved.
"""Finite groups given by their Cayley table."""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import List, Sequence, Set, Tuple

import networkx as nx
import numpy as np
from loguru import logger

from .error import EmptyGraphError, GroupAxiomError, InvalidOrderError


def _check_axioms(table: Tuple[Tuple[int, ...], ...], identity: int):
    """Raise GroupAxiomError on the first violated axiom, with a witness."""
    order = len(table)
    for row_idx, row in enumerate(table):
        if len(row) != order:
            raise GroupAxiomError('square', (row_idx, ))
    cayley = np.asarray(table, dtype=np.int64).reshape(order, order)

    bad = np.argwhere((cayley < 0) | (cayley >= order))
    if len(bad) > 0:
        a, b = bad[0]
        raise GroupAxiomError('closure', (int(a), int(b)))

    if not 0 <= identity < order:
        raise GroupAxiomError('identity', (identity, ))
    idx = np.arange(order)
    bad = np.flatnonzero((cayley[identity] != idx)
                         | (cayley[:, identity] != idx))
    if len(bad) > 0:
        raise GroupAxiomError('identity', (identity, int(bad[0])))

    # left[a, b, c] = (ab)c and right[a, b, c] = a(bc)
    left = cayley[cayley]
    right = cayley[:, cayley]
    bad = np.argwhere(left != right)
    if len(bad) > 0:
        a, b, c = bad[0]
        raise GroupAxiomError('associativity', (int(a), int(b), int(c)))

    bad = np.flatnonzero(~(cayley == identity).any(axis=1))
    if len(bad) > 0:
        raise GroupAxiomError('inverses', (int(bad[0]), ))


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on the elements 0..order-1.

    `table[a][b]` is the product ab, the row element acts on the left. The
    table is validated on construction, so every instance satisfies the
    group axioms.

    Example:

        .. code-block:: python

            from zerorees.primitive import make_cyclic

            g = make_cyclic(3)
            assert g.mul(1, 2) == 0
    """
    table: Tuple[Tuple[int, ...], ...]
    identity: int = 0
    labels: Tuple[str, ...] = field(default=(), compare=False)
    name: str = field(default='group', compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        if len(table) < 1:
            raise InvalidOrderError('a group needs at least one element',
                                    order=0)
        object.__setattr__(self, 'table', table)
        _check_axioms(table, self.identity)
        if self.labels and len(self.labels) != len(table):
            raise ValueError(
                f'labels has {len(self.labels)} entries, expected {len(table)}'
            )

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def cayley(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def label(self, a: int) -> str:
        if self.labels:
            return self.labels[a]
        return f'g{a}'

    def __str__(self) -> str:
        return f'{self.name}(order={self.order})'

    def __repr__(self) -> str:
        return self.__str__()


@dataclass(frozen=True)
class GroupProfile:
    """What the theorem formulas know about G: its order and abelian-ness."""
    order: int
    abelian: bool
    trivial: bool = None

    def __post_init__(self):
        if self.order < 1:
            raise InvalidOrderError(f'invalid group order {self.order}',
                                    order=self.order)
        if self.trivial is None:
            object.__setattr__(self, 'trivial', self.order == 1)
        if self.trivial != (self.order == 1):
            raise ValueError('trivial must hold exactly when order is 1')
        if self.trivial and not self.abelian:
            raise ValueError('the trivial group is abelian')


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidOrderError(f'cyclic group order must be >= 1, got {n}',
                                order=n)
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table=table,
                       identity=0,
                       labels=tuple(f'r{a}' for a in range(n)),
                       name=f'cyclic({n})')


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n.

    Element k < n is the rotation r^k, element n + k is the reflection s r^k.
    """
    if n < 3:
        raise InvalidOrderError(f'dihedral parameter must be >= 3, got {n}',
                                order=n)

    def compose(x: int, y: int) -> int:
        flip_x, a = divmod(x, n)
        flip_y, b = divmod(y, n)
        power = (b - a) % n if flip_y else (a + b) % n
        return (flip_x ^ flip_y) * n + power

    table = [[compose(x, y) for y in range(2 * n)] for x in range(2 * n)]
    labels = tuple([f'r{k}' for k in range(n)] + [f's{k}' for k in range(n)])
    return FiniteGroup(table=table,
                       identity=0,
                       labels=labels,
                       name=f'dihedral({n})')


# unit products of the quaternion group as (sign, unit), units 1, i, j, k
_QUATERNION_UNITS = (
    ((0, 0), (0, 1), (0, 2), (0, 3)),
    ((0, 1), (1, 0), (0, 3), (1, 2)),
    ((0, 2), (1, 3), (1, 0), (0, 1)),
    ((0, 3), (0, 2), (1, 1), (1, 0)),
)


def make_quaternion() -> FiniteGroup:
    """Quaternion group of order 8, element 4*sign + unit."""

    def compose(x: int, y: int) -> int:
        sign_x, unit_x = divmod(x, 4)
        sign_y, unit_y = divmod(y, 4)
        sign, unit = _QUATERNION_UNITS[unit_x][unit_y]
        return (sign_x ^ sign_y ^ sign) * 4 + unit

    table = [[compose(x, y) for y in range(8)] for x in range(8)]
    labels = ('1', 'i', 'j', 'k', '-1', '-i', '-j', '-k')
    return FiniteGroup(table=table,
                       identity=0,
                       labels=labels,
                       name='quaternion')


def make_from_table(table: Sequence[Sequence[int]],
                    identity: int = None,
                    name: str = 'table') -> FiniteGroup:
    """Validate a Cayley table. The identity is searched for when not
    given."""
    rows = [list(row) for row in table]
    if len(rows) < 1:
        raise InvalidOrderError('empty Cayley table', order=0)
    square = all(len(row) == len(rows) for row in rows)
    if identity is None:
        identity = 0
        for e in range(len(rows) if square else 0):
            if all(rows[e][x] == x and rows[x][e] == x
                   for x in range(len(rows))):
                identity = e
                break
    group = FiniteGroup(table=rows, identity=identity, name=name)
    logger.debug(f'validated {group}')
    return group


def is_abelian(group: FiniteGroup) -> bool:
    return bool((group.cayley == group.cayley.T).all())


def center(group: FiniteGroup) -> Set[int]:
    commutes = group.cayley == group.cayley.T
    return {int(x) for x in np.flatnonzero(commutes.all(axis=1))}


def profile(group: FiniteGroup) -> GroupProfile:
    return GroupProfile(order=group.order, abelian=is_abelian(group))


def extended_commuting_graph_of_group(group: FiniteGroup) -> nx.Graph:
    """All elements of G, adjacent when distinct and commuting."""
    graph = nx.Graph()
    graph.add_nodes_from(range(group.order))
    commutes = group.cayley == group.cayley.T
    for a, b in combinations(range(group.order), 2):
        if commutes[a, b]:
            graph.add_edge(a, b)
    return graph


def commuting_graph_of_group(group: FiniteGroup) -> nx.Graph:
    """Commuting graph on the non-central elements of G."""
    central = center(group)
    if len(central) == group.order:
        raise EmptyGraphError(
            f'{group} is abelian, its commuting graph has no vertices')
    graph = extended_commuting_graph_of_group(group)
    graph.remove_nodes_from(central)
    return graph


def graph_join(left: nx.Graph, right: nx.Graph) -> nx.Graph:
    """Union of two graphs on disjoint vertex sets plus every cross edge."""
    common = set(left.nodes) & set(right.nodes)
    if common:
        raise ValueError(f'join needs disjoint vertex sets, shared {common}')
    joined = nx.compose(left, right)
    joined.add_edges_from((u, v) for u in left.nodes for v in right.nodes)
    return joined


def complete_graph_on(vertices: List[int]) -> nx.Graph:
    graph = nx.complete_graph(len(vertices))
    return nx.relabel_nodes(graph, dict(enumerate(vertices)))

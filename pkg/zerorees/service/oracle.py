# Copyright (c) OpenMMLab. All rights reserved.
"""Brute-force ground truth.

The semigroup M0[G; I, Lambda; P] is built element by element, its
commuting graph is handed to networkx, and textbook graph algorithms
answer the same questions the closed formulas answer.
"""
from collections import deque
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Set, Tuple

import networkx as nx
import numpy as np
from loguru import logger

from ..primitive import (EmptyGraphError, FiniteGroup, InvalidMatrixError,
                         OracleMismatchError, SandwichMatrix, SizeLimitError,
                         StructuralMatrix, is_regular, structural)
from .engine import (INF, AnalysisReport, ExtNat, component_cells,
                     diameter_fastpath, ext_to_json, simplified_degree)


class ZeroElement:
    """The adjoined zero, a singleton."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return '0'


ZERO = ZeroElement()


class Triple(NamedTuple):
    """The element (i, g, lambda); fields are 0-based indices."""
    col: int
    elem: int
    row: int


def _sort_key(element):
    if element is ZERO:
        return (-1, )
    if isinstance(element, tuple):
        return tuple(element)
    return (element, )


def triples(group: FiniteGroup, sandwich: SandwichMatrix) -> List[Triple]:
    """I x G x Lambda in lexicographic (i, g, lambda) order."""
    return [
        Triple(col, elem, row) for col in range(sandwich.cols)
        for elem in range(group.order) for row in range(sandwich.rows)
    ]


def element_label(element, group: FiniteGroup) -> str:
    if element is ZERO:
        return '0'
    return f'({element.col + 1},{group.label(element.elem)},{element.row + 1})'


def multiply(a, b, group: FiniteGroup, sandwich: SandwichMatrix):
    """(i,x,lambda)(j,y,mu) = (i, x p_{lambda j} y, mu), or 0 when
    p_{lambda j} is zero."""
    if a is ZERO or b is ZERO:
        return ZERO
    p = sandwich.entry(a.row, b.col)
    if p is None:
        return ZERO
    return Triple(a.col, group.mul(group.mul(a.elem, p), b.elem), b.row)


def _check_size(count: int, max_vertices: int):
    if count > max_vertices:
        raise SizeLimitError(
            f'{count} semigroup elements exceed the oracle guard of '
            f'{max_vertices}',
            vertices=count,
            guard=max_vertices)


class _Arrays(NamedTuple):
    cols: np.ndarray
    elems: np.ndarray
    rows: np.ndarray
    p_ab: np.ndarray
    g_ab: np.ndarray


def _arrays(group: FiniteGroup, sandwich: SandwichMatrix,
            elements: List[Triple]) -> _Arrays:
    cols = np.array([t.col for t in elements], dtype=np.int64)
    elems = np.array([t.elem for t in elements], dtype=np.int64)
    rows = np.array([t.row for t in elements], dtype=np.int64)
    entries = np.array([[-1 if v is None else v for v in row]
                        for row in sandwich.cells],
                       dtype=np.int64)
    # p_ab[a, b] = p_{lambda_a, j_b}, the entry used by the product ab
    p_ab = entries[rows[:, None], cols[None, :]]
    safe = np.where(p_ab < 0, group.identity, p_ab)
    cayley = group.cayley
    g_ab = cayley[cayley[elems[:, None], safe], elems[None, :]]
    return _Arrays(cols, elems, rows, p_ab, g_ab)


def product_table(group: FiniteGroup,
                  sandwich: SandwichMatrix,
                  max_vertices: int = 2000) -> Tuple[list, np.ndarray]:
    """Elements [0, triples...] and the table of product indices."""
    elements = triples(group, sandwich)
    _check_size(len(elements), max_vertices)
    arr = _arrays(group, sandwich, elements)
    code = 1 + (arr.cols[:, None] * group.order +
                arr.g_ab) * sandwich.rows + arr.rows[None, :]
    table = np.zeros((len(elements) + 1, len(elements) + 1), dtype=np.int64)
    table[1:, 1:] = np.where(arr.p_ab < 0, 0, code)
    return [ZERO] + elements, table


def semigroup_center(group: FiniteGroup,
                     sandwich: SandwichMatrix,
                     max_vertices: int = 2000) -> Set:
    elements, table = product_table(group, sandwich, max_vertices)
    central = (table == table.T).all(axis=1)
    return {elements[idx] for idx in np.flatnonzero(central)}


def build_extended_commuting_graph(group: FiniteGroup,
                                   sandwich: SandwichMatrix,
                                   max_vertices: int = 2000) -> nx.Graph:
    """Every element, the zero included; distinct commuting elements are
    adjacent."""
    elements, table = product_table(group, sandwich, max_vertices)
    commutes = table == table.T
    graph = nx.Graph()
    for element in elements:
        graph.add_node(element, label=element_label(element, group))
    upper = np.argwhere(np.triu(commutes, k=1))
    graph.add_edges_from((elements[a], elements[b]) for a, b in upper)
    return graph


def _lemma_adjacency(group: FiniteGroup, sandwich: SandwichMatrix,
                     elements: List[Triple]) -> np.ndarray:
    """Commutativity read off the sandwich entries: same cell and
    x p y = y p x, or p_{lambda j} = p_{mu i} = 0."""
    arr = _arrays(group, sandwich, elements)
    ab_zero = arr.p_ab < 0
    same = (arr.cols[:, None] == arr.cols[None, :]) & (arr.rows[:, None]
                                                       == arr.rows[None, :])
    return (ab_zero & ab_zero.T) | (same & ~ab_zero &
                                    (arr.g_ab == arr.g_ab.T))


def build_commuting_graph(group: FiniteGroup,
                          sandwich: SandwichMatrix,
                          max_vertices: int = 2000) -> nx.Graph:
    """Commuting graph on the non-central elements.

    Adjacency from the multiplication is compared against the entry-wise
    criterion; any disagreement raises OracleMismatchError.
    """
    extended = build_extended_commuting_graph(group, sandwich, max_vertices)
    central = [
        v for v in extended.nodes
        if extended.degree(v) == extended.number_of_nodes() - 1
    ]
    graph = extended.copy()
    graph.remove_nodes_from(central)
    if graph.number_of_nodes() == 0:
        raise EmptyGraphError('the semigroup is commutative, its commuting '
                              'graph has no vertices')

    elements = triples(group, sandwich)
    lemma = _lemma_adjacency(group, sandwich, elements)
    index = {t: k for k, t in enumerate(elements)}
    for u, v in combinations(sorted(graph.nodes, key=_sort_key), 2):
        if graph.has_edge(u, v) != bool(lemma[index[u], index[v]]):
            raise OracleMismatchError(
                f'adjacency of {u} and {v} differs from the entry-wise '
                'criterion',
                mismatches={'adjacency': (str(u), str(v))})
    logger.debug(f'commuting graph: {graph.number_of_nodes()} vertices, '
                 f'{graph.number_of_edges()} edges')
    return graph


def build_simplified_graph(matrix: StructuralMatrix) -> nx.Graph:
    """Graph on I x Lambda, nodes (col, row); (i,lambda) ~ (j,mu) when
    p_{lambda j} = p_{mu i} = 0."""
    graph = nx.Graph()
    cells = [(col, row) for col in range(matrix.cols)
             for row in range(matrix.rows)]
    for col, row in cells:
        graph.add_node((col, row), label=f'({col + 1},{row + 1})')
    for (i, lam), (j, mu) in combinations(cells, 2):
        if matrix.is_zero(lam, j) and matrix.is_zero(mu, i):
            graph.add_edge((i, lam), (j, mu))
    return graph


def bfs_components(graph: nx.Graph) -> List[list]:
    parts = [sorted(c, key=_sort_key) for c in nx.connected_components(graph)]
    return sorted(parts, key=lambda part: _sort_key(part[0]))


def bfs_diameter(graph: nx.Graph, part) -> int:
    """Diameter of the (connected) subgraph induced by `part`."""
    sub = graph.subgraph(part)
    longest = 0
    for source in sub.nodes:
        lengths = nx.single_source_shortest_path_length(sub, source)
        if len(lengths) != sub.number_of_nodes():
            raise ValueError('diameter asked for a disconnected vertex set')
        longest = max(longest, max(lengths.values()))
    return longest


def graph_diameter(graph: nx.Graph) -> ExtNat:
    parts = bfs_components(graph)
    if len(parts) > 1:
        return INF
    return bfs_diameter(graph, parts[0])


def max_clique(graph: nx.Graph) -> int:
    """Bron-Kerbosch with pivoting, networkx `find_cliques`."""
    return max((len(c) for c in nx.find_cliques(graph)), default=0)


def shortest_cycle(graph: nx.Graph) -> ExtNat:
    """Girth by one BFS per edge with that edge removed."""
    best = INF
    for u, v in sorted(graph.edges, key=lambda e: (_sort_key(e[0]),
                                                    _sort_key(e[1]))):
        # BFS from u to v avoiding the edge itself
        seen = {u: 0}
        queue = deque([u])
        while queue:
            node = queue.popleft()
            if seen[node] + 1 >= best - 1:
                break
            for nxt in graph[node]:
                if node == u and nxt == v:
                    continue
                if nxt in seen:
                    continue
                seen[nxt] = seen[node] + 1
                if nxt == v:
                    queue.clear()
                    break
                queue.append(nxt)
        if v in seen:
            best = min(best, seen[v] + 1)
        if best == 3:
            break
    return best


def exact_chromatic(graph: nx.Graph, max_vertices: int = 40) -> int:
    """Chromatic number by DSATUR-ordered backtracking, seeded with a
    maximum clique and bounded above by the greedy DSATUR colouring."""
    count = graph.number_of_nodes()
    if count > max_vertices:
        raise SizeLimitError(
            f'exact colouring limited to {max_vertices} vertices, got {count}',
            vertices=count,
            guard=max_vertices)
    if count == 0:
        return 0

    nodes = sorted(graph.nodes, key=_sort_key)
    index = {v: k for k, v in enumerate(nodes)}
    adj = [{index[u] for u in graph[v]} for v in nodes]
    clique = [index[v] for v in max(nx.find_cliques(graph), key=len)]
    greedy = nx.coloring.greedy_color(graph, strategy='DSATUR')
    lower, upper = len(clique), max(greedy.values()) + 1

    for k in range(lower, upper):
        if _colourable(adj, k, clique):
            return k
    return upper


def _colourable(adj: List[Set[int]], k: int, seed: List[int]) -> bool:
    colours = [-1] * len(adj)
    for colour, v in enumerate(seed):
        colours[v] = colour

    def pick() -> int:
        best, best_key = -1, None
        for v, colour in enumerate(colours):
            if colour >= 0:
                continue
            saturation = len({colours[u] for u in adj[v] if colours[u] >= 0})
            key = (saturation, len(adj[v]))
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def backtrack(remaining: int) -> bool:
        if remaining == 0:
            return True
        v = pick()
        used = {colours[u] for u in adj[v] if colours[u] >= 0}
        # colours above the highest in use are interchangeable
        ceiling = min(k, max(colours) + 2)
        for colour in range(ceiling):
            if colour in used:
                continue
            colours[v] = colour
            if backtrack(remaining - 1):
                return True
        colours[v] = -1
        return False

    return backtrack(len(adj) - len(seed))


def is_left_path(path, group: FiniteGroup, sandwich: SandwichMatrix,
                 graph: nx.Graph) -> bool:
    """x1 .. xn is a path of the commuting graph, x1 != xn and
    x1 xi = xn xi for all i."""
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    if any(not graph.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    first, last = path[0], path[-1]
    return all(
        multiply(first, x, group, sandwich) == multiply(
            last, x, group, sandwich) for x in path)


def _left_candidates(group: FiniteGroup, sandwich: SandwichMatrix,
                     graph: nx.Graph, max_len: int, max_vertices: int):
    """Yield (x1, xn, subgraph of vertices v with x1 v = xn v).

    A left path with at most `max_len` edges stays inside the ball of
    radius `max_len` around x1, so only endpoints in that ball are tried,
    and only those with x1 x1 = xn x1 and x1 xn = xn xn. One orientation
    per pair.
    """
    elements, table = product_table(group, sandwich, max_vertices)
    index = {e: k for k, e in enumerate(elements)}
    nodes = sorted(graph.nodes, key=_sort_key)
    order = {v: k for k, v in enumerate(nodes)}
    for first in nodes:
        ball = nx.single_source_shortest_path_length(graph,
                                                     first,
                                                     cutoff=max_len)
        later = sorted((v for v in ball if order[v] > order[first]),
                       key=order.get)
        if not later:
            continue
        a = index[first]
        ends = np.array([index[v] for v in later])
        keep = (table[ends, a] == table[a, a]) & (table[a, ends]
                                                  == table[ends, ends])
        if not keep.any():
            continue
        members = sorted(ball, key=order.get)
        cols = np.array([index[v] for v in members])
        for last in (v for v, ok in zip(later, keep) if ok):
            agree = table[index[last], cols] == table[a, cols]
            good = [v for v, ok in zip(members, agree) if ok]
            yield first, last, graph.subgraph(good)


def find_left_paths(group: FiniteGroup,
                    sandwich: SandwichMatrix,
                    max_len: int = 3,
                    graph: nx.Graph = None,
                    max_vertices: int = 2000) -> List[tuple]:
    """Every left path with at most `max_len` edges, one orientation per
    path."""
    if graph is None:
        graph = build_commuting_graph(group, sandwich, max_vertices)
    paths = []
    for first, last, sub in _left_candidates(group, sandwich, graph,
                                             max_len, max_vertices):
        for path in nx.all_simple_paths(sub, first, last, cutoff=max_len):
            paths.append(tuple(path))
    return paths


def knit_degree_oracle(group: FiniteGroup,
                       sandwich: SandwichMatrix,
                       max_len: int = 3,
                       graph: nx.Graph = None,
                       max_vertices: int = 2000) -> Optional[int]:
    """Length of the shortest left path, None when none has at most
    `max_len` edges."""
    if graph is None:
        graph = build_commuting_graph(group, sandwich, max_vertices)
    best = None
    for first, last, sub in _left_candidates(group, sandwich, graph,
                                             max_len, max_vertices):
        try:
            length = nx.shortest_path_length(sub, first, last)
        except nx.NetworkXNoPath:
            continue
        if length <= max_len and (best is None or length < best):
            best = length
        if best == 1:
            break
    return best


def psi_isomorphism(left: SandwichMatrix,
                    right: SandwichMatrix,
                    group: FiniteGroup,
                    max_vertices: int = 2000) -> Dict:
    """The map (i,x,lambda) -> (i, x p q^-1, lambda) between the commuting
    graphs of two sandwich matrices with the same zero positions.

    Raises OracleMismatchError if it fails to preserve or reflect
    adjacency.
    """
    if structural(left) != structural(right):
        raise InvalidMatrixError('psi needs sandwich matrices with zeros in '
                                 'the same positions')
    if not is_regular(structural(left)):
        raise InvalidMatrixError('psi needs regular sandwich matrices')

    mapping = {ZERO: ZERO}
    for t in triples(group, left):
        p, q = left.entry(t.row, t.col), right.entry(t.row, t.col)
        if p is None:
            mapping[t] = t
        else:
            elem = group.mul(group.mul(t.elem, p), group.inverse(q))
            mapping[t] = Triple(t.col, elem, t.row)

    source = build_commuting_graph(group, left, max_vertices)
    target = build_commuting_graph(group, right, max_vertices)
    image = {mapping[v] for v in source.nodes}
    if image != set(target.nodes) or len(image) != source.number_of_nodes():
        raise OracleMismatchError('psi is not a bijection between the '
                                  'vertex sets')
    mapped = {frozenset((mapping[u], mapping[v])) for u, v in source.edges}
    if mapped != {frozenset(e) for e in target.edges}:
        raise OracleMismatchError('psi does not preserve adjacency')
    return mapping


def export_dot(graph: nx.Graph, path: str = None, name: str = 'G') -> str:
    """DOT text through pydot, vertices renamed v0, v1, .. in sorted order
    and edges inserted in that order."""
    nodes = sorted(graph.nodes, key=_sort_key)
    ids = {v: f'v{k}' for k, v in enumerate(nodes)}
    ordered = nx.Graph(name=name)
    for v in nodes:
        data = graph.nodes[v]
        attrs = {'label': data.get('label', str(v))}
        if 'component' in data:
            attrs['component'] = data['component']
        ordered.add_node(ids[v], **attrs)
    edges = sorted(
        (tuple(sorted((ids[u], ids[v]), key=lambda s: int(s[1:])))
         for u, v in graph.edges),
        key=lambda e: (int(e[0][1:]), int(e[1][1:])))
    ordered.add_edges_from(edges)
    text = nx.nx_pydot.to_pydot(ordered).to_string()
    if path is not None:
        with open(path, 'w', encoding='utf8') as f:
            f.write(text)
        logger.info(f'write {graph.number_of_nodes()} vertices to {path}')
    return text


def tag_components(graph: nx.Graph):
    """Set a `component` node attribute, numbering components in order."""
    for idx, part in enumerate(bfs_components(graph)):
        for v in part:
            graph.nodes[v]['component'] = idx


def _lift(cells, group: FiniteGroup) -> frozenset:
    return frozenset(
        Triple(col, elem, row) for row, col in cells
        for elem in range(group.order))


def cross_check(matrix: StructuralMatrix,
                report: AnalysisReport,
                group: FiniteGroup,
                sandwich: SandwichMatrix,
                max_vertices: int = 2000,
                max_chromatic_vertices: int = 40,
                max_left_path_len: int = 3) -> Dict[str, dict]:
    """Compare every formula field of `report` with the oracle.

    Returns {field: {'formula': ..., 'oracle': ...}}, empty on agreement.
    """
    mismatches = {}

    def compare(name, formula, oracle):
        if formula != oracle:
            mismatches[name] = {'formula': formula, 'oracle': oracle}

    graph = build_commuting_graph(group, sandwich, max_vertices)
    parts = bfs_components(graph)
    compare('connected', report.connected, len(parts) == 1)

    oracle_parts = {frozenset(part): part for part in parts}
    formula_parts = {}
    for item in report.components:
        formula_parts[_lift(component_cells(item.descriptor), group)] = item
    compare('components', sorted(map(len, formula_parts)),
            sorted(map(len, oracle_parts)))
    if set(formula_parts) != set(oracle_parts):
        mismatches.setdefault('components', {
            'formula': len(formula_parts),
            'oracle': len(oracle_parts)
        })
    for vertex_set, item in formula_parts.items():
        if vertex_set in oracle_parts:
            oracle_diameter = bfs_diameter(graph, oracle_parts[vertex_set])
            if item.diameter != oracle_diameter:
                key = f'component_diameter[{item.descriptor.kind}]'
                mismatches[key] = {
                    'formula': item.diameter,
                    'oracle': oracle_diameter
                }

    oracle_diameter = graph_diameter(graph)
    compare('diameter', ext_to_json(report.diameter),
            ext_to_json(oracle_diameter))
    compare('diameter_fastpath',
            ext_to_json(diameter_fastpath(matrix, report.profile)),
            ext_to_json(report.diameter))
    compare('clique_number', report.clique_number, max_clique(graph))
    compare('girth', ext_to_json(report.girth),
            ext_to_json(shortest_cycle(graph)))
    compare(
        'knit_degree', report.knit_degree,
        knit_degree_oracle(group,
                           sandwich,
                           max_len=max_left_path_len,
                           graph=graph,
                           max_vertices=max_vertices))

    simplified = build_simplified_graph(matrix)
    for col, row in simplified.nodes:
        if simplified.degree((col, row)) != simplified_degree(matrix, row, col):
            mismatches['simplified_degree'] = {
                'formula': simplified_degree(matrix, row, col),
                'oracle': simplified.degree((col, row))
            }
            break

    if graph.number_of_nodes() <= max_chromatic_vertices:
        chromatic = exact_chromatic(graph, max_chromatic_vertices)
        upper = min(report.chromatic_upper_edges,
                    report.chromatic_upper_degree)
        if not report.chromatic_lower <= chromatic <= upper:
            mismatches['chromatic_bracket'] = {
                'formula': [report.chromatic_lower, upper],
                'oracle': chromatic
            }
        if chromatic * (chromatic - 1) > 2 * graph.number_of_edges():
            mismatches['chromatic_edges'] = {
                'formula': 2 * graph.number_of_edges(),
                'oracle': chromatic * (chromatic - 1)
            }
        simplified_chromatic = exact_chromatic(simplified,
                                               max_chromatic_vertices)
        if chromatic > simplified_chromatic * group.order:
            mismatches['chromatic_simplified'] = {
                'formula': simplified_chromatic * group.order,
                'oracle': chromatic
            }

    for name, item in mismatches.items():
        logger.warning(f'{name}: formula {item["formula"]} vs oracle '
                       f'{item["oracle"]}')
    return mismatches

import re
from itertools import combinations

import networkx as nx
import numpy as np
import pydot
import pytest

from zerorees.primitive import (EmptyGraphError, InvalidMatrixError,
                                SandwichMatrix, SizeLimitError,
                                StructuralMatrix, diagonal_pattern,
                                make_cyclic, make_dihedral, profile,
                                run_closure, sandwich_from_structural,
                                step_entries, transpose, zero_cells)
from zerorees.service import (INF, ZERO, Triple, analyze,
                              banded_diameter_family, bfs_components,
                              build_commuting_graph,
                              build_extended_commuting_graph,
                              build_simplified_graph, chromatic_upper_degree,
                              chromatic_upper_edges, clique_family,
                              cross_check, exact_chromatic, export_dot,
                              find_left_paths, graph_diameter, is_left_path,
                              knit_degree_formula, knit_degree_oracle,
                              max_clique, multiply,
                              product_table, psi_isomorphism, random_instance,
                              random_regular_with_zeros,
                              semigroup_center, shortest_cycle, tag_components,
                              triples)

EXAMPLE = StructuralMatrix.from_rows([
    '0x00xxxx',
    'x0xx0xx0',
    '0x0xx00x',
    '0x0xx00x',
    'x0xxxxxx',
    'xxxxxxxx',
])
D2 = diagonal_pattern(2).matrix


def _lift(matrix, group):
    return group, sandwich_from_structural(matrix, group)


def test_multiply():
    g = make_cyclic(3)
    p = SandwichMatrix(cells=((1, None), (None, 2)), group=g)
    a, b = Triple(col=0, elem=1, row=0), Triple(col=1, elem=2, row=1)
    # p_{row 0, col 0} = 1, so (0,1,0)(0,1,0) = (0, 1+1+1, 0)
    assert multiply(a, a, g, p) == Triple(0, 0, 0)
    assert multiply(a, b, g, p) is ZERO
    assert multiply(ZERO, a, g, p) is ZERO
    assert multiply(b, b, g, p) == Triple(1, 0, 1)
    assert repr(ZERO) == '0'


def test_product_table_guard():
    g, p = _lift(EXAMPLE, make_cyclic(1))
    elements, table = product_table(g, p)
    assert len(elements) == 49
    assert elements[0] is ZERO
    assert table.shape == (49, 49)
    assert (table[0] == 0).all()
    with pytest.raises(SizeLimitError):
        product_table(g, p, max_vertices=10)


def test_center_is_zero():
    for seed in range(50):
        instance = random_instance(np.random.default_rng(seed))
        centre = semigroup_center(instance.group, instance.sandwich)
        assert centre == {ZERO}


def test_commutative_has_no_graph():
    g = make_cyclic(2)
    p = SandwichMatrix(cells=((0, ), ), group=g)
    assert semigroup_center(g, p) == {ZERO, Triple(0, 0, 0), Triple(0, 1, 0)}
    with pytest.raises(EmptyGraphError):
        build_commuting_graph(g, p)


def test_extended_graph_is_join():
    g, p = _lift(D2, make_dihedral(3))
    extended = build_extended_commuting_graph(g, p)
    graph = build_commuting_graph(g, p)
    assert set(extended.nodes) == set(graph.nodes) | {ZERO}
    assert extended.degree(ZERO) == graph.number_of_nodes()
    extended.remove_node(ZERO)
    assert {frozenset(e) for e in extended.edges} == \
        {frozenset(e) for e in graph.edges}


def test_components_match_example():
    g, p = _lift(EXAMPLE, make_cyclic(1))
    graph = build_commuting_graph(g, p)
    parts = bfs_components(graph)
    assert len(parts) == 11
    assert sorted(len(part) for part in parts) == [1] * 8 + [6, 15, 19]
    assert graph_diameter(graph) == INF


@pytest.mark.parametrize('n', [2, 3])
def test_banded_diameter(n):
    for order in (1, 2):
        g, p = _lift(banded_diameter_family(n), make_cyclic(order))
        assert graph_diameter(build_commuting_graph(g, p)) == n


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6])
def test_clique_family_colouring(n):
    matrix = clique_family(n)
    g, p = _lift(matrix, make_cyclic(1))
    graph = build_commuting_graph(g, p)
    chromatic = exact_chromatic(graph)
    assert max_clique(graph) == n
    assert chromatic == n
    assert chromatic <= chromatic_upper_edges(matrix, profile(g))
    assert chromatic <= chromatic_upper_degree(matrix, profile(g))


def test_exact_chromatic():
    assert exact_chromatic(nx.cycle_graph(5)) == 3
    assert exact_chromatic(nx.cycle_graph(6)) == 2
    assert exact_chromatic(nx.complete_graph(4)) == 4
    assert exact_chromatic(nx.petersen_graph()) == 3
    assert exact_chromatic(nx.Graph()) == 0
    with pytest.raises(SizeLimitError):
        exact_chromatic(nx.path_graph(41))


def test_shortest_cycle():
    assert shortest_cycle(nx.cycle_graph(5)) == 5
    assert shortest_cycle(nx.petersen_graph()) == 5
    assert shortest_cycle(nx.complete_graph(4)) == 3
    assert shortest_cycle(nx.balanced_tree(2, 3)) == INF


def test_girth_against_oracle():
    cases = [
        (StructuralMatrix.from_rows(['0x', 'xx']), 2, INF),
        (D2, 2, 3),
        (D2, 1, INF),
        (diagonal_pattern(3).matrix, 1, 3),
        (StructuralMatrix.from_rows(['000', 'xxx']), 1, 3),
        (transpose(StructuralMatrix.from_rows(['000', 'xxx'])), 1, 3),
        (StructuralMatrix.from_rows(['00x', '00x', 'xxx']), 1, 3),
        (StructuralMatrix.from_rows(['00xx', 'xx00']), 1, 4),
        (transpose(StructuralMatrix.from_rows(['00xx', 'xx00'])), 1, 4),
        (StructuralMatrix.from_rows(['00x', 'x00', 'xxx']), 1, 4),
        (transpose(StructuralMatrix.from_rows(['00x', 'x00', 'xxx'])), 1, 4),
        (StructuralMatrix.from_rows(['0x', 'xx']), 3, 3),
    ]
    for matrix, order, girth in cases:
        g, p = _lift(matrix, make_cyclic(order))
        assert shortest_cycle(build_commuting_graph(g, p)) == girth
        assert analyze(matrix, profile(g)).girth == girth


def test_knit_degree():
    for matrix, order, knit in ((D2, 1, None), (D2, 2, 1),
                                (clique_family(2), 1, 1),
                                (clique_family(1), 1, None),
                                (diagonal_pattern(3).matrix, 1, 1)):
        g, p = _lift(matrix, make_cyclic(order))
        assert knit_degree_oracle(g, p) == knit
        assert analyze(matrix, profile(g)).knit_degree == knit


def test_left_paths():
    g, p = _lift(D2, make_cyclic(2))
    graph = build_commuting_graph(g, p)
    paths = find_left_paths(g, p, graph=graph)
    assert paths
    assert all(is_left_path(path, g, p, graph) for path in paths)
    assert not is_left_path((paths[0][0], ), g, p, graph)

    g, p = _lift(D2, make_cyclic(1))
    assert find_left_paths(g, p) == []


def _left_paths_by_pairs(g, p, graph, max_len=3):
    elements, table = product_table(g, p)
    index = {e: k for k, e in enumerate(elements)}
    nodes = sorted(graph.nodes)
    paths = set()
    for first, last in combinations(nodes, 2):
        agree = table[index[first]] == table[index[last]]
        good = [v for v in nodes if agree[index[v]]]
        if first in good and last in good:
            sub = graph.subgraph(good)
            paths.update(
                tuple(path)
                for path in nx.all_simple_paths(sub, first, last,
                                                cutoff=max_len))
    return paths


def test_left_paths_match_pair_search():
    rng = np.random.default_rng(3)
    for _ in range(10):
        instance = random_instance(rng, max_rows=3, max_cols=3, max_order=3)
        g, p = instance.group, instance.sandwich
        graph = build_commuting_graph(g, p)
        assert set(find_left_paths(g, p, graph=graph)) == \
            _left_paths_by_pairs(g, p, graph)


def test_knit_search_on_large_sparse_graph():
    matrix = StructuralMatrix.from_mask(np.eye(24, dtype=bool))
    g, p = _lift(matrix, make_cyclic(1))
    graph = build_commuting_graph(g, p)
    assert graph.number_of_nodes() == 576
    assert knit_degree_oracle(g, p, graph=graph) is None
    assert knit_degree_formula(matrix, profile(g)) is None
    assert find_left_paths(g, p, graph=graph) == []


def test_simplified_graph_degrees():
    simplified = build_simplified_graph(EXAMPLE)
    assert simplified.number_of_nodes() == 48
    assert simplified.degree((0, 0)) == 8
    assert simplified.degree((1, 0)) == 6
    assert simplified.degree((0, 5)) == 0


@pytest.mark.parametrize('seed', range(0, 40, 4))
def test_closure_steps_are_simplified_distances(seed):
    matrix = random_regular_with_zeros(5, 5, 0.4, seed=seed)
    simplified = build_simplified_graph(matrix)
    for row, col in zero_cells(matrix):
        run = run_closure(matrix, row, col)
        dist = nx.single_source_shortest_path_length(simplified, (col, row))
        assert {(r, c) for c, r in dist} == set(run.block.cells())
        assert max(dist.values()) == run.z_index
        for k in range(run.z_index + 1):
            at_k = {(r, c) for (c, r), d in dist.items() if d == k}
            assert step_entries(run, k) == at_k


def test_simplified_edge_iff_every_lift_is_an_edge():
    rng = np.random.default_rng(8)
    for _ in range(8):
        instance = random_instance(rng, max_rows=3, max_cols=3, max_order=6)
        g, p = instance.group, instance.sandwich
        graph = build_commuting_graph(g, p)
        simplified = build_simplified_graph(instance.structural)
        for (i, lam), (j, mu) in combinations(simplified.nodes, 2):
            lifted = [
                graph.has_edge(Triple(i, x, lam), Triple(j, y, mu))
                for x in range(g.order) for y in range(g.order)
            ]
            assert simplified.has_edge((i, lam), (j, mu)) == all(lifted)
            assert all(lifted) == any(lifted)


def _largest_clique_by_subsets(graph):
    nodes = list(graph.nodes)
    for size in range(len(nodes), 0, -1):
        for subset in combinations(nodes, size):
            if all(graph.has_edge(u, v) for u, v in combinations(subset, 2)):
                return size
    return 0


def test_max_clique_matches_subset_search():
    for seed in range(20):
        graph = nx.gnp_random_graph(4 + seed % 9, 0.5, seed=seed)
        assert max_clique(graph) == _largest_clique_by_subsets(graph)

    rng = np.random.default_rng(4)
    for _ in range(6):
        instance = random_instance(rng, max_rows=2, max_cols=2, max_order=4)
        graph = build_commuting_graph(instance.group, instance.sandwich)
        assert graph.number_of_nodes() <= 16
        assert max_clique(graph) == _largest_clique_by_subsets(graph)


def test_psi():
    g = make_dihedral(3)
    twisted = SandwichMatrix(cells=((None, 3, 1), (5, None, 2), (4, 4, None)),
                             group=g)
    plain = sandwich_from_structural(
        StructuralMatrix.from_rows(['0xx', 'x0x', 'xx0']), g)
    mapping = psi_isomorphism(twisted, plain, g)
    assert mapping[ZERO] is ZERO
    assert mapping[Triple(0, 2, 0)] == Triple(0, 2, 0)
    # (i, x, lambda) -> (i, x p q^-1, lambda) on a Star cell
    assert mapping[Triple(1, 0, 0)] == Triple(1, 3, 0)

    with pytest.raises(InvalidMatrixError):
        psi_isomorphism(twisted, sandwich_from_structural(D2, g), g)


def test_export_dot(tmp_path):
    g, p = _lift(D2, make_cyclic(1))
    graph = build_commuting_graph(g, p)
    tag_components(graph)
    path = tmp_path / 'd2.dot'
    text = export_dot(graph, str(path), name='d2')
    assert path.read_text() == text
    lines = text.splitlines()
    assert lines[0].startswith('graph') and 'd2' in lines[0]
    node = next(line for line in lines if line.strip().startswith('v1 '))
    assert '"(1,r0,2)"' in node
    assert 'component=1' in node.replace('"', '')

    names = re.findall(r'^\s*(v\d+) \[', text, flags=re.M)
    assert names == [f'v{k}' for k in range(graph.number_of_nodes())]
    edges = re.findall(r'(v\d+) -- (v\d+)', text)
    assert len(edges) == graph.number_of_edges()
    assert edges == sorted(edges, key=lambda e: (int(e[0][1:]), int(e[1][1:])))
    assert export_dot(graph, name='d2') == text

    parsed = nx.nx_pydot.from_pydot(pydot.graph_from_dot_data(text)[0])
    assert parsed.number_of_nodes() == graph.number_of_nodes()
    assert parsed.number_of_edges() == graph.number_of_edges()


def test_cross_check_example():
    g, p = _lift(EXAMPLE, make_cyclic(1))
    report = analyze(EXAMPLE, profile(g))
    assert cross_check(EXAMPLE, report, g, p) == {}


def test_cross_check_reports_mismatch():
    g, p = _lift(banded_diameter_family(2), make_cyclic(2))
    report = analyze(banded_diameter_family(2), profile(g))
    report.clique_number = 99
    mismatches = cross_check(banded_diameter_family(2), report, g, p)
    assert mismatches['clique_number'] == {'formula': 99, 'oracle': 6}


def test_triples_order():
    g, p = _lift(D2, make_cyclic(2))
    assert triples(g, p)[:3] == [
        Triple(0, 0, 0), Triple(0, 0, 1), Triple(0, 1, 0)
    ]


if __name__ == '__main__':
    test_center_is_zero()
    test_components_match_example()
    test_girth_against_oracle()
    test_knit_degree()
    test_simplified_edge_iff_every_lift_is_an_edge()

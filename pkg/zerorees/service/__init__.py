# Copyright (c) OpenMMLab. All rights reserved.
"""Formula engine, brute-force oracle and generators."""
from .config import DEFAULT_CONFIG, load_config  # noqa E401
from .engine import (INF, AnalysisReport, ComponentReport,  # noqa E401
                     PairClosure, SingleClosure, StarCell, analyze,
                     chromatic_upper_degree, chromatic_upper_edges,
                     classify_cell, classify_components,
                     clique_number_formula, component_cells,
                     component_diameter, diameter_fastpath, diameter_formula,
                     ext_to_json, fastpath_starts, girth_formula,
                     is_connected_formula, knit_degree_formula,
                     report_to_dict, require_analyzable, simplified_degree)
from .fuzz import FuzzSummary, check_instance, random_instance, run_fuzz  # noqa E401
from .generators import (FAMILIES, GeneratorSpec,  # noqa E401
                         banded_diameter_family, brandt_pattern,
                         clique_family, generate, random_group,
                         random_regular_with_zeros)
from .helper import (ErrorCode, build_closure_table,  # noqa E401
                     build_mismatch_table, build_report_table,
                     dump_report_json, histogram)
from .oracle import (ZERO, Triple, bfs_components, bfs_diameter,  # noqa E401
                     build_commuting_graph, build_extended_commuting_graph,
                     build_simplified_graph, cross_check, exact_chromatic,
                     export_dot, find_left_paths, graph_diameter,
                     is_left_path, knit_degree_oracle, max_clique, multiply,
                     product_table, psi_isomorphism, semigroup_center,
                     shortest_cycle, tag_components, triples)

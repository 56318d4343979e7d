# Copyright (c) OpenMMLab. All rights reserved.
"""primitive module."""
from .closure import (ClosureRun, ClosureSubmatrix,  # noqa E401
                      all_closure_submatrices, block_of, closure_block,
                      run_closure, step_entries)
from .error import (ComponentMismatchError, CompletelySimpleError,  # noqa E401
                    EmptyGraphError, ErrorCode, GenerationError,
                    GroupAxiomError, InvalidMatrixError, InvalidOrderError,
                    NoZeroError, NotAZeroError, OracleMismatchError,
                    ParseError, SizeLimitError, StepRangeError, ZeroReesError)
from .group import (FiniteGroup, GroupProfile, center,  # noqa E401
                    commuting_graph_of_group, complete_graph_on,
                    extended_commuting_graph_of_group, graph_join,
                    is_abelian, make_cyclic, make_dihedral, make_from_table,
                    make_quaternion, profile)
from .instance import (Instance, format_group, format_instance,  # noqa E401
                       format_matrix, load_instance, parse_instance)
from .matrix import (GIRTH_A, GIRTH_B, Cell, Pattern,  # noqa E401
                     SandwichMatrix, StructuralMatrix, ZeroBlock,
                     col_zero_counts, contains_pattern, diagonal_pattern,
                     equivalent, is_regular, max_zero_block, row_zero_counts,
                     sandwich_from_structural, structural, submatrix,
                     transpose, zero_cells, zero_pattern)

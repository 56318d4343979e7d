# Copyright (c) OpenMMLab. All rights reserved.
"""import module."""
from .primitive import ErrorCode, FiniteGroup, StructuralMatrix  # noqa E401
from .primitive import load_instance, parse_instance, profile  # noqa E401
from .service import analyze, build_commuting_graph, cross_check  # noqa E401
from .service import dump_report_json, report_to_dict  # noqa E401
from .version import __version__

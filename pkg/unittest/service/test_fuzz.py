import numpy as np
import pytest

from zerorees.primitive import (GenerationError, SizeLimitError, is_abelian,
                                is_regular, parse_instance)
from zerorees.service import check_instance, random_instance, run_fuzz

CHROMATIC_P = '''
group dihedral 3
matrix 3 4
0 0 g1 g3
g2 0 0 g4
g5 g1 0 g0
'''


def test_random_instance_fills_star_cells():
    rng = np.random.default_rng(11)
    for _ in range(20):
        instance = random_instance(rng, max_rows=3, max_cols=4, max_order=4)
        matrix = instance.structural
        assert 2 <= matrix.rows <= 3 and 2 <= matrix.cols <= 4
        assert is_regular(matrix)
        for row in instance.sandwich.cells:
            for value in row:
                assert value is None or 0 <= value < instance.group.order


def test_check_chromatic_instance():
    instance = parse_instance(CHROMATIC_P)
    assert check_instance(instance) == {}


def test_fuzz_passes():
    summary = run_fuzz(count=200, seed=1, max_order=8, progress=False)
    assert summary.total == 200
    assert summary.passed == 200
    assert summary.failed == 0
    assert summary.first_counterexample is None
    assert summary.first_mismatches == {}
    assert len(summary.vertex_counts) == 200


def test_fuzz_draws_non_abelian_groups():
    rng = np.random.default_rng(1)
    groups = [random_instance(rng, max_order=8).group for _ in range(60)]
    assert any(not is_abelian(g) for g in groups)
    assert max(g.order for g in groups) <= 8


def test_fuzz_is_reproducible():
    a = run_fuzz(count=10, seed=5, max_order=3, progress=False)
    b = run_fuzz(count=10, seed=5, max_order=3, progress=False)
    assert a.vertex_counts == b.vertex_counts
    assert (a.passed, a.total) == (b.passed, b.total)


def test_fuzz_guards():
    with pytest.raises(SizeLimitError):
        run_fuzz(count=1, max_rows=30, max_cols=30, progress=False)
    with pytest.raises(GenerationError):
        run_fuzz(count=1, max_rows=1, progress=False)


if __name__ == '__main__':
    test_fuzz_passes()

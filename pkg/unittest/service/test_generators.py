import numpy as np
import pytest

from zerorees.primitive import (GenerationError, StructuralMatrix,
                                contains_pattern, diagonal_pattern,
                                format_matrix, is_regular, parse_instance,
                                run_closure)
from zerorees.service import (GeneratorSpec, banded_diameter_family,
                              brandt_pattern, clique_family, generate,
                              random_group, random_regular_with_zeros)


def test_banded_shape():
    assert banded_diameter_family(2) == StructuralMatrix.from_rows(
        ['00x', 'x00', '0x0'])
    for n in range(2, 6):
        matrix = banded_diameter_family(n)
        assert matrix.shape == (n + 1, n + 1)
        assert matrix.zero_mask.sum() == 2 * (n + 1)
        assert is_regular(matrix)


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_banded_closure_length(n):
    run = run_closure(banded_diameter_family(n), 0, 0)
    assert run.z_index == n
    assert run.block.rows == tuple(range(n + 1))


def test_clique_and_brandt():
    assert clique_family(1) == StructuralMatrix.from_rows(['0x', 'xx'])
    assert generate(GeneratorSpec(family='clique', n=5)).shape == (2, 6)
    assert brandt_pattern(2) == StructuralMatrix.from_rows(['x0', '0x'])
    assert contains_pattern(brandt_pattern(3), diagonal_pattern(3))


@pytest.mark.parametrize('build,n', [(banded_diameter_family, 1),
                                     (clique_family, 0), (brandt_pattern, 1)])
def test_family_lower_bounds(build, n):
    with pytest.raises(GenerationError):
        build(n)


def test_random_is_seeded():
    a = random_regular_with_zeros(4, 5, 0.3, seed=7)
    b = random_regular_with_zeros(4, 5, 0.3, seed=7)
    assert a == b


def test_random_is_regular_with_zero():
    for seed in range(50):
        matrix = random_regular_with_zeros(3, 4, 0.5, seed=seed)
        assert is_regular(matrix)
        assert matrix.zero_mask.any()
    sparse = random_regular_with_zeros(2, 2, 0.01, seed=3)
    assert sparse.zero_mask.any()


def test_random_rejects_bad_input():
    with pytest.raises(GenerationError):
        random_regular_with_zeros(1, 1, 0.5)
    with pytest.raises(GenerationError):
        random_regular_with_zeros(1, 4, 0.5)
    for prob in (0.0, 1.0, -0.2):
        with pytest.raises(GenerationError):
            random_regular_with_zeros(3, 3, prob)
    with pytest.raises(GenerationError):
        random_regular_with_zeros(3, 3, 0.999, max_rejections=5)


def test_unknown_family():
    with pytest.raises(GenerationError) as e:
        GeneratorSpec(family='triangle')
    assert e.value.detail['family'] == 'triangle'


def test_random_group():
    rng = np.random.default_rng(0)
    names = set()
    for _ in range(200):
        group = random_group(8, rng)
        assert 1 <= group.order <= 8
        names.add(group.name)
    assert 'quaternion' in names
    assert random_group(1, rng).order == 1
    with pytest.raises(GenerationError):
        random_group(0, rng)


def test_generated_matrix_parses_back():
    for spec in (GeneratorSpec(family='banded', n=3),
                 GeneratorSpec(family='random', rows=3, cols=5, seed=2)):
        matrix = generate(spec)
        assert parse_instance(format_matrix(matrix)).structural == matrix


if __name__ == '__main__':
    test_banded_shape()
    test_random_is_regular_with_zero()

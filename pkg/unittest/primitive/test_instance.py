import pytest

from zerorees.primitive import (InvalidMatrixError, ParseError,
                                StructuralMatrix, format_group,
                                format_instance, format_matrix, load_instance,
                                make_cyclic, make_dihedral, make_from_table,
                                make_quaternion, parse_instance)

EXAMPLE_TEXT = """
# 0-closure example
matrix 6 8
0 x 0 0 x x x x
x 0 x x 0 x x 0
0 x 0 x x 0 0 x
0 x 0 x x 0 0 x
x 0 x x x x x x
x x x x x x x x
"""


def test_default_group():
    instance = parse_instance(EXAMPLE_TEXT)
    assert instance.group == make_cyclic(1)
    assert instance.structural.shape == (6, 8)
    assert instance.sandwich.entry(0, 1) == instance.group.identity
    assert instance.sandwich.entry(0, 0) is None


def test_group_lines():
    text = 'group dihedral 3\nmatrix 2 2\ng4 0  # reflection\n0 x\n'
    instance = parse_instance(text)
    assert instance.group == make_dihedral(3)
    assert instance.sandwich.entry(0, 0) == 4
    assert instance.sandwich.entry(1, 1) == 0

    table = 'group table 2\n0 1\n1 0\nmatrix 1 2\n0 g1\n'
    assert parse_instance(table).group == make_cyclic(2)
    assert parse_instance('group quaternion\nmatrix 1 1\nx\n').group.order == 8


@pytest.mark.parametrize('text', [
    'group cyclic\nmatrix 1 1\nx\n',
    'group cyclic two\nmatrix 1 1\nx\n',
    'group cyclic 2\ngroup cyclic 2\nmatrix 1 1\nx\n',
    'matrix 2 2\n0 x\n',
    'matrix 2 2\n0 x\nx\n',
    'matrix 1 2\n0 y\n',
    'matrix 0 2\n',
    'shape 2 2\n',
    'group cyclic 2\n',
    'group table 2\n0 1\n',
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_instance(text)


def test_element_outside_group():
    with pytest.raises(InvalidMatrixError):
        parse_instance('group cyclic 2\nmatrix 1 2\n0 g2\n')


def test_format_round_trip(tmp_path):
    for group_line in ('group cyclic 3', 'group dihedral 4', 'group quaternion',
                       'group table 4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0'):
        text = group_line + '\nmatrix 2 3\n0 g1 x\nx 0 g2\n'
        instance = parse_instance(text)
        again = parse_instance(format_instance(instance))
        assert again == instance

        path = tmp_path / 'instance.txt'
        path.write_text(format_instance(instance))
        assert load_instance(str(path)) == instance


def test_load_rejects_non_utf8(tmp_path):
    path = tmp_path / 'latin1.txt'
    path.write_bytes('matrix 1 2\n0 \u00d7\n'.encode('latin-1'))
    with pytest.raises(ParseError) as e:
        load_instance(str(path))
    assert e.value.detail['path'] == str(path)
    assert 'UTF-8' in e.value.message


def test_format_pieces():
    assert format_group(make_dihedral(3)) == 'group dihedral 3'
    assert format_group(make_quaternion()) == 'group quaternion'
    klein = make_from_table([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1],
                             [3, 2, 1, 0]])
    assert format_group(klein).splitlines()[0] == 'group table 4'

    matrix = StructuralMatrix.from_rows(['0x', 'x0'])
    assert format_matrix(matrix) == 'matrix 2 2\n0 x\nx 0'
    assert parse_instance(format_matrix(matrix)).structural == matrix


if __name__ == '__main__':
    test_default_group()
    test_group_lines()
    test_format_pieces()

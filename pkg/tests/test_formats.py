import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quintic_monodromy.constants import A, A_TILDE
from quintic_monodromy.formats import (FormatError, format_group_dump, format_matrices,
                                       format_matrix, matrix_from_json, matrix_to_json,
                                       parse_group_dump, parse_matrices)
from quintic_monodromy.matrix_core import IntMatrix, ModMatrix


def test_text_layout():
    assert format_matrix(A) == "4 int\n11 8 -5 0\n5 -4 -3 1\n20 15 -9 0\n5 -5 -3 1\n"
    assert format_matrix(A_TILDE).splitlines()[0] == "4 5"


def test_several_blocks_with_comments():
    text = "# generators\n" + format_matrix(A) + "\n" + format_matrix(A_TILDE)
    assert parse_matrices(text) == [A, A_TILDE]


def test_json_layout():
    obj = matrix_to_json(A_TILDE)
    assert obj == {"dim": 4, "modulus": 5, "entries": [list(r) for r in A_TILDE.rows]}
    assert matrix_to_json(A)["modulus"] is None


def test_json_list():
    text = json.dumps([matrix_to_json(A), matrix_to_json(A_TILDE)])
    assert parse_matrices(text) == [A, A_TILDE]


@pytest.mark.parametrize("text", [
    "4 int\n1 2 3 4\n",                 # too few rows
    "2 int\n1 2\n3\n",                  # short row
    "2 x\n1 2\n3 4\n",                  # bad modulus word
    "2 5\n1 7\n0 1\n",                  # non-canonical residue
    "2 int\n1 a\n0 1\n",
    '{"dim": 2, "modulus": null}',
    '{"dim": 2, "modulus": null, "entries": [[1, 2]]}',
    "{not json",
])
def test_malformed(text):
    with pytest.raises(FormatError):
        parse_matrices(text)


big = st.integers(-10**40, 10**40)


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(big, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_int_round_trip(rows):
    m = IntMatrix(rows)
    text = format_matrix(m)
    assert parse_matrices(text) == [m]
    assert format_matrix(parse_matrices(text)[0]) == text
    assert matrix_from_json(json.loads(json.dumps(matrix_to_json(m)))) == m


@given(st.integers(2, 50).flatmap(lambda m: st.tuples(
    st.just(m), st.lists(st.lists(st.integers(0, m - 1), min_size=3, max_size=3),
                         min_size=3, max_size=3))))
def test_mod_round_trip(case):
    m, rows = case
    x = ModMatrix(rows, m)
    assert parse_matrices(format_matrices([x, x])) == [x, x]
    assert matrix_from_json(matrix_to_json(x)) == x


def test_group_dump_round_trip():
    text = format_group_dump(4, 5, [9, 3, 1])
    assert text == "4 5 3\n1\n3\n9\n"
    assert parse_group_dump(text) == (4, 5, [1, 3, 9])


@pytest.mark.parametrize("text", ["", "4 5 2\n1\n", "4 5 2\n3\n1\n", "4 5\n1\n"])
def test_group_dump_malformed(text):
    with pytest.raises(FormatError):
        parse_group_dump(text)

import json
import random
from fractions import Fraction

import pytest

from ptspectrum.errors import MatrixFileError
from ptspectrum.matrix import SquareMatrix, pt_well, random_pt_matrix
from ptspectrum.matrixfile import dump_matrix, load_family, parse_matrix
from ptspectrum.scalars import GaussianRational, I


def test_parse_mixed_syntax():
    M = parse_matrix('{"n": 2, "entries": [["1/2", 1.25], [[0, "-3/4"], -2]]}')
    assert M == SquareMatrix([[Fraction(1, 2), Fraction(5, 4)], [GaussianRational(0, Fraction(-3, 4)), -2]])
    assert M.exact


def test_bare_list_accepted():
    assert parse_matrix("[[1, 0], [0, 1]]") == SquareMatrix.identity(2)


def test_no_exact_promotion_gives_float():
    M = parse_matrix('{"entries": [[1.5, 0], [0, "2/3"]]}', promote=False)
    assert not M.exact
    assert M[0, 0] == 1.5 and M[1, 1] == pytest.approx(2 / 3)


def test_json_syntax_error_has_position():
    with pytest.raises(MatrixFileError, match=r"m.json:2:\d+"):
        parse_matrix('{"entries":\n [[1, 2], [3 4]]}', source="m.json")


@pytest.mark.parametrize(
    "text, where",
    [
        ('{"entries": [[1, 2], [3]]}', r"entries\[1\]"),
        ('{"entries": [[1, "x"], [3, 4]]}', r"entries\[0\]\[1\]"),
        ('{"entries": [[1, [1, 2, 3]], [3, 4]]}', r"entries\[0\]\[1\]"),
        ('{"n": 3, "entries": [[1, 2], [3, 4]]}', "n = 3"),
        ('{"entries": []}', "non-empty"),
        ('{"entries": [[true]]}', "boolean"),
        ('{"rows": [[1]]}', "entries"),
        ('{"entries": [[null]]}', r"entries\[0\]\[0\]"),
    ],
)
def test_malformed(text, where):
    with pytest.raises(MatrixFileError, match=where):
        parse_matrix(text)


def test_round_trip(rng):
    for n in range(1, 7):
        M = random_pt_matrix(n, rng)
        assert parse_matrix(dump_matrix(M)) == M
    F = pt_well(1.3)
    assert parse_matrix(dump_matrix(F), promote=False) == F


def test_family_file(tmp_path):
    path = tmp_path / "fam.json"
    path.write_text(json.dumps({"base": [[0, 1], [1, 0]], "slope": [[[0, 1], 0], [0, [0, -1]]]}))
    base, slope = load_family(path)
    assert slope == SquareMatrix.diag([I, -I])
    path.write_text(json.dumps({"base": [[0]]}))
    with pytest.raises(MatrixFileError):
        load_family(path)

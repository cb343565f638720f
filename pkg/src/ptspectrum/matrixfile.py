"""JSON matrix files.

Layout::

    {"n": 3, "entries": [["1/2", 1, 0], [1, 0, [0, "-3/4"]], ...]}

A scalar is a JSON number, a rational string ("p/q", integer or decimal)
or a two-element array ``[re, im]`` of those. ``n`` is optional. An affine
family file instead holds ``{"base": <matrix>, "slope": <matrix>}``.
"""

from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

from .errors import MatrixFileError
from .matrix import SquareMatrix
from .scalars import GaussianRational, format_rational, parse_rational

__all__ = ["parse_matrix", "load_matrix", "load_family", "dump_matrix", "matrix_to_json"]


class _Decimal(str):
    """Marks a JSON number that had a fraction or exponent part."""


def _loads(text: str, source: str):
    try:
        return json.loads(text, parse_float=_Decimal)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _real(x, where: str, promote: bool):
    if isinstance(x, bool):
        raise MatrixFileError(f"{where}: booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _Decimal):
        return Fraction(Decimal(x)) if promote else float(x)
    if isinstance(x, str):
        try:
            value = parse_rational(x)
        except ValueError as exc:
            raise MatrixFileError(f"{where}: {exc}") from None
        if not promote and "/" not in x and any(c in x for c in ".eE"):
            return float(x)
        return value
    raise MatrixFileError(f"{where}: expected a number or rational string, got {type(x).__name__}")


def _scalar(x, where: str, promote: bool):
    if isinstance(x, list):
        if len(x) != 2:
            raise MatrixFileError(f"{where}: complex entries are [re, im] pairs")
        re = _real(x[0], where + "[0]", promote)
        im = _real(x[1], where + "[1]", promote)
        if isinstance(re, float) or isinstance(im, float):
            return complex(float(re), float(im))
        return GaussianRational(re, im)
    v = _real(x, where, promote)
    return complex(v) if isinstance(v, float) else GaussianRational(v)


def _matrix_from_obj(obj, source: str, promote: bool) -> SquareMatrix:
    if isinstance(obj, list):
        obj = {"entries": obj}
    if not isinstance(obj, dict) or "entries" not in obj:
        raise MatrixFileError(f"{source}: expected an object with an 'entries' array")
    rows = obj["entries"]
    if not isinstance(rows, list) or not rows:
        raise MatrixFileError(f"{source}: 'entries' must be a non-empty array of rows")
    n = obj.get("n", len(rows))
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MatrixFileError(f"{source}: 'n' must be a positive integer")
    if len(rows) != n:
        raise MatrixFileError(f"{source}: 'entries' has {len(rows)} rows, n = {n}")
    grid = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixFileError(f"{source}: entries[{i}] must be an array of {n} scalars")
        grid.append([_scalar(x, f"{source}: entries[{i}][{j}]", promote) for j, x in enumerate(row)])
    return SquareMatrix(grid)


def parse_matrix(text: str, source: str = "<input>", promote: bool = True) -> SquareMatrix:
    """Parse a matrix file; decimals become exact rationals unless `promote` is False."""
    return _matrix_from_obj(_loads(text, source), source, promote)


def load_matrix(path, promote: bool = True) -> SquareMatrix:
    path = Path(path)
    return parse_matrix(path.read_text(encoding="utf-8"), str(path), promote)


def load_family(path, promote: bool = True) -> tuple[SquareMatrix, SquareMatrix]:
    path = Path(path)
    obj = _loads(path.read_text(encoding="utf-8"), str(path))
    if not isinstance(obj, dict) or "base" not in obj or "slope" not in obj:
        raise MatrixFileError(f"{path}: affine family files need 'base' and 'slope'")
    base = _matrix_from_obj(obj["base"], f"{path}: base", promote)
    slope = _matrix_from_obj(obj["slope"], f"{path}: slope", promote)
    if base.n != slope.n:
        raise MatrixFileError(f"{path}: base is {base.n}x{base.n}, slope is {slope.n}x{slope.n}")
    return base, slope


def _entry_json(z):
    if isinstance(z, GaussianRational):
        re = format_rational(z.re)
        return re if z.im == 0 else [re, format_rational(z.im)]
    z = complex(z)
    return z.real if z.imag == 0 else [z.real, z.imag]


def matrix_to_json(M: SquareMatrix) -> dict:
    return {"n": M.n, "entries": [[_entry_json(z) for z in row] for row in M.rows]}


def dump_matrix(M: SquareMatrix) -> str:
    return json.dumps(matrix_to_json(M), indent=1) + "\n"

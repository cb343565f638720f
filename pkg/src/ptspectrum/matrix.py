"""Dense square complex matrices, the parity exchange and PT-symmetric generators."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .scalars import GaussianRational, SignGuard, DEFAULT_GUARD, I, is_exact

__all__ = [
    "SquareMatrix",
    "ParityMatrix",
    "pt_transform",
    "check_pt_symmetry",
    "pt_well",
    "pt_well_n",
    "random_pt_matrix",
    "random_real_symmetric",
    "companion",
]


def _conj(z):
    if isinstance(z, GaussianRational):
        return z.conj()
    if isinstance(z, complex):
        return z.conjugate()
    return z


@dataclass(frozen=True)
class SquareMatrix:
    """Immutable n x n grid of scalars.

    Entries are :class:`GaussianRational` in exact mode or Python
    ``complex`` in float mode; plain ints/Fractions are promoted.
    """

    rows: tuple

    def __init__(self, rows: Iterable[Iterable]):
        grid = tuple(tuple(_promote(x) for x in row) for row in rows)
        n = len(grid)
        if n == 0:
            raise ValueError("matrix must have dimension >= 1")
        for k, row in enumerate(grid):
            if len(row) != n:
                raise ValueError(f"row {k} has {len(row)} entries, expected {n}")
        kinds = {isinstance(x, GaussianRational) for row in grid for x in row}
        if len(kinds) > 1:
            grid = tuple(tuple(complex(x) for x in row) for row in grid)
        object.__setattr__(self, "rows", grid)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def exact(self) -> bool:
        return isinstance(self.rows[0][0], GaussianRational)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def map(self, fn: Callable) -> SquareMatrix:
        return SquareMatrix([[fn(x) for x in row] for row in self.rows])

    def conj(self) -> SquareMatrix:
        return self.map(_conj)

    def to_float(self) -> SquareMatrix:
        return self.map(complex)

    def scaled(self, c) -> SquareMatrix:
        return self.map(lambda x: x * c)

    def shifted(self, c) -> SquareMatrix:
        """M + c*I."""
        n = self.n
        return SquareMatrix(
            [[self.rows[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
        )

    def __add__(self, other: SquareMatrix) -> SquareMatrix:
        _same_dim(self, other)
        return SquareMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: SquareMatrix) -> SquareMatrix:
        _same_dim(self, other)
        return SquareMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __matmul__(self, other: SquareMatrix) -> SquareMatrix:
        _same_dim(self, other)
        cols = list(zip(*other.rows))
        return SquareMatrix(
            [[_dot(r, c) for c in cols] for r in self.rows]
        )

    def trace(self):
        return _sum(self.rows[k][k] for k in range(self.n))

    @classmethod
    def identity(cls, n: int) -> SquareMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> SquareMatrix:
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> SquareMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)


def _promote(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, (float, complex)):
        return complex(x)
    raise TypeError(f"unsupported matrix entry {x!r}")


def _sum(items):
    total = 0
    for x in items:
        total = total + x
    return total


def _dot(r, c):
    return _sum(a * b for a, b in zip(r, c))


def _same_dim(a: SquareMatrix, b: SquareMatrix):
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")


@dataclass(frozen=True)
class ParityMatrix:
    """The exchange matrix: ones on the anti-diagonal."""

    n: int

    def entry(self, i: int, j: int) -> int:
        return 1 if j == self.n - 1 - i else 0

    def dense(self) -> SquareMatrix:
        return SquareMatrix([[self.entry(i, j) for j in range(self.n)] for i in range(self.n)])

    def conjugate_by(self, M: SquareMatrix) -> SquareMatrix:
        """P M P, i.e. M with both indices reversed."""
        return SquareMatrix([row[::-1] for row in M.rows[::-1]])


def pt_transform(M: SquareMatrix) -> SquareMatrix:
    """P * conj(M) * P."""
    return ParityMatrix(M.n).conjugate_by(M.conj())


def check_pt_symmetry(M: SquareMatrix, guard: SignGuard = DEFAULT_GUARD) -> bool:
    """True iff P conj(M) P == M (entrywise; float entries compared within `guard`)."""
    T = pt_transform(M)
    if M.exact:
        return T.rows == M.rows
    scale = max(abs(x) for row in M.rows for x in row)
    band = guard.band(scale)
    return all(abs(a - b) <= band for r, s in zip(T.rows, M.rows) for a, b in zip(r, s))


def pt_well(xi) -> SquareMatrix:
    """Three-site discretized PT-symmetric square well with potential strength `xi`."""
    v = I * xi if is_exact(xi) else 1j * xi
    return SquareMatrix([[v, 1, 0], [1, 0, 1], [0, 1, -v]])


def pt_well_n(n: int, xi) -> SquareMatrix:
    """n-site tridiagonal chain with +i*xi on the left half, -i*xi on the right half.

    The centre site of an odd chain carries no potential.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    v = I * xi if is_exact(xi) else 1j * xi
    zero = GaussianRational(0) if is_exact(xi) else 0j
    mid = Fraction(n + 1, 2)
    diag = []
    for k in range(1, n + 1):
        if k < mid:
            diag.append(v)
        elif k > mid:
            diag.append(-v)
        else:
            diag.append(zero)
    rows = [[zero] * n for _ in range(n)]
    for k in range(n):
        rows[k][k] = diag[k]
        if k + 1 < n:
            rows[k][k + 1] = 1
            rows[k + 1][k] = 1
    return SquareMatrix(rows)


def _random_rational(rng: random.Random, num: int, den: int) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_pt_matrix(n: int, rng: random.Random, num: int = 5, den: int = 4) -> SquareMatrix:
    """(A + P conj(A) P) / 2 for a random Gaussian-rational A; PT-symmetric by construction."""
    A = SquareMatrix(
        [
            [GaussianRational(_random_rational(rng, num, den), _random_rational(rng, num, den))
             for _ in range(n)]
            for _ in range(n)
        ]
    )
    return (A + pt_transform(A)).scaled(Fraction(1, 2))


def random_real_symmetric(n: int, rng: random.Random, num: int = 5, den: int = 4) -> SquareMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = _random_rational(rng, num, den)
    return SquareMatrix(rows)


def companion(coeffs: Sequence) -> SquareMatrix:
    """Companion matrix of the monic polynomial with coefficients h_0..h_N (low to high)."""
    N = len(coeffs) - 1
    if N < 1 or coeffs[-1] != 1:
        raise ValueError("companion() needs a monic polynomial of degree >= 1")
    rows = [[0] * N for _ in range(N)]
    for i in range(1, N):
        rows[i][i - 1] = 1
    for i in range(N):
        rows[i][N - 1] = -coeffs[i]
    return SquareMatrix(rows)

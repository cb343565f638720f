"""Newton power sums of a monic polynomial and the associated Hankel matrix."""

from __future__ import annotations

from dataclasses import dataclass

from .charpoly import RealPolynomial, derivative, poly_divmod

__all__ = [
    "NewtonSums",
    "HankelMatrix",
    "newton_sums_recursive",
    "newton_sums_series",
    "newton_sums",
    "build_hankel",
]


@dataclass(frozen=True)
class NewtonSums:
    """Power sums s_0..s_{2N-2} of the roots of a degree-N polynomial."""

    N: int
    s: tuple

    def __post_init__(self):
        if len(self.s) != 2 * self.N - 1:
            raise ValueError(f"expected {2 * self.N - 1} sums, got {len(self.s)}")
        if self.s[0] != self.N:
            raise ValueError("s_0 must equal N")

    def __getitem__(self, k):
        return self.s[k]

    def __len__(self):
        return len(self.s)


def _check_monic(p: RealPolynomial):
    if p.degree < 1:
        raise ValueError("Newton sums need a polynomial of degree >= 1")
    if not p.is_monic:
        raise ValueError("Newton sums need a monic polynomial")


def newton_sums_recursive(p: RealPolynomial) -> NewtonSums:
    """Newton's identities, run up to s_{2N-2}."""
    _check_monic(p)
    N = p.degree
    h = p.coeffs
    # a[j] is the coefficient of lam^(N-j)
    a = [h[N - j] for j in range(N + 1)]
    s = [N]
    for k in range(1, 2 * N - 1):
        acc = -k * a[k] if k <= N else 0
        for j in range(1, min(k - 1, N) + 1):
            acc = acc - a[j] * s[k - j]
        s.append(acc)
    return NewtonSums(N, tuple(s))


def newton_sums_series(p: RealPolynomial) -> NewtonSums:
    """Read the sums off the Laurent expansion p'/p = s_0/lam + s_1/lam^2 + ...

    Computed as the polynomial quotient of lam^(2N-1) * p' by p, whose
    coefficients are s_{2N-2}, ..., s_0 from low to high degree.
    """
    _check_monic(p)
    N = p.degree
    shifted = [0] * (2 * N - 1) + list(derivative(p).coeffs)
    q, _ = poly_divmod(shifted, p.coeffs)
    q = list(q) + [0] * (2 * N - 1 - len(q))
    return NewtonSums(N, tuple(q[::-1]))


newton_sums = newton_sums_recursive


@dataclass(frozen=True)
class HankelMatrix:
    """Symmetric N x N matrix with entry (i, j) = s_{i+j}."""

    rows: tuple

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def leading_block(self, k: int) -> list:
        return [list(r[:k]) for r in self.rows[:k]]


def build_hankel(s: NewtonSums) -> HankelMatrix:
    N = s.N
    return HankelMatrix(tuple(tuple(s[i + j] for j in range(N)) for i in range(N)))

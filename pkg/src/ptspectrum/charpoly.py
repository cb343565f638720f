"""Characteristic polynomial (Faddeev-LeVerrier) and exact polynomial helpers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotRealCharPoly
from .matrix import SquareMatrix
from .scalars import DEFAULT_GUARD, GaussianRational, SignGuard, format_rational

__all__ = [
    "RealPolynomial",
    "char_poly",
    "derivative",
    "squarefree_flag",
    "poly_divmod",
    "poly_gcd",
]


@dataclass(frozen=True)
class RealPolynomial:
    """Real polynomial sum(h_n * lam**n); ``coeffs[n]`` is h_n.

    Trailing zero coefficients are stripped, so ``degree`` is exact. The zero
    polynomial has ``coeffs == ()`` and degree -1.
    """

    coeffs: tuple

    def __init__(self, coeffs: Sequence):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def exact(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_float(self) -> RealPolynomial:
        return RealPolynomial([float(c) for c in self.coeffs])

    def shift(self, c) -> RealPolynomial:
        """The polynomial lam -> p(lam - c), by Horner composition."""
        out: list = []
        for a in reversed(self.coeffs):
            # out = out * (lam - c) + a
            nxt = [0] * (len(out) + 1)
            for k, b in enumerate(out):
                nxt[k + 1] += b
                nxt[k] -= c * b
            nxt[0] += a
            out = nxt
        return RealPolynomial(out)

    def __str__(self):
        out = ""
        for n in range(self.degree, -1, -1):
            h = self.coeffs[n]
            if h == 0:
                continue
            neg = h < 0
            mag = -h if neg else h
            txt = format_rational(mag) if isinstance(mag, (int, Fraction)) else repr(mag)
            mono = "" if n == 0 else ("x" if n == 1 else f"x^{n}")
            term = txt if n == 0 else (mono if mag == 1 else f"{txt}*{mono}")
            if not out:
                out = f"-{term}" if neg else term
            else:
                out += f" - {term}" if neg else f" + {term}"
        return out or "0"


def _faddeev_leverrier(M: SquareMatrix) -> list:
    """Coefficients c_0..c_N of det(lam*I - M), low to high."""
    N = M.n
    A = M.rows
    c = [None] * (N + 1)
    c[N] = 1
    # B_k = A B_{k-1} + c_{N-k+1} I, with B_0 = 0; c_{N-k} = -tr(A B_k) / k
    B = [[0] * N for _ in range(N)]
    for k in range(1, N + 1):
        AB = [[_dot_col(A[i], B, j) for j in range(N)] for i in range(N)]
        for i in range(N):
            AB[i][i] = AB[i][i] + c[N - k + 1]
        B = AB
        tr = 0
        for i in range(N):
            tr = tr + _dot_col(A[i], B, i)
        c[N - k] = -tr * Fraction(1, k)
    return c


def _dot_col(row, B, j):
    acc = 0
    for a, brow in zip(row, B):
        b = brow[j]
        if b == 0 or a == 0:
            continue
        acc = acc + a * b
    return acc


def char_poly(M: SquareMatrix, guard: SignGuard = DEFAULT_GUARD) -> RealPolynomial:
    """Monic det(lam*I - M), provided every coefficient is real.

    Raises NotRealCharPoly(index) for the first coefficient h_index with a
    nonzero imaginary part (exactly, or beyond `guard` in float mode).
    """
    c = _faddeev_leverrier(M)
    if M.exact:
        out = []
        for k, h in enumerate(c):
            h = GaussianRational.coerce(h)
            if h.im != 0:
                raise NotRealCharPoly(k, h)
            out.append(h.re)
        return RealPolynomial(out)
    cc = [complex(h) for h in c]
    scale = max(abs(h) for h in cc)
    band = guard.band(scale)
    for k, h in enumerate(cc):
        if abs(h.imag) > band:
            raise NotRealCharPoly(k, h)
    out = [h.real for h in cc]
    out[-1] = 1.0
    return RealPolynomial(out)


def _field(x):
    return Fraction(x) if isinstance(x, int) else x


def poly_divmod(num: Sequence, den: Sequence):
    """Exact quotient and remainder of coefficient lists (low to high)."""
    num = [_field(x) for x in RealPolynomial(num).coeffs]
    den = [_field(x) for x in RealPolynomial(den).coeffs]
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    dq = len(num) - len(den)
    if dq < 0:
        return [], num
    lead = den[-1]
    q = [0] * (dq + 1)
    r = num[:]
    for k in range(dq, -1, -1):
        coef = r[k + len(den) - 1]
        if coef != 0:
            coef = coef / lead
            q[k] = coef
            for j, d in enumerate(den):
                r[k + j] = r[k + j] - coef * d
    return list(RealPolynomial(q).coeffs), list(RealPolynomial(r[: len(den) - 1]).coeffs)


def poly_gcd(a: Sequence, b: Sequence) -> RealPolynomial:
    """Monic gcd of two exact polynomials by the Euclidean algorithm."""
    a = [Fraction(x) for x in RealPolynomial(a).coeffs]
    b = [Fraction(x) for x in RealPolynomial(b).coeffs]
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return RealPolynomial([])
    lead = a[-1]
    return RealPolynomial([x / lead for x in a])


def derivative(p: RealPolynomial) -> RealPolynomial:
    return RealPolynomial([n * h for n, h in enumerate(p.coeffs)][1:])


def squarefree_flag(p: RealPolynomial) -> tuple[bool, int]:
    """(is squarefree, number of distinct roots), via gcd(p, p')."""
    if not p.exact:
        raise TypeError("squarefree_flag requires exact coefficients")
    g = poly_gcd(p.coeffs, derivative(p).coeffs)
    return g.degree == 0, p.degree - g.degree

"""Jacobi's sign rule on the Hankel matrix and the resulting qualitative spectrum."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .charpoly import RealPolynomial, char_poly, squarefree_flag
from .errors import NearDegenerate, VanishingMinor
from .matrix import SquareMatrix, check_pt_symmetry
from .newton import HankelMatrix, NewtonSums, build_hankel, newton_sums_recursive
from .scalars import DEFAULT_GUARD, SignGuard, sign

__all__ = [
    "SignSequence",
    "ImaginaryInertia",
    "RealInertia",
    "QualitativeSpectrum",
    "leading_principal_minors",
    "minor_scales",
    "jacobi_inertia",
    "real_inertia_from_hankel",
    "qualitative_spectrum",
    "congruence_signature",
    "matrix_rank",
    "determinant",
]


@dataclass(frozen=True)
class SignSequence:
    """``+`` followed by the signs of d_1..d_N."""

    signs: tuple

    def __post_init__(self):
        if not self.signs or self.signs[0] != 1:
            raise ValueError("sign sequence must start with +1")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("sign sequence entries must be +1 or -1")

    @property
    def constancies(self) -> int:
        return sum(a == b for a, b in zip(self.signs, self.signs[1:]))

    @property
    def alterations(self) -> int:
        return sum(a != b for a, b in zip(self.signs, self.signs[1:]))

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)


@dataclass(frozen=True)
class ImaginaryInertia:
    """Counts of eigenvalues with negative, zero and positive real part."""

    nu: int
    delta: int
    pi: int

    @property
    def N(self) -> int:
        return self.nu + self.delta + self.pi

    def as_tuple(self):
        return (self.nu, self.delta, self.pi)


@dataclass(frozen=True)
class RealInertia:
    """Counts of eigenvalues with negative, zero and positive imaginary part."""

    nu: int
    delta: int
    pi: int

    def __post_init__(self):
        if self.nu != self.pi:
            raise ValueError("complex eigenvalues of a real polynomial pair up: nu must equal pi")
        if min(self.nu, self.delta, self.pi) < 0:
            raise ValueError("inertia counts are non-negative")

    @property
    def N(self) -> int:
        return self.nu + self.delta + self.pi

    def as_tuple(self):
        return (self.nu, self.delta, self.pi)

    def __str__(self):
        return f"{{{self.nu},{self.delta},{self.pi}}}"


@dataclass(frozen=True)
class QualitativeSpectrum:
    dimension: int
    real_inertia: RealInertia
    hankel_inertia: ImaginaryInertia
    minors: tuple
    sign_sequence: SignSequence
    polynomial: RealPolynomial
    newton_sums: NewtonSums
    exact: bool = True
    warnings: tuple = field(default=())

    @property
    def broken(self) -> bool:
        return self.real_inertia.nu > 0

    @property
    def real_count(self) -> int:
        return self.real_inertia.delta

    @property
    def complex_pair_count(self) -> int:
        return self.real_inertia.nu


def _bareiss(a: list, pivoting: bool):
    """In-place fraction-free elimination.

    Without pivoting, returns the leading principal minors computed so far
    and stops at the first zero pivot. With pivoting, returns
    ``(det, rank)`` of the full matrix.
    """
    n = len(a)
    prev = 1
    minors = []
    det_sign = 1
    rank = 0
    for k in range(n):
        if a[k][k] == 0:
            if not pivoting:
                minors.append(a[k][k])
                return minors
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                # column is zero below the diagonal: singular; continue for rank
                col = next(
                    (j for j in range(k + 1, n) if any(a[i][j] != 0 for i in range(k, n))),
                    None,
                )
                if col is None:
                    return 0, rank
                for row in a:
                    row[k], row[col] = row[col], row[k]
                det_sign = -det_sign
                swap = next(i for i in range(k, n) if a[i][k] != 0)
            if swap != k:
                a[k], a[swap] = a[swap], a[k]
                det_sign = -det_sign
        pivot = a[k][k]
        rank += 1
        minors.append(pivot)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = 0
        prev = pivot
    if pivoting:
        det = det_sign * minors[-1] if rank == n else 0
        return det, rank
    return minors


def _field_copy(rows) -> list:
    return [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]


def determinant(rows: Sequence[Sequence]):
    """Determinant by fraction-free elimination with row pivoting."""
    a = _field_copy(rows)
    if not a:
        return 1
    det, _ = _bareiss(a, pivoting=True)
    return det


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Exact rank by fraction-free elimination with pivoting."""
    a = _field_copy(rows)
    if not a:
        return 0
    _, r = _bareiss(a, pivoting=True)
    return r


def leading_principal_minors(H: HankelMatrix) -> tuple:
    """d_1..d_N, the determinants of the top-left k x k blocks.

    One Bareiss pass yields every minor up to the first zero; any minors
    beyond a zero are computed separately by pivoted elimination.
    """
    n = H.n
    minors = _bareiss(_field_copy(H.rows), pivoting=False)
    for k in range(len(minors) + 1, n + 1):
        minors.append(determinant(H.leading_block(k)))
    return tuple(minors)


def minor_scales(H: HankelMatrix) -> tuple:
    """Hadamard bounds |d_k| <= prod of row norms of the k x k block, used as guard scales."""
    out = []
    for k in range(1, H.n + 1):
        prod = 1.0
        for i in range(k):
            prod *= math.sqrt(sum(float(H[i, j]) ** 2 for j in range(k)))
        out.append(prod)
    return tuple(out)


def jacobi_inertia(
    minors: Sequence,
    scales: Sequence[float] | None = None,
    guard: SignGuard = DEFAULT_GUARD,
) -> tuple[ImaginaryInertia, SignSequence]:
    """Inertia of a nonsingular symmetric matrix from its leading minors.

    Constancies in the sequence ``+, sign(d_1), ..., sign(d_N)`` count
    positive eigenvalues, alterations count negative ones. Exact minors that
    vanish raise VanishingMinor; float minors inside the guard band raise
    NearDegenerate.
    """
    signs = [1]
    for k, d in enumerate(minors, start=1):
        if isinstance(d, (int, Fraction)):
            s = sign(d)
            if s == 0:
                raise VanishingMinor(k)
        else:
            scale = scales[k - 1] if scales is not None else 1.0
            s = guard.sign(float(d), scale)
            if s == 0:
                raise NearDegenerate(k, float(d))
        signs.append(s)
    seq = SignSequence(tuple(signs))
    return ImaginaryInertia(seq.alterations, 0, seq.constancies), seq


def real_inertia_from_hankel(h_inertia: ImaginaryInertia) -> RealInertia:
    if h_inertia.delta != 0:
        raise ValueError("Hankel inertia must have delta = 0")
    nu = h_inertia.nu
    N = h_inertia.nu + h_inertia.pi
    return RealInertia(nu, N - 2 * nu, nu)


def qualitative_spectrum(
    M: SquareMatrix,
    guard: SignGuard = DEFAULT_GUARD,
    newton: Callable[[RealPolynomial], NewtonSums] = newton_sums_recursive,
) -> QualitativeSpectrum:
    """Count real eigenvalues and complex-conjugate pairs of M without diagonalizing it.

    Parameters
    ----------
    M : SquareMatrix
        Any square matrix whose characteristic polynomial is real; PT-symmetry
        is checked only to attach a warning.
    guard : SignGuard
        Float-mode sign guard (ignored for exact matrices).
    newton : callable
        Newton-sum routine.

    Raises
    ------
    NotRealCharPoly, VanishingMinor, NearDegenerate
    """
    warnings = []
    if not check_pt_symmetry(M, guard):
        warnings.append("matrix is not PT-symmetric; proceeding because its characteristic polynomial is real")
    p = char_poly(M, guard)
    s = newton(p)
    H = build_hankel(s)
    d = leading_principal_minors(H)
    scales = None if M.exact else minor_scales(H)
    if not M.exact:
        warnings.append("float arithmetic: signs decided outside a guard band only")
    try:
        h_in, seq = jacobi_inertia(d, scales, guard)
    except VanishingMinor as exc:
        squarefree, distinct = squarefree_flag(p)
        raise VanishingMinor(exc.index, not squarefree, distinct) from None
    return QualitativeSpectrum(
        dimension=M.n,
        real_inertia=real_inertia_from_hankel(h_in),
        hankel_inertia=h_in,
        minors=d,
        sign_sequence=seq,
        polynomial=p,
        newton_sums=s,
        exact=M.exact,
        warnings=tuple(warnings),
    )


def congruence_signature(rows: Sequence[Sequence]) -> tuple[int, int, int]:
    """(negative, zero, positive) eigenvalue counts of a symmetric rational matrix.

    Diagonalizes by symmetric row/column operations (a congruence), so by
    Sylvester's law the signs of the resulting diagonal give the inertia.
    """
    a = _field_copy(rows)
    n = len(a)
    neg = pos = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in active for j in active if i < j and a[i][j] != 0), None
            )
            if pair is None:
                break
            i, j = pair
            # row_i += row_j, col_i += col_j  =>  a_ii becomes 2*a_ij != 0
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = a[i][piv] / p
            if f == 0:
                continue
            for k in active:
                a[i][k] -= f * a[piv][k]
            a[i][piv] = 0
        for i in active:
            a[piv][i] = 0
    return neg, n - neg - pos, pos

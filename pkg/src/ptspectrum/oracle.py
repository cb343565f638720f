"""Numerical cross-check: Aberth-Ehrlich root finding and root classification.

This path shares nothing with the exact pipeline beyond the characteristic
polynomial, so agreement between the two is evidence rather than tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .charpoly import RealPolynomial, char_poly
from .errors import ClassificationAmbiguous, MethodInapplicable, NoConvergence
from .inertia import qualitative_spectrum
from .matrix import SquareMatrix
from .scalars import DEFAULT_GUARD, SignGuard

__all__ = [
    "ClassifiedRoots",
    "CrossValidation",
    "find_roots",
    "classify_roots",
    "cross_validate",
]

RESIDUAL_TOL = 1e-10
MAX_ITER = 1000


def _horner(coeffs_high: np.ndarray, z: np.ndarray):
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    for c in coeffs_high:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _residual_scale(abs_coeffs_high: np.ndarray, z: np.ndarray) -> np.ndarray:
    r = np.maximum(np.abs(z), 1.0)
    s = np.zeros_like(r)
    for c in abs_coeffs_high:
        s = s * r + c
    return s


def find_roots(p: RealPolynomial, max_iter: int = MAX_ITER) -> np.ndarray:
    """All N complex roots of `p` by Aberth-Ehrlich simultaneous iteration.

    Each returned root satisfies |p(r)| <= 1e-10 * sum_n |h_n| max(1, |r|)^n.
    Raises NoConvergence otherwise.
    """
    N = p.degree
    if N < 1:
        raise ValueError("degree must be >= 1")
    a = np.array([complex(float(c)) for c in reversed(p.coeffs)])
    a = a / a[0]
    if N == 1:
        return np.array([-a[1]])
    absa = np.abs(a)
    # root-size estimate; guesses on a rotated circle avoid real-axis symmetry
    radius = max(float(np.max(absa[1:] ** (1.0 / np.arange(1, N + 1)))), 1e-2)
    k = np.arange(N)
    z = radius * np.exp(1j * (2 * math.pi * k / N + 0.4))
    for it in range(1, max_iter + 1):
        pz, dpz = _horner(a, z)
        scale = _residual_scale(absa, z)
        if np.all(np.abs(pz) <= 4 * np.finfo(float).eps * scale):
            break
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(pz == 0, 0, pz / dpz)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            s = inv.sum(axis=1)
            w = ratio / (1 - ratio * s)
        w = np.where(np.isfinite(w), w, 0)
        z = z - w
        if np.max(np.abs(w) / np.maximum(1.0, np.abs(z))) < 1e-16:
            break
    pz, _ = _horner(a, z)
    bound = RESIDUAL_TOL * _residual_scale(absa, z)
    if not np.all(np.abs(pz) <= bound):
        raise NoConvergence(max_iter)
    # stable order: by real part, then imaginary part
    order = np.lexsort((z.imag, z.real))
    return z[order]


@dataclass(frozen=True)
class ClassifiedRoots:
    roots: tuple
    real_count: int
    complex_pair_count: int
    imag_threshold: float
    borderline: bool = False

    @property
    def real_inertia(self) -> tuple[int, int, int]:
        m = self.complex_pair_count
        return (m, self.real_count, m)


def classify_roots(roots, imag_threshold: float = 1e-8, pair_tol: float = 1e-6) -> ClassifiedRoots:
    """Split roots into real ones and conjugate pairs.

    A root is real iff |Im r| <= imag_threshold * max(1, |r|). Non-real
    roots are paired greedily with their nearest conjugate; an unpaired
    root raises ClassificationAmbiguous. ``borderline`` is set when some
    root lies within three decades above the threshold.
    """
    roots = [complex(r) for r in roots]
    real, upper, lower = [], [], []
    borderline = False
    for r in roots:
        rel = abs(r.imag) / max(1.0, abs(r))
        if rel <= imag_threshold:
            real.append(r)
            continue
        if rel <= 1e3 * imag_threshold:
            borderline = True
        (upper if r.imag > 0 else lower).append(r)
    if len(upper) != len(lower):
        raise ClassificationAmbiguous(f"{len(upper)} roots above the axis, {len(lower)} below")
    remaining = list(lower)
    for r in upper:
        j = min(range(len(remaining)), key=lambda k: abs(remaining[k] - r.conjugate()))
        if abs(remaining[j] - r.conjugate()) > pair_tol * max(1.0, abs(r)):
            raise ClassificationAmbiguous(f"root {r} has no conjugate partner")
        remaining.pop(j)
    return ClassifiedRoots(tuple(roots), len(real), len(upper), imag_threshold, borderline)


@dataclass(frozen=True)
class CrossValidation:
    status: str  # "match" | "mismatch" | "inconclusive"
    pipeline: tuple | None
    oracle: tuple | None
    roots: tuple = ()
    reason: str = ""


def cross_validate(
    M: SquareMatrix,
    imag_threshold: float = 1e-8,
    guard: SignGuard = DEFAULT_GUARD,
) -> CrossValidation:
    """Compare the exact qualitative spectrum with numerically classified eigenvalues.

    Pipeline failures (vanishing minor, near-degeneracy) and oracle
    failures make the result "inconclusive"; so does a disagreement when
    the oracle saw a borderline root. A non-real characteristic polynomial
    propagates as NotRealCharPoly.
    """
    p = char_poly(M, guard)
    pipeline = None
    reason = ""
    try:
        pipeline = qualitative_spectrum(M, guard).real_inertia.as_tuple()
    except MethodInapplicable as exc:
        reason = f"pipeline: {exc}"
    try:
        classified = classify_roots(find_roots(p), imag_threshold)
    except (NoConvergence, ClassificationAmbiguous) as exc:
        reason = "; ".join(filter(None, [reason, f"oracle: {exc}"]))
        return CrossValidation("inconclusive", pipeline, None, (), reason)
    oracle = classified.real_inertia
    roots = classified.roots
    if pipeline is None:
        return CrossValidation("inconclusive", None, oracle, roots, reason)
    if pipeline == oracle:
        return CrossValidation("match", pipeline, oracle, roots)
    if classified.borderline:
        return CrossValidation("inconclusive", pipeline, oracle, roots, "oracle root near threshold")
    return CrossValidation("mismatch", pipeline, oracle, roots, "classifications differ")

"""One-parameter family sweeps with exact bisection of symmetry-breaking thresholds."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import MethodInapplicable
from .matrix import SquareMatrix, pt_well, pt_well_n
from .inertia import qualitative_spectrum
from .scalars import DEFAULT_GUARD, SignGuard, to_exact

__all__ = [
    "FamilySpec",
    "PointRecord",
    "Bracket",
    "SweepReport",
    "GENERATORS",
    "classify_point",
    "run_sweep",
    "refine_threshold",
]

GENERATORS = ("pt-well", "pt-well-n", "affine")


@dataclass(frozen=True)
class FamilySpec:
    """A matrix family M(xi) and a rational grid start, start+step, ..., <= stop.

    ``affine`` families are ``base + xi * slope``.
    """

    generator: str
    start: Fraction
    stop: Fraction
    step: Fraction
    dim: int | None = None
    base: SquareMatrix | None = None
    slope: SquareMatrix | None = None
    arith: str = "exact"
    guard: SignGuard = DEFAULT_GUARD

    def __post_init__(self):
        for name in ("start", "stop", "step"):
            object.__setattr__(self, name, to_exact(getattr(self, name)))
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}")
        if self.step <= 0:
            raise ValueError("step must be positive")
        if self.start > self.stop:
            raise ValueError("start must not exceed stop")
        if self.generator == "pt-well-n" and (self.dim is None or self.dim < 1):
            raise ValueError("pt-well-n needs dim >= 1")
        if self.generator == "affine":
            if self.base is None or self.slope is None:
                raise ValueError("affine family needs base and slope matrices")
            if self.base.n != self.slope.n:
                raise ValueError("base and slope dimensions differ")
        if self.arith not in ("exact", "float"):
            raise ValueError("arith must be 'exact' or 'float'")

    def grid(self) -> list[Fraction]:
        count = (self.stop - self.start) // self.step
        return [self.start + k * self.step for k in range(int(count) + 1)]

    def matrix(self, xi: Fraction) -> SquareMatrix:
        x = float(xi) if self.arith == "float" else xi
        if self.generator == "pt-well":
            M = pt_well(x)
        elif self.generator == "pt-well-n":
            M = pt_well_n(self.dim, x)
        else:
            M = self.base + self.slope.scaled(xi)
        if self.arith == "float" and M.exact:
            M = M.to_float()
        return M


@dataclass(frozen=True)
class PointRecord:
    xi: Fraction
    inertia: tuple | None
    status: str = "ok"
    detail: str = ""

    @property
    def key(self):
        return self.inertia if self.status == "ok" else self.status

    @property
    def broken(self) -> bool | None:
        return None if self.inertia is None else self.inertia[0] > 0


@dataclass(frozen=True)
class Bracket:
    lo: Fraction
    hi: Fraction
    left: object
    right: object
    status: str = "unrefined"  # unrefined | refined | bisection-hit-degenerate | endpoint-error
    steps: int = 0

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


@dataclass(frozen=True)
class SweepReport:
    spec: FamilySpec
    records: tuple
    brackets: tuple = field(default=())


def classify_point(spec: FamilySpec, xi: Fraction) -> PointRecord:
    try:
        q = qualitative_spectrum(spec.matrix(xi), spec.guard)
    except MethodInapplicable as exc:
        return PointRecord(xi, None, exc.tag, str(exc))
    return PointRecord(xi, q.real_inertia.as_tuple())


def _classify_star(args):
    return classify_point(*args)


def refine_threshold(spec: FamilySpec, bracket: Bracket, width) -> Bracket:
    """Bisect `bracket` exactly until its width is <= `width`.

    Each midpoint replaces the endpoint whose classification it shares, so
    the final endpoints keep the two original classifications. A midpoint
    that is itself degenerate, or matches neither side, stops the search
    and the current interval is returned with status
    ``bisection-hit-degenerate``.
    """
    width = Fraction(width) if isinstance(width, float) else to_exact(width)
    if width <= 0:
        raise ValueError("refinement width must be positive")
    lo, hi = bracket.lo, bracket.hi
    left = classify_point(spec, lo)
    right = classify_point(spec, hi)
    if left.status != "ok" or right.status != "ok" or left.key == right.key:
        return Bracket(lo, hi, left.key, right.key, "endpoint-error")
    steps = 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        m = classify_point(spec, mid)
        steps += 1
        if m.key == left.key:
            lo = mid
        elif m.key == right.key:
            hi = mid
        else:
            return Bracket(lo, hi, left.key, right.key, "bisection-hit-degenerate", steps)
    return Bracket(lo, hi, left.key, right.key, "refined", steps)


def run_sweep(spec: FamilySpec, refine_width=None, workers: int | None = None) -> SweepReport:
    """Classify every grid point, then bracket (and optionally refine) each change.

    Per-point failures are recorded inline. With ``workers > 1`` the grid is
    evaluated in a process pool; results are merged in grid order, so the
    report does not depend on scheduling.
    """
    grid = spec.grid()
    if workers and workers > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_classify_star, [(spec, x) for x in grid]))
    else:
        records = [classify_point(spec, x) for x in grid]
    brackets = []
    for a, b in zip(records, records[1:]):
        if a.key == b.key:
            continue
        br = Bracket(a.xi, b.xi, a.key, b.key)
        if refine_width is not None:
            if a.status == "ok" and b.status == "ok":
                br = refine_threshold(spec, br, refine_width)
            else:
                br = Bracket(a.xi, b.xi, a.key, b.key, "endpoint-error")
        brackets.append(br)
    return SweepReport(spec, tuple(records), tuple(brackets))

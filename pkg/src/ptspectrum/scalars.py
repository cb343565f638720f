"""Exact rational / Gaussian-rational scalars and a guarded float sign.

Exact reals are plain :class:`fractions.Fraction` values, which are kept
in lowest terms with a positive denominator, so equality is structural.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Fraction",
    "GaussianRational",
    "SignGuard",
    "DEFAULT_GUARD",
    "I",
    "sign",
    "guarded_sign",
    "to_exact",
    "parse_rational",
    "format_rational",
    "is_exact",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_DECIMAL_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @classmethod
    def coerce(cls, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        return cls(_frac(x))

    def conj(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if b == 0 and d == 0:
                return GaussianRational(a * c)
            return GaussianRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            n = other.abs2()
            if n == 0:
                raise ZeroDivisionError("division by zero")
            return self * other.conj() / n
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) / self
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return f"{format_rational(self.im)}i"
        op = "-" if self.im < 0 else "+"
        return f"{format_rational(self.re)}{op}{format_rational(abs(self.im))}i"


I = GaussianRational(0, 1)


@dataclass(frozen=True)
class SignGuard:
    """Absolute/relative band inside which a float sign is reported as 0."""

    eps_abs: float = 1e-12
    eps_rel: float = 1e-9

    def band(self, scale: float) -> float:
        return self.eps_abs + self.eps_rel * scale

    def sign(self, x: float, scale: float = 1.0) -> int:
        if scale < 0:
            raise ValueError("scale must be non-negative")
        if abs(x) <= self.band(scale):
            return 0
        return 1 if x > 0 else -1


DEFAULT_GUARD = SignGuard()


def sign(x) -> int:
    """Exact sign of a rational: -1, 0 or +1."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def guarded_sign(x: float, scale: float = 1.0, guard: SignGuard = DEFAULT_GUARD) -> int:
    """Sign of a float, or 0 ("indeterminate") within ``guard.band(scale)``."""
    return guard.sign(float(x), scale)


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, GaussianRational))


def to_exact(x) -> Fraction:
    """Convert int, Fraction, Decimal or a literal string to a Fraction.

    Floats are refused: converting them would bake binary rounding error
    into an "exact" value.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Decimal):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} exactly")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer or a decimal literal exactly.

    >>> parse_rational("-6/10")
    Fraction(-3, 5)
    >>> parse_rational("1.25")
    Fraction(5, 4)
    """
    s = text.strip().replace("−", "-")
    if _RATIONAL_RE.match(s):
        try:
            return Fraction(s)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {text!r}") from None
    if _DECIMAL_RE.match(s):
        return Fraction(Decimal(s))
    raise ValueError(f"not a rational literal: {text!r}")


def format_rational(x: Fraction) -> str:
    """Canonical "p/q" text; integers are written without "/1"."""
    x = _frac(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"

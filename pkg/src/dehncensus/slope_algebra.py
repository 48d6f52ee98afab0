"""Exact arithmetic on slopes of a boundary torus.

A slope is an unoriented isotopy class of essential simple closed curve on
a torus, recorded as a primitive integer vector (p, q) in a fixed homology
basis and taken modulo overall sign.  The canonical representative has
q > 0, or q == 0 and p > 0, so slopes are totally ordered and hashable.
All arithmetic is exact over Python's arbitrary-precision integers.
"""

import math
import re
from dataclasses import dataclass

__all__ = [
    "Slope",
    "BasisChange",
    "ZeroVector",
    "NotPrimitive",
    "NotUnimodular",
    "canonical_slope",
    "distance",
    "is_integral",
    "change_basis",
    "format_slope",
    "parse_slope",
]


class ZeroVector(ValueError):
    """The zero vector does not determine a slope."""


class NotPrimitive(ValueError):
    """The coordinates share a common factor, so they are not a slope."""


class NotUnimodular(ValueError):
    """A basis change must have determinant +1 or -1."""


@dataclass(frozen=True, order=True)
class Slope:
    """A primitive (p, q) with the canonical sign convention.

    Construction is strict: the pair must already be primitive and
    sign-canonical.  Use :func:`canonical_slope` to normalize raw input.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p == 0 and self.q == 0:
            raise ZeroVector("(0, 0) does not determine a slope")
        if math.gcd(abs(self.p), abs(self.q)) != 1:
            raise NotPrimitive(f"({self.p}, {self.q}) is not primitive")
        if self.q < 0 or (self.q == 0 and self.p < 0):
            raise ValueError(
                f"({self.p}, {self.q}) is not sign-canonical; use canonical_slope()"
            )

    def __str__(self):
        return f"({self.p},{self.q})"


def canonical_slope(p: int, q: int) -> Slope:
    """Canonical representative of the slope through (p, q).

    Raises ZeroVector on (0, 0) and NotPrimitive when gcd(|p|, |q|) != 1.
    The gcd is never divided out: a non-primitive pair is an input error,
    not a slope in disguise.  Idempotent on canonical input.
    """
    if p == 0 and q == 0:
        raise ZeroVector("(0, 0) does not determine a slope")
    if math.gcd(abs(p), abs(q)) != 1:
        raise NotPrimitive(f"({p}, {q}) is not primitive")
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return Slope(p, q)


def distance(a: Slope, b: Slope) -> int:
    """Geometric intersection number |a.p * b.q - b.p * a.q| of two slopes."""
    return abs(a.p * b.q - b.p * a.q)


def is_integral(s: Slope, meridian: Slope) -> bool:
    """True when s meets the meridian exactly once.

    With the standard knot-exterior basis and meridian (1, 0) this is
    |q| == 1.  The meridian itself is not integral (distance 0).
    """
    return distance(s, meridian) == 1


@dataclass(frozen=True)
class BasisChange:
    """Unimodular 2x2 integer matrix [[a, b], [c, d]] acting on slope coordinates."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if abs(self.a * self.d - self.b * self.c) != 1:
            raise NotUnimodular(
                f"[[{self.a},{self.b}],[{self.c},{self.d}]] has determinant "
                f"{self.a * self.d - self.b * self.c}"
            )

    @classmethod
    def identity(cls) -> "BasisChange":
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply(self, p: int, q: int) -> tuple[int, int]:
        """Image of the column vector (p, q)."""
        return (self.a * p + self.b * q, self.c * p + self.d * q)

    def inverse(self) -> "BasisChange":
        s = self.det  # +-1, so 1/det == det
        return BasisChange(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def __matmul__(self, other: "BasisChange") -> "BasisChange":
        """Matrix product; (self @ other).apply == self.apply after other.apply."""
        return BasisChange(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


def change_basis(s: Slope, u: BasisChange) -> Slope:
    """Slope coordinates after the basis change u.

    Unimodularity preserves primitivity, and intersection numbers of slope
    pairs are invariant.
    """
    return canonical_slope(*u.apply(s.p, s.q))


def format_slope(s: Slope) -> str:
    """Serialize as "(p,q)" with the canonical sign, e.g. "(-2,1)"."""
    return str(s)


_SLOPE_RE = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")


def parse_slope(text: str) -> Slope:
    """Inverse of format_slope; also accepts non-canonical signs."""
    m = _SLOPE_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a slope literal: {text!r}")
    return canonical_slope(int(m.group(1)), int(m.group(2)))

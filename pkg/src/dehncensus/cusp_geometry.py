"""Slope lengths on a cusp horotorus and enumeration of short slopes.

A cusp cross-section is a flat torus whose lattice is spanned by two
complex translations (m, l).  The geodesic representative of the slope
(p, q) has length |p*m + q*l|, and by the 6-theorem only slopes of length
at most 6 can be exceptional, so listing all short slopes is the workhorse
reduction of a filling census.

Translations are ingested data here; computing them from a hyperbolic
structure is outside this library's trust boundary.
"""

import math
from dataclasses import dataclass

from .slope_algebra import Slope, canonical_slope

__all__ = [
    "CuspTranslations",
    "DegenerateLattice",
    "LENGTH_TOLERANCE",
    "slope_length",
    "cusp_area",
    "enumerate_short_slopes",
    "cyclic_cover_translations",
]

# Comparison tolerance at the length bound.  Slopes within this of the
# bound are included: for the 6-theorem an extra slope is conservative,
# a missing one is not.
LENGTH_TOLERANCE = 1e-9


class DegenerateLattice(ValueError):
    """The two translations are parallel (zero lattice area)."""


@dataclass(frozen=True)
class CuspTranslations:
    """Complex translations spanning the horotorus lattice of a cusp."""

    m: complex
    l: complex

    def __post_init__(self):
        if abs((self.m.conjugate() * self.l).imag) == 0.0:
            raise DegenerateLattice(f"translations {self.m}, {self.l} span no area")


def slope_length(t: CuspTranslations, s: Slope) -> float:
    """Euclidean length of the slope's geodesic on the flat horotorus."""
    return abs(s.p * t.m + s.q * t.l)


def cusp_area(t: CuspTranslations) -> float:
    """Area |Im(conj(m) * l)| of the horotorus."""
    area = abs((t.m.conjugate() * t.l).imag)
    if area == 0.0:
        raise DegenerateLattice(f"translations {t.m}, {t.l} span no area")
    return area


def _lagrange_reduce(m: complex, l: complex):
    """Gauss/Lagrange-reduced basis (u, v) of the lattice spanned by (m, l).

    Returns (u, v, row_u, row_v) where row_u, row_v are the integer
    coordinates of u, v in the (m, l) basis, so |u| <= |v| and the final
    exact coordinates of any lattice vector are recoverable.
    """
    u, v = m, l
    ru, rv = (1, 0), (0, 1)
    if abs(u) > abs(v):
        u, v, ru, rv = v, u, rv, ru
    while True:
        mu = round((v * u.conjugate()).real / (u * u.conjugate()).real)
        if mu:
            v = v - mu * u
            rv = (rv[0] - mu * ru[0], rv[1] - mu * ru[1])
        if abs(v) < abs(u):
            u, v, ru, rv = v, u, rv, ru
        else:
            return u, v, ru, rv


def enumerate_short_slopes(t: CuspTranslations, bound: float) -> list[Slope]:
    """All canonical primitive slopes of length <= bound, sorted lexicographically.

    The basis is Lagrange-reduced first, then candidate coefficients are
    scanned per row of the reduced lattice, so skew input bases cannot hide
    short vectors.  Lengths within LENGTH_TOLERANCE of the bound count as
    short; every candidate is re-measured against the original translations
    before inclusion.
    """
    if not bound > 0:
        raise ValueError(f"bound must be positive, got {bound}")
    u, v, ru, rv = _lagrange_reduce(t.m, t.l)
    cutoff = bound + LENGTH_TOLERANCE
    # Components of v parallel / perpendicular to u.
    au = abs(u)
    vx = (v * u.conjugate()).real / au
    vy = (v * u.conjugate()).imag / au

    def measured(p, q):
        return abs(p * t.m + q * t.l)

    out = []
    # b = 0: the only primitive pairs are +-(1, 0), one slope class.
    p, q = ru
    if measured(p, q) <= cutoff:
        out.append(canonical_slope(p, q))
    b_max = math.floor(cutoff / abs(vy) + 1e-9)
    for b in range(1, b_max + 1):
        rem = cutoff * cutoff - (b * vy) * (b * vy)
        if rem < 0:
            continue
        reach = math.sqrt(rem)
        a_lo = math.ceil((-b * vx - reach) / au - 1e-9)
        a_hi = math.floor((-b * vx + reach) / au + 1e-9)
        for a in range(a_lo, a_hi + 1):
            if math.gcd(a, b) != 1:
                continue
            p = a * ru[0] + b * rv[0]
            q = a * ru[1] + b * rv[1]
            if measured(p, q) <= cutoff:
                out.append(canonical_slope(p, q))
    out.sort()
    return out


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y == g == gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_x, x = x, old_x - qt * x
        old_y, y = y, old_y - qt * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _complete_unimodular(p: int, q: int) -> tuple[int, int]:
    """(r, s) with p*s - q*r == 1 and |s| minimal (ties resolved to s > 0)."""
    if q == 0:
        # canonical slope with q == 0 is (1, 0)
        return (0, 1 if p > 0 else -1)
    _, x, y = _ext_gcd(p, q)  # p*x + q*y == 1
    s = x % q
    if 2 * s > q:
        s -= q
    r = (p * s - 1) // q
    return (r, s)


def cyclic_cover_translations(
    t: CuspTranslations, n: int, invariant: Slope
) -> CuspTranslations:
    """Translations of the degree-n cyclic cover whose lattice keeps `invariant`.

    The cover's lattice is the index-n sublattice spanned by
    v = p*m + q*l and w = n*(r*m + s*l), where (r, s) completes (p, q) to a
    unimodular pair.  The invariant slope is (1, 0) upstairs, so its length
    is preserved exactly, and the area is multiplied by n.
    """
    if n < 1:
        raise ValueError(f"cover degree must be >= 1, got {n}")
    p, q = invariant.p, invariant.q
    r, s = _complete_unimodular(p, q)
    v = p * t.m + q * t.l
    w = n * (r * t.m + s * t.l)
    return CuspTranslations(v, w)

"""Seifert fibered space data and its invariants.

A fibration is recorded as a base surface plus a list of fiber pairs
(alpha, beta); pairs with alpha == 1 carry the integer Euler term.  The
normal form puts every exceptional pair in the range 0 < beta < alpha and
folds the accumulated integer surplus into a single (1, b) pair, so
equality after normalization is an equivalence test for fibrations.

First homology comes from the standard abelianized presentation: one
generator per fiber pair, one for the regular fiber, plus the surface
generators, with relations alpha_i*x_i + beta_i*h = 0 and the section
relation (and 2h = 0 over a nonorientable base).  Smith normal form over
exact integers turns the presentation matrix into an AbelianGroup.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

__all__ = [
    "BaseSurface",
    "SeifertData",
    "AbelianGroup",
    "Pi1Class",
    "InvalidFiber",
    "OpenBase",
    "NotApplicable",
    "UnsupportedTriple",
    "NotFinite",
    "S2",
    "RP2",
    "D2",
    "MOBIUS",
    "FIBER_SWAP_DISK",
    "FIBER_SWAP_MOBIUS",
    "normalize_seifert",
    "euler_number",
    "first_homology",
    "classify_two_fiber",
    "pi1_class",
    "spherical_order",
    "fiber_swap",
    "smith_normal_form",
    "homology_from_matrix",
]


class InvalidFiber(ValueError):
    """A fiber pair violates alpha >= 1 or coprimality."""


class OpenBase(ValueError):
    """The operation needs a closed base surface."""


class NotApplicable(ValueError):
    """The fibration is outside the operation's domain."""


class UnsupportedTriple(ValueError):
    """No group order is offered for (2, 2, n) multiplicity triples."""


class NotFinite(ValueError):
    """The fundamental group is not finite noncyclic."""


@dataclass(frozen=True, order=True)
class BaseSurface:
    """Base surface of a fibration: genus, orientability, boundary count.

    Nonorientable genus counts cross-caps, so RP2 is (1, nonorientable, 0)
    and the Moebius band is (1, nonorientable, 1).
    """

    genus: int
    orientable: bool
    boundary_components: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary_components < 0:
            raise ValueError(f"bad base surface {self}")
        if not self.orientable and self.genus == 0:
            raise ValueError("a nonorientable surface has genus >= 1")

    @property
    def is_closed(self) -> bool:
        return self.boundary_components == 0

    @property
    def name(self) -> str | None:
        """Token for the four bases of the description grammar, else None."""
        return _BASE_NAMES.get(self)


S2 = BaseSurface(0, True, 0)
RP2 = BaseSurface(1, False, 0)
D2 = BaseSurface(0, True, 1)
MOBIUS = BaseSurface(1, False, 1)

_BASE_NAMES = {S2: "S2", RP2: "RP2", D2: "D2", MOBIUS: "Mb"}


@dataclass(frozen=True)
class SeifertData:
    """A base surface with fiber pairs (alpha, beta)."""

    base: BaseSurface
    fibers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple((int(a), int(b)) for a, b in self.fibers))
        for a, b in self.fibers:
            if a < 1:
                raise InvalidFiber(f"fiber ({a},{b}) has alpha < 1")
            if a >= 2 and math.gcd(a, abs(b)) != 1:
                raise InvalidFiber(f"fiber ({a},{b}) is not coprime")

    @property
    def exceptional_fibers(self) -> tuple[tuple[int, int], ...]:
        return tuple(f for f in self.fibers if f[0] >= 2)

    @property
    def is_closed(self) -> bool:
        return self.base.is_closed


FIBER_SWAP_DISK = SeifertData(D2, ((2, 1), (2, 1)))
FIBER_SWAP_MOBIUS = SeifertData(MOBIUS, ())


def normalize_seifert(sd: SeifertData) -> SeifertData:
    """Canonical form of the fibration data.

    Every pair with alpha >= 2 is twisted into 0 < beta < alpha, the
    integer surplus is collected into a single (1, b) pair (omitted when
    b == 0), and the pairs are sorted by (alpha, beta).  Idempotent, and
    it preserves the Euler number and first homology.
    """
    surplus = 0
    kept = []
    for a, b in sd.fibers:
        if a == 1:
            surplus += b
            continue
        r = b % a
        if r == 0:
            raise InvalidFiber(f"fiber ({a},{b}) is not coprime")
        surplus += (b - r) // a
        kept.append((a, r))
    if surplus:
        kept.append((1, surplus))
    kept.sort()
    return SeifertData(sd.base, tuple(kept))


def euler_number(sd: SeifertData) -> Fraction:
    """Euler number -sum(beta/alpha) of a closed-base fibration, exact."""
    if not sd.base.is_closed:
        raise OpenBase("Euler number needs a closed base")
    return -sum((Fraction(b, a) for a, b in sd.fibers), Fraction(0))


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: free rank plus invariant factors."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        prev = None
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion entry {d} < 2")
            if prev is not None and d % prev:
                raise ValueError(f"torsion {self.torsion} not in divisibility order")
            prev = d

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.rank:
            return None
        return math.prod(self.torsion)

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Classical pivot reduction over exact integers: move a smallest nonzero
    entry to the pivot, clear its row and column by euclidean steps, then
    fold in any row whose entries the pivot fails to divide.
    """
    a = [[int(x) for x in row] for row in matrix]
    nr = len(a)
    nc = len(a[0]) if a else 0
    t = 0
    while t < min(nr, nc):
        pos = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pos = v, (i, j)
        if pos is None:
            break
        pi, pj = pos
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            restart = False
            for i in range(nr):
                if i != t and a[i][t]:
                    k = a[i][t] // a[t][t]
                    if k:
                        for j in range(nc):
                            a[i][j] -= k * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        restart = True
                        break
            if restart:
                continue
            for j in range(nc):
                if j != t and a[t][j]:
                    k = a[t][j] // a[t][t]
                    if k:
                        for i in range(nr):
                            a[i][j] -= k * a[i][t]
                    if a[t][j]:
                        for i in range(nr):
                            a[i][t], a[i][j] = a[i][j], a[i][t]
                        restart = True
                        break
            if restart:
                continue
            p = a[t][t]
            offender = None
            for i in range(t + 1, nr):
                if any(a[i][j] % p for j in range(t + 1, nc)):
                    offender = i
                    break
            if offender is None:
                break
            for j in range(nc):
                a[t][j] += a[offender][j]
        t += 1
    return [abs(a[i][i]) for i in range(t)]


def homology_from_matrix(rows: list[list[int]], generators: int) -> AbelianGroup:
    """Cokernel of a relation matrix on the given number of generators."""
    factors = smith_normal_form(rows) if rows else []
    return AbelianGroup(
        rank=generators - len(factors),
        torsion=tuple(d for d in factors if d > 1),
    )


def _presentation_matrix(sd: SeifertData) -> tuple[list[list[int]], int]:
    """Abelianized presentation of pi_1 for a closed-base fibration.

    Generators: x_i per fiber pair, h, then 2g surface generators
    (orientable base) or g cross-cap generators v_j (nonorientable base).
    """
    k = len(sd.fibers)
    g = sd.base.genus
    if sd.base.orientable:
        ngens = k + 1 + 2 * g
        rows = []
        for i, (a, b) in enumerate(sd.fibers):
            row = [0] * ngens
            row[i], row[k] = a, b
            rows.append(row)
        section = [0] * ngens
        for i in range(k):
            section[i] = 1
        rows.append(section)
    else:
        ngens = k + 1 + g
        rows = []
        for i, (a, b) in enumerate(sd.fibers):
            row = [0] * ngens
            row[i], row[k] = a, b
            rows.append(row)
        section = [0] * ngens
        for i in range(k):
            section[i] = 1
        for j in range(g):
            section[k + 1 + j] = 2
        rows.append(section)
        fiber_reversal = [0] * ngens
        fiber_reversal[k] = 2
        rows.append(fiber_reversal)
    return rows, ngens


def first_homology(sd: SeifertData) -> AbelianGroup:
    """H_1 of the closed manifold described by the fibration data."""
    if not sd.base.is_closed:
        raise OpenBase("first homology is computed for closed bases only")
    rows, ngens = _presentation_matrix(sd)
    return homology_from_matrix(rows, ngens)


def classify_two_fiber(sd: SeifertData):
    """Lens-space form of a fibration over S2 with at most two exceptional fibers.

    Convention: the manifold splits into two fibered solid tori whose
    meridians are alpha_1*s + beta_1*h and -alpha_2*s + beta_2*h in the
    (section, fiber) basis of the splitting torus.  Writing the second
    meridian as x*lambda + y*mu against a longitude/meridian basis for the
    first gives L(|x|, y mod |x|); lens parameters are then reduced to the
    minimum over q -> {+-q, +-q^(-1)} mod p.  Returns the S3 / S2xS1 /
    RP3 / Lens description; |H_1| of the result is exactly p.
    """
    from .descriptions import Lens, Named, normalize_description

    if sd.base != S2:
        raise NotApplicable(f"base {sd.base} is not the 2-sphere")
    nsd = normalize_seifert(sd)
    exc = [f for f in nsd.fibers if f[0] >= 2]
    if len(exc) > 2:
        raise NotApplicable(f"{len(exc)} exceptional fibers")
    twist = sum(b for a, b in nsd.fibers if a == 1)
    while len(exc) < 2:
        exc.append((1, 0))
    (a1, b1), (a2, b2) = exc
    b1 += twist * a1
    p_signed = a1 * b2 + a2 * b1
    p = abs(p_signed)
    if p == 0:
        return Named("S2xS1")
    if p == 1:
        return Named("S3")
    # longitude (gamma, delta) for the first meridian: a1*delta - b1*gamma == 1
    from .cusp_geometry import _ext_gcd

    _, x, y = _ext_gcd(a1, b1)  # a1*x + b1*y == 1
    gamma, delta = -y, x
    q = (-(gamma * b2 + delta * a2)) % p
    return normalize_description(Lens(p, q))


class Pi1Class(Enum):
    FINITE_CYCLIC = "finite_cyclic"
    FINITE_NONCYCLIC = "finite_noncyclic"
    INFINITE = "infinite"


_PLATONIC_TRIPLES = {(2, 3, 3), (2, 3, 4), (2, 3, 5)}

# Order of the commutator subgroup of the fundamental group, constant on
# each platonic multiplicity triple (binary tetrahedral, octahedral,
# icosahedral respectively).  |pi_1| is then this constant times |H_1|.
_COMMUTATOR_ORDER = {(2, 3, 3): 8, (2, 3, 4): 24, (2, 3, 5): 120}


def _is_spherical_triple(alphas: tuple[int, ...]) -> bool:
    if alphas in _PLATONIC_TRIPLES:
        return True
    return len(alphas) == 3 and alphas[0] == 2 and alphas[1] == 2


def pi1_class(sd: SeifertData) -> Pi1Class:
    """Finiteness of the fundamental group of a closed-base fibration.

    Finite exactly when the base is S2, there are at most three
    exceptional fibers whose multiplicities form a spherical triple when
    there are three, and the Euler number is nonzero; cyclic when
    additionally at most two fibers are exceptional.
    """
    if not sd.base.is_closed:
        raise OpenBase("pi_1 classification needs a closed base")
    if sd.base != S2:
        return Pi1Class.INFINITE
    exc = normalize_seifert(sd).exceptional_fibers
    if len(exc) > 3:
        return Pi1Class.INFINITE
    if euler_number(sd) == 0:
        return Pi1Class.INFINITE
    if len(exc) <= 2:
        return Pi1Class.FINITE_CYCLIC
    alphas = tuple(sorted(a for a, _ in exc))
    if _is_spherical_triple(alphas):
        return Pi1Class.FINITE_NONCYCLIC
    return Pi1Class.INFINITE


def spherical_order(sd: SeifertData) -> int:
    """Order of the finite noncyclic fundamental group for platonic triples.

    Raises NotFinite unless pi1_class is finite noncyclic, and
    UnsupportedTriple for (2, 2, n) prism triples, where the commutator
    order is not constant in the multiplicities.
    """
    if pi1_class(sd) is not Pi1Class.FINITE_NONCYCLIC:
        raise NotFinite("fundamental group is not finite noncyclic")
    alphas = tuple(sorted(a for a, _ in normalize_seifert(sd).exceptional_fibers))
    if alphas not in _PLATONIC_TRIPLES:
        raise UnsupportedTriple(f"no order formula offered for triple {alphas}")
    h1 = first_homology(sd)
    assert h1.rank == 0
    return _COMMUTATOR_ORDER[alphas] * h1.order


def fiber_swap(sd: SeifertData) -> SeifertData | None:
    """The alternate fibration of the one piece that has two.

    The fibration of the disk with two (2, 1) fibers and the fiberwise
    structure of the orientable twisted circle bundle over the Moebius
    band describe the same manifold; each maps to the other, and the maps
    are mutually inverse.  Every other input returns None.  See
    graph_manifold for the induced basis change on the boundary torus.
    """
    nsd = normalize_seifert(sd)
    if nsd == FIBER_SWAP_DISK:
        return FIBER_SWAP_MOBIUS
    if nsd == FIBER_SWAP_MOBIUS:
        return FIBER_SWAP_DISK
    return None

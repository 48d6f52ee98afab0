"""Tagged-union descriptions of closed manifolds and their normal forms.

A description is one of: a lens space, a named space (S3, S2xS1, RP3), a
closed Seifert fibration, a graph manifold, a Sol manifold, an opaque
hyperbolic-piece marker, or a connected sum of prime summands.

Normalization pins one representative per description:

* lens parameters are reduced to the minimum of q, p - q, q^(-1), and
  p - q^(-1) mod p (lens spaces are identified up to homeomorphism);
  p == 0, 1, 2 become S2xS1, S3, RP3;
* Seifert data over S2 with at most two exceptional fibers becomes its
  lens-space form, and the fibration over RP2 with no exceptional fibers
  and no twist becomes RP3 # RP3 (the one Seifert-looking connected sum);
* connected sums are flattened, S3 summands dropped, and summands sorted.
"""

from dataclasses import dataclass
from typing import Union

from .graph_manifold import GraphDescription
from .seifert import RP2, S2, SeifertData, normalize_seifert

__all__ = [
    "Lens",
    "Named",
    "Seifert",
    "Graph",
    "Sol",
    "HypPiece",
    "ConnectedSum",
    "ManifoldDescription",
    "InvariantError",
    "normalize_description",
    "lens_canonical_q",
]


class InvariantError(ValueError):
    """A structurally valid description violates a semantic invariant."""


_NAMED_KINDS = ("S3", "S2xS1", "RP3")


@dataclass(frozen=True)
class Lens:
    p: int
    q: int

    def __post_init__(self):
        import math

        if self.p < 0:
            raise InvariantError(f"lens order p must be nonnegative, got {self.p}")
        if self.p == 0:
            if abs(self.q) != 1:
                raise InvariantError(f"L(0,{self.q}) needs q = +-1")
        elif math.gcd(self.p, self.q % self.p if self.p else self.q) != 1:
            raise InvariantError(f"L({self.p},{self.q}) parameters are not coprime")


@dataclass(frozen=True)
class Named:
    kind: str

    def __post_init__(self):
        if self.kind not in _NAMED_KINDS:
            raise InvariantError(f"unknown named manifold {self.kind!r}")


@dataclass(frozen=True)
class Seifert:
    data: SeifertData


@dataclass(frozen=True)
class Graph:
    data: GraphDescription


@dataclass(frozen=True)
class Sol:
    pass


@dataclass(frozen=True)
class HypPiece:
    pass


@dataclass(frozen=True)
class ConnectedSum:
    summands: tuple["ManifoldDescription", ...]

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if len(self.summands) < 2:
            raise InvariantError("a connected sum needs at least two summands")
        for s in self.summands:
            if isinstance(s, ConnectedSum):
                raise InvariantError("summands must be prime, not nested sums")


ManifoldDescription = Union[Lens, Named, Seifert, Graph, Sol, HypPiece, ConnectedSum]


def lens_canonical_q(p: int, q: int) -> int:
    """Smallest representative of {+-q^(+-1)} mod p, the homeomorphism class."""
    q %= p
    inv = pow(q, -1, p)
    return min(q, p - q, inv, p - inv)


def _sort_key(d: ManifoldDescription):
    if isinstance(d, Named):
        return (0, _NAMED_KINDS.index(d.kind))
    if isinstance(d, Lens):
        return (1, d.p, d.q)
    if isinstance(d, Seifert):
        base = d.data.base
        return (2, base.genus, base.orientable, base.boundary_components, d.data.fibers)
    if isinstance(d, Sol):
        return (3,)
    if isinstance(d, HypPiece):
        return (4,)
    if isinstance(d, Graph):
        g = d.data
        return (
            5,
            len(g.nodes),
            len(g.edges),
            tuple(_sort_key(Seifert(n)) for n in g.nodes),
            tuple(
                (e.node_a, e.slot_a, e.node_b, e.slot_b,
                 e.gluing.a, e.gluing.b, e.gluing.c, e.gluing.d)
                for e in g.edges
            ),
        )
    raise InvariantError(f"cannot order {d!r}")


def _normalize_prime(d: ManifoldDescription) -> ManifoldDescription:
    """Normal form of a single summand; may return a ConnectedSum (RP3 # RP3)."""
    if isinstance(d, Named):
        return d
    if isinstance(d, Lens):
        if d.p == 0:
            return Named("S2xS1")
        if d.p == 1:
            return Named("S3")
        if d.p == 2:
            return Named("RP3")
        return Lens(d.p, lens_canonical_q(d.p, d.q))
    if isinstance(d, Seifert):
        sd = normalize_seifert(d.data)
        if not sd.is_closed:
            raise InvariantError("a closed-manifold description cannot have boundary")
        if sd.base == S2 and len(sd.exceptional_fibers) <= 2:
            from .seifert import classify_two_fiber

            return _normalize_prime(classify_two_fiber(sd))
        if sd.base == RP2 and not sd.exceptional_fibers and not sd.fibers:
            return ConnectedSum((Named("RP3"), Named("RP3")))
        return Seifert(sd)
    if isinstance(d, Graph):
        g = d.data
        return Graph(
            GraphDescription(
                tuple(normalize_seifert(n) for n in g.nodes),
                g.edges,
            )
        )
    if isinstance(d, (Sol, HypPiece)):
        return d
    raise InvariantError(f"not a prime description: {d!r}")


def normalize_description(d: ManifoldDescription) -> ManifoldDescription:
    """Canonical form of an arbitrary description.  Idempotent."""
    if isinstance(d, ConnectedSum):
        parts = list(d.summands)
    else:
        parts = [d]
    flat: list[ManifoldDescription] = []
    for part in parts:
        norm = _normalize_prime(part)
        if isinstance(norm, ConnectedSum):
            flat.extend(norm.summands)
        elif norm == Named("S3"):
            continue  # trivial summand
        else:
            flat.append(norm)
    if not flat:
        return Named("S3")
    if len(flat) == 1:
        return flat[0]
    flat.sort(key=_sort_key)
    return ConnectedSum(tuple(flat))

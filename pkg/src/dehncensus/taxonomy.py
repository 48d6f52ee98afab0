"""Classification of nonhyperbolic manifolds into a single type each.

Descriptions overlap (a lens space is Seifert fibered and a graph
manifold), so reports use the most restricted type that applies.  The
conventions that make the precedence chain well defined: S2xS1 is prime
and is not an honorary lens space, and RP3 # RP3 does not count as
Seifert fibered, so Seifert fibered implies prime.

Toroidality of a closed Seifert fibration follows the standard base
orbifold criterion: there is a vertical essential torus exactly when the
base orbifold contains an essential simple closed curve (genus, or
enough cone points), and a horizontal one exactly when the base orbifold
is Euclidean and the Euler number vanishes.
"""

from dataclasses import dataclass
from enum import Enum

from .descriptions import (
    ConnectedSum,
    Graph,
    HypPiece,
    Lens,
    ManifoldDescription,
    Named,
    Seifert,
    Sol,
    normalize_description,
)
from .seifert import (
    Pi1Class,
    S2,
    SeifertData,
    euler_number,
    first_homology,
    normalize_seifert,
    pi1_class,
)

__all__ = [
    "TypeLabel",
    "PropertySet",
    "UnrecognizedDescription",
    "property_set",
    "resolve_type",
    "closed_sfs_toroidal",
]


class UnrecognizedDescription(ValueError):
    """The description does not name a closed manifold this module types."""


class TypeLabel(Enum):
    S3 = "s3"
    LENS_SPACE = "lens"
    S2XS1 = "s2xs1"
    RP3_CONNSUM_RP3 = "rp3_rp3"
    FINITE_NONCYCLIC = "finite_noncyclic"
    SEIFERT_FIBERED = "seifert"
    SOL = "sol"
    GRAPH_MANIFOLD = "graph"
    CONNECTED_SUM = "connected_sum"
    HYPERBOLIC_PIECE = "hyp_piece"


@dataclass(frozen=True)
class PropertySet:
    is_connected_sum: bool
    is_prime: bool
    is_toroidal: bool
    is_seifert: bool
    is_graph: bool
    is_sol: bool
    has_hyperbolic_piece: bool
    pi1_finite: bool
    pi1_cyclic: bool  # finite cyclic; S2xS1's infinite cyclic group is not
    pi1_trivial: bool


_EUCLIDEAN_TRIPLES = {(2, 3, 6), (2, 4, 4), (3, 3, 3)}


def closed_sfs_toroidal(sd: SeifertData) -> bool:
    """Geometric toroidality of a closed Seifert fibration."""
    nsd = normalize_seifert(sd)
    base = nsd.base
    if not base.is_closed:
        raise UnrecognizedDescription("toroidality predicate needs a closed base")
    exceptional = nsd.exceptional_fibers
    k = len(exceptional)
    if base.orientable and base.genus == 0:
        if k >= 4:
            return True
        if k == 3:
            alphas = tuple(sorted(a for a, _ in exceptional))
            return alphas in _EUCLIDEAN_TRIPLES and euler_number(nsd) == 0
        return False
    if not base.orientable and base.genus == 1:
        return k >= 2
    # any other closed base carries an essential curve, hence a vertical torus
    return True


def _seifert_properties(sd: SeifertData) -> PropertySet:
    cls = pi1_class(sd)
    finite = cls is not Pi1Class.INFINITE
    trivial = False
    if cls is Pi1Class.FINITE_CYCLIC:
        trivial = first_homology(sd).order == 1
    return PropertySet(
        is_connected_sum=False,
        is_prime=True,
        is_toroidal=closed_sfs_toroidal(sd),
        is_seifert=True,
        is_graph=True,
        is_sol=False,
        has_hyperbolic_piece=False,
        pi1_finite=finite,
        pi1_cyclic=cls is Pi1Class.FINITE_CYCLIC,
        pi1_trivial=trivial,
    )


_NAMED_PROPERTIES = {
    "S3": dict(pi1_finite=True, pi1_cyclic=True, pi1_trivial=True),
    "RP3": dict(pi1_finite=True, pi1_cyclic=True, pi1_trivial=False),
    "S2xS1": dict(pi1_finite=False, pi1_cyclic=False, pi1_trivial=False),
}


def property_set(d: ManifoldDescription) -> PropertySet:
    """All classification booleans for a closed-manifold description."""
    d = normalize_description(d)
    if isinstance(d, Named):
        return PropertySet(
            is_connected_sum=False,
            is_prime=True,
            is_toroidal=False,
            is_seifert=True,
            is_graph=True,
            is_sol=False,
            has_hyperbolic_piece=False,
            **_NAMED_PROPERTIES[d.kind],
        )
    if isinstance(d, Lens):
        return PropertySet(
            is_connected_sum=False,
            is_prime=True,
            is_toroidal=False,
            is_seifert=True,
            is_graph=True,
            is_sol=False,
            has_hyperbolic_piece=False,
            pi1_finite=True,
            pi1_cyclic=True,
            pi1_trivial=False,
        )
    if isinstance(d, Seifert):
        if not d.data.is_closed:
            raise UnrecognizedDescription("bounded fibration is not a closed manifold")
        return _seifert_properties(d.data)
    if isinstance(d, Graph):
        return PropertySet(
            is_connected_sum=False,
            is_prime=True,
            is_toroidal=True,  # a nontrivial torus decomposition is present
            is_seifert=False,
            is_graph=True,
            is_sol=False,
            has_hyperbolic_piece=False,
            pi1_finite=False,
            pi1_cyclic=False,
            pi1_trivial=False,
        )
    if isinstance(d, Sol):
        return PropertySet(
            is_connected_sum=False,
            is_prime=True,
            is_toroidal=True,  # the fiber or splitting torus is essential
            is_seifert=False,
            is_graph=True,  # Sol manifolds count as graph manifolds
            is_sol=True,
            has_hyperbolic_piece=False,
            pi1_finite=False,
            pi1_cyclic=False,
            pi1_trivial=False,
        )
    if isinstance(d, HypPiece):
        return PropertySet(
            is_connected_sum=False,
            is_prime=True,
            is_toroidal=True,
            is_seifert=False,
            is_graph=False,
            is_sol=False,
            has_hyperbolic_piece=True,
            pi1_finite=False,
            pi1_cyclic=False,
            pi1_trivial=False,
        )
    if isinstance(d, ConnectedSum):
        summand_props = [property_set(s) for s in d.summands]
        return PropertySet(
            is_connected_sum=True,
            is_prime=False,
            is_toroidal=any(p.is_toroidal for p in summand_props),
            is_seifert=False,
            is_graph=False,
            is_sol=False,
            has_hyperbolic_piece=any(p.has_hyperbolic_piece for p in summand_props),
            pi1_finite=False,  # a free product of nontrivial groups is infinite
            pi1_cyclic=False,
            pi1_trivial=False,
        )
    raise UnrecognizedDescription(f"cannot classify {d!r}")


_RP3_RP3 = ConnectedSum((Named("RP3"), Named("RP3")))


def resolve_type(d: ManifoldDescription) -> TypeLabel:
    """The most restricted type that applies to the description."""
    d = normalize_description(d)
    if d == Named("S3"):
        return TypeLabel.S3
    if isinstance(d, Lens) or d == Named("RP3"):
        return TypeLabel.LENS_SPACE
    if d == Named("S2xS1"):
        return TypeLabel.S2XS1
    if d == _RP3_RP3:
        return TypeLabel.RP3_CONNSUM_RP3
    props = property_set(d)
    if props.pi1_finite and not props.pi1_cyclic and props.is_prime:
        return TypeLabel.FINITE_NONCYCLIC
    if props.is_connected_sum:
        return TypeLabel.CONNECTED_SUM
    if props.is_seifert:
        return TypeLabel.SEIFERT_FIBERED
    if props.is_sol:
        return TypeLabel.SOL
    if props.is_graph:
        return TypeLabel.GRAPH_MANIFOLD
    return TypeLabel.HYPERBOLIC_PIECE

"""Graph-manifold descriptions and the minimality certification.

A graph manifold is recorded as Seifert pieces with boundary, glued along
torus boundaries.  Every boundary torus carries the (section, fiber)
basis of its piece, so the regular fiber is the vector (0, 1) and a
gluing is a unimodular basis change from one side's coordinates to the
other's.

A description is certified minimal when no node is a fibered solid torus
and no gluing matches fibers to fibers; both defects mean the underlying
manifold has a simpler description (a smaller graph, or a single Seifert
piece).  Fiber matching must account for the one piece admitting two
fibrations, whose alternate fiber is a different boundary slope.
"""

from dataclasses import dataclass

from .seifert import D2, SeifertData, fiber_swap
from .slope_algebra import BasisChange, Slope, canonical_slope, change_basis

__all__ = [
    "GraphEdge",
    "GraphDescription",
    "CertificationReport",
    "GraphShape",
    "ClosedNode",
    "FIBER_SLOPE",
    "SWAP_DISK_TO_MOBIUS",
    "SWAP_MOBIUS_TO_DISK",
    "ALT_FIBER_DISK",
    "ALT_FIBER_MOBIUS",
    "is_solid_torus_node",
    "candidate_fiber_slopes",
    "edge_fibers_match",
    "certify_minimal",
    "graph_shape",
]


class ClosedNode(ValueError):
    """A graph node must have boundary."""


# The regular fiber in any piece's own boundary coordinates.
FIBER_SLOPE = Slope(0, 1)

# Boundary basis change between the two fibrations of the swap piece,
# mapping (section, fiber) coordinates of the disk fibration with two
# (2, 1) fibers to those of the Moebius-band fibration.  Derived from the
# common presentation <v, h | v h v^-1 h>: the disk fiber is v^2, which is
# the Moebius section, and the disk section is v^2 h^(+-1).  Validated by
# the mutual-inverse property and by homology of assembled doubles.
SWAP_DISK_TO_MOBIUS = BasisChange(1, 1, 1, 0)
SWAP_MOBIUS_TO_DISK = SWAP_DISK_TO_MOBIUS.inverse()  # [[0, 1], [1, -1]]

# The alternate fibration's fiber, seen in each description's own
# boundary coordinates (images of (0, 1) under the matrices above).
ALT_FIBER_DISK = canonical_slope(*SWAP_MOBIUS_TO_DISK.apply(0, 1))  # (-1, 1)
ALT_FIBER_MOBIUS = canonical_slope(*SWAP_DISK_TO_MOBIUS.apply(0, 1))  # (1, 0)


@dataclass(frozen=True)
class GraphEdge:
    """Gluing between boundary slot `slot_a` of node `node_a` and `slot_b` of `node_b`.

    The matrix maps side-a (section, fiber) coordinates to side-b coordinates.
    """

    node_a: int
    slot_a: int
    node_b: int
    slot_b: int
    gluing: BasisChange


@dataclass(frozen=True)
class GraphDescription:
    """Connected collection of bounded Seifert pieces with every boundary glued."""

    nodes: tuple[SeifertData, ...]
    edges: tuple[GraphEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.nodes:
            raise ValueError("a graph description needs at least one node")
        for i, node in enumerate(self.nodes):
            if node.base.boundary_components < 1:
                raise ClosedNode(f"node {i} has no boundary")
        used = set()
        for e in self.edges:
            for node, slot in ((e.node_a, e.slot_a), (e.node_b, e.slot_b)):
                if not 0 <= node < len(self.nodes):
                    raise ValueError(f"edge references unknown node {node}")
                if not 0 <= slot < self.nodes[node].base.boundary_components:
                    raise ValueError(f"node {node} has no boundary slot {slot}")
                if (node, slot) in used:
                    raise ValueError(f"boundary slot {node}.{slot} used twice")
                used.add((node, slot))
        for i, node in enumerate(self.nodes):
            for slot in range(node.base.boundary_components):
                if (i, slot) not in used:
                    raise ValueError(f"boundary slot {i}.{slot} is unglued")
        # connectivity
        seen = {0}
        frontier = [0]
        adjacency = {}
        for e in self.edges:
            adjacency.setdefault(e.node_a, set()).add(e.node_b)
            adjacency.setdefault(e.node_b, set()).add(e.node_a)
        while frontier:
            current = frontier.pop()
            for nxt in adjacency.get(current, ()):
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        if len(seen) != len(self.nodes):
            raise ValueError("graph description is not connected")


def is_solid_torus_node(node: SeifertData) -> bool:
    """True for a fibered solid torus: disk base, at most one exceptional fiber."""
    if node.base.is_closed:
        raise ClosedNode("node has no boundary")
    return node.base == D2 and len(node.exceptional_fibers) <= 1


def candidate_fiber_slopes(node: SeifertData) -> tuple[Slope, ...]:
    """Fiber slopes a piece can present on a boundary torus.

    Always (0, 1); the swap piece also presents its alternate fibration's
    fiber.
    """
    swapped = fiber_swap(node)
    if swapped is None:
        return (FIBER_SLOPE,)
    alt = ALT_FIBER_DISK if node.base == D2 else ALT_FIBER_MOBIUS
    return (FIBER_SLOPE, alt)


def edge_fibers_match(g: GraphDescription, edge_index: int) -> bool:
    """True when the gluing carries some fiber slope of one side to one of the other.

    Both fibrations of a swap-capable piece are tested on both sides.  The
    answer is direction-symmetric: the inverse gluing gives the same result.
    """
    e = g.edges[edge_index]
    side_a = candidate_fiber_slopes(g.nodes[e.node_a])
    side_b = set(candidate_fiber_slopes(g.nodes[e.node_b]))
    return any(change_basis(f, e.gluing) in side_b for f in side_a)


@dataclass(frozen=True)
class CertificationReport:
    """Outcome of certify_minimal with every offending node and edge."""

    passed: bool
    solid_torus_nodes: tuple[int, ...]
    fiber_matching_edges: tuple[int, ...]

    def lines(self) -> list[str]:
        if self.passed:
            return ["minimal: no solid-torus nodes, no fiber-matching gluings"]
        out = []
        for i in self.solid_torus_nodes:
            out.append(f"node {i} is a solid torus")
        for i in self.fiber_matching_edges:
            out.append(f"edge {i} glues fiber to fiber")
        return out


def certify_minimal(g: GraphDescription) -> CertificationReport:
    """Check that no node is a solid torus and no gluing matches fibers."""
    solid = tuple(i for i, n in enumerate(g.nodes) if is_solid_torus_node(n))
    matching = tuple(i for i in range(len(g.edges)) if edge_fibers_match(g, i))
    return CertificationReport(
        passed=not solid and not matching,
        solid_torus_nodes=solid,
        fiber_matching_edges=matching,
    )


@dataclass(frozen=True)
class GraphShape:
    kind: str  # "segment" | "loop" | "other"
    vertex_count: int


def graph_shape(g: GraphDescription) -> GraphShape:
    """Coarse shape of the underlying graph.

    A cycle (a self-loop counts as a one-vertex cycle) is a loop, a path
    is a segment, anything else is other.
    """
    n = len(g.nodes)
    degree = [0] * n
    for e in g.edges:
        degree[e.node_a] += 1
        degree[e.node_b] += 1
    if len(g.edges) == n and all(d == 2 for d in degree):
        return GraphShape("loop", n)
    if len(g.edges) == n - 1 and all(d <= 2 for d in degree):
        return GraphShape("segment", n)
    return GraphShape("other", n)

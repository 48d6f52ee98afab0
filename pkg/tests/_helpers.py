"""Shared generators and independent oracles for the test suite."""

import math
from random import Random

from dehncensus.cusp_geometry import LENGTH_TOLERANCE, CuspTranslations, cusp_area
from dehncensus.descriptions import (
    ConnectedSum,
    Graph,
    HypPiece,
    Lens,
    Named,
    Seifert,
    Sol,
)
from dehncensus.graph_manifold import GraphDescription, GraphEdge, edge_fibers_match
from dehncensus.seifert import (
    D2,
    MOBIUS,
    RP2,
    S2,
    BaseSurface,
    SeifertData,
    homology_from_matrix,
)
from dehncensus.slope_algebra import BasisChange, Slope, canonical_slope


def random_unimodular(rng: Random) -> BasisChange:
    """Random product of shears, swaps, and sign flips; entries stay small."""
    m = BasisChange.identity()
    for _ in range(rng.randint(1, 4)):
        kind = rng.randrange(4)
        if kind == 0:
            m = m @ BasisChange(1, rng.randint(-3, 3), 0, 1)
        elif kind == 1:
            m = m @ BasisChange(1, 0, rng.randint(-3, 3), 1)
        elif kind == 2:
            m = m @ BasisChange(0, 1, 1, 0)
        else:
            m = m @ BasisChange(-1, 0, 0, 1)
    return m


def random_slope(rng: Random, span: int = 12) -> Slope:
    while True:
        p = rng.randint(-span, span)
        q = rng.randint(-span, span)
        if (p, q) != (0, 0) and math.gcd(abs(p), abs(q)) == 1:
            return canonical_slope(p, q)


def random_lattice(rng: Random) -> CuspTranslations:
    """Non-degenerate lattice with bounded skew, so oracle boxes stay small."""
    scale = rng.uniform(0.8, 1.5)
    theta = rng.uniform(0.0, math.pi)
    m = scale * complex(math.cos(theta), math.sin(theta))
    tau = complex(
        rng.uniform(-0.6, 0.6), rng.choice([-1.0, 1.0]) * rng.uniform(0.8, 1.6)
    )
    return CuspTranslations(m, m * tau)


def brute_force_short_slopes(t: CuspTranslations, bound: float) -> list[Slope]:
    """Box-scan oracle for enumerate_short_slopes.

    For w = p*m + q*l, |p| = |w ^ l| / area <= |w| |l| / area, and
    symmetrically for q, so the box below contains every slope of length
    at most the bound.  Uses the same inclusion tolerance as the library.
    """
    cutoff = bound + LENGTH_TOLERANCE
    area = cusp_area(t)
    p_max = math.ceil(cutoff * abs(t.l) / area) + 1
    q_max = math.ceil(cutoff * abs(t.m) / area) + 1
    out = []
    for q in range(0, q_max + 1):
        p_start = 1 if q == 0 else -p_max
        for p in range(p_start, p_max + 1):
            if math.gcd(abs(p), q) != 1:
                continue
            if abs(p * t.m + q * t.l) <= cutoff:
                out.append(Slope(p, q))
    out.sort()
    return out


# Seifert generators ------------------------------------------------------


def random_fiber(rng: Random, alpha_max: int = 9) -> tuple[int, int]:
    a = rng.randint(1, alpha_max)
    if a == 1:
        return (1, rng.randint(-5, 5))
    while True:
        b = rng.randint(-2 * a, 2 * a)
        if math.gcd(a, abs(b)) == 1:
            return (a, b)


def random_exceptional_fiber(rng: Random, alpha_max: int = 9) -> tuple[int, int]:
    a = rng.randint(2, alpha_max)
    while True:
        b = rng.randint(-2 * a, 2 * a)
        if math.gcd(a, abs(b)) == 1:
            return (a, b)


def random_closed_seifert(rng: Random, max_fibers: int = 5) -> SeifertData:
    base = rng.choice([S2, RP2])
    fibers = tuple(random_fiber(rng) for _ in range(rng.randint(0, max_fibers)))
    return SeifertData(base, fibers)


def random_spherical_triple(rng: Random) -> SeifertData:
    """Base-S2 data with a spherical multiplicity triple and nonzero Euler number."""
    choice = rng.randrange(4)
    if choice == 0:
        alphas = (2, 2, rng.randint(2, 12))
    else:
        alphas = ((2, 3, 3), (2, 3, 4), (2, 3, 5))[choice - 1]
    while True:
        fibers = []
        for a in alphas:
            while True:
                b = rng.randint(-2 * a, 2 * a)
                if math.gcd(a, abs(b)) == 1:
                    break
            fibers.append((a, b))
        if rng.random() < 0.4:
            fibers.append((1, rng.randint(-3, 3)))
        sd = SeifertData(S2, tuple(fibers))
        from dehncensus.seifert import euler_number

        if euler_number(sd) != 0:
            return sd


# description generator ----------------------------------------------------


def random_bounded_node(rng: Random) -> SeifertData:
    """One-boundary piece the description grammar can print."""
    if rng.random() < 0.5:
        count = rng.randint(0, 3)
        return SeifertData(D2, tuple(random_fiber(rng, 5) for _ in range(count)))
    count = rng.randint(0, 2)
    return SeifertData(MOBIUS, tuple(random_fiber(rng, 5) for _ in range(count)))


def random_prime_description(rng: Random):
    kind = rng.randrange(6)
    if kind == 0:
        p = rng.randint(0, 40)
        if p == 0:
            return Lens(0, rng.choice([1, -1]))
        q = rng.choice([x for x in range(1, max(2, p)) if math.gcd(p, x) == 1] or [0])
        return Lens(p, q if p > 1 else 0)
    if kind == 1:
        return Named(rng.choice(["S3", "S2xS1", "RP3"]))
    if kind == 2:
        return Seifert(random_closed_seifert(rng))
    if kind == 3:
        return Sol()
    if kind == 4:
        return HypPiece()
    nodes = (random_bounded_node(rng), random_bounded_node(rng))
    edge = GraphEdge(0, 0, 1, 0, random_unimodular(rng))
    return Graph(GraphDescription(nodes, (edge,)))


def random_description(rng: Random):
    if rng.random() < 0.25:
        summands = tuple(
            random_prime_description(rng) for _ in range(rng.randint(2, 4))
        )
        return ConnectedSum(summands)
    return random_prime_description(rng)


# graph generators ----------------------------------------------------------


def fibers_match(node_a: SeifertData, node_b: SeifertData, gluing: BasisChange) -> bool:
    """Standalone fiber-matching check mirroring edge_fibers_match."""
    from dehncensus.graph_manifold import candidate_fiber_slopes
    from dehncensus.slope_algebra import change_basis

    side_b = set(candidate_fiber_slopes(node_b))
    return any(
        change_basis(f, gluing) in side_b for f in candidate_fiber_slopes(node_a)
    )


def _nonsolid_piece(rng: Random, slots: int) -> SeifertData:
    """A bounded piece that certify_minimal should accept."""
    if slots == 1:
        if rng.random() < 0.3:
            return SeifertData(MOBIUS, tuple(random_fiber(rng, 5) for _ in range(rng.randint(0, 2))))
        count = rng.randint(2, 3)
        return SeifertData(D2, tuple(random_exceptional_fiber(rng, 5) for _ in range(count)))
    base = rng.choice(
        [BaseSurface(0, True, slots), BaseSurface(1, False, slots), BaseSurface(1, True, slots)]
    )
    count = rng.randint(0, 2)
    return SeifertData(base, tuple(random_fiber(rng, 5) for _ in range(count)))


def random_minimal_graph(rng: Random) -> GraphDescription:
    """Random graph that passes certification, in one of four shapes."""
    shape = rng.randrange(4)
    if shape == 0:  # two-node segment
        nodes = (_nonsolid_piece(rng, 1), _nonsolid_piece(rng, 1))
        ends = [(0, 0, 1, 0)]
    elif shape == 1:  # one-node loop
        nodes = (_nonsolid_piece(rng, 2),)
        ends = [(0, 0, 0, 1)]
    elif shape == 2:  # three-node path
        nodes = (_nonsolid_piece(rng, 1), _nonsolid_piece(rng, 2), _nonsolid_piece(rng, 1))
        ends = [(0, 0, 1, 0), (1, 1, 2, 0)]
    else:  # three-node cycle
        nodes = tuple(_nonsolid_piece(rng, 2) for _ in range(3))
        ends = [(0, 1, 1, 0), (1, 1, 2, 0), (2, 1, 0, 0)]
    edges: list[GraphEdge] = []
    for na, sa, nb, sb in ends:
        while True:
            g = random_unimodular(rng)
            if not fibers_match(nodes[na], nodes[nb], g):
                edges.append(GraphEdge(na, sa, nb, sb, g))
                break
    final = GraphDescription(nodes, tuple(edges))
    assert all(not edge_fibers_match(final, i) for i in range(len(edges)))
    return final


def graph_first_homology(g: GraphDescription):
    """H_1 of an assembled tree-shaped graph description.

    Abelianized graph-of-groups presentation: piece generators and
    relations, plus two identifications per edge (section and fiber of the
    glued torus).  Valid for trees; a graph with cycles would add free
    stable-letter generators this oracle does not model.
    """
    col = 0
    x_cols: list[list[int]] = []
    h_col: list[int] = []
    s_cols: list[list[int]] = []
    v_cols: list[list[int]] = []
    for node in g.nodes:
        x_cols.append([col + i for i in range(len(node.fibers))])
        col += len(node.fibers)
        h_col.append(col)
        col += 1
        s_cols.append([col + i for i in range(node.base.boundary_components)])
        col += node.base.boundary_components
        if node.base.orientable:
            extra = 2 * node.base.genus
            v_cols.append([])
            col += extra  # free surface generators, no relations
        else:
            v_cols.append([col + i for i in range(node.base.genus)])
            col += node.base.genus
    rows = []
    for i, node in enumerate(g.nodes):
        for j, (a, b) in enumerate(node.fibers):
            row = [0] * col
            row[x_cols[i][j]] = a
            row[h_col[i]] = b
            rows.append(row)
        section = [0] * col
        for c in x_cols[i]:
            section[c] = 1
        for c in s_cols[i]:
            section[c] = 1
        for c in v_cols[i]:
            section[c] = 2
        rows.append(section)
        if not node.base.orientable:
            row = [0] * col
            row[h_col[i]] = 2
            rows.append(row)
    for e in g.edges:
        m = e.gluing
        row = [0] * col
        row[s_cols[e.node_a][e.slot_a]] = 1
        row[s_cols[e.node_b][e.slot_b]] -= m.a
        row[h_col[e.node_b]] -= m.c
        rows.append(row)
        row = [0] * col
        row[h_col[e.node_a]] = 1
        row[s_cols[e.node_b][e.slot_b]] -= m.b
        row[h_col[e.node_b]] -= m.d
        rows.append(row)
    return homology_from_matrix(rows, col)

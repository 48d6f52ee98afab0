"""Session fixtures: a small synthetic census exercising every code path.

The fixture data is shaped like real census files (name prefixes, cusp
translations, one knot exterior) but the rows are constructed, not
measured.  It is built so that the structural checks that do not depend
on dataset-wide cardinalities pass: the eleven-manifold high-count set,
the four finite-noncyclic maximizers, the 27 four-toroidal manifolds, the
three-summand fillings, and the summand property of double sums.
"""

import pytest

from dehncensus.census_io import load_census

GRAPH_TEXT = (
    "GRAPH{ n0 = SFS[D2: (2,1) (3,1)]; n1 = SFS[D2: (2,1) (2,1)]; "
    "e: n0.0 - n1.0 [0,1;1,0] }"
)
TOROIDAL_SFS = "SFS[S2: (2,1) (2,1) (2,1) (3,-2)]"
PRISM = "SFS[S2: (2,1) (2,1) (5,-2)]"
PRISM2 = "SFS[S2: (2,1) (2,1) (3,-1)]"
FINITE_120 = "SFS[S2: (2,1) (3,2) (3,-1)]"
FINITE_2040 = "SFS[S2: (2,1) (3,2) (5,-3)]"
SEIFERT_INF = "SFS[S2: (2,1) (3,1) (7,-6)]"
RP2_SFS = "SFS[RP2: (2,1) (3,1)]"

HIGH_E_BLOCK_A = ["m003", "m006", "m009", "m017", "m035", "m039"]
HIGH_E_BLOCK_B = ["m016", "m023", "m038"]

TOROIDAL_27 = [
    "s772", "s778", "s911", "v2640", "t08282", "t11538", "t12033", "t12035",
    "t12036", "t12041", "t12043", "t12045", "t12050", "t12548", "t12648",
    "o9_35259", "o9_36732", "o9_37030", "o9_38039", "o9_39094", "o9_40054",
    "o9_41000", "o9_41004", "o9_41006", "o9_41007", "o9_41008", "o9_43799",
]

FINITE_FOUR = ["m011", "s757", "v2702", "v2797"]


def _tets_for(name: str) -> int:
    if name.startswith("o9_"):
        return 9
    return {"m": 3, "s": 6, "v": 7, "t": 8}[name[0]]


def fixture_rows():
    """(manifold rows, filling rows) for the synthetic census."""
    manifolds = []
    fillings = []

    names = (
        HIGH_E_BLOCK_A + HIGH_E_BLOCK_B + ["m004", "m007"] + FINITE_FOUR
        + TOROIDAL_27 + ["o9_39343", "o9_41447", "o9_43255"]
    )
    for i, name in enumerate(names):
        manifolds.append(
            (
                name,
                _tets_for(name),
                0.95 + 0.004 * i,
                0.0,
                0.12 + 0.003 * i,
                1.02 + 0.01 * i,
                name == "m004",
            )
        )

    def add(name, p, q, desc):
        fillings.append((name, p, q, desc))

    for name in HIGH_E_BLOCK_A:
        add(name, 1, 0, "L(7,2)")
        add(name, 0, 1, "SOL")
        add(name, 1, 1, SEIFERT_INF)
        add(name, -1, 1, "HYP_PIECE")
        add(name, 2, 1, GRAPH_TEXT)
        add(name, -2, 1, "S2xS1")
        add(name, 3, 1, PRISM)
    # m003 carries the maximum of ten fillings
    add("m003", -3, 1, "L(17,4)")
    add("m003", 1, 2, "SFS[S2: (2,1) (3,1) (11,-9)]")
    add("m003", -1, 2, "L(19,7)")

    for name in HIGH_E_BLOCK_B:
        add(name, 1, 0, "RP3 # L(5,1)")
        add(name, 0, 1, "SOL")
        add(name, 1, 1, "L(11,3)")
        add(name, -1, 1, "HYP_PIECE")
        add(name, 2, 1, GRAPH_TEXT)
        add(name, -2, 1, "SFS[S2: (3,1) (4,1) (5,-4)]")
        add(name, 3, 1, "L(13,5)")
    # one manifold with two connected-sum fillings, both with a small summand
    add("m016", -3, 1, "L(4,1) # L(7,1)")

    # the knot exterior
    add("m004", 1, 0, "S3")
    add("m004", 0, 1, "SOL")
    add("m004", 1, 1, SEIFERT_INF)
    add("m004", -1, 1, "SFS[S2: (2,1) (4,1) (5,-4)]")
    add("m004", 2, 1, "SFS[S2: (3,1) (3,1) (4,-3)]")
    add("m004", -2, 1, "HYP_PIECE")
    add("m004", 3, 1, GRAPH_TEXT)
    add("m004", -3, 1, "L(10,3)")
    add("m004", 4, 1, "L(4,1)")

    # the intersection-number-4 pair of fillings
    add("m007", -2, 1, "SFS[S2: (2,1) (3,1) (9,-7)]")
    add("m007", 2, 1, FINITE_120)
    add("m007", 1, 0, "L(3,1)")
    add("m007", 0, 1, "SOL")
    add("m007", 1, 1, "HYP_PIECE")
    add("m007", 3, 1, GRAPH_TEXT)
    add("m007", -1, 1, "L(9,2)")

    for name in FINITE_FOUR:
        add(name, 1, 0, FINITE_120)
        add(name, 0, 1, FINITE_2040)
        add(name, 1, 1, PRISM2)
        add(name, 2, 1, "L(5,2)")
    add("v2702", -1, 1, RP2_SFS)

    for name in TOROIDAL_27:
        add(name, 1, 0, "SOL")
        add(name, 0, 1, "HYP_PIECE")
        add(name, 1, 1, GRAPH_TEXT)
        add(name, -1, 1, TOROIDAL_SFS)

    add("o9_39343", 1, 0, "RP3 # RP3 # RP3")
    add("o9_41447", 1, 0, "L(3,1) # RP3 # RP3")
    add("o9_43255", 1, 0, "L(3,1) # RP3 # RP3")

    return manifolds, fillings


def write_census_csvs(directory, manifolds, fillings):
    manifolds_path = directory / "manifolds.csv"
    fillings_path = directory / "fillings.csv"
    lines = ["name,tets,m_re,m_im,l_re,l_im,knot_exterior"]
    for name, tets, m_re, m_im, l_re, l_im, knot in manifolds:
        lines.append(
            f"{name},{tets},{m_re!r},{m_im!r},{l_re!r},{l_im!r},"
            f"{'true' if knot else 'false'}"
        )
    manifolds_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    lines = ["name,p,q,description"]
    for name, p, q, desc in fillings:
        lines.append(f'{name},{p},{q},"{desc}"')
    fillings_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return manifolds_path, fillings_path


@pytest.fixture(scope="session")
def fixture_census_paths(tmp_path_factory):
    directory = tmp_path_factory.mktemp("census")
    manifolds, fillings = fixture_rows()
    return write_census_csvs(directory, manifolds, fillings)


@pytest.fixture(scope="session")
def fixture_census(fixture_census_paths):
    return load_census(*fixture_census_paths)

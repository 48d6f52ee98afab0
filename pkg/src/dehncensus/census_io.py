"""Parsing and ingestion: the description grammar and the census CSV files.

Description grammar (whitespace between tokens is free; the renderer
emits the canonical spacing shown):

    desc      = summand { " # " summand }
    summand   = lens | named | sfs | graph | "SOL" | "HYP_PIECE"
    lens      = "L(" int "," int ")"
    named     = "S3" | "S2xS1" | "RP3"
    sfs       = "SFS[" base ":" { fiber } "]"
    base      = "S2" | "RP2" | "D2" | "Mb"
    fiber     = "(" int "," int ")"
    graph     = "GRAPH{" node ";" { node ";" } edge { ";" edge } "}"
    node      = name "=" sfs
    edge      = "e:" name "." int "-" name "." int "[" int "," int ";" int "," int "]"

Census files are two UTF-8 CSVs with headers:

    manifolds.csv: name,tets,m_re,m_im,l_re,l_im,knot_exterior
    fillings.csv:  name,p,q,description

Loading validates everything and aggregates all row-level problems into a
single CensusLoadError instead of failing on the first.
"""

import csv
import re
from dataclasses import dataclass, field

from .cusp_geometry import CuspTranslations
from .descriptions import (
    ConnectedSum,
    Graph,
    HypPiece,
    InvariantError,
    Lens,
    ManifoldDescription,
    Named,
    Seifert,
    Sol,
    normalize_description,
)
from .graph_manifold import GraphDescription, GraphEdge
from .seifert import D2, MOBIUS, RP2, S2, SeifertData
from .slope_algebra import BasisChange, Slope, canonical_slope

__all__ = [
    "ParseError",
    "SchemaError",
    "RowError",
    "CensusLoadError",
    "ManifoldRecord",
    "FillingRecord",
    "Census",
    "parse_description",
    "render_description",
    "load_census",
    "MANIFOLD_HEADER",
    "FILLING_HEADER",
]


class ParseError(ValueError):
    """Syntax error with byte offset and the token set that was expected."""

    def __init__(self, offset: int, expected, found: str):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        self.found = found
        super().__init__(
            f"at offset {offset}: expected {' | '.join(self.expected)}, found {found}"
        )


_TOKEN_RE = re.compile(
    r"\s+|(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[()\[\]{}.,;:#=-])"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(pos, {"token"}, repr(text[pos]))
        if m.lastgroup == "int":
            tokens.append(("int", m.group(), pos))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group(), pos))
        elif m.lastgroup == "punct":
            tokens.append(("punct", m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        kind, value, offset = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(offset, expected, found)

    def expect_punct(self, *options: str) -> str:
        kind, value, _ = self.peek()
        if kind == "punct" and value in options:
            self.advance()
            return value
        self.fail({repr(o) for o in options})

    def expect_int(self) -> int:
        kind, value, _ = self.peek()
        if kind == "int":
            self.advance()
            return int(value)
        self.fail({"integer"})

    def expect_name(self) -> str:
        kind, value, _ = self.peek()
        if kind == "name":
            self.advance()
            return value
        self.fail({"name"})

    def at_punct(self, value: str) -> bool:
        kind, v, _ = self.peek()
        return kind == "punct" and v == value

    # grammar productions ------------------------------------------------

    def description(self) -> ManifoldDescription:
        summands = [self.summand()]
        while self.at_punct("#"):
            self.advance()
            summands.append(self.summand())
        kind, _, offset = self.peek()
        if kind != "end":
            self.fail({"'#'", "end of input"})
        if len(summands) == 1:
            return summands[0]
        return ConnectedSum(tuple(summands))

    def summand(self) -> ManifoldDescription:
        kind, value, _ = self.peek()
        if kind != "name":
            self.fail({"'L'", "'S3'", "'S2xS1'", "'RP3'", "'SFS'", "'GRAPH'",
                       "'SOL'", "'HYP_PIECE'"})
        if value == "L":
            return self.lens()
        if value in ("S3", "S2xS1", "RP3"):
            self.advance()
            return Named(value)
        if value == "SOL":
            self.advance()
            return Sol()
        if value == "HYP_PIECE":
            self.advance()
            return HypPiece()
        if value == "SFS":
            return Seifert(self.sfs())
        if value == "GRAPH":
            return Graph(self.graph())
        self.fail({"'L'", "'S3'", "'S2xS1'", "'RP3'", "'SFS'", "'GRAPH'",
                   "'SOL'", "'HYP_PIECE'"})

    def lens(self) -> Lens:
        self.expect_name()
        self.expect_punct("(")
        p = self.expect_int()
        self.expect_punct(",")
        q = self.expect_int()
        self.expect_punct(")")
        return Lens(p, q)

    def sfs(self) -> SeifertData:
        self.expect_name()
        self.expect_punct("[")
        base_token = self.expect_name()
        base = _BASES.get(base_token)
        if base is None:
            raise ParseError(
                self.tokens[self.i - 1][2], {"'S2'", "'RP2'", "'D2'", "'Mb'"},
                repr(base_token),
            )
        self.expect_punct(":")
        fibers = []
        while self.at_punct("("):
            fibers.append(self.fiber())
        self.expect_punct("]")
        return SeifertData(base, tuple(fibers))

    def fiber(self) -> tuple[int, int]:
        self.expect_punct("(")
        a = self.expect_int()
        self.expect_punct(",")
        b = self.expect_int()
        self.expect_punct(")")
        return (a, b)

    def graph(self) -> GraphDescription:
        self.expect_name()
        self.expect_punct("{")
        names: dict[str, int] = {}
        nodes: list[SeifertData] = []
        edges: list[GraphEdge] = []
        while True:
            kind, value, offset = self.peek()
            if kind != "name":
                self.fail({"node name", "'e'"})
            if value == "e" and self.tokens[self.i + 1][1] == ":":
                self.advance()
                self.expect_punct(":")
                edges.append(self.edge(names))
            else:
                name = self.expect_name()
                if name in names:
                    raise ParseError(offset, {"fresh node name"}, repr(name))
                self.expect_punct("=")
                names[name] = len(nodes)
                nodes.append(self.sfs())
            if self.at_punct(";"):
                self.advance()
                continue
            self.expect_punct("}")
            break
        return GraphDescription(tuple(nodes), tuple(edges))

    def edge(self, names: dict[str, int]) -> GraphEdge:
        node_a, slot_a = self.node_ref(names)
        self.expect_punct("-")
        node_b, slot_b = self.node_ref(names)
        self.expect_punct("[")
        a = self.expect_int()
        self.expect_punct(",")
        b = self.expect_int()
        self.expect_punct(";")
        c = self.expect_int()
        self.expect_punct(",")
        d = self.expect_int()
        self.expect_punct("]")
        return GraphEdge(node_a, slot_a, node_b, slot_b, BasisChange(a, b, c, d))

    def node_ref(self, names: dict[str, int]) -> tuple[int, int]:
        kind, value, offset = self.peek()
        name = self.expect_name()
        if name not in names:
            raise ParseError(offset, {"defined node name"}, repr(name))
        self.expect_punct(".")
        slot = self.expect_int()
        return names[name], slot


_BASES = {"S2": S2, "RP2": RP2, "D2": D2, "Mb": MOBIUS}
_BASE_TOKENS = {v: k for k, v in _BASES.items()}


def parse_description(text: str) -> ManifoldDescription:
    """Parse a description; raises ParseError or a domain invariant error.

    The result is validated but not normalized, so printed fiber pairs
    like (9,-7) survive as written.
    """
    return _Parser(text).description()


def _render_sfs(sd: SeifertData) -> str:
    token = _BASE_TOKENS.get(sd.base)
    if token is None:
        raise InvariantError(f"base {sd.base} is outside the description grammar")
    fibers = "".join(f" ({a},{b})" for a, b in sd.fibers)
    return f"SFS[{token}:{fibers}]"


def render_description(d: ManifoldDescription) -> str:
    """Text form of a description; parse_description inverts it."""
    if isinstance(d, Named):
        return d.kind
    if isinstance(d, Lens):
        return f"L({d.p},{d.q})"
    if isinstance(d, Sol):
        return "SOL"
    if isinstance(d, HypPiece):
        return "HYP_PIECE"
    if isinstance(d, Seifert):
        return _render_sfs(d.data)
    if isinstance(d, Graph):
        g = d.data
        parts = [f"n{i} = {_render_sfs(node)}" for i, node in enumerate(g.nodes)]
        for e in g.edges:
            m = e.gluing
            parts.append(
                f"e: n{e.node_a}.{e.slot_a} - n{e.node_b}.{e.slot_b} "
                f"[{m.a},{m.b};{m.c},{m.d}]"
            )
        return "GRAPH{ " + "; ".join(parts) + " }"
    if isinstance(d, ConnectedSum):
        return " # ".join(render_description(s) for s in d.summands)
    raise InvariantError(f"cannot render {d!r}")


# census files ----------------------------------------------------------

MANIFOLD_HEADER = ["name", "tets", "m_re", "m_im", "l_re", "l_im", "knot_exterior"]
FILLING_HEADER = ["name", "p", "q", "description"]

# tetrahedron count implied by each census name prefix
_PREFIX_TETS = (("o9_", (9, 9)), ("m", (1, 5)), ("s", (6, 6)), ("v", (7, 7)), ("t", (8, 8)))


@dataclass(frozen=True)
class ManifoldRecord:
    name: str
    tetrahedra: int
    translations: CuspTranslations
    knot_exterior: bool


@dataclass(frozen=True)
class FillingRecord:
    manifold: str
    slope: Slope
    description: ManifoldDescription


@dataclass
class Census:
    manifolds: dict[str, ManifoldRecord] = field(default_factory=dict)
    fillings: list[FillingRecord] = field(default_factory=list)

    def fillings_by_manifold(self) -> dict[str, list[FillingRecord]]:
        out: dict[str, list[FillingRecord]] = {name: [] for name in self.manifolds}
        for f in self.fillings:
            out.setdefault(f.manifold, []).append(f)
        return out


class SchemaError(ValueError):
    """A census file has the wrong header."""


@dataclass(frozen=True)
class RowError:
    file: str
    line: int
    message: str

    def __str__(self):
        return f"{self.file}:{self.line}: {self.message}"


class CensusLoadError(ValueError):
    """All row-level problems found while loading a census."""

    def __init__(self, errors: list[RowError]):
        self.errors = list(errors)
        preview = "\n".join(str(e) for e in self.errors[:20])
        extra = len(self.errors) - 20
        if extra > 0:
            preview += f"\n... and {extra} more"
        super().__init__(f"{len(self.errors)} invalid rows:\n{preview}")


def _check_name_prefix(name: str, tets: int) -> str | None:
    for prefix, (lo, hi) in _PREFIX_TETS:
        if name.startswith(prefix):
            if not lo <= tets <= hi:
                return f"name {name!r} implies {lo}..{hi} tetrahedra, row says {tets}"
            return None
    return f"name {name!r} has no recognized census prefix"


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "1"):
        return True
    if lowered in ("false", "0"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _read_rows(path, header):
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            first = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, expected header {','.join(header)}")
        if [h.strip() for h in first] != header:
            raise SchemaError(
                f"{path}: bad header {','.join(first)!r}, expected {','.join(header)}"
            )
        return list(reader)


def load_census(manifolds_path, fillings_path) -> Census:
    """Load and fully validate the two census files.

    Raises OSError for unreadable files, SchemaError for a bad header, and
    CensusLoadError carrying every row-level problem at once.
    """
    errors: list[RowError] = []
    census = Census()

    for line, row in enumerate(_read_rows(manifolds_path, MANIFOLD_HEADER), start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(MANIFOLD_HEADER):
            errors.append(RowError(str(manifolds_path), line, f"expected {len(MANIFOLD_HEADER)} fields"))
            continue
        name = row[0].strip()
        try:
            tets = int(row[1])
            translations = CuspTranslations(
                complex(float(row[2]), float(row[3])),
                complex(float(row[4]), float(row[5])),
            )
            knot = _parse_bool(row[6])
        except ValueError as exc:
            errors.append(RowError(str(manifolds_path), line, str(exc)))
            continue
        if not 1 <= tets <= 9:
            errors.append(RowError(str(manifolds_path), line, f"tets {tets} outside 1..9"))
            continue
        prefix_problem = _check_name_prefix(name, tets)
        if prefix_problem:
            errors.append(RowError(str(manifolds_path), line, prefix_problem))
            continue
        if name in census.manifolds:
            errors.append(RowError(str(manifolds_path), line, f"duplicate manifold {name!r}"))
            continue
        census.manifolds[name] = ManifoldRecord(name, tets, translations, knot)

    seen_fillings = set()
    for line, row in enumerate(_read_rows(fillings_path, FILLING_HEADER), start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(FILLING_HEADER):
            errors.append(RowError(str(fillings_path), line, f"expected {len(FILLING_HEADER)} fields"))
            continue
        name = row[0].strip()
        if name not in census.manifolds:
            errors.append(RowError(str(fillings_path), line, f"unknown manifold {name!r}"))
            continue
        try:
            slope = canonical_slope(int(row[1]), int(row[2]))
        except ValueError as exc:
            errors.append(RowError(str(fillings_path), line, str(exc)))
            continue
        key = (name, slope)
        if key in seen_fillings:
            errors.append(RowError(str(fillings_path), line, f"duplicate filling {name}{slope}"))
            continue
        try:
            description = normalize_description(parse_description(row[3]))
        except ValueError as exc:
            errors.append(RowError(str(fillings_path), line, str(exc)))
            continue
        seen_fillings.add(key)
        census.fillings.append(FillingRecord(name, slope, description))

    if errors:
        raise CensusLoadError(errors)
    return census

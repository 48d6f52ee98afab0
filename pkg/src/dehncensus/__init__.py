"""Computational toolkit for censuses of exceptional Dehn fillings.

Exact slope algebra, cusp-lattice geometry and short-slope enumeration,
Seifert and graph-manifold normal forms with minimality certification, a
type taxonomy for nonhyperbolic fillings, a description-grammar parser
with CSV census ingestion, and the analytics suite that checks census
data against its expected counts and structure.
"""

from .analytics import (
    CheckResult,
    MissingTranslations,
    ShortSlopeAudit,
    conjecture_suite,
    delta_extremes,
    e_histogram,
    longest_slopes,
    short_slope_audit,
    slope_suite,
    type_table,
)
from .census_io import (
    Census,
    CensusLoadError,
    FillingRecord,
    ManifoldRecord,
    ParseError,
    RowError,
    SchemaError,
    load_census,
    parse_description,
    render_description,
)
from .cusp_geometry import (
    CuspTranslations,
    DegenerateLattice,
    cusp_area,
    cyclic_cover_translations,
    enumerate_short_slopes,
    slope_length,
)
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
from .graph_manifold import (
    CertificationReport,
    GraphDescription,
    GraphEdge,
    GraphShape,
    certify_minimal,
    edge_fibers_match,
    graph_shape,
    is_solid_torus_node,
)
from .seifert import (
    AbelianGroup,
    BaseSurface,
    Pi1Class,
    SeifertData,
    classify_two_fiber,
    euler_number,
    fiber_swap,
    first_homology,
    normalize_seifert,
    pi1_class,
    spherical_order,
)
from .slope_algebra import (
    BasisChange,
    NotPrimitive,
    NotUnimodular,
    Slope,
    ZeroVector,
    canonical_slope,
    change_basis,
    distance,
    is_integral,
)

__version__ = "0.1.0"

"""Census-level statistics and the consistency-check suite.

The checks encode the counts and structural claims the full census data
release is expected to satisfy: total filling count, the distribution of
fillings per manifold, the knot-exterior suite, connected-sum structure,
finite and toroidal filling maxima, intersection-number extremes, and the
short-slope geometry behind the 6-theorem reduction.  The named-manifold
lists are embedded so the checks compare set equality, not just
cardinality.

On small fixture censuses the dataset-calibrated cardinalities simply
fail, with observed values in the report; that is the intended behavior,
failures are results rather than errors.
"""

from dataclasses import dataclass

from .census_io import Census, FillingRecord
from .cusp_geometry import (
    CuspTranslations,
    cusp_area,
    cyclic_cover_translations,
    enumerate_short_slopes,
    slope_length,
)
from .descriptions import (
    ConnectedSum,
    Lens,
    ManifoldDescription,
    Named,
    Seifert,
    normalize_description,
)
from .seifert import MOBIUS, RP2, S2
from .slope_algebra import Slope, distance, is_integral
from .taxonomy import TypeLabel, property_set, resolve_type

__all__ = [
    "CheckResult",
    "MissingTranslations",
    "ShortSlopeAudit",
    "Extreme",
    "e_histogram",
    "type_table",
    "delta_extremes",
    "longest_slopes",
    "conjecture_suite",
    "slope_suite",
    "short_slope_audit",
    "MERIDIAN",
    "EXPECTED",
    "HIGH_E_MANIFOLDS",
    "FINITE_NONABELIAN_MANIFOLDS",
    "TOROIDAL_MAX_MANIFOLDS",
    "THREE_SUMMAND_FILLINGS",
    "PREFERRED_SUMMANDS",
]


class MissingTranslations(ValueError):
    """A manifold record lacks usable cusp translations."""


MERIDIAN = Slope(1, 0)

# Expected values for the full census data release.
EXPECTED = {
    "total_fillings": 205822,
    "knot_exteriors": 1267,
    "knot_nontrivial_fillings": 2615,
    "knot_lens_fillings": 178,
    "knot_seifert_fillings": 1143,
    "spherical_fillings": 59200,
    "two_sum_manifolds": 14,
    "max_e": 10,
    "high_e_threshold": 7,
    "finite_nonabelian_max": 3,
    "toroidal_max": 4,
    "delta_max": 8,
    "delta_ge5_manifolds": 4,
    "short_slope_total": 355128,
    "nonexceptional_short_slopes": 149306,
    "short_slope_rel_tol": 0.01,
    "lens_extreme": ("o9_18855", Slope(1, 1), 3.92794, 1e-4),
    "cover_meridian": ("s546", Slope(-1, 1), 17, 4.442966, 1e-4),
}

# The eleven manifolds carrying seven or more exceptional fillings.
HIGH_E_MANIFOLDS = frozenset(
    {"m003", "m004", "m006", "m007", "m009", "m016",
     "m017", "m023", "m035", "m038", "m039"}
)

# The four manifolds attaining three finite-nonabelian fillings.
FINITE_NONABELIAN_MANIFOLDS = frozenset({"m011", "s757", "v2702", "v2797"})

# The 27 manifolds attaining four toroidal fillings.
TOROIDAL_MAX_MANIFOLDS = frozenset(
    {"s772", "s778", "s911", "v2640", "t08282", "t11538", "t12033", "t12035",
     "t12036", "t12041", "t12043", "t12045", "t12050", "t12548", "t12648",
     "o9_35259", "o9_36732", "o9_37030", "o9_38039", "o9_39094", "o9_40054",
     "o9_41000", "o9_41004", "o9_41006", "o9_41007", "o9_41008", "o9_43799"}
)

# The only fillings with three or more connected summands.
THREE_SUMMAND_FILLINGS = frozenset(
    {("o9_39343", Slope(1, 0)), ("o9_41447", Slope(1, 0)), ("o9_43255", Slope(1, 0))}
)

# Every double connected-sum filling should carry one of these summands.
PREFERRED_SUMMANDS = (
    normalize_description(Named("RP3")),
    normalize_description(Lens(3, 1)),
    normalize_description(Lens(4, 1)),
)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    observed: object
    expected: object
    witnesses: tuple[tuple[str, str], ...] = ()

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.check_id}: observed={self.observed} expected={self.expected}"
        if self.witnesses and not self.passed:
            shown = ", ".join(f"{m}{s}" for m, s in self.witnesses[:8])
            more = len(self.witnesses) - 8
            text += f" witnesses: {shown}"
            if more > 0:
                text += f" (+{more} more)"
        return text


def _check(check_id, passed, observed, expected, witnesses=()):
    return CheckResult(check_id, bool(passed), observed, expected, tuple(witnesses))


def _labels(census: Census) -> list[TypeLabel]:
    cache: dict[ManifoldDescription, TypeLabel] = {}
    out = []
    for f in census.fillings:
        label = cache.get(f.description)
        if label is None:
            label = resolve_type(f.description)
            cache[f.description] = label
        out.append(label)
    return out


def _translations(census: Census, name: str) -> CuspTranslations:
    record = census.manifolds[name]
    if record.translations is None:
        raise MissingTranslations(f"manifold {name} has no cusp translations")
    return record.translations


# statistics -------------------------------------------------------------


def e_histogram(census: Census) -> dict[int, int]:
    """Map e -> number of manifolds with exactly e exceptional fillings."""
    per_manifold = {name: 0 for name in census.manifolds}
    for f in census.fillings:
        per_manifold[f.manifold] = per_manifold.get(f.manifold, 0) + 1
    hist: dict[int, int] = {}
    for count in per_manifold.values():
        hist[count] = hist.get(count, 0) + 1
    return dict(sorted(hist.items()))


def type_table(census: Census) -> dict[TypeLabel, int]:
    """Filling counts per resolved type, zero rows included."""
    table = {label: 0 for label in TypeLabel}
    for label in _labels(census):
        table[label] += 1
    return table


@dataclass(frozen=True)
class Extreme:
    """A maximal observed value with every witness attaining it."""

    value: object
    witnesses: tuple = ()


def delta_extremes(census: Census) -> dict[tuple[TypeLabel, TypeLabel], Extreme]:
    """Per unordered type pair, the largest intersection number of slope pairs.

    Every pair of exceptional slopes of the same manifold contributes to
    the pair of its two filling types.  Witnesses are
    (manifold, slope, slope) triples.
    """
    labels = _labels(census)
    rows: dict[str, list[tuple[Slope, TypeLabel]]] = {}
    for f, label in zip(census.fillings, labels):
        rows.setdefault(f.manifold, []).append((f.slope, label))
    out: dict[tuple[TypeLabel, TypeLabel], Extreme] = {}
    for name, items in rows.items():
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                slope_i, label_i = items[i]
                slope_j, label_j = items[j]
                key = tuple(sorted((label_i, label_j), key=lambda t: t.value))
                delta = distance(slope_i, slope_j)
                witness = (name, str(slope_i), str(slope_j))
                known = out.get(key)
                if known is None or delta > known.value:
                    out[key] = Extreme(delta, (witness,))
                elif delta == known.value:
                    out[key] = Extreme(delta, known.witnesses + (witness,))
    return out


def longest_slopes(census: Census) -> dict[TypeLabel, Extreme]:
    """Per type, the longest exceptional slope on its manifold's horotorus."""
    labels = _labels(census)
    out: dict[TypeLabel, Extreme] = {}
    for f, label in zip(census.fillings, labels):
        length = slope_length(_translations(census, f.manifold), f.slope)
        witness = (f.manifold, str(f.slope))
        known = out.get(label)
        if known is None or length > known.value:
            out[label] = Extreme(length, (witness,))
        elif length == known.value:
            out[label] = Extreme(length, known.witnesses + (witness,))
    return out


@dataclass
class ShortSlopeAudit:
    total: int
    per_manifold: dict[str, int]
    uncovered: tuple[tuple[str, Slope], ...]


def short_slope_audit(census: Census, bound: float) -> ShortSlopeAudit:
    """Enumerate short slopes per manifold and compare with the filling list.

    `uncovered` collects exceptional slopes that are not short, which
    would contradict the 6-theorem reduction when the bound is 6.
    """
    per_manifold: dict[str, int] = {}
    short_sets: dict[str, set[Slope]] = {}
    for name in census.manifolds:
        short = enumerate_short_slopes(_translations(census, name), bound)
        per_manifold[name] = len(short)
        short_sets[name] = set(short)
    uncovered = tuple(
        (f.manifold, f.slope)
        for f in census.fillings
        if f.slope not in short_sets[f.manifold]
    )
    return ShortSlopeAudit(sum(per_manifold.values()), per_manifold, uncovered)


# check suites -----------------------------------------------------------


def _is_sum(d: ManifoldDescription) -> bool:
    return isinstance(d, ConnectedSum)


def _knot_checks(census: Census, labels) -> list[CheckResult]:
    knots = {name for name, rec in census.manifolds.items() if rec.knot_exterior}
    nontrivial = [
        (f, label)
        for f, label in zip(census.fillings, labels)
        if f.manifold in knots and f.slope != MERIDIAN
    ]
    sums = [
        (f.manifold, str(f.slope))
        for f in census.fillings
        if f.manifold in knots and _is_sum(f.description)
    ]
    lens_count = sum(label is TypeLabel.LENS_SPACE for _, label in nontrivial)
    seifert = [
        (f, label)
        for f, label in nontrivial
        if label in (TypeLabel.SEIFERT_FIBERED, TypeLabel.FINITE_NONCYCLIC)
    ]
    bad_seifert = []
    for f, _ in seifert:
        ok = is_integral(f.slope, MERIDIAN)
        if ok and isinstance(f.description, Seifert):
            data = f.description.data
            exceptional = len(data.exceptional_fibers)
            ok = (data.base == S2 and exceptional == 3) or (
                data.base == RP2 and exceptional == 2
            )
        if not ok:
            bad_seifert.append((f.manifold, str(f.slope)))
    return [
        _check("knots.count", len(knots) == EXPECTED["knot_exteriors"],
               len(knots), EXPECTED["knot_exteriors"]),
        _check("knots.total", len(nontrivial) == EXPECTED["knot_nontrivial_fillings"],
               len(nontrivial), EXPECTED["knot_nontrivial_fillings"]),
        _check("knots.cabling", not sums, len(sums), 0, sums),
        _check("knots.lens", lens_count == EXPECTED["knot_lens_fillings"],
               lens_count, EXPECTED["knot_lens_fillings"]),
        _check(
            "knots.sfs_integral",
            len(seifert) == EXPECTED["knot_seifert_fillings"] and not bad_seifert,
            {"count": len(seifert), "violations": len(bad_seifert)},
            {"count": EXPECTED["knot_seifert_fillings"], "violations": 0},
            bad_seifert,
        ),
    ]


def _sum_checks(census: Census) -> list[CheckResult]:
    sums_by_manifold: dict[str, list[FillingRecord]] = {}
    for f in census.fillings:
        if _is_sum(f.description):
            sums_by_manifold.setdefault(f.manifold, []).append(f)
    two = {name for name, rows in sums_by_manifold.items() if len(rows) == 2}
    more = {name for name, rows in sums_by_manifold.items() if len(rows) > 2}
    bad_summands = []
    for name in sorted(two):
        for f in sums_by_manifold[name]:
            if not any(s in PREFERRED_SUMMANDS for s in f.description.summands):
                bad_summands.append((name, str(f.slope)))
    observed_three = {
        (f.manifold, f.slope)
        for f in census.fillings
        if _is_sum(f.description) and len(f.description.summands) >= 3
    }
    return [
        _check(
            "sums.two",
            len(two) == EXPECTED["two_sum_manifolds"] and not more,
            {"two": len(two), "more": sorted(more)},
            {"two": EXPECTED["two_sum_manifolds"], "more": []},
            [(name, "") for name in sorted(more)],
        ),
        _check("sums.summand", not bad_summands,
               len(bad_summands), 0, bad_summands),
        _check(
            "sums.three",
            observed_three == THREE_SUMMAND_FILLINGS,
            sorted(f"{m}{s}" for m, s in observed_three),
            sorted(f"{m}{s}" for m, s in THREE_SUMMAND_FILLINGS),
            [(m, str(s)) for m, s in sorted(observed_three - THREE_SUMMAND_FILLINGS)],
        ),
    ]


def _misc_checks(census: Census, labels) -> list[CheckResult]:
    finite_counts: dict[str, int] = {}
    toroidal_counts: dict[str, int] = {}
    for f, label in zip(census.fillings, labels):
        if label is TypeLabel.FINITE_NONCYCLIC:
            finite_counts[f.manifold] = finite_counts.get(f.manifold, 0) + 1
        if property_set(f.description).is_toroidal:
            toroidal_counts[f.manifold] = toroidal_counts.get(f.manifold, 0) + 1
    finite_max = max(finite_counts.values(), default=0)
    finite_best = {n for n, c in finite_counts.items() if c >= EXPECTED["finite_nonabelian_max"]}
    toroidal_max = max(toroidal_counts.values(), default=0)
    toroidal_best = {n for n, c in toroidal_counts.items() if c >= EXPECTED["toroidal_max"]}

    s2xs1_hosts = {
        f.manifold for f in census.fillings if f.description == Named("S2xS1")
    }
    s2xs1_sums = [
        (f.manifold, str(f.slope))
        for f in census.fillings
        if f.manifold in s2xs1_hosts and _is_sum(f.description)
    ]

    per_manifold = {name: 0 for name in census.manifolds}
    for f in census.fillings:
        per_manifold[f.manifold] += 1
    e_max = max(per_manifold.values(), default=0)
    high_e = {n for n, c in per_manifold.items() if c >= EXPECTED["high_e_threshold"]}

    extremes = delta_extremes(census)
    delta_max = max((e.value for e in extremes.values()), default=0)
    delta_witnesses = []
    ge5 = set()
    for e in extremes.values():
        for name, sa, sb in e.witnesses:
            if e.value > EXPECTED["delta_max"]:
                delta_witnesses.append((name, f"{sa}&{sb}"))
            if e.value >= 5:
                ge5.add(name)

    return [
        _check(
            "finite.nonabelian",
            finite_max <= EXPECTED["finite_nonabelian_max"]
            and finite_best == FINITE_NONABELIAN_MANIFOLDS,
            {"max": finite_max, "attained": sorted(finite_best)},
            {"max": EXPECTED["finite_nonabelian_max"],
             "attained": sorted(FINITE_NONABELIAN_MANIFOLDS)},
            [(n, "") for n in sorted(finite_best ^ FINITE_NONABELIAN_MANIFOLDS)],
        ),
        _check(
            "toroidal.max",
            toroidal_max <= EXPECTED["toroidal_max"]
            and toroidal_best == TOROIDAL_MAX_MANIFOLDS,
            {"max": toroidal_max, "attained": sorted(toroidal_best)},
            {"max": EXPECTED["toroidal_max"],
             "attained": sorted(TOROIDAL_MAX_MANIFOLDS)},
            [(n, "") for n in sorted(toroidal_best ^ TOROIDAL_MAX_MANIFOLDS)],
        ),
        _check("s2xs1.cabling", not s2xs1_sums, len(s2xs1_sums), 0, s2xs1_sums),
        _check(
            "emax",
            e_max <= EXPECTED["max_e"] and high_e == HIGH_E_MANIFOLDS,
            {"max": e_max, "high": sorted(high_e)},
            {"max": EXPECTED["max_e"], "high": sorted(HIGH_E_MANIFOLDS)},
            [(n, "") for n in sorted(high_e ^ HIGH_E_MANIFOLDS)],
        ),
        _check("delta.max", delta_max <= EXPECTED["delta_max"],
               delta_max, EXPECTED["delta_max"], delta_witnesses),
        _check("delta.ge5", len(ge5) == EXPECTED["delta_ge5_manifolds"],
               {"count": len(ge5), "manifolds": sorted(ge5)},
               EXPECTED["delta_ge5_manifolds"]),
    ]


def conjecture_suite(census: Census) -> list[CheckResult]:
    """Run every dataset consistency check; failures are results."""
    labels = _labels(census)
    results = []
    results.append(
        _check("total", len(census.fillings) == EXPECTED["total_fillings"],
               len(census.fillings), EXPECTED["total_fillings"])
    )
    spherical = sum(
        label in (TypeLabel.S3, TypeLabel.LENS_SPACE, TypeLabel.FINITE_NONCYCLIC)
        for label in labels
    )
    results.append(
        _check("spherical", spherical == EXPECTED["spherical_fillings"],
               spherical, EXPECTED["spherical_fillings"])
    )
    results.extend(_knot_checks(census, labels))
    results.extend(_sum_checks(census))
    results.extend(_misc_checks(census, labels))
    return results


def slope_suite(census: Census, bound: float = 6.0) -> list[CheckResult]:
    """Short-slope geometry checks (6-theorem coverage and length extremes)."""
    audit = short_slope_audit(census, bound)
    rel = EXPECTED["short_slope_rel_tol"]
    results = [
        _check(
            "slopes.sixtheorem",
            not audit.uncovered,
            len(audit.uncovered),
            0,
            [(n, str(s)) for n, s in audit.uncovered],
        ),
        _check(
            "slopes.total",
            abs(audit.total - EXPECTED["short_slope_total"])
            <= rel * EXPECTED["short_slope_total"],
            audit.total,
            EXPECTED["short_slope_total"],
        ),
    ]
    nonexceptional = audit.total - (len(census.fillings) - len(audit.uncovered))
    results.append(
        _check(
            "slopes.nonexceptional",
            abs(nonexceptional - EXPECTED["nonexceptional_short_slopes"])
            <= rel * EXPECTED["nonexceptional_short_slopes"],
            nonexceptional,
            EXPECTED["nonexceptional_short_slopes"],
        )
    )

    name, slope, expected_len, tol = EXPECTED["lens_extreme"]
    if name in census.manifolds:
        length = slope_length(_translations(census, name), slope)
        results.append(
            _check("slopes.lens_extreme", abs(length - expected_len) <= tol,
                   round(length, 6), expected_len, [(name, str(slope))])
        )
    else:
        results.append(
            _check("slopes.lens_extreme", False, f"{name} absent", expected_len)
        )

    name, slope, degree, expected_len, tol = EXPECTED["cover_meridian"]
    if name in census.manifolds:
        base = _translations(census, name)
        cover = cyclic_cover_translations(base, degree, slope)
        meridian_len = slope_length(cover, Slope(1, 0))
        area_ratio = cusp_area(cover) / cusp_area(base)
        ok = abs(meridian_len - expected_len) <= tol and abs(area_ratio - degree) <= 1e-9 * degree
        results.append(
            _check("slopes.cover_meridian", ok,
                   {"length": round(meridian_len, 6), "area_ratio": round(area_ratio, 9)},
                   {"length": expected_len, "area_ratio": degree},
                   [(name, str(slope))])
        )
    else:
        results.append(
            _check("slopes.cover_meridian", False, f"{name} absent", expected_len)
        )
    return results

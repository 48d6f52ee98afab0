import math
from random import Random

import pytest

from dehncensus.cusp_geometry import (
    CuspTranslations,
    DegenerateLattice,
    cusp_area,
    cyclic_cover_translations,
    enumerate_short_slopes,
    slope_length,
)
from dehncensus.slope_algebra import Slope, canonical_slope

from _helpers import brute_force_short_slopes, random_lattice, random_slope

SQUARE = CuspTranslations(1 + 0j, 1j)


def test_slope_length_examples():
    tall = CuspTranslations(1 + 0j, 2.5j)
    assert slope_length(tall, Slope(1, 0)) == pytest.approx(1.0)
    assert slope_length(tall, Slope(0, 1)) == pytest.approx(2.5)
    assert slope_length(SQUARE, Slope(3, 4)) == pytest.approx(5.0)


def test_cusp_area_examples():
    assert cusp_area(SQUARE) == pytest.approx(1.0)
    assert cusp_area(CuspTranslations(2 + 0j, 1j)) == pytest.approx(2.0)
    assert cusp_area(CuspTranslations(1 + 1j, 1 - 1j)) == pytest.approx(2.0)
    with pytest.raises(DegenerateLattice):
        CuspTranslations(1 + 1j, 2 + 2j)


def test_enumerate_examples():
    assert enumerate_short_slopes(SQUARE, 1) == [Slope(0, 1), Slope(1, 0)]
    assert enumerate_short_slopes(SQUARE, 1.5) == [
        Slope(-1, 1), Slope(0, 1), Slope(1, 0), Slope(1, 1),
    ]
    expected = brute_force_short_slopes(SQUARE, 6)
    assert enumerate_short_slopes(SQUARE, 6) == expected


def test_enumerate_output_contract():
    rng = Random(11)
    for _ in range(25):
        t = random_lattice(rng)
        out = enumerate_short_slopes(t, rng.uniform(1.0, 6.0))
        assert out == sorted(out)
        assert len(set(out)) == len(out)
        for s in out:
            assert isinstance(s, Slope)  # construction enforces canonical form
    with pytest.raises(ValueError):
        enumerate_short_slopes(SQUARE, 0)


def test_enumerate_matches_brute_force_on_skew_lattice():
    skew = CuspTranslations(1 + 0j, 0.1 + 0.1j)
    for bound in (0.5, 1.0, 2.0):
        assert enumerate_short_slopes(skew, bound) == brute_force_short_slopes(skew, bound)


def test_enumerate_scaling_invariance():
    rng = Random(12)
    for _ in range(20):
        t = random_lattice(rng)
        bound = rng.uniform(1.0, 4.0)
        r = rng.uniform(0.5, 3.0)
        scaled = CuspTranslations(r * t.m, r * t.l)
        assert enumerate_short_slopes(scaled, r * bound) == enumerate_short_slopes(t, bound)
        s = random_slope(rng, span=4)
        assert slope_length(scaled, s) == pytest.approx(r * slope_length(t, s))


def test_cyclic_cover_examples():
    five = cyclic_cover_translations(SQUARE, 5, Slope(1, 0))
    assert five.m == 1 + 0j
    assert five.l == 5j
    assert slope_length(five, Slope(1, 0)) == pytest.approx(1.0)
    assert cusp_area(five) == pytest.approx(5.0)

    # degree 1 keeps the lattice up to basis change: same length spectrum
    one = cyclic_cover_translations(SQUARE, 1, canonical_slope(1, 1))
    assert cusp_area(one) == pytest.approx(1.0)
    spectrum = [slope_length(SQUARE, s) for s in enumerate_short_slopes(SQUARE, 3)]
    cover_spectrum = [slope_length(one, s) for s in enumerate_short_slopes(one, 3)]
    assert sorted(spectrum) == pytest.approx(sorted(cover_spectrum))

    # degree 2 cover keeping (1,1): the lifted slope has length sqrt(2)
    two = cyclic_cover_translations(SQUARE, 2, canonical_slope(1, 1))
    shortest = min(
        slope_length(two, s) for s in brute_force_short_slopes(two, 3)
    )
    assert slope_length(two, Slope(1, 0)) == pytest.approx(math.sqrt(2))
    assert shortest <= math.sqrt(2) + 1e-12


def test_cyclic_cover_properties():
    rng = Random(13)
    for _ in range(50):
        t = random_lattice(rng)
        n = rng.randint(1, 40)
        invariant = random_slope(rng, span=6)
        cover = cyclic_cover_translations(t, n, invariant)
        downstairs = slope_length(t, invariant)
        upstairs = slope_length(cover, Slope(1, 0))
        assert abs(upstairs - downstairs) <= 1e-12 * downstairs
        assert abs(cusp_area(cover) - n * cusp_area(t)) <= 1e-12 * n * cusp_area(t)
    with pytest.raises(ValueError):
        cyclic_cover_translations(SQUARE, 0, Slope(1, 0))


def test_cover_lattice_is_sublattice():
    rng = Random(14)
    for _ in range(50):
        t = random_lattice(rng)
        n = rng.randint(1, 12)
        invariant = random_slope(rng, span=6)
        cover = cyclic_cover_translations(t, n, invariant)
        # both cover basis vectors must be integer combinations of (m, l)
        for w in (cover.m, cover.l):
            det = (t.m.conjugate() * t.l).imag
            a = (w * t.l.conjugate()).imag / -det
            b = (w * t.m.conjugate()).imag / det
            assert abs(a - round(a)) < 1e-9
            assert abs(b - round(b)) < 1e-9

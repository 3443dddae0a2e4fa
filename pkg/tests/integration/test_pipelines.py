"""End-to-end checks that chain several layers on seeded random inputs."""

import random

import pytest

from normslab.core.cyclotomic import lam, minimal_polynomial
from normslab.core.normsfield import fon_add, series_to_sequence
from normslab.core.oortlift import KummerCoverSpec, threshold_level, verify
from normslab.core.powerseries import (
    DistinguishedPoly,
    PowerSeriesElt,
    RationalSection,
    ZpRing,
    specialization_valuation,
    specialize,
    weierstrass_prepare,
)


def _random_series(rng, p, degree):
    return {i: rng.randrange(p) for i in range(degree + 1)}


def test_norm_of_uniformizer_chain():
    """Test N(lambda_{m+1}) = lambda_m along the tower."""
    for p, top in [(3, 4), (5, 2)]:
        for m in range(1, top):
            assert (lam(p, m + 1).norm_down() - lam(p, m)).is_zero()


def test_minimal_polynomial_coefficients_grow():
    """Test that the middle coefficients gain valuation going up the tower."""
    p = 3
    valuations = [
        [a.valuation for a in minimal_polynomial(p, m)[1:p]] for m in (1, 2, 3)
    ]
    for lower, upper in zip(valuations, valuations[1:]):
        assert all(u > v for u, v in zip(upper, lower))


@pytest.mark.slow
def test_prepare_random_series():
    """Test 200 random series over Z_3 at Z-precision 30."""
    rng = random.Random(2024)
    ring = ZpRing(3, 20)
    for _ in range(200):
        coeffs = [3 * rng.randrange(3**19) for _ in range(31)]
        first_unit = rng.randrange(31)
        coeffs[first_unit] = 3 * rng.randrange(3**18) + rng.randrange(1, 3)
        for i in range(first_unit + 1, 31):
            coeffs[i] = rng.randrange(3**20)
        g = PowerSeriesElt.from_ints(ring, coeffs, M=30)
        fac = weierstrass_prepare(g)
        assert fac.c == 0
        assert fac.f.degree == first_unit
        assert fac.reconstruct(ring).agrees_with(g)


def test_random_sections_specialize_to_predicted_valuation():
    """Test c e_m + d1 - d2 against evaluation at lambda_m for m = 2, 3, 4."""
    rng = random.Random(17)
    ring = ZpRing(3, 20)
    for trial in range(50):
        m = 2 + trial % 3
        # d1 + d2 stays below nu_2(3) = 6
        d1, d2 = rng.randrange(3), rng.randrange(3)
        f1 = DistinguishedPoly.from_ints(ring, [3 * rng.randrange(1, 100) for _ in range(d1)])
        f2 = DistinguishedPoly.from_ints(ring, [3 * rng.randrange(1, 100) for _ in range(d2)])
        U = PowerSeriesElt.from_ints(
            ring, [rng.randrange(1, 3)] + [rng.randrange(27) for _ in range(3)], exact=True
        )
        A = RationalSection(rng.randrange(3), f1, U, f2)
        expected = specialization_valuation(A, m)
        assert expected >= -d2
        assert specialize(A, lam(3, m)).valuation == expected


@pytest.mark.slow
def test_series_limit_sums_satisfy_congruence():
    """Test the additive congruence on 50 sums of two series images, levels 1..3."""
    rng = random.Random(8)
    for _ in range(50):
        alpha = series_to_sequence(_random_series(rng, 3, 3), 3, 1, 4, 4)
        beta = series_to_sequence(_random_series(rng, 3, 3), 3, 1, 4, 4)
        assert fon_add(alpha, beta, 4, top=3).congruence.passed


@pytest.mark.slow
def test_series_images_match_naive_evaluation():
    """Test g(pi) against g(lambda_m) for 20 random g of degree at most 6."""
    rng = random.Random(31)
    for _ in range(20):
        sequence = series_to_sequence(_random_series(rng, 3, 6), 3, 1, 3, 3)
        assert sequence.depth_range == (1, 3)


@pytest.mark.slow
@pytest.mark.parametrize("p, c, extra", [(3, 1, 2), (3, 2, 2), (3, 4, 2), (5, 1, 2)])
@pytest.mark.parametrize("twisted", [False, True])
def test_verify_passes(p, c, extra, twisted):
    """Test the full verification with W = 1 and W = 1 + Z^{2c}."""
    w = f"1 + Z^{2 * c}" if twisted else "1"
    spec = KummerCoverSpec.from_text(p, c, w)
    report = verify(spec, extra=extra)
    assert report.m_0 == threshold_level(spec)
    assert report.verdict == "pass", report.first_failure
    assert all(level.d_m == report.d_eta for level in report.levels)

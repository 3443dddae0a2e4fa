"""Unit tests for arithmetic in the cyclotomic tower."""

import random

import pytest

from normslab.core.cyclotomic import (
    CycloElement,
    GaloisElement,
    lam,
    minimal_polynomial,
    minimal_polynomial_of_generator,
    poly_eval,
    random_element,
    tower_level,
    zeta,
)
from normslab.core.errors import (
    CoercionFailure,
    DivisionByApparentZero,
    LevelMismatch,
    PrecisionExhausted,
)
from normslab.core.padics import INFINITY, valuation_of_int


@pytest.fixture
def rng():
    return random.Random(1729)


def _nonzero(level, rng, prec=20, integral=False):
    while True:
        x = random_element(level, rng, prec, integral)
        if not x.is_zero():
            return x


def test_tower_level_degrees():
    """Test e_m = (p - 1) p^(m - 1) and the cached level handles."""
    assert tower_level(3, 1).degree == 2
    assert tower_level(3, 3).degree == 18
    assert tower_level(5, 2).degree == 20
    assert tower_level(3, 0).degree == 1
    assert tower_level(3, 2) is tower_level(3, 2)


def test_minpoly_is_eisenstein():
    """Test that Phi_{p^m}(1 + X) is monic Eisenstein."""
    for p, m in [(3, 1), (3, 2), (5, 1), (5, 2)]:
        f = tower_level(p, m).minpoly
        assert len(f) == tower_level(p, m).degree + 1
        assert f[-1] == 1
        assert valuation_of_int(f[0], p) == 1
        assert all(a % p == 0 for a in f[:-1])


def test_lambda_times_inverse_is_one():
    """Test lambda_1 * lambda_1^-1 = 1 at p = 3."""
    x = lam(3, 1)
    assert (x * x.inverse() - 1).is_zero()
    assert x.inverse().valuation == -1


def test_lambda_squared_reduces_by_minpoly():
    """Test lambda^2 = -3 lambda - 3 at p = 3, m = 1."""
    level = tower_level(3, 1)
    x = lam(3, 1)
    assert x * x == CycloElement.from_lambda_coords(level, [-3, -3])


def test_basic_valuations():
    """Test nu_1(3) = 2, nu_2(lambda_2) = 1, nu_2(lambda_1) = 3 and nu_2(3) = 6."""
    level1, level2 = tower_level(3, 1), tower_level(3, 2)
    assert CycloElement.from_rational(level1, 3).valuation == 2
    assert lam(3, 2).valuation == 1
    assert lam(3, 1).embed_up(2).valuation == 3
    assert CycloElement.from_rational(level2, 3).valuation == 6
    assert CycloElement.from_rational(level2, 3).embed_up(3).valuation == 18


def test_zero_valuations():
    """Test exact zeros and zeros at precision."""
    level = tower_level(3, 2)
    assert CycloElement.zero(level).valuation == INFINITY
    z = CycloElement.inexact_zero(level, 7)
    with pytest.raises(PrecisionExhausted):
        _ = z.valuation
    assert z.valuation_lower_bound() == 42


def test_valuation_laws(rng):
    """Test nu(xy) = nu(x) + nu(y) and the ultrametric inequality on random elements."""
    for p, m in [(3, 1), (3, 2), (5, 1)]:
        level = tower_level(p, m)
        for _ in range(20):
            x = _nonzero(level, rng)
            y = _nonzero(level, rng)
            assert (x * y).valuation == x.valuation + y.valuation
            s = x + y
            if s.is_zero():
                continue
            assert s.valuation >= min(x.valuation, y.valuation)
            if x.valuation != y.valuation:
                assert s.valuation == min(x.valuation, y.valuation)


def test_division_round_trip(rng):
    """Test (x / y) * y = x."""
    level = tower_level(3, 2)
    for _ in range(10):
        x = _nonzero(level, rng)
        y = _nonzero(level, rng)
        assert ((x / y) * y - x).is_zero()


def test_exact_rational_scaling():
    """Test multiplication and division by integers and fractions."""
    x = lam(3, 2)
    assert (x * 9).valuation == 13
    assert (x / 3).valuation == -5
    assert ((x * 9) / 9 - x).is_zero()
    with pytest.raises(DivisionByApparentZero):
        x / 0


def test_inverse_of_zero():
    """Test that zeros cannot be inverted."""
    level = tower_level(3, 1)
    with pytest.raises(DivisionByApparentZero):
        CycloElement.zero(level).inverse()
    with pytest.raises(DivisionByApparentZero):
        CycloElement.inexact_zero(level, 4).inverse()


def test_level_mismatch():
    """Test that mixing levels is refused."""
    with pytest.raises(LevelMismatch):
        lam(3, 1) + lam(3, 2)
    with pytest.raises(LevelMismatch):
        lam(3, 2).embed_up(1)
    with pytest.raises(LevelMismatch):
        lam(3, 0)


def test_embed_up():
    """Test the tower inclusion on 1 and on lambda."""
    one = CycloElement.one(tower_level(3, 1))
    assert one.embed_up(3) == CycloElement.one(tower_level(3, 3))
    up = lam(3, 1).embed_up(2)
    assert (up - ((1 + lam(3, 2)) ** 3 - 1)).is_zero()


def test_leading_term():
    """Test leading terms, including the sign of p = -lambda^(p-1) at level 1."""
    assert lam(3, 1).leading_term() == (1, 1)
    assert CycloElement.from_rational(tower_level(3, 1), 3).leading_term() == (2, 2)
    assert CycloElement.from_rational(tower_level(5, 1), 5).leading_term() == (4, 4)
    assert (-lam(5, 2)).leading_term() == (1, 4)


def test_galois_on_lambda():
    """Test sigma_a(lambda) + 1 = (1 + lambda)^a."""
    x = lam(3, 2)
    for a in (2, 4, 5, 7, 8):
        assert (x.galois(a) + 1 - (1 + x) ** a).is_zero()


def test_galois_example_level_one():
    """Test sigma_2(lambda_1) = lambda_1^2 + 2 lambda_1 and nu(sigma(lambda) - lambda) = 1."""
    x = lam(3, 1)
    image = x.galois(2)
    assert (image - (x * x + 2 * x)).is_zero()
    assert (image - x).valuation == 1


def test_galois_identity_and_composition(rng):
    """Test sigma_1 = id and sigma_a sigma_b = sigma_ab."""
    level = tower_level(3, 2)
    for _ in range(5):
        x = _nonzero(level, rng)
        assert x.galois(1) == x
        for a, b in [(2, 4), (5, 7), (8, 8)]:
            assert (x.galois(b).galois(a) - x.galois(a * b)).is_zero()
            assert x.galois(a).valuation == x.valuation
    sigma = GaloisElement(level, 2).compose(GaloisElement(level, 5))
    assert sigma.a == 1


def test_galois_group():
    """Test Gal(L^2 | L^1) at p = 3."""
    group = tower_level(3, 2).galois_group(1)
    assert [s.a for s in group] == [1, 4, 7]
    assert len(tower_level(3, 2).galois_group()) == 6


def test_norm_of_uniformizer():
    """Test N(zeta_9 - 1) = zeta_3 - 1."""
    assert lam(3, 2).norm_down() == lam(3, 1)
    assert lam(5, 2).norm_down() == lam(5, 1)


def test_norm_of_rational():
    """Test N(c) = c^p for c in Q_p."""
    c = CycloElement.from_rational(tower_level(3, 2), 7)
    assert c.norm_down() == CycloElement.from_rational(tower_level(3, 1), 343)


def test_norm_preserves_valuation(rng):
    """Test nu_m(N(x)) = nu_(m+1)(x)."""
    level = tower_level(3, 2)
    for _ in range(10):
        x = _nonzero(level, rng)
        assert x.norm_down(margin=0).valuation == x.valuation


def test_norm_is_multiplicative(rng):
    """Test N(xy) = N(x) N(y)."""
    level = tower_level(3, 2)
    for _ in range(5):
        x = _nonzero(level, rng, integral=True)
        y = _nonzero(level, rng, integral=True)
        lhs = (x * y).norm_down(margin=0)
        rhs = x.norm_down(margin=0) * y.norm_down(margin=0)
        assert (lhs - rhs).is_zero()


def test_norm_of_embedding_is_power(rng):
    """Test N(embed_up(x)) = x^p."""
    level = tower_level(3, 1)
    for _ in range(10):
        x = _nonzero(level, rng)
        assert (x.embed_up(2).norm_down(margin=0) - x**3).is_zero()


def test_coerce_down_refuses_stray_coordinates():
    """Test that lambda_2 is not recognized as an element of L^1."""
    with pytest.raises(CoercionFailure, match="nonzero coordinate"):
        lam(3, 2).coerce_down()
    short = lam(3, 1).embed_up(2).with_precision(2)
    with pytest.raises(CoercionFailure, match="digits left"):
        short.coerce_down(margin=5)


def test_minimal_polynomial_level_one():
    """Test X^3 + 3X^2 + 3X - lambda_1 at p = 3."""
    f = minimal_polynomial(3, 1)
    level = tower_level(3, 1)
    assert f[0] == -lam(3, 1)
    assert f[1] == CycloElement.from_rational(level, 3)
    assert f[2] == CycloElement.from_rational(level, 3)
    assert f[3] == CycloElement.one(level)


def test_minimal_polynomial_middle_coefficients_grow():
    """Test nu_m(a_i) >= e_m with nu_1(a_1) = 2 and nu_2(a_1) = 6."""
    assert minimal_polynomial(3, 1)[1].valuation == 2
    assert minimal_polynomial(3, 2)[1].valuation == 6
    for m in (1, 2, 3):
        f = minimal_polynomial(3, m)
        e = tower_level(3, m).degree
        assert all(a.valuation >= e for a in f[1:-1])


def test_minimal_polynomial_vanishes_at_generator():
    """Test that the minimal polynomial of lambda_(m+1) kills it."""
    for p, m in [(3, 1), (3, 2), (5, 1)]:
        assert poly_eval(minimal_polynomial(p, m), lam(p, m + 1)).is_zero()
    f = minimal_polynomial_of_generator(3, 0, 2)
    assert poly_eval(f, lam(3, 2)).is_zero()


def test_zeta_has_order_p_power():
    """Test zeta_9^9 = 1 and zeta_9^3 = zeta_3 embedded."""
    z = zeta(3, 2)
    assert (z**9 - 1).is_zero()
    assert (z**3 - zeta(3, 1).embed_up(2)).is_zero()


def test_document_round_trip(rng):
    """Test conversion to and from the structured document."""
    for p, m in [(3, 1), (3, 2), (5, 1)]:
        x = _nonzero(tower_level(p, m), rng)
        assert CycloElement.from_document(x.to_document()) == x
    zero = CycloElement.zero(tower_level(3, 2))
    assert CycloElement.from_document(zero.to_document()).is_exact_zero()

"""Unit tests for piecewise-linear functions and ramification filtrations."""

from fractions import Fraction

import pytest

from normslab.core.cyclotomic import GaloisElement, tower_level
from normslab.core.errors import HasseArfViolation, InvalidInput, LevelMismatch, TrivialElement
from normslab.core.ramification import (
    PiecewiseLinearFn,
    apf_first_jump,
    different_from_minpoly,
    filtration,
    herbrand_grid,
    i_value,
    profile_from_i_table,
    quotient_compatible,
    quotient_upper_group,
    r_of_level,
)
from normslab.core.ramification import profile as profile_module


# -- piecewise-linear functions --------------------------------------------


def test_piecewise_from_slopes():
    """Test evaluation of a two-piece function."""
    phi = PiecewiseLinearFn.from_slopes((-1, -1), [0, 2], [1, Fraction(1, 2), Fraction(1, 6)])
    assert phi(-1) == -1
    assert phi(0) == 0
    assert phi(2) == 1
    assert phi(8) == 2
    assert phi(1) == Fraction(1, 2)


def test_piecewise_inverse():
    """Test phi(psi(u)) = u and psi(phi(t)) = t on a grid."""
    phi = PiecewiseLinearFn.from_slopes((-1, -1), [0, 2], [1, Fraction(1, 2), Fraction(1, 6)])
    psi = phi.inverse()
    for k in range(-4, 40):
        t = Fraction(k, 4)
        assert psi(phi(t)) == t
        assert phi(psi(t)) == t


def test_piecewise_drops_collinear_points():
    """Test that equal functions have equal breakpoints."""
    f = PiecewiseLinearFn([(-1, -1), (0, 0), (1, 1)], 1)
    assert f == PiecewiseLinearFn.identity()
    assert f.breakpoints == [(Fraction(-1), Fraction(-1))]


def test_piecewise_compose():
    """Test composition with the inverse gives the identity."""
    phi = PiecewiseLinearFn.from_slopes((-1, -1), [0, 2], [1, Fraction(1, 3), Fraction(1, 9)])
    assert phi.compose(phi.inverse()) == PiecewiseLinearFn.identity()


def test_piecewise_rejects_bad_input():
    """Test validation of breakpoints and slopes."""
    with pytest.raises(InvalidInput):
        PiecewiseLinearFn([(0, 0), (0, 1)], 1)
    with pytest.raises(InvalidInput):
        PiecewiseLinearFn([(0, 0)], 0)
    with pytest.raises(InvalidInput):
        PiecewiseLinearFn.identity()(-2)


# -- i-values ----------------------------------------------------------------


def test_i_value_examples():
    """Test i(sigma_2) = 0 on L^1 | Q_3 and i(sigma_4) = 2 on L^2 | L^1."""
    assert i_value(GaloisElement(tower_level(3, 1), 2), 0) == 0
    assert i_value(GaloisElement(tower_level(3, 2), 4), 1) == 2


def test_i_value_of_identity():
    """Test that the identity has no finite i-value."""
    for p, m in [(3, 1), (5, 2)]:
        with pytest.raises(TrivialElement):
            i_value(GaloisElement(tower_level(p, m), 1), 0)


def test_i_value_requires_element_of_subgroup():
    """Test that sigma must fix the base level."""
    with pytest.raises(InvalidInput, match="does not fix"):
        i_value(GaloisElement(tower_level(3, 2), 2), 1)
    with pytest.raises(LevelMismatch):
        i_value(GaloisElement(tower_level(3, 2), 4), 2)


# -- filtrations -------------------------------------------------------------


def test_profile_first_level():
    """Test L^1 | Q_3: lower jump 0, different 1."""
    profile = filtration(3, 0, 1)
    assert profile.order == 2
    assert profile.lower_jumps == (0,)
    assert profile.upper_jumps == (Fraction(0),)
    assert profile.different_degree == 1
    assert different_from_minpoly(3, 0, 1) == 1
    assert profile.conductor == 1


def test_profile_second_level():
    """Test L^2 | Q_3: lower jumps {0, 2}, upper jumps {0, 1}, different 9."""
    profile = filtration(3, 0, 2)
    assert profile.lower_jumps == (0, 2)
    assert profile.upper_jumps == (Fraction(0), Fraction(1))
    assert profile.different_degree == 9
    assert different_from_minpoly(3, 0, 2) == 9
    assert profile.conductor == 2
    assert profile.hasse_arf
    assert profile.lower_order(0) == 6
    assert profile.lower_order(1) == 3
    assert profile.lower_order(3) == 1


def test_different_two_ways():
    """Test sum of (i + 1) against nu(f'(lambda)) on several extensions."""
    for p, base, top in [(3, 0, 1), (3, 0, 2), (3, 1, 2), (3, 1, 3), (3, 0, 3), (5, 0, 1), (5, 0, 2), (5, 1, 2)]:
        assert filtration(p, base, top).different_degree == different_from_minpoly(p, base, top)


def test_different_multiplicative_in_towers():
    """Test d(L^top | Q_p) = d(L^top | L^m) + e(L^top | L^m) d(L^m | Q_p)."""
    for p, top in [(3, 2), (3, 3), (5, 2)]:
        for m in range(1, top):
            whole = filtration(p, 0, top).different_degree
            upper = filtration(p, m, top).different_degree
            lower = filtration(p, 0, m).different_degree
            e = tower_level(p, top).degree // tower_level(p, m).degree
            assert whole == upper + e * lower


def test_herbrand_transitivity():
    """Test phi of L^top | Q_p = phi of L^m | Q_p composed with phi of L^top | L^m."""
    for p, top in [(3, 2), (3, 3), (5, 2)]:
        whole = filtration(p, 0, top).phi
        for m in range(1, top):
            composite = filtration(p, 0, m).phi.compose(filtration(p, m, top).phi)
            assert composite == whole


def test_herbrand_transitivity_by_hand():
    """Test the composite on L^2 | L^1 | Q_3 at a few points."""
    outer = filtration(3, 0, 1).phi
    inner = filtration(3, 1, 2).phi
    assert inner(2) == 2
    assert inner(5) == 3
    assert outer(inner(5)) == Fraction(3, 2)
    assert filtration(3, 0, 2).phi(5) == Fraction(3, 2)


def test_apf_jump_dominates_psi():
    """Test i(L | L^m) >= psi of L^m | Q_p at the first upper jump."""
    first_upper = filtration(3, 0, 2).upper_jumps[0]
    for m in (1, 2):
        assert apf_first_jump(3, m) >= filtration(3, 0, m).psi(first_upper)


def test_herbrand_functions_are_inverse():
    """Test phi(psi(u)) = u and psi(phi(t)) = t on a grid of 100 points."""
    for p, base, top in [(3, 0, 2), (3, 1, 3), (5, 0, 2)]:
        profile = filtration(p, base, top)
        for t in herbrand_grid(profile, 100):
            assert profile.phi(profile.psi(t)) == t
            assert profile.psi(profile.phi(t)) == t


def test_upper_jumps_integral():
    """Test Hasse-Arf on every computed profile."""
    for p, base, top in [(3, 0, 3), (3, 1, 3), (3, 2, 3), (5, 0, 2)]:
        assert all(u.denominator == 1 for u in filtration(p, base, top).upper_jumps)


def test_quotient_compatibility():
    """Test that G^s maps onto the upper filtration of the quotient L^1 | Q_3."""
    profile = filtration(3, 0, 2)
    grid = [Fraction(k, 2) for k in range(-2, 8)]
    assert quotient_compatible(profile, 1, grid)
    assert quotient_upper_group(profile, 1, Fraction(1, 2)) == {1}
    assert quotient_upper_group(profile, 1, 0) == {1, 2}


def test_profile_from_table_validation():
    """Test that i-tables must cover the group."""
    with pytest.raises(InvalidInput):
        profile_from_i_table(("x",), 3, {1: 0})
    with pytest.raises(InvalidInput):
        profile_from_i_table(("x",), 2, {1: -1})


def test_filtration_levels():
    """Test that the base must lie below the top."""
    with pytest.raises(LevelMismatch):
        filtration(3, 2, 2)


def test_filtration_rejects_fractional_upper_jump(monkeypatch):
    """Test that an i-table with upper jump 1/2 raises HasseArfViolation."""
    monkeypatch.setattr(profile_module, "i_value", lambda sigma, base, prec: int(sigma.a % 3 == 1))
    with pytest.raises(HasseArfViolation, match="non-integral"):
        filtration(3, 0, 2, prec=23)


def test_report_rendering():
    """Test the report form of a profile."""
    report = filtration(3, 0, 2).to_report()
    assert report.extension == [3, 0, 2]
    assert report.upper_jumps == ["0", "1"]
    assert report.phi_breakpoints == [("-1", "-1"), ("0", "0"), ("2", "1")]
    assert report.phi_final_slope == "1/6"
    assert report.i_table == {"2": 0, "4": 2, "5": 0, "7": 2, "8": 0}


# -- APF quantities ----------------------------------------------------------


def test_apf_first_jump():
    """Test i(L | L^1) = 2 at p = 3 and its growth."""
    assert apf_first_jump(3, 1) == 2
    jumps = [apf_first_jump(3, m) for m in range(1, 4)]
    assert jumps == sorted(jumps)
    assert len(set(jumps)) == len(jumps)
    with pytest.raises(LevelMismatch):
        apf_first_jump(3, 0)


def test_r_of_level():
    """Test r(1) = 2 at p = 3 and monotonicity."""
    assert r_of_level(3, 1) == 2
    assert r_of_level(3, 2) == 6
    assert r_of_level(3, 3) == 18
    values = [r_of_level(5, m) for m in (1, 2)]
    assert values == sorted(values)
    assert all(v >= 1 for v in values)

"""Unit tests for the Kronecker products and the command-line text parsers."""

import random

import pytest

from normslab.core.errors import InvalidInput
from normslab.core.utils.kronecker import pack, poly_mul, poly_sqr, taylor_shift, unpack
from normslab.core.utils.parsing import (
    LevelRange,
    format_polynomial,
    parse_levels,
    parse_polynomial,
)


def _schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_poly_mul_small():
    """Test a hand-checked product."""
    assert poly_mul([1, 2], [3, 4]) == [3, 10, 8]
    assert poly_mul([5], [1, 2, 3]) == [5, 10, 15]
    assert poly_mul([], [1]) == []
    assert poly_sqr([1, 1]) == [1, 2, 1]


def test_poly_mul_matches_schoolbook():
    """Test Kronecker substitution against the quadratic product on large coefficients."""
    rng = random.Random(7)
    for _ in range(20):
        a = [rng.randrange(3**40) for _ in range(rng.randrange(1, 30))]
        b = [rng.randrange(3**40) for _ in range(rng.randrange(1, 30))]
        assert poly_mul(a, b) == _schoolbook(a, b)
        assert poly_sqr(a) == _schoolbook(a, a)


def test_pack_unpack():
    """Test that unpack reverses pack."""
    coeffs = [0, 1, 255, 256, 65535]
    assert unpack(pack(coeffs, 3), 3, len(coeffs)) == coeffs


def test_taylor_shift():
    """Test P(x + 1) and its inverse shift."""
    assert taylor_shift([0, 0, 1], 1) == [1, 2, 1]
    assert taylor_shift([1, 2, 1], -1) == [0, 0, 1]
    assert taylor_shift([0, 0, 0, 1], 1) == [1, 3, 3, 1]


def test_parse_polynomial():
    """Test the accepted polynomial spellings."""
    assert parse_polynomial("1 + Z^4") == {0: 1, 4: 1}
    assert parse_polynomial("3*Z + Z^2 - 2Z^5") == {1: 3, 2: 1, 5: -2}
    assert parse_polynomial("z + z^2") == {1: 1, 2: 1}
    assert parse_polynomial("Z - Z") == {}
    assert parse_polynomial("-1") == {0: -1}


@pytest.mark.parametrize("text", ["", "Z^", "3^2", "Z ++ 1", "Z^x"])
def test_parse_polynomial_rejects(text):
    """Test that malformed polynomials raise InvalidInput."""
    with pytest.raises(InvalidInput):
        parse_polynomial(text)


def test_format_polynomial():
    """Test rendering back to text."""
    assert format_polynomial({0: 1, 4: 1}) == "1 + Z^4"
    assert format_polynomial({1: 3, 2: 1, 5: -2}) == "3*Z + Z^2 - 2*Z^5"
    assert format_polynomial({0: -1}) == "-1"
    assert format_polynomial({}) == "0"
    assert parse_polynomial(format_polynomial({1: 3, 2: 1, 5: -2})) == {1: 3, 2: 1, 5: -2}


def test_parse_levels():
    """Test auto, auto+k and explicit ranges."""
    assert parse_levels("auto") == LevelRange(None, 0, None)
    assert parse_levels("auto").resolve(3) == range(3, 4)
    assert parse_levels("auto+2").resolve(3) == range(3, 6)
    assert parse_levels("2..4").resolve(7) == range(2, 5)


@pytest.mark.parametrize("text", ["0..2", "4..2", "x", "auto-1"])
def test_parse_levels_rejects(text):
    """Test that bad ranges raise InvalidInput."""
    with pytest.raises(InvalidInput):
        parse_levels(text)

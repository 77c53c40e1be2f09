from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sloccrank.gaussian import GaussianRational as G, parse_rational, to_gaussian

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
gaussians = st.builds(G, fractions, fractions)


@given(gaussians, gaussians, gaussians)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(gaussians, gaussians)
def test_matches_complex_arithmetic(a, b):
    ca, cb = complex(a), complex(b)
    assert complex(a * b) == pytest.approx(ca * cb, rel=1e-12, abs=1e-12)
    assert complex(a + b) == pytest.approx(ca + cb, rel=1e-12, abs=1e-12)
    if b:
        assert a / b * b == a


def test_i_squared():
    i = G(0, 1)
    assert i * i == -1
    assert i.conjugate() * i == 1
    assert (G(3, 4)).abs2() == 25
    assert abs(G(3, 4)) == 5.0


def test_mixed_with_ints_and_fractions():
    a = G(1, 2)
    assert 2 * a == G(2, 4)
    assert a * Fraction(1, 2) == G(Fraction(1, 2), 1)
    assert 1 - a == G(0, -2)
    assert a + 0.5 == complex(1.5, 2)


def test_object_arrays_broadcast_elementwise():
    arr = np.array([G(1), G(0, 1), G(2, -1)], dtype=object)
    out = G(0, 1) * arr
    assert out.dtype == object
    assert list(out) == [G(0, 1), G(-1), G(1, 2)]
    assert np.sum(np.array([1, -1, 1]) * arr) == G(3, -2)


def test_zero_is_falsy_and_hash_matches_rational():
    assert not G(0, 0)
    assert G(0, Fraction(1, 3))
    assert hash(G(Fraction(3, 4))) == hash(Fraction(3, 4))


@pytest.mark.parametrize("text,expected", [("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), (5, Fraction(5))])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["0.5", "1e3", True])
def test_parse_rational_rejects_inexact(bad):
    with pytest.raises((ValueError, TypeError)):
        parse_rational(bad)


def test_to_gaussian_pairs():
    assert to_gaussian(("1/2", "-3")) == G(Fraction(1, 2), -3)
    with pytest.raises(TypeError):
        to_gaussian(0.5)

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cliffordtwist.scalars import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    ScalarParseError,
    conjugate,
    field_arithmetic,
    format_scalar,
    i_power,
    parse_scalar,
)

rats = st.builds(Fraction, st.integers(-999, 999), st.integers(1, 50))
scalars = st.builds(GaussianRational, rats, rats)
nonzero = scalars.filter(lambda a: not a.is_zero())


def test_examples():
    assert (1 + I) * (1 - I) == 2
    assert I * I == -1
    assert GaussianRational(Fraction(3, 2), Fraction(1, 2)) / I == GaussianRational(Fraction(1, 2), Fraction(-3, 2))
    assert conjugate(1 + I) == 1 - I


def test_division_back_multiplies():
    a = GaussianRational(Fraction(3, 2), Fraction(1, 2))
    assert (a / I) * I == a


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        field_arithmetic(1, 0, "div")


@pytest.mark.parametrize("k,expected", [(0, ONE), (1, I), (2, -ONE), (3, -I), (4, ONE), (-1, -I)])
def test_i_power_table(k, expected):
    assert i_power(k) == expected


def test_i_power_addition_law():
    for a in range(-8, 9):
        for b in range(-8, 9):
            assert i_power(a) * i_power(b) == i_power(a + b)


@settings(max_examples=2500, deadline=None)
@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@settings(max_examples=2500, deadline=None)
@given(nonzero, scalars)
def test_inverse_and_division(a, b):
    assert a * a.inverse() == ONE
    assert (b / a) * a == b


@settings(max_examples=2500, deadline=None)
@given(scalars, scalars)
def test_conjugation_is_multiplicative_involution(a, b):
    assert conjugate(conjugate(a)) == a
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    assert conjugate(a + b) == conjugate(a) + conjugate(b)
    assert (a * conjugate(a)).im == 0


@settings(max_examples=2500, deadline=None)
@given(scalars)
def test_format_parse_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_hash_matches_equality():
    assert hash(GaussianRational(2, 0)) == hash(GaussianRational(Fraction(4, 2), 0))
    assert GaussianRational(2, 0) == 2


@pytest.mark.parametrize("text", ["", "1/0", "i2", "1+", "abc", "1//2"])
def test_parse_errors(text):
    with pytest.raises(ScalarParseError):
        parse_scalar(text)


@pytest.mark.parametrize(
    "text,value",
    [("1", ONE), ("-1/2i", GaussianRational(0, Fraction(-1, 2))), ("3/2+1i", GaussianRational(Fraction(3, 2), 1)), ("i", I), ("-i", -I)],
)
def test_parse_values(text, value):
    assert parse_scalar(text) == value


def test_sqrt_roots():
    assert GaussianRational(-1).sqrt() ** 2 == -1
    assert GaussianRational(0, 2).sqrt() ** 2 == GaussianRational(0, 2)
    assert GaussianRational(2).sqrt() is None

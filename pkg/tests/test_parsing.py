from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cliffordtwist.clifford import CliffordAlgebra
from cliffordtwist.parsing import (
    ExpressionError,
    multivector_from_json,
    multivector_to_json,
    parse_blade,
    parse_expression,
    parse_spinor,
)
from cliffordtwist.scalars import I, GaussianRational
from cliffordtwist.twisted import Multivector

H = CliffordAlgebra("--")


def test_expression_examples():
    assert parse_expression("e1*e2 - e2*e1", H) == H.blade(3, 2)
    assert parse_expression("1", H) == H.one()
    assert parse_expression("(3/2+1i)*e1 + 2i*e2 - i", H) == H.blade(1, GaussianRational(Fraction(3, 2), 1)) + H.blade(2, 2 * I) - H.scalar(I)
    assert parse_expression("-e1*e1", H) == H.one()


@pytest.mark.parametrize(
    "src,pos",
    [("e3", 0), ("", 0), ("e1 e2", 3), ("e1*", 3), ("(1+)*e1", 0), ("x1", 0), ("e1 + ?", 5)],
)
def test_expression_errors_carry_position(src, pos):
    with pytest.raises(ExpressionError) as info:
        parse_expression(src, H)
    assert info.value.pos == pos


def test_spinor_expression():
    psi = parse_spinor("x1^2*e1 - (1/2+1i)*x3*x4*e3 + 2")
    comps = psi.components()
    assert comps[1] == {(2, 0, 0, 0): GaussianRational(1)}
    assert comps[3] == {(0, 0, 1, 1): GaussianRational(Fraction(-1, 2), -1)}
    assert comps[0] == {(0, 0, 0, 0): GaussianRational(2)}
    assert parse_spinor("e1*e2") == parse_spinor("e3")
    with pytest.raises(ExpressionError):
        parse_spinor("x5")
    with pytest.raises(ExpressionError):
        parse_spinor("e4")


def test_blade_names():
    assert parse_blade("1", 3) == 0
    assert parse_blade("e1*e3", 3) == 5
    for bad in ("e3*e1", "e1*e1", "e4", "f1"):
        with pytest.raises(ValueError):
            parse_blade(bad, 3)


small = st.builds(GaussianRational, st.integers(-5, 5), st.integers(-5, 5))


@settings(max_examples=200, deadline=None)
@given(st.dictionaries(st.integers(0, 7), small, max_size=8))
def test_json_and_text_round_trip(coeffs):
    A = CliffordAlgebra("+-+")
    a = Multivector(A, coeffs)
    assert multivector_from_json(multivector_to_json(a), A) == a
    assert parse_expression(str(a), A) == a

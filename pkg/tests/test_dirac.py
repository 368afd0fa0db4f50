import random

from hypothesis import given, settings, strategies as st

from cliffordtwist.dirac import (
    QUATERNIONS,
    PolySpinor,
    dirac_apply,
    dirac_component_form,
    dirac_curl_form,
    laplacian,
    monomials,
    partial_derivative,
    random_spinor,
)
from cliffordtwist.parsing import parse_spinor
from cliffordtwist.scalars import I, GaussianRational

X1 = (1, 0, 0, 0)
X2 = (0, 1, 0, 0)
X3 = (0, 0, 1, 0)
UNIT = (0, 0, 0, 0)


def test_partial_derivative_examples():
    assert partial_derivative(PolySpinor.term((2, 0, 0, 0), 0), 1) == PolySpinor.term(X1, 0, 2)
    assert partial_derivative(PolySpinor.term(X1, 1), 3).is_zero()


def test_dirac_examples():
    assert dirac_apply(PolySpinor.term(X1, 0)) == PolySpinor.term(UNIT, 1)
    once = dirac_apply(PolySpinor.term((2, 0, 0, 0), 0))
    assert once == PolySpinor.term(X1, 1, 2)
    assert dirac_apply(once) == PolySpinor.term(UNIT, 0, -2)
    assert dirac_apply(PolySpinor.term(X1, 1)) == PolySpinor.term(UNIT, 0, -1)


def test_component_form_examples():
    out = dirac_component_form(PolySpinor.term(X1, 1)).components()
    assert out[0] == {UNIT: GaussianRational(-1)}
    out = dirac_component_form(PolySpinor.term(X3, 0)).components()
    assert out[1] == {UNIT: I}
    psi = PolySpinor.term(X2, 3)
    out = dirac_component_form(psi).components()
    assert out[1] == {UNIT: GaussianRational(1)}
    assert dirac_apply(psi).components()[1] == out[1]


def test_curl_form_example():
    out = dirac_curl_form(PolySpinor.term(X1, 1)).components()
    assert out[0] == {UNIT: GaussianRational(-1)}


def test_laplacian_examples():
    assert laplacian(PolySpinor.term((2, 0, 0, 0), 0)) == PolySpinor.term(UNIT, 0, 2)
    assert laplacian(PolySpinor.term((1, 1, 0, 0), 3)).is_zero()


def test_square_is_minus_laplacian():
    for m in monomials(3):
        for blade in range(4):
            psi = PolySpinor.term(m, blade)
            assert dirac_apply(dirac_apply(psi)) == -laplacian(psi)


def test_three_forms_agree():
    rng = random.Random(0)
    for _ in range(50):
        psi = random_spinor(rng)
        d = dirac_apply(psi)
        assert d == dirac_component_form(psi) == dirac_curl_form(psi)


def _spinor(seed):
    return random_spinor(random.Random(seed), max_degree=3, n_terms=5)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6), st.integers(-3, 3), st.integers(-3, 3))
def test_linearity(s1, s2, re, im):
    a, b = _spinor(s1), _spinor(s2)
    c = GaussianRational(re, im)
    assert dirac_apply(a + b.scale(c)) == dirac_apply(a) + dirac_apply(b).scale(c)


def test_dirac_swaps_super_degree():
    rng = random.Random(3)
    for _ in range(30):
        psi = random_spinor(rng)
        even = PolySpinor({m: QUATERNIONS.blade(0, v[0]) + QUATERNIONS.blade(3, v[3]) for m, v in psi.terms.items()})
        for v in dirac_apply(even).terms.values():
            assert all(bin(x).count("1") == 1 for x in v.coeffs)


def test_text_round_trip():
    rng = random.Random(5)
    for _ in range(40):
        psi = random_spinor(rng)
        assert parse_spinor(str(psi)) == psi
    assert str(PolySpinor()) == "0"

import pytest
from hypothesis import given, settings, strategies as st

from cliffordtwist.clifford import CliffordAlgebra
from cliffordtwist.periodicity import (
    center_basis,
    classify,
    ordinary_tensor,
    periodicity_iso_check,
    periodicity_iso_witness,
    periodicity_mu,
    periodicity_table_check,
    periodicity_twist,
    super_tensor,
)
from cliffordtwist.scalars import I
from cliffordtwist.twisted import TwistedAlgebra, character_coboundary, clifford_cochain

from oracles import all_signatures, blade_word, word_product, words_mask


def test_super_tensor_of_two_lines_is_quaternions():
    T = super_tensor(CliffordAlgebra("-"), CliffordAlgebra("-"))
    assert T.F.table() == clifford_cochain("--").table()


def test_super_tensor_cross_sign():
    T = super_tensor(CliffordAlgebra("+"), CliffordAlgebra("+"))
    one_e, e_one = T.blade(2), T.blade(1)
    assert one_e * e_one == -T.blade(3)


def test_super_tensor_blade_rule():
    # (a (x) c)(b (x) d) = ab (x) cd (-1)^{rho(c) rho(b)}, checked against word reduction
    A, B = CliffordAlgebra("+-"), CliffordAlgebra("-+")
    T = super_tensor(A, B)
    q = list(A.q) + list(B.q)
    for u in range(16):
        for v in range(16):
            coeff, w = word_product(blade_word(u, 4) + blade_word(v, 4), q)
            assert T.blade(u) * T.blade(v) == T.blade(words_mask(w), coeff)


def test_super_tensor_matches_concatenated_signature():
    for s1 in all_signatures(2):
        for s2 in ("", "+", "-+-"):
            T = super_tensor(CliffordAlgebra(s1), CliffordAlgebra(s2))
            assert T.F.table() == clifford_cochain(s1 + s2).table()


def test_ordinary_tensor_has_no_koszul_sign():
    T = ordinary_tensor(CliffordAlgebra("+"), CliffordAlgebra("+"))
    assert T.blade(2) * T.blade(1) == T.blade(1) * T.blade(2)


@pytest.mark.parametrize("sig,mu", [("++", -1), ("--", -1), ("+-", 1), ("++++", 1), ("+---", -1)])
def test_periodicity_mu(sig, mu):
    assert periodicity_mu(sig) == mu


def test_twist_identity_when_mu_is_one():
    F = clifford_cochain("+-+")
    assert periodicity_twist(F, 1, "+-") is F


def test_twist_is_coboundary_change_when_mu_is_minus_one():
    F = clifford_cochain("+-")
    Fp = periodicity_twist(F, 1, "++")
    s = lambda x: I ** (-bin(x).count("1"))
    for x in range(4):
        for y in range(4):
            assert Fp(x, y) == F(x, y) * character_coboundary(s, x, y)


def test_sign_flip():
    for sig in ("+", "-+", "+--"):
        F = clifford_cochain(sig)
        neg = "".join("-" if c == "+" else "+" for c in sig)
        assert periodicity_twist(F, 1, "--").table() == clifford_cochain(neg).table()


def test_twist_errors():
    with pytest.raises(ValueError):
        periodicity_twist(clifford_cochain("+"), 1, "+++")
    with pytest.raises(ValueError):
        periodicity_twist(clifford_cochain("+"), 1, [2, 1])


def test_periodicity_map_multiplicative():
    for sig in ("", "+", "-+", "+-+"):
        for pm in all_signatures(2):
            assert periodicity_iso_check(CliffordAlgebra(sig), CliffordAlgebra(pm))


def test_vectorized_and_exact_paths_agree():
    for sig in ("-", "+-"):
        for pm in ("++", "-+--"):
            A, C = CliffordAlgebra(sig), CliffordAlgebra(pm)
            assert periodicity_iso_witness(A, C, vectorized=False) == periodicity_iso_witness(A, C)


@pytest.mark.parametrize(
    "sig,label",
    [("", "M_1"), ("++", "M_2"), ("+++", "M_2+M_2"), ("-", "M_1+M_1"), ("+-+-", "M_4"), ("------", "M_8"), ("+++++", "M_4+M_4")],
)
def test_classify_examples(sig, label):
    assert classify(CliffordAlgebra(sig)).label == label


def test_classify_center_dimension():
    for n in range(5):
        for sig in all_signatures(n)[:4]:
            lab = classify(CliffordAlgebra(sig))
            assert lab.center_dim == (1 if n % 2 == 0 else 2)
            assert len(center_basis(CliffordAlgebra(sig))) == lab.center_dim


def test_quaternion_square_is_m4():
    H = CliffordAlgebra("--")
    assert classify(ordinary_tensor(H, H)).label == "M_4"


def test_unclassified_cases():
    assert classify(CliffordAlgebra([2, 1])).kind == "unclassified"
    from cliffordtwist.twisted import TableCochain

    bad = TwistedAlgebra(TableCochain.trivial(2).with_entry(1, 1, 2))
    assert classify(bad).reason == "algebra is not associative"


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from("+-"), max_size=4), st.randoms(use_true_random=False))
def test_classify_stable_under_permutation(signs, rnd):
    sig = "".join(signs)
    perm = list(sig)
    rnd.shuffle(perm)
    assert classify(CliffordAlgebra(sig)).label == classify(CliffordAlgebra("".join(perm))).label


def test_periodicity_table():
    res = periodicity_table_check(3)
    assert res["ok"], [e for e in res["entries"] if not e["ok"]]


def test_label_json():
    js = classify(CliffordAlgebra("+++")).to_json()
    assert js["label"] == "M_2+M_2" and js["center_dim"] == 2 and js["mu"] == "-1"
    assert isinstance(js["checks"], list)

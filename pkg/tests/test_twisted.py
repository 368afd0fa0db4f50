import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cliffordtwist.bits import DimensionError, from_bits
from cliffordtwist.clifford import CliffordAlgebra
from cliffordtwist.scalars import I, ONE, GaussianRational
from cliffordtwist.twisted import (
    AlgebraMismatch,
    FunctionCochain,
    Multivector,
    Signature,
    TableCochain,
    TooLargeError,
    TwistedAlgebra,
    braiding_R,
    character_coboundary,
    clifford_cochain,
    coboundary3,
    cocycle_witness,
    is_cocycle,
    twisted_mul,
)
from cliffordtwist.verify import random_cocycle, random_unit_table

from oracles import all_signatures, blade_word, naive_clifford, word_product, words_mask


def test_cochain_examples():
    F = clifford_cochain("++")
    assert F(from_bits((1, 0)), from_bits((0, 1))) == 1
    assert F(from_bits((0, 1)), from_bits((1, 0))) == -1
    q1, q2 = GaussianRational(2), GaussianRational(0, 3)
    G = clifford_cochain([q1, q2])
    assert G(3, 3) == -q1 * q2
    H = clifford_cochain("+++")
    assert H(from_bits((1, 1, 0)), from_bits((1, 0, 1))) == -1


def test_cochain_matches_double_loop():
    rng = random.Random(3)
    for _ in range(400):
        n = rng.randint(0, 10)
        q = [rng.choice([1, -1, 2, I, GaussianRational(1, 1)]) for _ in range(n)]
        F = clifford_cochain(q)
        x, y = rng.randrange(1 << n), rng.randrange(1 << n)
        assert F(x, y) == naive_clifford(q, x, y)


def test_blade_products_match_word_reduction():
    # e_x e_y computed by sorting the concatenated generator word
    for sig in ("+-+", "--+", "++-+"):
        alg = CliffordAlgebra(sig)
        q = list(alg.q)
        for x in range(alg.dim):
            for y in range(alg.dim):
                coeff, w = word_product(blade_word(x, alg.n) + blade_word(y, alg.n), q)
                assert alg.blade(x) * alg.blade(y) == alg.blade(words_mask(w), coeff)


def test_normalization():
    F = clifford_cochain("+-+")
    assert all(F(0, y) == 1 and F(y, 0) == 1 for y in range(8))


def test_zero_q_rejected():
    with pytest.raises(ValueError):
        Signature([1, 0])


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        clifford_cochain("++")(4, 1)


def test_coboundary_examples():
    F = clifford_cochain("-+-")
    assert coboundary3(F, 5, 3, 6) == 1
    assert coboundary3(TableCochain.trivial(2), 1, 2, 3) == 1
    c = GaussianRational(2)
    P = TableCochain.trivial(2).with_entry(1, 1, c)
    assert coboundary3(P, 1, 1, 2) == c
    assert not is_cocycle(P)
    assert cocycle_witness(P) is not None


def test_is_cocycle_examples():
    for sig in all_signatures(4):
        assert is_cocycle(clifford_cochain(sig))
    rng = random.Random(1)
    for _ in range(20):
        assert is_cocycle(random_unit_table(rng, 1), use_logs=False)
    assert is_cocycle(TableCochain(1, [[1, 1], [1, GaussianRational(5, 7)]]))


def test_is_cocycle_size_cap():
    with pytest.raises(TooLargeError):
        is_cocycle(clifford_cochain("+" * 13))


def test_log_and_exact_paths_agree():
    rng = random.Random(5)
    for _ in range(30):
        F = random_unit_table(rng, 2)
        assert is_cocycle(F) == is_cocycle(F, use_logs=False)
        G = random_cocycle(rng, 3)
        assert is_cocycle(G) and is_cocycle(G, use_logs=False)


def test_braiding_examples():
    F = clifford_cochain("+-")
    assert all(braiding_R(F, 0, y) == 1 and braiding_R(F, y, y) == 1 for y in range(4))
    assert braiding_R(F, 1, 2) == -1


def test_character_coboundary():
    s = lambda x: I ** (-(bin(x).count("1")))
    assert character_coboundary(lambda x: ONE, 3, 5) == 1
    for x in range(8):
        for y in range(8):
            expected = -1 if bin(x & y).count("1") % 2 else 1
            assert character_coboundary(s, x, y) == expected
    with pytest.raises(ValueError):
        character_coboundary(lambda x: 0 if x == 1 else 1, 1, 2)


def test_multiplication_examples():
    C01 = CliffordAlgebra("-")
    e1 = C01.gen(1)
    assert e1 * e1 == -C01.one()
    for sig in all_signatures(2):
        A = CliffordAlgebra(sig)
        a, b = A.gen(1), A.gen(2)
        assert (a * b + b * a).is_zero()
        q1, q2 = A.q
        assert (a * b) * (a * b) == A.scalar(-q1 * q2)


def test_linear_examples():
    A = CliffordAlgebra("++")
    e1, e2 = A.gen(1), A.gen(2)
    assert e1 + e1 == e1.scale(2)
    assert e1.scale(0).coeffs == {}
    assert (e1 + e2) + e2.scale(-1) == e1


def test_mixed_algebras_rejected():
    with pytest.raises(AlgebraMismatch):
        CliffordAlgebra("+").gen(1) * CliffordAlgebra("-").gen(1)


def _random_mv(rng, alg):
    return Multivector(alg, {rng.randrange(alg.dim): GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(4)})


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 5), st.integers(0, 10**6))
def test_associative_for_cocycles(n, seed):
    rng = random.Random(seed)
    F = random_cocycle(rng, n) if n <= 3 else clifford_cochain("".join(rng.choice("+-") for _ in range(n)))
    alg = TwistedAlgebra(F)
    a, b, c = (_random_mv(rng, alg) for _ in range(3))
    assert twisted_mul(twisted_mul(a, b), c) == twisted_mul(a, twisted_mul(b, c))
    assert alg.associative


def test_non_cocycle_gives_nonassociative_product():
    P = TableCochain.trivial(2).with_entry(1, 1, 2)
    alg = TwistedAlgebra(P)
    x, y, z = (alg.blade(m) for m in (1, 1, 2))
    assert (x * y) * z != x * (y * z)
    assert not alg.associative


def test_function_cochain_roundtrip():
    F = FunctionCochain(2, lambda x, y: clifford_cochain("-+").value(x, y))
    assert TableCochain.from_cochain(F).table() == clifford_cochain("-+").table()


def test_signature_parse():
    assert str(Signature.parse("+-")) == "+-"
    assert Signature.parse("1,-1,2/3,1i").q[2] == GaussianRational(Fraction(2, 3))
    assert Signature.pq(2, 1) == Signature.parse("++-")

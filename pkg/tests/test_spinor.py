import random

import pytest

from cliffordtwist.bits import rho
from cliffordtwist.clifford import CliffordAlgebra
from cliffordtwist.linalg import Matrix, commutant_dimension
from cliffordtwist.periodicity import super_tensor
from cliffordtwist.scalars import I, ONE, GaussianRational, i_power
from cliffordtwist.spinor import (
    OddExtensionError,
    exterior_matrices,
    exterior_model_action,
    faithfulness_rank,
    full_rep_faithfulness,
    generator_matrices,
    grading_lambda,
    grading_operator,
    lr_action,
    lr_matrix,
    odd_commutant_dimension,
    odd_extend,
    relations_witness,
)
from cliffordtwist.twisted import TooLargeError

from oracles import all_signatures, blade_word, word_product, words_mask


def test_action_examples():
    A = CliffordAlgebra("-")
    for z in range(2):
        assert lr_action(0, 0, z, A) == A.blade(z)
    assert lr_action(1, 0, 1, A) == A.scalar(-1)
    assert lr_action(0, 1, 1, A) == A.scalar(I)


def test_action_matches_word_oracle():
    # (e_x (x) e_y) . e_z = (-1)^{y.z} i^{rho(y)} e_x e_y e_z, with the product reduced word by word
    for sig in ("+-", "-+-"):
        A = CliffordAlgebra(sig)
        q = list(A.q)
        n = A.n
        for x in range(A.dim):
            for y in range(A.dim):
                for z in range(A.dim):
                    c, w = word_product(blade_word(x, n) + blade_word(y, n) + blade_word(z, n), q)
                    sign = -1 if bin(y & z).count("1") % 2 else 1
                    expected = A.blade(words_mask(w), c * sign * i_power(rho(y)))
                    assert lr_action(x, y, z, A) == expected


def test_generator_matrices_n1():
    M1, M2 = generator_matrices(CliffordAlgebra("-"))
    assert M1 == Matrix([[0, -1], [1, 0]])
    assert M2 == Matrix([[0, I], [I, 0]])
    assert M1 @ M1 == Matrix.identity(2).scale(-1) == M2 @ M2
    assert M1 @ M2 == -(M2 @ M1)


def test_generator_relations_and_shape():
    for n in range(5):
        for sig in all_signatures(n)[:: max(1, 2 ** n // 4)]:
            A = CliffordAlgebra(sig)
            mats = generator_matrices(A)
            assert len(mats) == 2 * n
            if mats:
                assert relations_witness(mats, list(A.q) * 2) is None
            for M in mats:
                assert M.nonzero_count_per_column() == [1] * A.dim


def test_generators_agree_with_lr_matrix():
    A = CliffordAlgebra("+-+")
    mats = generator_matrices(A)
    for i in range(3):
        assert mats[i] == lr_matrix(1 << i, 0, A)
        assert mats[3 + i] == lr_matrix(0, 1 << i, A)


def test_homomorphism_n2():
    A = CliffordAlgebra("-+")
    T = super_tensor(A, A)
    N = A.dim
    for u in range(T.dim):
        for v in range(T.dim):
            c, w = T.blade_product(u, v)
            lhs = lr_matrix(u % N, u // N, A) @ lr_matrix(v % N, v // N, A)
            assert lhs == lr_matrix(w % N, w // N, A).scale(c)


def test_faithfulness():
    assert faithfulness_rank(CliffordAlgebra("-")) == 4
    assert faithfulness_rank(CliffordAlgebra("+-")) == 16
    assert full_rep_faithfulness(CliffordAlgebra("--+"))
    with pytest.raises(TooLargeError):
        faithfulness_rank(CliffordAlgebra("++++"))


def test_no_zero_images():
    rng = random.Random(9)
    A = CliffordAlgebra("+-")
    for _ in range(100):
        terms = {(rng.randrange(4), rng.randrange(4)): GaussianRational(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(3)}
        if all(c.is_zero() for c in terms.values()):
            continue
        M = Matrix.zeros(4)
        for (x, y), c in terms.items():
            M = M + lr_matrix(x, y, A).scale(c)
        # distinct (x, y) give independent operators, so a nonzero combination acts nontrivially
        assert M != Matrix.zeros(4)


def test_exterior_examples():
    A = CliffordAlgebra([GaussianRational(3), -1])
    assert exterior_model_action(1, A.one(), A) == A.gen(1)
    assert exterior_model_action(3, A.one(), A) == A.gen(1).scale(I)
    # on e1 only the interior product survives
    assert exterior_model_action(1, A.gen(1), A) == A.scalar(3)
    with pytest.raises(ValueError):
        exterior_model_action(5, A.one(), A)


def test_exterior_model_equals_twisted_model():
    for n in range(5):
        for sig in all_signatures(n)[:: max(1, 2 ** n // 3)]:
            A = CliffordAlgebra(sig)
            assert exterior_matrices(A) == generator_matrices(A)


def test_grading_operator_examples():
    A = CliffordAlgebra("-")
    G, lam = grading_operator(A)
    assert lam == -I
    assert G == Matrix.diag([-I, I])
    assert G @ G == Matrix.identity(2).scale(lam * lam)


def test_grading_lambda_matches_generator_product():
    for sig in ("--", "+-+", "++++"):
        A = CliffordAlgebra(sig)
        P = Matrix.identity(A.dim)
        for M in generator_matrices(A):
            P = P @ M
        G, lam = grading_operator(A)
        assert P == G
        assert G == Matrix.diag([-lam if rho(z) & 1 else lam for z in range(A.dim)])
    assert grading_lambda(CliffordAlgebra("--")) == -1 * i_power(2) * 1


def test_odd_extend_examples():
    mats = generator_matrices(CliffordAlgebra("+"))
    assert odd_extend(mats, 1) == Matrix.diag([1, -1])
    assert odd_extend(mats, -1) == Matrix.diag([I, -I])
    assert odd_commutant_dimension(mats, 1) == 1
    with pytest.raises(OddExtensionError):
        odd_extend(mats, 2)


def test_odd_extend_properties():
    for sig in ("-+", "+--"):
        mats = generator_matrices(CliffordAlgebra(sig))
        for q in (ONE, -ONE):
            M = odd_extend(mats, q)
            assert M @ M == Matrix.identity(M.nrows).scale(q)
            assert all(M @ G == -(G @ M) for G in mats)
            assert commutant_dimension(mats + [M]) == 1

import random

from cliffordtwist.linalg import Matrix, commutant_dimension, nullspace, rank, solve_commuting
from cliffordtwist.scalars import I, GaussianRational


def test_rank_and_nullspace():
    rows = [{0: GaussianRational(1), 1: I}, {0: I, 1: GaussianRational(-1)}, {2: GaussianRational(3)}]
    assert rank(rows) == 2
    ns = nullspace(rows, 3)
    assert len(ns) == 1
    v = ns[0]
    for r in rows:
        assert sum((c * v.get(j, 0) for j, c in r.items()), GaussianRational(0)).is_zero()


def test_matrix_arithmetic():
    A = Matrix([[1, 2], [3, 4]])
    assert A @ Matrix.identity(2) == A
    assert (A - A) == Matrix.zeros(2)
    assert A.rank() == 2 and Matrix([[1, 2], [2, 4]]).rank() == 1
    assert Matrix.diag([I, 1]).is_diagonal()
    assert Matrix.identity(3).scale(I).scalar_value() == I


def test_random_invertibility_matches_rank():
    rng = random.Random(1)
    for _ in range(30):
        M = Matrix([[rng.randint(-1, 1) for _ in range(3)] for _ in range(3)])
        assert M.is_invertible() == (M.rank() == 3)


def test_commutant():
    X = Matrix([[0, 1], [1, 0]])
    Z = Matrix([[1, 0], [0, -1]])
    assert commutant_dimension([X]) == 2
    assert commutant_dimension([X, Z]) == 1
    # solutions of A M = M B for the swap: M = [[a, b], [b, a]]
    sols = solve_commuting(2, [(X, X)])
    assert len(sols) == 2 and all(X @ S == S @ X for S in sols)

"""Spinors from left and right multiplication.

C(V+V, q+q) = C(V,q) (super-tensor) C(V,q) acts on the blade space of
C(V, q) by

    (e_x (x) e_y) . e_z = F(x, y) F(x+y, z) (-1)^{y.z} i^{rho(y)} e_{x+y+z}

which identifies it with End(C(V, q)) once sqrt(-1) is available.
"""

from __future__ import annotations

from typing import Sequence

from .bits import dot, rho, top
from .clifford import CliffordAlgebra
from .linalg import Echelon, Matrix, commutant_dimension
from .scalars import I, ONE, ZERO, GaussianRational, ScalarLike, as_scalar, i_power
from .twisted import Multivector, TooLargeError

__all__ = [
    "lr_action",
    "lr_matrix",
    "generator_matrices",
    "relations_witness",
    "full_rep_faithfulness",
    "faithfulness_rank",
    "exterior_model_action",
    "exterior_matrices",
    "grading_operator",
    "grading_lambda",
    "odd_extend",
    "OddExtensionError",
    "odd_commutant_dimension",
]

FAITHFUL_MAX_N = 3


class OddExtensionError(ValueError):
    """odd_extend called with q outside {1, -1}."""


def lr_action(x: int, y: int, z: int, alg: CliffordAlgebra) -> Multivector:
    """(e_x (x) e_y) . e_z as a single-blade multivector."""
    F = alg.F.value
    xy = x ^ y
    c = F(x, y) * F(xy, z) * i_power(rho(y))
    if dot(y, z):
        c = -c
    return alg.blade(xy ^ z, c)


def lr_matrix(x: int, y: int, alg: CliffordAlgebra) -> Matrix:
    """Matrix of e_x (x) e_y; column z holds the image of e_z."""
    N = alg.dim
    rows = [[ZERO] * N for _ in range(N)]
    for z in range(N):
        ((w, c),) = lr_action(x, y, z, alg).coeffs.items()
        rows[w][z] = c
    return Matrix._wrap(rows)


def generator_matrices(alg: CliffordAlgebra) -> list[Matrix]:
    """The 2n matrices of e_i (x) 1 and 1 (x) e_i, from the explicit generator formulas.

    (e_i (x) 1) e_x = (-1)^{x_1+...+x_{i-1}} q_i^{x_i} e_{x+d_i}
    (1 (x) e_i) e_x = i (-1)^{x_1+...+x_{i-1}} (-q_i)^{x_i} e_{x+d_i}
    """
    n, N = alg.n, alg.dim
    left, right = [], []
    for i in range(n):
        bit = 1 << i
        q = alg.q[i]
        L = [[ZERO] * N for _ in range(N)]
        R = [[ZERO] * N for _ in range(N)]
        for x in range(N):
            sign = -ONE if (x & (bit - 1)).bit_count() & 1 else ONE
            if x & bit:
                L[x ^ bit][x] = sign * q
                R[x ^ bit][x] = I * sign * (-q)
            else:
                L[x ^ bit][x] = sign
                R[x ^ bit][x] = I * sign
        left.append(Matrix._wrap(L))
        right.append(Matrix._wrap(R))
    return left + right


def relations_witness(
    mats: Sequence[Matrix], squares: Sequence[ScalarLike]
) -> tuple[int, int] | None:
    """First (a, b) breaking M_a^2 = squares[a] id or M_a M_b = -M_b M_a; else None."""
    if len(mats) != len(squares):
        raise ValueError("one square value per matrix")
    d = mats[0].nrows if mats else 0
    for a, M in enumerate(mats):
        if M @ M != Matrix.identity(d).scale(as_scalar(squares[a])):
            return (a, a)
        for b in range(a + 1, len(mats)):
            if M @ mats[b] != -(mats[b] @ M):
                return (a, b)
    return None


def faithfulness_rank(alg: CliffordAlgebra) -> int:
    """Rank of the span of all 4^n operators e_x (x) e_y in End(C(V, q))."""
    if alg.n > FAITHFUL_MAX_N:
        raise TooLargeError(f"faithfulness check is capped at n={FAITHFUL_MAX_N} (matrix 4^n x 4^n)")
    N = alg.dim
    ech = Echelon()
    for x in range(N):
        for y in range(N):
            row = {}
            for z in range(N):
                ((w, c),) = lr_action(x, y, z, alg).coeffs.items()
                row[w * N + z] = c
            ech.add(row)
    return ech.rank


def full_rep_faithfulness(alg: CliffordAlgebra) -> bool:
    """Whether C(V+V, q+q) -> End(C(V, q)) is bijective (rank 4^n)."""
    return faithfulness_rank(alg) == 4 ** alg.n


def exterior_model_action(i: int, w: Multivector, alg: CliffordAlgebra | None = None) -> Multivector:
    """Generator i (1..2n) acting on an exterior form by wedge and q-interior products.

    e_i . w = e_i ^ w + i_{e_i} w  and  e_{n+i} . w = i (e_i ^ w - i_{e_i} w).
    """
    alg = alg or w.algebra
    n = alg.n
    if not 1 <= i <= 2 * n:
        raise ValueError(f"generator index {i} outside 1..{2 * n}")
    k = (i - 1) % n
    bit = 1 << k
    q = alg.q[k]
    wedge: dict[int, GaussianRational] = {}
    interior: dict[int, GaussianRational] = {}
    for x, c in w.coeffs.items():
        sign = -ONE if (x & (bit - 1)).bit_count() & 1 else ONE
        if x & bit:
            interior[x ^ bit] = c * sign * q
        else:
            wedge[x ^ bit] = c * sign
    if i <= n:
        out = dict(wedge)
        for x, c in interior.items():
            out[x] = out.get(x, ZERO) + c
    else:
        out = {x: I * c for x, c in wedge.items()}
        for x, c in interior.items():
            out[x] = out.get(x, ZERO) - I * c
    return Multivector(alg, out)


def exterior_matrices(alg: CliffordAlgebra) -> list[Matrix]:
    N = alg.dim
    mats = []
    for i in range(1, 2 * alg.n + 1):
        rows = [[ZERO] * N for _ in range(N)]
        for z in range(N):
            for w, c in exterior_model_action(i, alg.blade(z), alg).coeffs.items():
                rows[w][z] = c
        mats.append(Matrix._wrap(rows))
    return mats


def grading_lambda(alg: CliffordAlgebra) -> GaussianRational:
    """lambda = i^n (-1)^{n(n-1)/2} prod_i q_i."""
    n = alg.n
    sign = -ONE if (n * (n - 1) // 2) & 1 else ONE
    return i_power(n) * sign * alg.qprod(top(n))


def grading_operator(alg: CliffordAlgebra) -> tuple[Matrix, GaussianRational]:
    """Matrix of e_top (x) e_top and the closed-form lambda; the matrix is diag(lambda (-1)^rho(z))."""
    t = alg.top_mask
    return lr_matrix(t, t, alg), grading_lambda(alg)


def odd_extend(mats: Sequence[Matrix], q: ScalarLike) -> Matrix:
    """Extra generator lambda * S, S = diag((-1)^rho(z)), with lambda in {1, i}, lambda^2 = q.

    The other root -lambda gives the second, sign-inequivalent extension.
    """
    q = as_scalar(q)
    if q == 1:
        lam = ONE
    elif q == -1:
        lam = I
    else:
        raise OddExtensionError("q must be 1 or -1 for a root lambda in {1, i}")
    d = mats[0].nrows
    M = Matrix.diag([-lam if rho(z) & 1 else lam for z in range(d)])
    if M @ M != Matrix.identity(d).scale(q):
        raise ArithmeticError("odd generator does not square to q")
    for G in mats:
        if M @ G != -(G @ M):
            raise ArithmeticError("odd generator fails to anticommute with a generator matrix")
    return M


def odd_commutant_dimension(mats: Sequence[Matrix], q: ScalarLike) -> int:
    return commutant_dimension(list(mats) + [odd_extend(mats, q)])

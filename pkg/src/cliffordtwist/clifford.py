"""Clifford algebras C(V, q) as k_F Z2^n with the Clifford cocycle.

All structure maps here are diagonal on blades; their signs come from
closed forms in ``rho`` (popcount) and the Z2 dot product.
"""

from __future__ import annotations

from typing import Sequence

from .bits import check_mask, dot, rho, top
from .scalars import ONE, GaussianRational, ScalarLike
from .twisted import (
    CliffordCochain,
    Multivector,
    Signature,
    TwistedAlgebra,
    braiding_R,
)

__all__ = [
    "CliffordAlgebra",
    "rho",
    "theta_sign",
    "theta_involution",
    "sigma_automorphism",
    "top_square",
    "top_square_closed_form",
    "basis_inverse",
    "lambda_norm",
    "adjoint_sign",
    "adjoint_action",
    "commute_sign",
]


class CliffordAlgebra(TwistedAlgebra):
    """C(V, q): twisted group algebra of Z2^n by the Clifford cocycle."""

    def __init__(self, signature: Signature | str | Sequence[ScalarLike]):
        if not isinstance(signature, Signature):
            signature = Signature.parse(signature) if isinstance(signature, str) else Signature(signature)
        super().__init__(CliffordCochain(signature))
        self.signature = signature

    @property
    def q(self) -> tuple[GaussianRational, ...]:
        return self.signature.q

    @property
    def associative(self) -> bool:
        # the Clifford cochain is a cocycle for every signature
        return True

    @property
    def top_mask(self) -> int:
        return top(self.n)

    def gamma(self) -> Multivector:
        """Top blade e_(1,...,1) = e_1 ... e_n."""
        return self.blade(self.top_mask)

    def qprod(self, x: int) -> GaussianRational:
        """prod_i q_i^{x_i}."""
        return self.F.qprod(x)

    @classmethod
    def pq(cls, r: int, s: int) -> CliffordAlgebra:
        return cls(Signature.pq(r, s))

    def __repr__(self):
        return f"CliffordAlgebra({str(self.signature)!r})"


def _require_clifford(a: Multivector) -> CliffordAlgebra:
    alg = a.algebra
    if not isinstance(alg, CliffordAlgebra):
        raise TypeError("operation is defined on Clifford algebras only")
    return alg


def theta_sign(x: int) -> int:
    """theta(x) = (-1)^{rho(x)(rho(x)-1)/2}."""
    r = rho(x)
    return -1 if (r * (r - 1) // 2) & 1 else 1


_SIGN = {1: ONE, -1: -ONE}


def theta_involution(a: Multivector) -> Multivector:
    """Order reversal: Theta(e_x) = theta(x) e_x."""
    _require_clifford(a)
    return a.map_blades(lambda x: _SIGN[theta_sign(x)])


def sigma_automorphism(a: Multivector) -> Multivector:
    """Grading automorphism sigma(e_x) = (-1)^{rho(x)} e_x."""
    return a.map_blades(lambda x: -ONE if rho(x) & 1 else ONE)


def top_square(alg: CliffordAlgebra) -> GaussianRational:
    """gamma * gamma, computed by the product (it is always a scalar)."""
    g = alg.gamma()
    sq = g * g
    assert sq.is_scalar()
    return sq.scalar_part()


def top_square_closed_form(alg: CliffordAlgebra) -> GaussianRational:
    """(-1)^{n(n-1)/2} prod_i q_i."""
    n = alg.n
    sign = -1 if (n * (n - 1) // 2) & 1 else 1
    return alg.qprod(alg.top_mask) * sign


def basis_inverse(x: int, alg: CliffordAlgebra) -> Multivector:
    """e_x^{-1} = e_x / F(x, x)."""
    check_mask(x, alg.n)
    return alg.blade(x, ONE / alg.F.value(x, x))


def lambda_norm(x: int, alg: CliffordAlgebra) -> GaussianRational:
    """lambda(e_x) = (-1)^{rho(x)} prod_i q_i^{x_i}."""
    check_mask(x, alg.n)
    v = alg.qprod(x)
    return -v if rho(x) & 1 else v


def adjoint_sign(x: int, y: int) -> int:
    """Sign of ad_{e_x}(e_y) = (-1)^{rho(x)(rho(y)+1) + x.y} e_y."""
    e = rho(x) * (rho(y) + 1) + dot(x, y)
    return -1 if e & 1 else 1


def adjoint_action(x: int, a: Multivector) -> Multivector:
    """ad_{e_x}(a) = sigma(e_x) a e_x^{-1}, via the diagonal closed form."""
    alg = _require_clifford(a)
    check_mask(x, alg.n)
    return a.map_blades(lambda y: _SIGN[adjoint_sign(x, y)])


def commute_sign(x: int, y: int, alg: CliffordAlgebra) -> int:
    """s in {+1, -1} with e_x e_y = s e_y e_x, read off from R(x, y)."""
    r = braiding_R(alg.F, x, y)
    if r == 1:
        return 1
    if r == -1:
        return -1
    raise ArithmeticError(f"braiding R({x}, {y}) = {r} is not a sign")

"""A Euclidean Dirac operator on quaternion-valued polynomials in x1..x4.

Spinors take values in C(0,2) = H with basis 1, e1, e2, e3 = e1 e2. The
operator is

    D psi = e1 (d1 + i (-1)^{|psi|_1} d3) psi + e2 (d2 + i (-1)^{|psi|_2} d4) psi

applied to each Z2^2-homogeneous component, where |psi|_k is the k-th bit of
the component's blade.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterable, Mapping

from .clifford import CliffordAlgebra
from .scalars import I, ONE, ZERO, GaussianRational, ScalarLike, as_scalar, format_scalar
from .twisted import Multivector

__all__ = [
    "QUATERNIONS",
    "Poly",
    "PolySpinor",
    "monomials",
    "partial_derivative",
    "dirac_apply",
    "dirac_component_form",
    "dirac_curl_form",
    "laplacian",
    "random_spinor",
]

QUATERNIONS = CliffordAlgebra("--")

Monomial = tuple[int, int, int, int]
# scalar polynomial: monomial -> nonzero coefficient
Poly = dict


def _padd(*polys: Mapping[Monomial, GaussianRational], signs: Iterable[int] | None = None) -> Poly:
    out: Poly = {}
    signs = list(signs) if signs is not None else [1] * len(polys)
    for p, s in zip(polys, signs):
        for m, c in p.items():
            v = out.get(m, ZERO) + (c if s > 0 else -c)
            if v.is_zero():
                out.pop(m, None)
            else:
                out[m] = v
    return out


def _pscale(p: Mapping[Monomial, GaussianRational], c: GaussianRational) -> Poly:
    if c.is_zero():
        return {}
    return {m: v * c for m, v in p.items()}


def _pderiv(p: Mapping[Monomial, GaussianRational], a: int) -> Poly:
    out: Poly = {}
    for m, c in p.items():
        k = m[a]
        if k:
            lowered = m[:a] + (k - 1,) + m[a + 1:]
            out[lowered] = c * k
    return out


def _pconj(p: Mapping[Monomial, GaussianRational]) -> Poly:
    return {m: c.conjugate() for m, c in p.items()}


def _nabla(p: Poly, k: int, bar: bool = False) -> Poly:
    """nabla_k = d_k + i d_{k+2} (k = 1, 2); bar uses -i."""
    other = _pscale(_pderiv(p, k + 1), -I if bar else I)
    return _padd(_pderiv(p, k - 1), other)


class PolySpinor:
    """Finite map monomial exponents (a1..a4) -> nonzero quaternion value."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Multivector] | None = None):
        clean: dict[Monomial, Multivector] = {}
        for m, v in (terms or {}).items():
            m = tuple(int(a) for a in m)
            if len(m) != 4 or any(a < 0 for a in m):
                raise ValueError(f"bad monomial exponent {m!r}")
            if v.algebra != QUATERNIONS:
                raise ValueError("spinor values must lie in C(0,2)")
            if not v.is_zero():
                clean[m] = clean[m] + v if m in clean else v
                if clean[m].is_zero():
                    del clean[m]
        self.terms = clean

    @classmethod
    def term(cls, monomial: Monomial, blade: int, coeff: ScalarLike = 1) -> PolySpinor:
        return cls({tuple(monomial): QUATERNIONS.blade(blade, coeff)})

    @classmethod
    def from_components(cls, comps: Iterable[Mapping[Monomial, GaussianRational]]) -> PolySpinor:
        out: dict[Monomial, dict[int, GaussianRational]] = {}
        for blade, p in enumerate(comps):
            for m, c in p.items():
                out.setdefault(m, {})[blade] = c
        return cls({m: Multivector(QUATERNIONS, d) for m, d in out.items()})

    def components(self) -> list[Poly]:
        """Scalar polynomials psi_0..psi_3 on the blades 1, e1, e2, e1*e2."""
        comps: list[Poly] = [{}, {}, {}, {}]
        for m, v in self.terms.items():
            for x, c in v.coeffs.items():
                comps[x][m] = c
        return comps

    def __add__(self, other: PolySpinor) -> PolySpinor:
        out = dict(self.terms)
        for m, v in other.terms.items():
            out[m] = out[m] + v if m in out else v
        return PolySpinor(out)

    def __neg__(self) -> PolySpinor:
        return PolySpinor({m: -v for m, v in self.terms.items()})

    def __sub__(self, other: PolySpinor) -> PolySpinor:
        return self + (-other)

    def scale(self, c: ScalarLike) -> PolySpinor:
        c = as_scalar(c)
        return PolySpinor({m: v.scale(c) for m, v in self.terms.items()})

    def left_mul(self, a: Multivector) -> PolySpinor:
        return PolySpinor({m: a * v for m, v in self.terms.items()})

    def conjugate(self) -> PolySpinor:
        """Complex conjugation of every coefficient."""
        return PolySpinor(
            {m: Multivector(QUATERNIONS, {x: c.conjugate() for x, c in v.coeffs.items()}) for m, v in self.terms.items()}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def __eq__(self, other):
        return isinstance(other, PolySpinor) and self.terms == other.terms

    __hash__ = None

    def __str__(self):
        """Flat signed sum such as ``"2*x1*e1 - x2^2 + (1+1i)*x4*e3"``, sorted by component then monomial."""
        items = sorted(((x, m, c) for m, v in self.terms.items() for x, c in v.coeffs.items()))
        if not items:
            return "0"
        out = []
        for x, m, c in items:
            neg = (c.im == 0 and c.re < 0) or (c.re == 0 and c.im < 0)
            if neg:
                c = -c
            factors = [f"x{k + 1}" if a == 1 else f"x{k + 1}^{a}" for k, a in enumerate(m) if a]
            if x:
                factors.append(("1", "e1", "e2", "e3")[x])
            if c != 1 or not factors:
                txt = format_scalar(c)
                factors.insert(0, f"({txt})" if c.re != 0 and c.im != 0 else txt)
            body = "*".join(factors)
            out.append((("-" if neg else "") if not out else (" - " if neg else " + ")) + body)
        return "".join(out)

    def __repr__(self):
        return f"PolySpinor({str(self)!r})"


def monomials(max_degree: int) -> list[Monomial]:
    """All exponent 4-tuples of total degree <= max_degree, sorted."""
    return sorted(m for m in product(range(max_degree + 1), repeat=4) if sum(m) <= max_degree)


def partial_derivative(psi: PolySpinor, a: int) -> PolySpinor:
    """d/dx_a for a in 1..4."""
    if not 1 <= a <= 4:
        raise ValueError(f"direction {a} outside 1..4")
    k = a - 1
    out: dict[Monomial, Multivector] = {}
    for m, v in psi.terms.items():
        if m[k]:
            lowered = m[:k] + (m[k] - 1,) + m[k + 1:]
            out[lowered] = out[lowered] + v.scale(m[k]) if lowered in out else v.scale(m[k])
    return PolySpinor(out)


def dirac_apply(psi: PolySpinor) -> PolySpinor:
    """The twisted-action form, split by homogeneous degree."""
    e = (QUATERNIONS.gen(1), QUATERNIONS.gen(2))
    total = PolySpinor()
    for x in range(4):
        part = PolySpinor({m: QUATERNIONS.blade(x, v[x]) for m, v in psi.terms.items() if not v[x].is_zero()})
        if part.is_zero():
            continue
        for k in (0, 1):
            sign = -ONE if x >> k & 1 else ONE
            inner = partial_derivative(part, k + 1) + partial_derivative(part, k + 3).scale(I * sign)
            total = total + inner.left_mul(e[k])
    return total


def dirac_component_form(psi: PolySpinor) -> PolySpinor:
    """(D psi)_0 = -nb1 psi1 - nb2 psi2, (D psi)_1 = n1 psi0 + nb2 psi3,
    (D psi)_2 = n2 psi0 - nb1 psi3, (D psi)_3 = n1 psi2 - n2 psi1."""
    p0, p1, p2, p3 = psi.components()
    out0 = _padd(_nabla(p1, 1, True), _nabla(p2, 2, True), signs=(-1, -1))
    out1 = _padd(_nabla(p0, 1), _nabla(p3, 2, True))
    out2 = _padd(_nabla(p0, 2), _nabla(p3, 1, True), signs=(1, -1))
    out3 = _padd(_nabla(p2, 1), _nabla(p1, 2), signs=(1, -1))
    return PolySpinor.from_components([out0, out1, out2, out3])


def dirac_curl_form(psi: PolySpinor) -> PolySpinor:
    """Divergence, gradient and curl with nabla = (n1, n2, 0) on the vector (psi1, psi2, conj psi3)."""
    p0, p1, p2, p3 = psi.components()
    vec = [p1, p2, _pconj(p3)]
    nab = [lambda p: _nabla(p, 1), lambda p: _nabla(p, 2), lambda p: {}]
    nabbar = [lambda p: _nabla(p, 1, True), lambda p: _nabla(p, 2, True), lambda p: {}]
    div = _padd(*(nabbar[k](vec[k]) for k in range(3)))
    grad = [nab[k](p0) for k in range(3)]
    w = [_pconj(v) for v in vec]
    curl = [
        _padd(nabbar[1](w[2]), nabbar[2](w[1]), signs=(1, -1)),
        _padd(nabbar[2](w[0]), nabbar[0](w[2]), signs=(1, -1)),
        _padd(nabbar[0](w[1]), nabbar[1](w[0]), signs=(1, -1)),
    ]
    out_vec = [_padd(grad[k], curl[k]) for k in range(3)]
    return PolySpinor.from_components([_pscale(div, -ONE), out_vec[0], out_vec[1], _pconj(out_vec[2])])


def laplacian(psi: PolySpinor) -> PolySpinor:
    total = PolySpinor()
    for a in range(1, 5):
        total = total + partial_derivative(partial_derivative(psi, a), a)
    return total


def random_spinor(rng: random.Random, max_degree: int = 3, n_terms: int = 6) -> PolySpinor:
    """Seeded random spinor with small Gaussian-rational coefficients."""
    monos = monomials(max_degree)
    terms: dict[Monomial, dict[int, GaussianRational]] = {}
    for _ in range(n_terms):
        m = rng.choice(monos)
        x = rng.randrange(4)
        c = GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
        if rng.random() < 0.3:
            c = c / rng.randint(1, 4)
        terms.setdefault(m, {})[x] = c
    return PolySpinor({m: Multivector(QUATERNIONS, d) for m, d in terms.items()})

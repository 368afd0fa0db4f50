"""Tensor products, the periodicity twist and matrix-algebra classification.

Two twisted algebras on Z2^n and Z2^m combine into one on Z2^(n+m); the
first factor occupies the low n bits. The super tensor product adds the
Koszul sign (-1)^{rho(x') rho(y)}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .bits import rho
from .clifford import CliffordAlgebra
from .linalg import Echelon, Matrix, nullspace
from .scalars import I, ONE, GaussianRational, ScalarLike, as_scalar, format_scalar
from .spinor import generator_matrices, relations_witness
from .twisted import (
    Cochain,
    FunctionCochain,
    Multivector,
    Signature,
    TooLargeError,
    TwistedAlgebra,
)

__all__ = [
    "TensorCochain",
    "super_tensor",
    "ordinary_tensor",
    "TwistCochain",
    "periodicity_mu",
    "periodicity_twist",
    "periodicity_map",
    "periodicity_iso_witness",
    "periodicity_iso_check",
    "AlgebraLabel",
    "center_basis",
    "lr_rank",
    "classify",
    "periodicity_table_check",
]

LR_MAX_N = 6
SPINOR_ROUTE_MAX_N = 12


def _rho_array(N: int) -> np.ndarray:
    ar = np.arange(N, dtype=np.int64)
    return np.array([int(v).bit_count() for v in ar], dtype=np.int64)


class TensorCochain(Cochain):
    """F((x,x'),(y,y')) = F1(x,y) F2(x',y') [(-1)^{rho(x') rho(y)} if super]."""

    def __init__(self, F1: Cochain, F2: Cochain, koszul: bool = True):
        self.F1, self.F2, self.koszul = F1, F2, koszul
        self.n = F1.n + F2.n
        self._low = (1 << F1.n) - 1

    def value(self, x: int, y: int) -> GaussianRational:
        n1, lo = self.F1.n, self._low
        x1, x2, y1, y2 = x & lo, x >> n1, y & lo, y >> n1
        v = self.F1.value(x1, y1) * self.F2.value(x2, y2)
        if self.koszul and (rho(x2) * rho(y1)) & 1:
            v = -v
        return v

    def unit_logs(self) -> np.ndarray | None:
        L1, L2 = self.F1.unit_logs(), self.F2.unit_logs()
        if L1 is None or L2 is None:
            return None
        N = 1 << self.n
        idx = np.arange(N, dtype=np.int64)
        lo, hi = idx & self._low, idx >> self.F1.n
        L = L1[lo[:, None], lo[None, :]].astype(np.int64) + L2[hi[:, None], hi[None, :]]
        if self.koszul:
            r = _rho_array(N)
            L += 2 * (np.outer(r[hi], r[lo]) % 2)
        return (L % 4).astype(np.int8)

    def __eq__(self, other):
        return (
            isinstance(other, TensorCochain)
            and self.koszul == other.koszul
            and self.F1 == other.F1
            and self.F2 == other.F2
        )

    def __hash__(self):
        return hash(("tensor", self.koszul, self.n))

    def describe(self) -> str:
        op = "(x)^" if self.koszul else "(x)"
        return f"{self.F1.describe()} {op} {self.F2.describe()}"


def super_tensor(A: TwistedAlgebra, B: TwistedAlgebra) -> TwistedAlgebra:
    """A (x)^ B as a twisted algebra on Z2^(n+m)."""
    return TwistedAlgebra(TensorCochain(A.F, B.F, koszul=True))


def ordinary_tensor(A: TwistedAlgebra, B: TwistedAlgebra) -> TwistedAlgebra:
    """A (x) B without Koszul sign (factors commute)."""
    return TwistedAlgebra(TensorCochain(A.F, B.F, koszul=False))


class TwistCochain(Cochain):
    """F'(x,y) = F(x,y) mu^{(rho(x+y) - rho(x) - rho(y))/2} = F(x,y) mu^{-|x&y|}."""

    def __init__(self, F: Cochain, mu: ScalarLike):
        self.F = F
        self.mu = as_scalar(mu)
        self.n = F.n
        self._inv = ONE / self.mu

    def value(self, x: int, y: int) -> GaussianRational:
        k = (x & y).bit_count()
        return self.F.value(x, y) * self._inv ** k

    def unit_logs(self) -> np.ndarray | None:
        L = self.F.unit_logs()
        if L is None or not self.mu.is_unit_root():
            return None
        N = self.size
        idx = np.arange(N, dtype=np.int64)
        r = _rho_array(N)
        k = r[idx[:, None] & idx[None, :]]
        return ((L.astype(np.int64) - self.mu.unit_log() * k) % 4).astype(np.int8)

    def describe(self) -> str:
        return f"twist[{format_scalar(self.mu)}]({self.F.describe()})"


def _as_signature(sig: Signature | str | Sequence[ScalarLike]) -> Signature:
    if isinstance(sig, Signature):
        return sig
    return Signature.parse(sig) if isinstance(sig, str) else Signature(sig)


def periodicity_mu(sig2m: Signature | str | Sequence[ScalarLike]) -> GaussianRational:
    """mu = (-1)^{m(2m-1)} q_1 ... q_2m."""
    sig = _as_signature(sig2m)
    if sig.n % 2:
        raise ValueError(f"periodicity needs an even-dimensional factor, got {sig.n}")
    m = sig.n // 2
    p = ONE
    for q in sig.q:
        p = p * q
    return -p if (m * (2 * m - 1)) & 1 else p


def periodicity_twist(F: Cochain, m: int, sig2m: Signature | str | Sequence[ScalarLike]) -> Cochain:
    """F' with k_F G (x)^ C(2m) = k_F' G (x) C(2m); F itself when mu = 1."""
    sig = _as_signature(sig2m)
    if sig.n != 2 * m:
        raise ValueError(f"signature has length {sig.n}, expected 2m = {2 * m}")
    mu = periodicity_mu(sig)
    if mu != 1 and mu != -1:
        raise ValueError(f"mu = {format_scalar(mu)} is not a sign; need q_i = +-1")
    if mu == 1:
        return F
    return TwistCochain(F, mu)


def periodicity_map(kFG: TwistedAlgebra, C2m: CliffordAlgebra) -> tuple[list[int], list[GaussianRational]]:
    """phi(e_(x,x')) = e_x (x) gamma^{rho(x)} e_x' as (target mask, coefficient) per blade."""
    n, N2 = kFG.n, C2m.dim
    gamma = C2m.gamma()
    powers = [C2m.one()]
    for _ in range(n):
        powers.append(powers[-1] * gamma)
    perm: list[int] = []
    coef: list[GaussianRational] = []
    cache: dict[tuple[int, int], tuple[int, GaussianRational]] = {}
    for u in range(kFG.dim * N2):
        x, x2 = u & (kFG.dim - 1), u >> n
        key = (rho(x), x2)
        hit = cache.get(key)
        if hit is None:
            ((w, c),) = (powers[key[0]] * C2m.blade(x2)).coeffs.items()
            hit = cache[key] = (w, c)
        perm.append(x | (hit[0] << n))
        coef.append(hit[1])
    return perm, coef


def periodicity_iso_witness(
    kFG: TwistedAlgebra, C2m: CliffordAlgebra, vectorized: bool = True
) -> tuple[int, int] | None:
    """First blade pair (u, v) where phi fails to be multiplicative, else None."""
    m2 = C2m.n
    Fp = periodicity_twist(kFG.F, m2 // 2, C2m.signature)
    left = TensorCochain(kFG.F, C2m.F, koszul=True)
    right = TensorCochain(Fp, C2m.F, koszul=False)
    perm, coef = periodicity_map(kFG, C2m)
    N = 1 << left.n
    if vectorized:
        LL, LR = left.unit_logs(), right.unit_logs()
        logs_ok = all(c.is_unit_root() for c in coef)
        if LL is not None and LR is not None and logs_ok:
            P = np.array(perm, dtype=np.int64)
            C = np.array([c.unit_log() for c in coef], dtype=np.int64)
            idx = np.arange(N, dtype=np.int64)
            uv = idx[:, None] ^ idx[None, :]
            bad_perm = P[uv] != (P[:, None] ^ P[None, :])
            lhs = LL.astype(np.int64) + C[uv]
            rhs = C[:, None] + C[None, :] + LR[P[:, None], P[None, :]]
            bad = bad_perm | ((lhs - rhs) % 4 != 0)
            hits = np.argwhere(bad)
            if hits.size:
                return int(hits[0][0]), int(hits[0][1])
            return None
    for u in range(N):
        for v in range(N):
            w = u ^ v
            if perm[w] != perm[u] ^ perm[v]:
                return (u, v)
            if left.value(u, v) * coef[w] != coef[u] * coef[v] * right.value(perm[u], perm[v]):
                return (u, v)
    return None


def periodicity_iso_check(kFG: TwistedAlgebra, C2m: CliffordAlgebra, vectorized: bool = True) -> bool:
    """phi is multiplicative on all blade pairs (it is bijective by construction)."""
    return periodicity_iso_witness(kFG, C2m, vectorized) is None


# -- classification ------------------------------------------------------------


@dataclass
class AlgebraLabel:
    """Isomorphism type over Q(i): "matrix" M_d, "double" M_d + M_d, or "unclassified"."""

    kind: str
    size: int = 0
    center_dim: int | None = None
    mu: GaussianRational | None = None
    checks: list[str] = field(default_factory=list)
    reason: str = ""

    @property
    def label(self) -> str:
        if self.kind == "matrix":
            return f"M_{self.size}"
        if self.kind == "double":
            return f"M_{self.size}+M_{self.size}"
        return "unclassified"

    def __str__(self):
        return self.label

    def same_type(self, other: AlgebraLabel) -> bool:
        return self.label == other.label

    def to_json(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "center_dim": self.center_dim,
            "mu": None if self.mu is None else format_scalar(self.mu),
            "checks": list(self.checks),
            **({"reason": self.reason} if self.reason else {}),
        }


def center_basis(alg: TwistedAlgebra) -> list[Multivector]:
    """Basis of the center, from the linear system a e_g = e_g a over the generators g."""
    N = alg.dim
    rows = []
    F = alg.F.value
    for i in range(alg.n):
        g = 1 << i
        # a = sum c_y e_y; e_y e_g - e_g e_y lands on e_{y+g}; one equation per target
        for y in range(N):
            d = F(y, g) - F(g, y)
            if not d.is_zero():
                rows.append({y: d})
    return [Multivector(alg, v) for v in nullspace(rows, N)]


def lr_rank(alg: TwistedAlgebra) -> int:
    """Rank of span{a -> e_x a e_y} inside End(A); equals dim(A)^2 iff A is central simple."""
    if alg.n > LR_MAX_N:
        raise TooLargeError(f"left-right rank is capped at n={LR_MAX_N}")
    N = alg.dim
    F = alg.F.value
    ech = Echelon()
    for x in range(N):
        for y in range(N):
            row = {}
            for z in range(N):
                zy = z ^ y
                row[(x ^ zy) * N + z] = F(z, y) * F(x, zy)
            ech.add(row)
    return ech.rank


def _is_pow4(N: int) -> int | None:
    m = 0
    while 4 ** m < N:
        m += 1
    return m if 4 ** m == N else None


def _spinor_route(alg: CliffordAlgebra) -> tuple[bool, str]:
    """Realize C(2m, q) inside End(k^{2^m}) and check the blade images span it."""
    n = alg.n
    m = n // 2
    base = generator_matrices(CliffordAlgebra("+" * m))
    mats = [M if q == 1 else M.scale(I) for M, q in zip(base, alg.q)]
    if relations_witness(mats, alg.q) is not None:
        return False, "generator matrices break the relations"
    d = 1 << m
    images = [Matrix.identity(d)]
    for x in range(1, alg.dim):
        hb = x.bit_length() - 1
        images.append(images[x ^ (1 << hb)] @ mats[hb])
    ech = Echelon()
    for img in images:
        ech.add(img.flatten())
    if ech.rank != alg.dim:
        return False, f"blade images have rank {ech.rank} < {alg.dim}"
    return True, f"spinor images span End(k^{d})"


def _central_simple(alg: TwistedAlgebra, checks: list[str]) -> AlgebraLabel | None:
    n = alg.n
    if isinstance(alg, CliffordAlgebra) and n % 2 == 0 and n <= SPINOR_ROUTE_MAX_N:
        ok, msg = _spinor_route(alg)
        checks.append(msg)
        if ok:
            return AlgebraLabel("matrix", 1 << (n // 2))
        return None
    m = _is_pow4(alg.dim)
    if m is None:
        checks.append(f"dimension {alg.dim} is not a square")
        return None
    r = lr_rank(alg)
    checks.append(f"left-right rank {r} of {alg.dim ** 2}")
    if r == alg.dim ** 2:
        return AlgebraLabel("matrix", 1 << m)
    return None


def _summand(alg: TwistedAlgebra, c: int, root: GaussianRational) -> TwistedAlgebra:
    """A e_+- modelled on blades with the lowest bit of c cleared; e_c acts as root."""
    F = alg.F.value
    b = (c & -c).bit_length() - 1
    low = (1 << b) - 1

    def expand(t: int) -> int:
        return (t & low) | ((t >> b) << (b + 1))

    def compress(t: int) -> int:
        return (t & low) | ((t >> (b + 1)) << b)

    def fn(t: int, u: int) -> GaussianRational:
        T, U = expand(t), expand(u)
        w = T ^ U
        v = F(T, U)
        if w >> b & 1:
            tp = w ^ c
            v = v * root / F(tp, c)
        return v

    return TwistedAlgebra(FunctionCochain(alg.n - 1, fn, label=f"summand[{format_scalar(root)}]"))


def _idempotent_checks(alg: TwistedAlgebra, c: int, root: GaussianRational) -> list[str]:
    z = alg.blade(c, ONE / root)
    half = as_scalar("1/2")
    ep = (alg.one() + z).scale(half)
    em = (alg.one() - z).scale(half)
    out = []
    if ep * ep != ep or em * em != em:
        raise ArithmeticError("splitting elements are not idempotent")
    if not (ep * em).is_zero():
        raise ArithmeticError("splitting idempotents are not orthogonal")
    if ep + em != alg.one():
        raise ArithmeticError("splitting idempotents do not sum to 1")
    out.append("idempotents (1+-z)/2 orthogonal, sum to 1")
    b = (c & -c).bit_length() - 1
    for e in (ep, em):
        ech = Echelon()
        for t in range(alg.dim):
            if not t >> b & 1:
                ech.add((alg.blade(t) * e).coeffs)
        if ech.rank != alg.dim // 2:
            raise ArithmeticError("summand has the wrong dimension")
    out.append(f"summands have dimension {alg.dim // 2}")
    return out


def classify(alg: TwistedAlgebra) -> AlgebraLabel:
    """Label an associative twisted algebra as M_d or M_d + M_d over Q(i)."""
    if isinstance(alg, CliffordAlgebra) and not alg.signature.is_pm_one():
        return AlgebraLabel("unclassified", reason="signature entries must be +1 or -1")
    if not alg.associative:
        return AlgebraLabel("unclassified", reason="algebra is not associative")
    center = center_basis(alg)
    checks = [f"center dimension {len(center)}"]
    if len(center) == 1:
        lab = _central_simple(alg, checks)
        if lab is None:
            return AlgebraLabel("unclassified", center_dim=1, checks=checks, reason="not central simple")
        lab.center_dim, lab.checks = 1, checks
        return lab
    if len(center) == 2:
        blades = [next(iter(z.coeffs)) for z in center if len(z.coeffs) == 1]
        cs = [x for x in blades if x != 0]
        if len(cs) != 1:
            return AlgebraLabel("unclassified", center_dim=2, checks=checks, reason="center not spanned by blades")
        c = cs[0]
        mu = alg.F.value(c, c)
        root = mu.sqrt()
        if root is None:
            return AlgebraLabel("unclassified", center_dim=2, mu=mu, checks=checks, reason="mu has no square root")
        checks.append(f"central blade {c} squares to {format_scalar(mu)}")
        checks.extend(_idempotent_checks(alg, c, root))
        parts = [classify(_summand(alg, c, r)) for r in (root, -root)]
        for p, tag in zip(parts, "+-"):
            checks.append(f"summand {tag}: {p.label}")
        if all(p.kind == "matrix" for p in parts) and parts[0].size == parts[1].size:
            return AlgebraLabel("double", parts[0].size, center_dim=2, mu=mu, checks=checks)
        return AlgebraLabel("unclassified", center_dim=2, mu=mu, checks=checks, reason="summands differ")
    return AlgebraLabel("unclassified", center_dim=len(center), checks=checks, reason="center too large")


def periodicity_table_check(max_n: int = 3) -> dict[str, Any]:
    """Sign-flip identity and labels of both sides of the period-2 isomorphisms, n <= max_n."""
    from itertools import product

    entries = []
    ok = True
    for n in range(max_n + 1):
        for bits in product("+-", repeat=n):
            sig = Signature.parse("".join(bits))
            for pm in ("++", "--"):
                A, C = CliffordAlgebra(sig), CliffordAlgebra(pm)
                iso = periodicity_iso_check(A, C)
                flip = _same_values(periodicity_twist(A.F, 1, pm), CliffordAlgebra(sig.negated()).F)
                good = iso and flip
                ok &= good
                entries.append({"identity": "sign-flip", "signature": str(sig), "factor": pm, "ok": good})
        pairs = [
            (CliffordAlgebra.pq(0, n + 2), ordinary_tensor(CliffordAlgebra.pq(n, 0), CliffordAlgebra.pq(0, 2)),
             f"C(0,{n + 2}) = C({n},0) (x) H"),
            (CliffordAlgebra.pq(n + 2, 0), ordinary_tensor(CliffordAlgebra.pq(0, n), CliffordAlgebra.pq(2, 0)),
             f"C({n + 2},0) = C(0,{n}) (x) M_2"),
        ]
        for lhs, rhs, name in pairs:
            a, b = classify(lhs), classify(rhs)
            good = a.kind != "unclassified" and a.same_type(b)
            ok &= good
            entries.append({"identity": name, "lhs": a.label, "rhs": b.label, "ok": good})
    H = CliffordAlgebra.pq(0, 2)
    hh = classify(ordinary_tensor(H, H))
    good = hh.label == "M_4"
    ok &= good
    entries.append({"identity": "H (x) H = M_4", "lhs": hh.label, "ok": good})
    return {"ok": ok, "entries": entries}


def _same_values(F: Cochain, G: Cochain) -> bool:
    if F.n != G.n:
        return False
    LF, LG = F.unit_logs(), G.unit_logs()
    if LF is not None and LG is not None:
        return bool(np.array_equal(LF, LG))
    N = F.size
    return all(F.value(x, y) == G.value(x, y) for x in range(N) for y in range(N))

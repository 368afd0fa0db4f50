"""The Clifford doubling process  A -> A + Av  on twisted group algebras.

Given a cochain F on G = Z2^n, a grading function s: G -> k* with s(0) = 1
and q in k*, the doubled algebra lives on G x Z2 (the new generator v is
the most significant bit) with cochain

    Fbar(x, yv) = Fbar(x, y) = F(x, y)
    Fbar(xv, y)  = s(y) F(x, y)
    Fbar(xv, yv) = q s(y) F(x, y)

and grading sbar(x) = s(x), sbar(xv) = -s(x).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .bits import check_dim, check_mask, rho
from .linalg import Matrix, solve_commuting
from .scalars import ONE, GaussianRational, ScalarLike, as_scalar
from .twisted import (
    TABLE_MAX_N,
    Cochain,
    Signature,
    SignCochain,
    TooLargeError,
    braiding_R,
    clifford_cochain,
    coboundary3,
    is_cocycle,
)

__all__ = [
    "GradedAlgebraSpec",
    "ProcessedCochain",
    "ProcessError",
    "RepresentationError",
    "process_once",
    "closed_associator",
    "closed_braiding",
    "associativity_preserved",
    "alternativity_witness",
    "alternativity_check",
    "condition_ii_witness",
    "iterate_from_field",
    "clifford_spec",
    "rep_extend",
    "RepExtension",
    "representation_witness",
    "sign_character",
    "is_sign_character",
]

ALTERNATIVITY_MAX_N = 8

Grading = Callable[[int], GaussianRational]


class ProcessError(ValueError):
    """Invalid input to a process-level construction."""


class RepresentationError(ValueError):
    """Matrices do not satisfy the algebra relations they claim to represent."""


@dataclass(frozen=True)
class ProcessRecord:
    parent: "GradedAlgebraSpec"
    q: GaussianRational


@dataclass
class GradedAlgebraSpec:
    """A cochain F on Z2^n together with a grading function s, s(0) = 1.

    For sign-valued data ``xi`` holds the Z2-valued function with
    s(x) = (-1)^xi(x); ``record`` is set when the spec was produced by
    :func:`process_once`.
    """

    n: int
    F: Cochain
    s: Grading
    xi: Callable[[int], int] | None = None
    record: ProcessRecord | None = None
    xi_table: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        check_dim(self.n)
        if self.F.n != self.n:
            raise ProcessError(f"cochain dimension {self.F.n} != spec dimension {self.n}")
        if as_scalar(self.s(0)) != 1:
            raise ProcessError("grading must satisfy s(0) = 1")

    def grading(self, x: int) -> GaussianRational:
        return as_scalar(self.s(x))

    def is_involutive(self) -> bool:
        """Whether sigma(e_x) = s(x) e_x is an involutive automorphism (s a ±1 character)."""
        return is_sign_character(self.s, self.n)


def sign_character(a: int) -> Grading:
    """The ±1 character x -> (-1)^{x.a}."""
    return lambda x: -ONE if (x & a).bit_count() & 1 else ONE


def is_sign_character(s: Grading, n: int) -> bool:
    N = 1 << n
    vals = [as_scalar(s(x)) for x in range(N)]
    if any(v != 1 and v != -1 for v in vals):
        return False
    # a ±1 function is a character iff it is multiplicative on generator-extended pairs
    return all(vals[x] * vals[y] == vals[x ^ y] for x in range(N) for y in range(N))


def clifford_spec(signature: Signature | str) -> GradedAlgebraSpec:
    """C(V, q) with its standard grading s = (-1)^rho."""
    F = clifford_cochain(signature)
    return GradedAlgebraSpec(
        F.n, F, lambda x: -ONE if rho(x) & 1 else ONE, xi=rho
    )


class ProcessedCochain(Cochain):
    """The four-case cochain of the doubled algebra."""

    def __init__(self, parent: Cochain, s: Grading, q: GaussianRational):
        self.parent = parent
        self.s = s
        self.q = q
        self.n = check_dim(parent.n + 1)
        self.v = 1 << parent.n

    def value(self, x: int, y: int) -> GaussianRational:
        v = self.v
        xv, yv = x & v, y & v
        x0, y0 = x ^ xv, y ^ yv
        base = self.parent.value(x0, y0)
        if not xv:
            return base
        base = base * as_scalar(self.s(y0))
        return base * self.q if yv else base

    def unit_logs(self) -> np.ndarray | None:
        if self.n > TABLE_MAX_N:
            raise TooLargeError(f"log table for n={self.n} exceeds cap {TABLE_MAX_N}")
        L = self.parent.unit_logs()
        if L is None or not self.q.is_unit_root():
            return None
        N = self.v
        svals = [as_scalar(self.s(y)) for y in range(N)]
        if not all(v.is_unit_root() for v in svals):
            return None
        slog = np.array([v.unit_log() for v in svals], dtype=np.int16)
        L = L.astype(np.int16)
        qlog = self.q.unit_log()
        lower = L + slog[None, :]
        out = np.block([[L, L], [lower, lower + qlog]])
        return (out % 4).astype(np.int8)

    def describe(self) -> str:
        return f"process[{self.parent.describe()}, q={self.q}]"


def process_once(spec: GradedAlgebraSpec, q: ScalarLike) -> GradedAlgebraSpec:
    """One step of the Clifford process with parameter q != 0."""
    q = as_scalar(q)
    if q.is_zero():
        raise ProcessError("the process parameter q must be nonzero")
    n = spec.n
    v = 1 << n
    s = spec.s

    def s_bar(x: int) -> GaussianRational:
        val = as_scalar(s(x & (v - 1)))
        return -val if x & v else val

    xi_bar: Callable[[int], int] | None = None
    if spec.xi is not None:
        xi = spec.xi
        xi_bar = lambda x: (xi(x & (v - 1)) + (1 if x & v else 0)) % 2

    return GradedAlgebraSpec(
        n + 1,
        ProcessedCochain(spec.F, s, q),
        s_bar,
        xi=xi_bar,
        record=ProcessRecord(spec, q),
    )


def _split(spec_bar: GradedAlgebraSpec, *masks: int):
    rec = spec_bar.record
    if rec is None:
        raise ProcessError("spec was not produced by process_once")
    for m in masks:
        check_mask(m, spec_bar.n)
    v = 1 << rec.parent.n
    return rec, v, [(m & (v - 1), bool(m & v)) for m in masks]


def closed_associator(spec_bar: GradedAlgebraSpec, x: int, y: int, z: int) -> GaussianRational:
    """Associator of the doubled algebra from the parent's associator and s.

    v-free first argument: phi(x, y, z). With v in the first argument the
    factor is s(y) s(z)^e / s(y+z), e = +1 when y carries no v and -1 when it
    does. For ±1-valued s every case reduces to s(y) s(z) / s(y+z).
    """
    rec, _, parts = _split(spec_bar, x, y, z)
    (x0, xv), (y0, yv), (z0, _) = parts
    phi = coboundary3(rec.parent.F, x0, y0, z0)
    if not xv:
        return phi
    s = rec.parent.grading
    sy, sz, syz = s(y0), s(z0), s(y0 ^ z0)
    if yv:
        return phi * sy / (sz * syz)
    return phi * sy * sz / syz


def closed_braiding(spec_bar: GradedAlgebraSpec, x: int, y: int) -> GaussianRational:
    """R(xv,y) = s(y)R(x,y), R(x,yv) = R(x,y)/s(x), R(xv,yv) = R(x,y)s(y)/s(x)."""
    rec, _, parts = _split(spec_bar, x, y)
    (x0, xv), (y0, yv) = parts
    r = braiding_R(rec.parent.F, x0, y0)
    s = rec.parent.grading
    if xv:
        r = r * s(y0)
    if yv:
        r = r / s(x0)
    return r


def associativity_preserved(spec: GradedAlgebraSpec, q: ScalarLike) -> bool:
    """Whether the doubled algebra is associative; must agree with the parent."""
    if not spec.is_involutive():
        raise ProcessError("s must be a ±1 character (an involutive automorphism)")
    bar = process_once(spec, q)
    child = is_cocycle(bar.F)
    parent = is_cocycle(spec.F)
    if child != parent:
        raise AssertionError(
            f"associativity not preserved: parent cocycle={parent}, doubled cocycle={child}"
        )
    return child


def _assoc_table(F: Cochain) -> list[GaussianRational]:
    N = F.size
    v = F.value
    out = []
    for x in range(N):
        for y in range(N):
            fxy = v(x, y)
            for z in range(N):
                out.append(fxy * v(x ^ y, z) / (v(y, z) * v(x, y ^ z)))
    return out


def alternativity_witness(F: Cochain) -> tuple[int, int, int, str] | None:
    """First triple violating either alternativity identity, or None.

    The identities are ``phi(x,y,z) + R(z,y) phi(x,z,y) = 1 + R(z,y)`` ("right")
    and ``phi^-1(x,y,z) + R(y,x) phi^-1(y,x,z) = 1 + R(y,x)`` ("left").
    """
    if F.n > ALTERNATIVITY_MAX_N:
        raise TooLargeError(f"alternativity check capped at n={ALTERNATIVITY_MAX_N}")
    N = F.size
    n = F.n
    phi = _assoc_table(F)
    R = [F.value(a, b) / F.value(b, a) for a in range(N) for b in range(N)]

    def P(a, b, c):
        return phi[(((a << n) | b) << n) | c]

    for x in range(N):
        for y in range(N):
            for z in range(N):
                rzy = R[(z << n) | y]
                if P(x, y, z) + rzy * P(x, z, y) != 1 + rzy:
                    return (x, y, z, "right")
                ryx = R[(y << n) | x]
                if ONE / P(x, y, z) + ryx / P(y, x, z) != 1 + ryx:
                    return (x, y, z, "left")
    return None


def alternativity_check(spec: GradedAlgebraSpec) -> tuple[bool, tuple[int, int, int, str] | None]:
    w = alternativity_witness(spec.F)
    return w is None, w


def condition_ii_witness(spec: GradedAlgebraSpec) -> tuple[int, int, int] | None:
    """First triple with phi(x,y,z) != 1 while s is not 1 on all of x, y, z."""
    F = spec.F
    N = F.size
    svals = [spec.grading(x) for x in range(N)]
    for x in range(N):
        for y in range(N):
            for z in range(N):
                if svals[x] == 1 and svals[y] == 1 and svals[z] == 1:
                    continue
                if coboundary3(F, x, y, z) != 1:
                    return (x, y, z)
    return None


# -- iteration from the ground field ------------------------------------------------


def _sign_step(f, xi, n: int, eps: int):
    v = 1 << n
    low = v - 1

    def f_bar(x: int, y: int) -> int:
        base = f(x & low, y & low)
        if x & v:
            base += (eps if y & v else 0) + xi(y & low)
        return base & 1

    def xi_bar(x: int) -> int:
        return (xi(x & low) + (1 if x & v else 0)) & 1

    return f_bar, xi_bar


def _sign_step_tables(f_tab: np.ndarray, xi_vec: np.ndarray, eps: int):
    lower = (f_tab + xi_vec[None, :]) % 2
    f_bar = np.block([[f_tab, f_tab], [lower, (lower + eps) % 2]]).astype(np.int8)
    xi_bar = np.concatenate([xi_vec, (xi_vec + 1) % 2]).astype(np.int8)
    return f_bar, xi_bar


def iterate_from_field(steps: Sequence[int] | Signature | str) -> GradedAlgebraSpec:
    """Iterate the sign-valued process from k = C(0,0).

    ``steps`` is a sequence of eps_i in Z2 (q_i = (-1)^eps_i), or a ±1
    signature. Each step applies
    ``fbar((x,a),(y,b)) = f(x,y) + (b*eps + xi(y)) a`` and ``xibar(x,a) = xi(x) + a``.
    """
    if isinstance(steps, str):
        steps = Signature.parse(steps)
    if isinstance(steps, Signature):
        if not steps.is_pm_one():
            raise ProcessError("sign-valued iteration needs q_i = ±1")
        eps_seq = [0 if q == 1 else 1 for q in steps.q]
    else:
        eps_seq = [int(e) % 2 for e in steps]
    check_dim(len(eps_seq))

    f: Callable[[int, int], int] = lambda x, y: 0
    xi: Callable[[int], int] = lambda x: 0
    f_tab = np.zeros((1, 1), dtype=np.int8)
    xi_vec = np.zeros(1, dtype=np.int8)
    for n, eps in enumerate(eps_seq):
        f, xi = _sign_step(f, xi, n, eps)
        if f_tab is not None and n + 1 <= TABLE_MAX_N:
            f_tab, xi_vec = _sign_step_tables(f_tab, xi_vec, eps)
        else:
            f_tab = xi_vec = None
    n = len(eps_seq)
    xi_final = xi
    return GradedAlgebraSpec(
        n,
        SignCochain(n, f, table=f_tab),
        lambda x: -ONE if xi_final(x) & 1 else ONE,
        xi=xi_final,
        xi_table=xi_vec,
    )


# -- representations -----------------------------------------------------------------


def representation_witness(F: Cochain, mats: Sequence[Matrix]) -> tuple[int, int] | None:
    """First pair (x, y) with pi(x) pi(y) != F(x, y) pi(x + y); (0, 0) if pi(0) != id."""
    N = F.size
    if len(mats) != N:
        raise RepresentationError(f"need {N} matrices, got {len(mats)}")
    d = mats[0].nrows
    if mats[0] != Matrix.identity(d):
        return (0, 0)
    for x in range(N):
        for y in range(N):
            if mats[x] @ mats[y] != mats[x ^ y].scale(F.value(x, y)):
                return (x, y)
    return None


@dataclass
class RepExtension:
    """Result of extending a representation through one process step."""

    spec: GradedAlgebraSpec
    matrices: list[Matrix]
    q: GaussianRational
    doubled: bool
    intertwiner: Matrix | None
    note: str = ""

    @property
    def v_matrix(self) -> Matrix:
        return self.matrices[1 << (self.spec.n - 1)]

    def generator_matrices(self) -> list[Matrix]:
        return [self.matrices[1 << i] for i in range(self.spec.n)]


def rep_extend(
    spec: GradedAlgebraSpec, rep: Sequence[Matrix], q: ScalarLike = 1
) -> RepExtension:
    """Extend an irreducible representation W of A to the doubled algebra.

    ``rep[x]`` is the matrix of e_x. If no invertible intertwiner W -> W_sigma
    exists, the result acts on W + W with pi(v) = [[0, 1], [q, 0]]. Otherwise
    W itself is extended with pi(v) the intertwiner phi; phi^2 is a scalar c,
    and phi is rescaled by sqrt(q/c) when that root lies in Q(i) so the
    requested q is realized. If it does not, q = c is used and reported.
    """
    q = as_scalar(q)
    if q.is_zero():
        raise ProcessError("q must be nonzero")
    if not spec.is_involutive():
        raise ProcessError("the grading must be an involutive automorphism")
    rep = list(rep)
    w = representation_witness(spec.F, rep)
    if w is not None:
        raise RepresentationError(f"matrices violate the algebra relations at {w}")
    d = rep[0].nrows
    n = spec.n
    gens = [1 << i for i in range(n)]
    pairs = [(rep[g], rep[g].scale(spec.grading(g))) for g in gens]
    if not pairs:
        # n = 0: the only relation is the identity
        basis = [Matrix.identity(d)] if d == 1 else solve_commuting(d, [(rep[0], rep[0])])
    else:
        basis = solve_commuting(d, pairs)

    phi = None
    for cand in basis:
        if cand.is_invertible():
            phi = cand
            break

    if phi is None:
        return _extend_doubled(spec, rep, q)

    # normalize: first nonzero entry (row-major) equal to 1
    first = next(v for row in phi.rows for v in row if not v.is_zero())
    phi = phi.scale(ONE / first)
    c = (phi @ phi).scalar_value()
    if c is None:
        raise RepresentationError("intertwiner squares to a non-scalar: representation is reducible")
    note = ""
    r = (q / c).sqrt()
    if r is not None:
        phi = phi.scale(r)
        used = q
    else:
        used = c
        note = f"requested q={q} differs from phi^2={c} by a non-square; using q={c}"
    bar = process_once(spec, used)
    v = 1 << n
    mats = list(rep) + [rep[x] @ phi for x in range(v)]
    w = representation_witness(bar.F, mats)
    if w is not None:
        raise RepresentationError(f"extended representation fails at {w}")
    return RepExtension(bar, mats, used, False, phi, note)


def _extend_doubled(spec: GradedAlgebraSpec, rep: list[Matrix], q: GaussianRational) -> RepExtension:
    d = rep[0].nrows
    Z = Matrix.zeros(d)
    Id = Matrix.identity(d)
    pv = Matrix.blocks([[Z, Id], [Id.scale(q), Z]])
    low = [Matrix.blocks([[m, Z], [Z, m.scale(spec.grading(x))]]) for x, m in enumerate(rep)]
    mats = low + [m @ pv for m in low]
    bar = process_once(spec, q)
    w = representation_witness(bar.F, mats)
    if w is not None:
        raise RepresentationError(f"doubled representation fails at {w}")
    return RepExtension(bar, mats, q, True, None)

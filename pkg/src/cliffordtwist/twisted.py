"""Twisted group algebras k_F Z2^n.

A cochain ``F`` on Z2^n twists the group algebra product into
``e_x . e_y = F(x, y) e_{x+y}``. When ``F`` is a 2-cocycle the result is
associative; otherwise the coboundary ``dF`` is the associator of a
quasialgebra and is kept as data rather than treated as an error.
"""

from __future__ import annotations

from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .bits import DimensionError, below_count, check_dim, check_mask
from .scalars import ONE, ZERO, GaussianRational, ScalarLike, as_scalar, format_scalar, parse_scalar

__all__ = [
    "Signature",
    "Cochain",
    "CliffordCochain",
    "SignCochain",
    "TableCochain",
    "FunctionCochain",
    "clifford_cochain",
    "cochain_eval",
    "coboundary3",
    "is_cocycle",
    "cocycle_witness",
    "braiding_R",
    "character_coboundary",
    "TwistedAlgebra",
    "Multivector",
    "twisted_mul",
    "multivector_linear",
    "blade_name",
    "AlgebraMismatch",
    "TooLargeError",
]

TABLE_MAX_N = 12
EXHAUSTIVE_MAX_N = 12
# structure constants are cached per algebra up to this dimension
CACHE_MAX_N = 6


class AlgebraMismatch(ValueError):
    """Operands belong to different algebras."""


class TooLargeError(ValueError):
    """Requested exhaustive computation exceeds its size cap."""


# -- signatures ----------------------------------------------------------------


class Signature:
    """Values q_i = q(e_i) of an orthogonal basis, all nonzero."""

    __slots__ = ("q",)

    def __init__(self, q: Iterable[ScalarLike | str]):
        values = tuple(as_scalar(v) for v in q)
        for i, v in enumerate(values):
            if v.is_zero():
                raise ValueError(f"q_{i + 1} = 0: a signature must be nondegenerate")
        check_dim(len(values))
        self.q = values

    @classmethod
    def parse(cls, text: str) -> Signature:
        """``"+-+"`` shorthand for ±1, or a comma-separated scalar list."""
        s = text.strip()
        if s == "" or set(s) <= {"+", "-"}:
            return cls(1 if c == "+" else -1 for c in s)
        return cls(parse_scalar(part) for part in s.split(","))

    @classmethod
    def pq(cls, r: int, s: int) -> Signature:
        """C(r, s) convention: r entries +1 followed by s entries -1."""
        return cls([1] * r + [-1] * s)

    @property
    def n(self) -> int:
        return len(self.q)

    def is_pm_one(self) -> bool:
        return all(v == 1 or v == -1 for v in self.q)

    def negated(self) -> Signature:
        return Signature(-v for v in self.q)

    def __add__(self, other: Signature) -> Signature:
        return Signature(self.q + other.q)

    def __len__(self):
        return len(self.q)

    def __iter__(self):
        return iter(self.q)

    def __getitem__(self, i):
        return self.q[i]

    def __eq__(self, other):
        return isinstance(other, Signature) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __str__(self):
        if self.is_pm_one():
            return "".join("+" if v == 1 else "-" for v in self.q)
        return ",".join(format_scalar(v) for v in self.q)

    def __repr__(self):
        return f"Signature({str(self)!r})"


# -- cochains ------------------------------------------------------------------


class Cochain:
    """Normalized nowhere-zero function F: Z2^n x Z2^n -> Q(i)*.

    Subclasses implement :meth:`value`, which skips argument validation.
    """

    n: int

    def value(self, x: int, y: int) -> GaussianRational:
        raise NotImplementedError

    def __call__(self, x: int, y: int) -> GaussianRational:
        check_mask(x, self.n)
        check_mask(y, self.n)
        return self.value(x, y)

    @property
    def size(self) -> int:
        return 1 << self.n

    def table(self) -> list[list[GaussianRational]]:
        if self.n > TABLE_MAX_N:
            raise TooLargeError(f"dense table for n={self.n} exceeds cap {TABLE_MAX_N}")
        N = self.size
        return [[self.value(x, y) for y in range(N)] for x in range(N)]

    def unit_logs(self) -> np.ndarray | None:
        """Array ``L`` with ``F(x, y) = i**L[x, y]``, or None if some value is not a unit.

        Only used for vectorized exhaustive checks; entries are exact integers mod 4.
        """
        if self.n > TABLE_MAX_N:
            raise TooLargeError(f"log table for n={self.n} exceeds cap {TABLE_MAX_N}")
        N = self.size
        out = np.empty((N, N), dtype=np.int8)
        for x in range(N):
            for y in range(N):
                v = self.value(x, y)
                if not v.is_unit_root():
                    return None
                out[x, y] = v.unit_log()
        return out

    def describe(self) -> str:
        return type(self).__name__


class CliffordCochain(Cochain):
    """``F(x,y) = (-1)^{sum_{j<i} x_i y_j} prod_i q_i^{x_i y_i}``."""

    def __init__(self, signature: Signature):
        self.signature = signature
        self.n = signature.n
        self._qprod: dict[int, GaussianRational] = {0: ONE}

    def qprod(self, m: int) -> GaussianRational:
        """Product of q_i over the set bits of m."""
        v = self._qprod.get(m)
        if v is None:
            low = m & -m
            v = self.qprod(m ^ low) * self.signature.q[low.bit_length() - 1]
            self._qprod[m] = v
        return v

    def value(self, x: int, y: int) -> GaussianRational:
        v = self.qprod(x & y)
        return -v if below_count(x, y) & 1 else v

    def unit_logs(self) -> np.ndarray | None:
        if not all(q.is_unit_root() for q in self.signature.q):
            return None
        if self.n > TABLE_MAX_N:
            raise TooLargeError(f"log table for n={self.n} exceeds cap {TABLE_MAX_N}")
        idx = np.arange(self.size, dtype=np.int64)
        logs = np.zeros((self.size, self.size), dtype=np.int64)
        for i in range(self.n):
            xi = (idx >> i) & 1
            below = np.zeros_like(idx)
            for j in range(i):
                below += (idx >> j) & 1
            logs += 2 * np.outer(xi, below)
            logs += self.signature.q[i].unit_log() * np.outer(xi, xi)
        return (logs % 4).astype(np.int8)

    def __eq__(self, other):
        return isinstance(other, CliffordCochain) and self.signature == other.signature

    def __hash__(self):
        return hash(("clifford", self.signature))

    def describe(self) -> str:
        return f"clifford[{self.signature}]"


class SignCochain(Cochain):
    """``F(x,y) = (-1)^{f(x,y)}`` for a Z2-valued f.

    ``f`` is a callable on masks; ``table`` optionally holds the same values as
    an int array for vectorized checks.
    """

    def __init__(self, n: int, f: Callable[[int, int], int], table: np.ndarray | None = None):
        self.n = check_dim(n)
        self.f = f
        self._table = table
        if f(0, 0) % 2 != 0:
            raise ValueError("sign cochain is not normalized: f(0, 0) != 0")

    def value(self, x: int, y: int) -> GaussianRational:
        return -ONE if self.f(x, y) & 1 else ONE

    def f_table(self) -> np.ndarray:
        if self._table is None:
            if self.n > TABLE_MAX_N:
                raise TooLargeError(f"sign table for n={self.n} exceeds cap {TABLE_MAX_N}")
            N = self.size
            self._table = np.array(
                [[self.f(x, y) & 1 for y in range(N)] for x in range(N)], dtype=np.int8
            ).reshape(N, N)
        return self._table

    def unit_logs(self) -> np.ndarray:
        return (2 * (self.f_table() % 2)).astype(np.int8)


class TableCochain(Cochain):
    """Explicit dense 2^n x 2^n table, n <= 12."""

    def __init__(self, n: int, values: Sequence[Sequence[ScalarLike]]):
        self.n = check_dim(n)
        if n > TABLE_MAX_N:
            raise TooLargeError(f"table cochains are capped at n={TABLE_MAX_N}")
        N = 1 << n
        if len(values) != N or any(len(row) != N for row in values):
            raise DimensionError(f"table must be {N}x{N}")
        rows = [[as_scalar(v) for v in row] for row in values]
        for x in range(N):
            if rows[x][0] != 1 or rows[0][x] != 1:
                raise ValueError("table cochain must satisfy F(0, x) = F(x, 0) = 1")
            for y in range(N):
                if rows[x][y].is_zero():
                    raise ValueError(f"table cochain vanishes at ({x}, {y})")
        self._rows = rows

    @classmethod
    def from_cochain(cls, F: Cochain) -> TableCochain:
        return cls(F.n, F.table())

    def value(self, x: int, y: int) -> GaussianRational:
        return self._rows[x][y]

    def table(self) -> list[list[GaussianRational]]:
        return [list(r) for r in self._rows]

    def with_entry(self, x: int, y: int, c: ScalarLike) -> TableCochain:
        rows = self.table()
        rows[x][y] = as_scalar(c)
        return TableCochain(self.n, rows)

    @classmethod
    def trivial(cls, n: int) -> TableCochain:
        N = 1 << n
        return cls(n, [[ONE] * N for _ in range(N)])


class FunctionCochain(Cochain):
    """Cochain given by an arbitrary exact-valued callable."""

    def __init__(self, n: int, fn: Callable[[int, int], GaussianRational], label: str = "function"):
        self.n = check_dim(n)
        self.fn = fn
        self.label = label

    def value(self, x: int, y: int) -> GaussianRational:
        return self.fn(x, y)

    def describe(self) -> str:
        return self.label


def clifford_cochain(sig: Signature | str | Sequence[ScalarLike]) -> CliffordCochain:
    if not isinstance(sig, Signature):
        sig = Signature.parse(sig) if isinstance(sig, str) else Signature(sig)
    return CliffordCochain(sig)


def cochain_eval(F: Cochain, x: int, y: int) -> GaussianRational:
    return F(x, y)


def coboundary3(F: Cochain, x: int, y: int, z: int) -> GaussianRational:
    """``dF(x,y,z) = F(x,y) F(x+y,z) / (F(y,z) F(x,y+z))``; also the associator."""
    for a in (x, y, z):
        check_mask(a, F.n)
    v = F.value
    return v(x, y) * v(x ^ y, z) / (v(y, z) * v(x, y ^ z))


def braiding_R(F: Cochain, x: int, y: int) -> GaussianRational:
    """``R(x, y) = F(x, y) / F(y, x)``."""
    check_mask(x, F.n)
    check_mask(y, F.n)
    return F.value(x, y) / F.value(y, x)


def character_coboundary(
    s: Callable[[int], ScalarLike], x: int, y: int
) -> GaussianRational:
    """``ds(x, y) = s(x) s(y) / s(x + y)`` for a normalized nowhere-zero s."""
    if as_scalar(s(0)) != 1:
        raise ValueError("s(0) must be 1")
    sx, sy, sxy = as_scalar(s(x)), as_scalar(s(y)), as_scalar(s(x ^ y))
    for val, at in ((sx, x), (sy, y), (sxy, x ^ y)):
        if val.is_zero():
            raise ValueError(f"s vanishes at {at}")
    return sx * sy / sxy


def _xor_grid(N: int) -> np.ndarray:
    ar = np.arange(N, dtype=np.int64)
    return ar[:, None] ^ ar[None, :]


def _log_cocycle_witness(L: np.ndarray) -> tuple[int, int, int] | None:
    N = L.shape[0]
    L = L.astype(np.int16)
    ar = np.arange(N, dtype=np.int64)
    yz = _xor_grid(N)
    for x in range(N):
        # rows indexed by y, columns by z
        d = L[x][:, None] + L[x ^ ar, :] - L - L[x][yz]
        bad = np.nonzero(d % 4)
        if bad[0].size:
            return (x, int(bad[0][0]), int(bad[1][0]))
    return None


def cocycle_witness(F: Cochain, use_logs: bool = True) -> tuple[int, int, int] | None:
    """First triple with ``dF != 1`` (lexicographic in x, y, z), or None."""
    if F.n > EXHAUSTIVE_MAX_N:
        raise TooLargeError(f"n={F.n} too large for exhaustive check (cap {EXHAUSTIVE_MAX_N})")
    if use_logs:
        L = F.unit_logs()
        if L is not None:
            return _log_cocycle_witness(L)
    N = F.size
    v = F.value
    for x in range(N):
        for y in range(N):
            fxy = v(x, y)
            for z in range(N):
                # cross-multiplied to avoid inverses
                if fxy * v(x ^ y, z) != v(y, z) * v(x, y ^ z):
                    return (x, y, z)
    return None


def is_cocycle(F: Cochain, use_logs: bool = True) -> bool:
    """True iff ``dF == 1`` on all 8^n triples (n <= 12)."""
    return cocycle_witness(F, use_logs) is None


# -- algebras and elements -----------------------------------------------------


class TwistedAlgebra:
    """k_F Z2^n: the blade basis e_x with product ``F(x, y) e_{x+y}``."""

    def __init__(self, F: Cochain):
        self.F = F
        self.n = F.n
        self.dim = 1 << F.n
        self._table: list[GaussianRational] | None = None

    @cached_property
    def associative(self) -> bool:
        """Whether F is a cocycle (exhaustive, computed on first access)."""
        return is_cocycle(self.F)

    def blade_product(self, x: int, y: int) -> tuple[GaussianRational, int]:
        """``e_x . e_y`` as (coefficient, mask)."""
        t = self._table
        if t is None and self.n <= CACHE_MAX_N:
            t = self._build_table()
        if t is not None:
            return t[(x << self.n) | y], x ^ y
        return self.F.value(x, y), x ^ y

    def _build_table(self) -> list[GaussianRational]:
        N = self.dim
        v = self.F.value
        self._table = [v(x, y) for x in range(N) for y in range(N)]
        return self._table

    def blade(self, x: int, coeff: ScalarLike = 1) -> Multivector:
        check_mask(x, self.n)
        return Multivector(self, {x: coeff})

    def gen(self, i: int) -> Multivector:
        """Generator e_i, 1-based."""
        if not 1 <= i <= self.n:
            raise DimensionError(f"generator e{i} not in an algebra with n={self.n}")
        return self.blade(1 << (i - 1))

    def one(self) -> Multivector:
        return self.blade(0)

    def zero(self) -> Multivector:
        return Multivector(self, {})

    def scalar(self, c: ScalarLike) -> Multivector:
        return self.blade(0, c)

    def basis(self) -> list[Multivector]:
        return [self.blade(x) for x in range(self.dim)]

    def __eq__(self, other):
        return isinstance(other, TwistedAlgebra) and self.n == other.n and (
            self.F is other.F or self.F == other.F
        )

    def __hash__(self):
        return hash((self.n, type(self.F).__name__))

    def __repr__(self):
        return f"{type(self).__name__}({self.F.describe()}, n={self.n})"


def blade_name(x: int) -> str:
    """``"1"`` for the identity, otherwise generators in increasing order, e.g. ``"e1*e3"``."""
    if x == 0:
        return "1"
    names = []
    i = 1
    while x:
        if x & 1:
            names.append(f"e{i}")
        x >>= 1
        i += 1
    return "*".join(names)


class Multivector:
    """Finite linear combination of blades in a fixed twisted algebra.

    Zero coefficients are never stored; instances are not mutated after
    construction.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: TwistedAlgebra, coeffs: Mapping[int, ScalarLike]):
        clean: dict[int, GaussianRational] = {}
        limit = algebra.dim
        for x, c in coeffs.items():
            if not 0 <= x < limit:
                raise DimensionError(f"blade mask {x} outside algebra of dimension 2^{algebra.n}")
            c = as_scalar(c)
            if not c.is_zero():
                clean[x] = c
        self.algebra = algebra
        self.coeffs = clean

    @classmethod
    def _make(cls, algebra: TwistedAlgebra, coeffs: dict[int, GaussianRational]) -> Multivector:
        obj = object.__new__(cls)
        obj.algebra = algebra
        obj.coeffs = {x: c for x, c in coeffs.items() if c.re != 0 or c.im != 0}
        return obj

    def _check(self, other: Multivector):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch("multivectors belong to different algebras")

    def __add__(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            out = dict(self.coeffs)
            for x, c in other.coeffs.items():
                out[x] = out[x] + c if x in out else c
            return Multivector._make(self.algebra, out)
        return self + self.algebra.scalar(as_scalar(other))

    __radd__ = __add__

    def __neg__(self):
        return Multivector._make(self.algebra, {x: -c for x, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: ScalarLike) -> Multivector:
        c = as_scalar(c)
        return Multivector._make(self.algebra, {x: v * c for x, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return twisted_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        return self.scale(ONE / as_scalar(other))

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.algebra == other.algebra and self.coeffs == other.coeffs
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == ({0: other} if not other.is_zero() else {})

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, x: int) -> GaussianRational:
        return self.coeffs.get(x, ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def scalar_part(self) -> GaussianRational:
        return self.coeffs.get(0, ZERO)

    def is_scalar(self) -> bool:
        return all(x == 0 for x in self.coeffs)

    def map_blades(self, sign: Callable[[int], GaussianRational]) -> Multivector:
        """Apply a diagonal map e_x -> sign(x) e_x."""
        return Multivector._make(self.algebra, {x: c * sign(x) for x, c in self.coeffs.items()})

    def terms(self) -> list[tuple[int, GaussianRational]]:
        return sorted(self.coeffs.items())

    def to_json(self) -> dict[str, str]:
        return {blade_name(x): format_scalar(c) for x, c in self.terms()}

    def __str__(self):
        return format_multivector(self)

    def __repr__(self):
        return f"Multivector({format_multivector(self)!r})"


def format_multivector(a: Multivector) -> str:
    """Terms in ascending mask order, e.g. ``"1 - e1*e2 + (1+1i)*e3"``; zero is ``"0"``."""
    if not a.coeffs:
        return "0"
    parts = []
    for x, c in a.terms():
        neg = False
        if c.im == 0 and c.re < 0:
            neg, c = True, -c
        elif c.re == 0 and c.im < 0:
            neg, c = True, -c
        if x == 0:
            body = format_scalar(c)
        elif c == 1:
            body = blade_name(x)
        else:
            txt = format_scalar(c)
            if c.re != 0 and c.im != 0:
                txt = f"({txt})"
            body = f"{txt}*{blade_name(x)}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def twisted_mul(a: Multivector, b: Multivector) -> Multivector:
    """Bilinear extension of ``e_x . e_y = F(x, y) e_{x+y}``."""
    a._check(b)
    alg = a.algebra
    prod = alg.blade_product
    out: dict[int, GaussianRational] = {}
    for x, cx in a.coeffs.items():
        for y, cy in b.coeffs.items():
            f, z = prod(x, y)
            term = cx * cy * f
            prev = out.get(z)
            out[z] = term if prev is None else prev + term
    return Multivector._make(alg, out)


def multivector_linear(
    a: Multivector, b: Multivector | None = None, c: ScalarLike = 1, op: str = "add"
) -> Multivector:
    """``op="add"``: a + b; ``op="scale"``: c * a."""
    if op == "add":
        if b is None:
            raise ValueError("add needs a second operand")
        return a + b
    if op == "scale":
        return a.scale(c)
    raise ValueError(f"unknown linear operation {op!r}")

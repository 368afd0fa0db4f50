"""Exact linear algebra over Q(i).

Dense square/rectangular matrices for representations, and a sparse
row-echelon solver for the structured systems (centrality, commutants,
intertwiners, left-right multiplication spans) that come up when
classifying algebras. The systems are sparse and block-structured, so rows
are kept as dicts keyed by column.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import ONE, ZERO, GaussianRational, ScalarLike, as_scalar, format_scalar

__all__ = ["Matrix", "Echelon", "rank", "nullspace", "commutant_dimension", "solve_commuting"]


class Matrix:
    """Dense matrix of exact scalars; entry (w, z) is the e_w coefficient of the image of e_z."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence[ScalarLike]]):
        self.rows = [[as_scalar(v) for v in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def _wrap(cls, rows: list[list[GaussianRational]]) -> Matrix:
        m = object.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = len(rows[0]) if rows else 0
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> Matrix:
        ncols = nrows if ncols is None else ncols
        return cls._wrap([[ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, d: int) -> Matrix:
        return cls.diag([ONE] * d)

    @classmethod
    def diag(cls, values: Sequence[ScalarLike]) -> Matrix:
        d = len(values)
        rows = [[ZERO] * d for _ in range(d)]
        for i, v in enumerate(values):
            rows[i][i] = as_scalar(v)
        return cls._wrap(rows)

    @classmethod
    def blocks(cls, grid: Sequence[Sequence[Matrix]]) -> Matrix:
        rows: list[list[GaussianRational]] = []
        for block_row in grid:
            for i in range(block_row[0].nrows):
                line: list[GaussianRational] = []
                for b in block_row:
                    line.extend(b.rows[i])
                rows.append(line)
        return cls._wrap(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx: tuple[int, int]) -> GaussianRational:
        i, j = idx
        return self.rows[i][j]

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        B = other.rows
        out = []
        for row in self.rows:
            acc = [ZERO] * other.ncols
            for k, a in enumerate(row):
                if a.re == 0 and a.im == 0:
                    continue
                for j, b in enumerate(B[k]):
                    if b.re != 0 or b.im != 0:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix._wrap(out)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._wrap([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other.scale(-ONE)

    def __neg__(self) -> Matrix:
        return self.scale(-ONE)

    def scale(self, c: ScalarLike) -> Matrix:
        c = as_scalar(c)
        return Matrix._wrap([[a * c for a in r] for r in self.rows])

    def __mul__(self, c: ScalarLike) -> Matrix:
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    __hash__ = None

    def transpose(self) -> Matrix:
        return Matrix._wrap([list(col) for col in zip(*self.rows)])

    def column(self, j: int) -> list[GaussianRational]:
        return [r[j] for r in self.rows]

    def nonzero_count_per_column(self) -> list[int]:
        return [sum(1 for r in self.rows if not r[j].is_zero()) for j in range(self.ncols)]

    def is_diagonal(self) -> bool:
        return all(v.is_zero() for i, r in enumerate(self.rows) for j, v in enumerate(r) if i != j)

    def scalar_value(self) -> GaussianRational | None:
        """c if self == c * identity, else None."""
        if self.nrows != self.ncols or not self.is_diagonal():
            return None
        if self.nrows == 0:
            return ONE
        c = self.rows[0][0]
        return c if all(self.rows[i][i] == c for i in range(self.nrows)) else None

    def flatten(self) -> dict[int, GaussianRational]:
        """Nonzero entries keyed by ``row * ncols + col``."""
        n = self.ncols
        return {i * n + j: v for i, r in enumerate(self.rows) for j, v in enumerate(r) if not v.is_zero()}

    def rank(self) -> int:
        return rank(
            {j: v for j, v in enumerate(r) if not v.is_zero()} for r in self.rows
        )

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def to_json(self) -> list[list[str]]:
        return [[format_scalar(v) for v in r] for r in self.rows]

    def __repr__(self):
        return f"Matrix({self.to_json()!r})"


class Echelon:
    """Incremental row echelon form over Q(i); rows are {column: value} dicts."""

    def __init__(self):
        self.pivots: dict[int, dict[int, GaussianRational]] = {}

    def reduce(self, row: dict[int, GaussianRational]) -> dict[int, GaussianRational]:
        row = dict(row)
        pivots = self.pivots
        while True:
            hits = [c for c in row if c in pivots]
            if not hits:
                return row
            c = min(hits)
            f = row[c]
            for k, v in pivots[c].items():
                nv = row.get(k, ZERO) - f * v
                if nv.re == 0 and nv.im == 0:
                    row.pop(k, None)
                else:
                    row[k] = nv
            row.pop(c, None)

    def add(self, row: dict[int, GaussianRational]) -> bool:
        """Insert a row; return True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = ONE / row[c]
        self.pivots[c] = {k: v * inv for k, v in row.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduced(self) -> dict[int, dict[int, GaussianRational]]:
        """Fully reduced pivot rows (zero above and below every pivot)."""
        out: dict[int, dict[int, GaussianRational]] = {}
        for c in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[c])
            for p in [k for k in row if k != c and k in out]:
                f = row[p]
                for k, v in out[p].items():
                    nv = row.get(k, ZERO) - f * v
                    if nv.is_zero():
                        row.pop(k, None)
                    else:
                        row[k] = nv
            out[c] = row
        return out


def rank(rows: Iterable[dict[int, GaussianRational]]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows: Iterable[dict[int, GaussianRational]], ncols: int) -> list[dict[int, GaussianRational]]:
    """Basis of {v : row . v = 0 for every row}, one vector per free column."""
    e = Echelon()
    for r in rows:
        e.add(r)
    red = e.reduced()
    basis = []
    for free in range(ncols):
        if free in red:
            continue
        v = {free: ONE}
        for p, row in red.items():
            c = row.get(free)
            if c is not None and not c.is_zero():
                v[p] = -c
        basis.append(v)
    return basis


def _commutation_rows(
    d: int, pairs: Sequence[tuple[Matrix, Matrix]]
) -> list[dict[int, GaussianRational]]:
    # unknown M with M @ A == B @ M for each (A, B); unknown index = row * d + col
    eqs = []
    for A, B in pairs:
        for a in range(d):
            for b in range(d):
                row: dict[int, GaussianRational] = {}
                for k in range(d):
                    v = A.rows[k][b]
                    if not v.is_zero():
                        idx = a * d + k
                        row[idx] = row.get(idx, ZERO) + v
                    w = B.rows[a][k]
                    if not w.is_zero():
                        idx = k * d + b
                        row[idx] = row.get(idx, ZERO) - w
                row = {k: v for k, v in row.items() if not v.is_zero()}
                if row:
                    eqs.append(row)
    return eqs


def solve_commuting(d: int, pairs: Sequence[tuple[Matrix, Matrix]]) -> list[Matrix]:
    """Basis of matrices M (d x d) with ``M @ A == B @ M`` for every pair."""
    out = []
    for v in nullspace(_commutation_rows(d, pairs), d * d):
        rows = [[ZERO] * d for _ in range(d)]
        for idx, c in v.items():
            rows[idx // d][idx % d] = c
        out.append(Matrix._wrap(rows))
    return out


def commutant_dimension(mats: Sequence[Matrix]) -> int:
    """Dimension of {M : M G = G M for all G in mats}."""
    if not mats:
        raise ValueError("need at least one matrix")
    d = mats[0].nrows
    return len(solve_commuting(d, [(G, G) for G in mats]))

"""Text and JSON input for multivectors and polynomial spinors.

Expressions are signed sums of terms; a term is a product of factors joined
by ``*``. Factors are scalars (``3``, ``1/2``, ``2i``, ``i``, or any scalar in
parentheses such as ``(3/2+1i)``), generators ``e<k>``, the identity ``1``,
and in spinor expressions also variables ``x<k>`` or ``x<k>^<p>``.
Generators multiply with the twisted product in the order written.
"""

from __future__ import annotations

import re
from typing import Mapping

from .dirac import QUATERNIONS, PolySpinor
from .scalars import ONE, GaussianRational, ScalarParseError, as_scalar, parse_scalar
from .twisted import Multivector, TwistedAlgebra

__all__ = [
    "ExpressionError",
    "parse_expression",
    "parse_spinor",
    "parse_blade",
    "multivector_from_json",
    "multivector_to_json",
]


class ExpressionError(ValueError):
    """Malformed expression; ``pos`` is the 0-based offset of the offending token."""

    def __init__(self, message: str, pos: int, src: str):
        super().__init__(f"{message} at position {pos} in {src!r}")
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<paren>\((?P<inner>[^()]*)\))"
    r"|(?P<gen>e(?P<gi>\d+))"
    r"|(?P<var>x(?P<vi>\d+)(?:\^(?P<vp>\d+))?)"
    r"|(?P<num>(?:\d+(?:/\d+)?)?i|\d+(?:/\d+)?)"
    r"|(?P<op>[+\-*])"
    r")"
)


def _tokens(src: str):
    pos = 0
    out = []
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            start = pos + (len(src[pos:]) - len(src[pos:].lstrip()))
            raise ExpressionError(f"unexpected character {src[start]!r}", start, src)
        kind = next(k for k in ("paren", "gen", "var", "num", "op") if m.group(k) is not None)
        out.append((kind, m, m.start(kind)))
        pos = m.end()
    return out


def _parse_terms(src: str, spinor: bool):
    """Yield (sign, scalar, [generator indices], exponents, position) per term."""
    toks = _tokens(src)
    if not toks:
        raise ExpressionError("empty expression", 0, src)
    terms = []
    i = 0
    first = True
    while i < len(toks):
        sign = ONE
        kind, m, pos = toks[i]
        if kind == "op" and m.group("op") in "+-":
            if m.group("op") == "-":
                sign = -ONE
            i += 1
        elif not first:
            raise ExpressionError("expected '+' or '-'", pos, src)
        first = False
        coeff = sign
        gens: list[tuple[int, int]] = []
        expo = [0, 0, 0, 0]
        expect_factor = True
        term_pos = toks[i][2] if i < len(toks) else len(src)
        while i < len(toks):
            kind, m, pos = toks[i]
            if expect_factor:
                if kind == "paren":
                    try:
                        coeff = coeff * parse_scalar(m.group("inner"))
                    except ScalarParseError as exc:
                        raise ExpressionError(str(exc), pos, src) from None
                elif kind == "num":
                    coeff = coeff * parse_scalar(m.group("num"))
                elif kind == "gen":
                    gens.append((int(m.group("gi")), pos))
                elif kind == "var":
                    if not spinor:
                        raise ExpressionError("variables are only allowed in spinor expressions", pos, src)
                    k = int(m.group("vi"))
                    if not 1 <= k <= 4:
                        raise ExpressionError(f"unknown variable x{k}", pos, src)
                    expo[k - 1] += int(m.group("vp") or 1)
                else:
                    raise ExpressionError("expected a factor", pos, src)
                expect_factor = False
                i += 1
            elif kind == "op" and m.group("op") == "*":
                expect_factor = True
                i += 1
            elif kind == "op":
                break
            else:
                raise ExpressionError("expected '*' between factors", pos, src)
        if expect_factor:
            raise ExpressionError("expression ends with an operator", len(src), src)
        terms.append((coeff, gens, tuple(expo), term_pos))
    return terms


def parse_expression(src: str, alg: TwistedAlgebra) -> Multivector:
    """Evaluate a signed sum of products in ``alg``, e.g. ``"e1*e2 - e2*e1"``."""
    total = alg.zero()
    for coeff, gens, _, _ in _parse_terms(src, spinor=False):
        value = alg.scalar(coeff)
        for k, pos in gens:
            if not 1 <= k <= alg.n:
                raise ExpressionError(f"generator e{k} outside 1..{alg.n}", pos, src)
            value = value * alg.gen(k)
        total = total + value
    return total


def parse_spinor(src: str) -> PolySpinor:
    """Quaternion polynomial such as ``"x1^2*e1 - (1/2+1i)*x3*x4*e3 + 2"``.

    ``e3`` is the blade e1*e2; generators multiply in C(0,2).
    """
    total = PolySpinor()
    for coeff, gens, expo, _ in _parse_terms(src, spinor=True):
        value = QUATERNIONS.scalar(coeff)
        for k, pos in gens:
            if k == 3:
                value = value * QUATERNIONS.blade(3)
            elif k in (1, 2):
                value = value * QUATERNIONS.gen(k)
            else:
                raise ExpressionError(f"quaternion component e{k} outside e1..e3", pos, src)
        total = total + PolySpinor({expo: value})
    return total


def parse_blade(name: str, n: int) -> int:
    """``"1"`` or increasing generators ``"e1*e3"`` -> mask."""
    name = name.strip()
    if name == "1":
        return 0
    parts = name.split("*")
    idx = []
    for p in parts:
        if not re.fullmatch(r"e\d+", p):
            raise ValueError(f"malformed blade {name!r}")
        idx.append(int(p[1:]))
    if idx != sorted(set(idx)):
        raise ValueError(f"blade {name!r} must list generators in increasing order")
    if idx[0] < 1 or idx[-1] > n:
        raise ValueError(f"blade {name!r} outside 1..{n}")
    mask = 0
    for k in idx:
        mask |= 1 << (k - 1)
    return mask


def multivector_from_json(obj: Mapping[str, str], alg: TwistedAlgebra) -> Multivector:
    """Inverse of :func:`multivector_to_json`: blade name -> scalar string."""
    coeffs: dict[int, GaussianRational] = {}
    for k, v in obj.items():
        x = parse_blade(k, alg.n)
        if x in coeffs:
            raise ValueError(f"duplicate blade {k!r}")
        coeffs[x] = parse_scalar(v) if isinstance(v, str) else as_scalar(v)
    return Multivector(alg, coeffs)


def multivector_to_json(a: Multivector) -> dict[str, str]:
    return a.to_json()

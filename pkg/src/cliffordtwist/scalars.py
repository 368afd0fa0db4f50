"""Exact Gaussian-rational scalars, the coefficient field Q(i).

Components are kept as ``int`` whenever the denominator is 1 and as
:class:`fractions.Fraction` otherwise, so the common case of unit
coefficients (±1, ±i) stays on plain integer arithmetic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from numbers import Rational
from typing import Union

__all__ = [
    "GaussianRational",
    "ScalarLike",
    "as_scalar",
    "field_arithmetic",
    "i_power",
    "conjugate",
    "parse_scalar",
    "format_scalar",
    "ScalarParseError",
    "ZERO",
    "ONE",
    "I",
]

ScalarLike = Union["GaussianRational", int, Fraction]


class ScalarParseError(ValueError):
    """Raised for text that does not match the ``a/b+c/di`` grammar."""


def _norm(v):
    # canonical component: int when integral, reduced Fraction otherwise
    if type(v) is int:
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, Rational):
        v = Fraction(v.numerator, v.denominator)
        return v.numerator if v.denominator == 1 else v
    raise TypeError(f"not a rational component: {v!r}")


class GaussianRational:
    """An element ``re + im*i`` of Q(i). Immutable; hashable."""

    __slots__ = ("re", "im")

    # treated as immutable: no method mutates ``re``/``im`` after construction
    def __init__(self, re=0, im=0):
        self.re = _norm(re)
        self.im = _norm(im)

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        obj.re = re if type(re) is int or re.denominator != 1 else re.numerator
        obj.im = im if type(im) is int or im.denominator != 1 else im.numerator
        return obj

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.im == 0

    def is_unit_root(self) -> bool:
        """True for the fourth roots of unity 1, i, -1, -i."""
        return (self.im == 0 and self.re in (1, -1)) or (self.re == 0 and self.im in (1, -1))

    def unit_log(self) -> int:
        """Return ``k`` in 0..3 with ``self == i**k``; ValueError otherwise."""
        re, im = self.re, self.im
        if im == 0:
            if re == 1:
                return 0
            if re == -1:
                return 2
        elif re == 0:
            if im == 1:
                return 1
            if im == -1:
                return 3
        raise ValueError(f"{self} is not a power of i")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0 and d == 0:
            return GaussianRational._raw(a * c, 0)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        a, b = self.re, self.im
        if b == 0:
            if a == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational._raw(Fraction(1, 1) / a if type(a) is int else 1 / a, 0)
        n = a * a + b * b
        return GaussianRational(Fraction(a) / n, Fraction(-b) / n)

    def __truediv__(self, other):
        if type(other) is not GaussianRational:
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if other.im == 0 and other.re in (1, -1):
            return self if other.re == 1 else -self
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> Fraction | int:
        """Field norm ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def sqrt(self) -> GaussianRational | None:
        """An exact square root in Q(i), or None when none exists.

        Of the two roots the one with positive real part (or positive
        imaginary part when the real part is zero) is returned.
        """
        a, b = Fraction(self.re), Fraction(self.im)
        if a == 0 and b == 0:
            return ZERO
        r = _rational_sqrt(a * a + b * b)
        if r is None:
            return None
        x = _rational_sqrt((r + a) / 2)
        if x is None:
            return None
        if x != 0:
            y = b / (2 * x)
        else:
            y = _rational_sqrt((r - a) / 2)
            if y is None:
                return None
        root = GaussianRational(x, y)
        assert root * root == self
        return root

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _rational_sqrt(v: Fraction) -> Fraction | None:
    if v < 0:
        return None
    p, q = v.numerator, v.denominator
    sp, sq = isqrt(p), isqrt(q)
    if sp * sp != p or sq * sq != q:
        return None
    return Fraction(sp, sq)


def _coerce(x) -> GaussianRational | None:
    if type(x) is GaussianRational:
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return GaussianRational._raw(x, 0)
    if isinstance(x, Rational):
        return GaussianRational(x, 0)
    return None


def as_scalar(x: ScalarLike | str) -> GaussianRational:
    """Coerce an int, Fraction, string or GaussianRational."""
    if isinstance(x, str):
        return parse_scalar(x)
    c = _coerce(x)
    if c is None:
        raise TypeError(f"cannot interpret {x!r} as an exact scalar")
    return c


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)
_I_POWERS = (ONE, I, GaussianRational(-1, 0), GaussianRational(0, -1))


def i_power(k: int) -> GaussianRational:
    """``i**k`` for any integer ``k``."""
    return _I_POWERS[k % 4]


def conjugate(a: ScalarLike) -> GaussianRational:
    return as_scalar(a).conjugate()


def field_arithmetic(a: ScalarLike, b: ScalarLike, op: str) -> GaussianRational:
    """Apply ``op`` in {"add", "sub", "mul", "div"}.

    Division by zero raises :class:`ZeroDivisionError`.
    """
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


# -- text form ----------------------------------------------------------------

_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<re>[+-]?{_RAT})(?P<im1>[+-](?:{_RAT})?i)?|(?P<im2>[+-]?(?:{_RAT})?i))$"
)


def _parse_rat(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def _parse_imag(text: str) -> Fraction:
    body = text[:-1]
    if body in ("", "+"):
        return Fraction(1)
    if body == "-":
        return Fraction(-1)
    return _parse_rat(body)


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``"a/b+c/di"`` with optional parts, e.g. ``"1"``, ``"-1/2i"``, ``"3/2+1i"``."""
    s = text.strip().replace(" ", "")
    m = _SCALAR_RE.match(s)
    if not m:
        raise ScalarParseError(f"malformed scalar {text!r}")
    if m.group("im2") is not None:
        return GaussianRational(0, _parse_imag(m.group("im2")))
    re_part = _parse_rat(m.group("re"))
    im_part = _parse_imag(m.group("im1")) if m.group("im1") else Fraction(0)
    return GaussianRational(re_part, im_part)


def _fmt_rat(v) -> str:
    if type(v) is int:
        return str(v)
    return f"{v.numerator}/{v.denominator}"


def format_scalar(a: GaussianRational) -> str:
    """Inverse of :func:`parse_scalar`; ``i`` is written ``1i``."""
    re_, im = a.re, a.im
    if im == 0:
        return _fmt_rat(re_)
    im_txt = _fmt_rat(abs(im)) + "i"
    if re_ == 0:
        return ("-" if im < 0 else "") + im_txt
    return _fmt_rat(re_) + ("-" if im < 0 else "+") + im_txt

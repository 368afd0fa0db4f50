"""Group elements of Z2^n as bitmasks.

Bit ``i-1`` of a mask holds the coordinate ``x_i``, so ``e_1`` is the least
significant bit. The group law is XOR and the identity is ``0``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

MAX_N = 24


class DimensionError(ValueError):
    """A group element or cochain does not fit the dimension in use."""


def check_dim(n: int) -> int:
    if not 0 <= n <= MAX_N:
        raise DimensionError(f"dimension n={n} outside 0..{MAX_N}")
    return n


def check_mask(x: int, n: int) -> int:
    if not 0 <= x < (1 << n):
        raise DimensionError(f"mask {x} is not an element of Z2^{n}")
    return x


def rho(x: int) -> int:
    """Number of set coordinates, as an ordinary integer."""
    return x.bit_count()


def dot(x: int, y: int) -> int:
    """Z2 dot product ``x.y`` (returned as 0 or 1)."""
    return (x & y).bit_count() & 1


def below_count(x: int, y: int) -> int:
    """``sum_{j<i} x_i y_j``: for each set bit i of x, count set bits of y below i."""
    total = 0
    while x:
        low = x & -x
        total += (y & (low - 1)).bit_count()
        x ^= low
    return total


def from_bits(bits: Sequence[int]) -> int:
    """``(x_1, ..., x_n)`` -> mask."""
    mask = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"coordinate {b!r} is not in Z2")
        mask |= b << i
    return mask


def to_bits(x: int, n: int) -> tuple[int, ...]:
    return tuple((x >> i) & 1 for i in range(n))


def generator(i: int) -> int:
    """Mask of the i-th generator e_i (1-based)."""
    if i < 1:
        raise ValueError("generators are numbered from 1")
    return 1 << (i - 1)


def top(n: int) -> int:
    """Mask of (1, ..., 1)."""
    return (1 << n) - 1


def set_bits(x: int) -> Iterable[int]:
    """Yield the 0-based positions of the set bits of x, ascending."""
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1

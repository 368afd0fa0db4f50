"""Independent reference implementations used only by the tests."""

from itertools import product

from cliffordtwist.bits import to_bits
from cliffordtwist.scalars import ONE, as_scalar
from cliffordtwist.twisted import TableCochain


def naive_clifford(q, x, y):
    """Sign exponent by a plain double loop over coordinates, then the diagonal q-factor."""
    n = len(q)
    xb, yb = to_bits(x, n), to_bits(y, n)
    e = sum(xb[i] * yb[j] for i in range(n) for j in range(i))
    val = -ONE if e % 2 else ONE
    for i in range(n):
        if xb[i] and yb[i]:
            val = val * as_scalar(q[i])
    return val


def blade_word(x, n):
    """Generator indices (1-based) of e_x in increasing order."""
    return [i + 1 for i in range(n) if x >> i & 1]


def word_product(word, q):
    """Reduce a word of generator indices with e_i e_j = -e_j e_i and e_i^2 = q_i.

    Returns (coefficient, sorted set of surviving indices). Bubble sort counts swaps.
    """
    w = list(word)
    coeff = ONE
    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(w) - 1:
            if w[k] > w[k + 1]:
                w[k], w[k + 1] = w[k + 1], w[k]
                coeff = -coeff
                changed = True
            elif w[k] == w[k + 1]:
                coeff = coeff * as_scalar(q[w[k] - 1])
                del w[k:k + 2]
                changed = True
                continue
            k += 1
    return coeff, w


def words_mask(w):
    m = 0
    for i in w:
        m |= 1 << (i - 1)
    return m


def all_signatures(n):
    return ["".join(p) for p in product("+-", repeat=n)]


def octonion_cochain():
    """Sign cochain on Z2^3 whose twisted algebra is alternative but not associative."""

    def bit(x, i):
        return x >> i & 1

    def f(x, y):
        e = sum(bit(x, i) * bit(y, j) for i in range(3) for j in range(3) if i <= j)
        e += bit(y, 0) * bit(x, 1) * bit(x, 2) + bit(x, 0) * bit(y, 1) * bit(x, 2) + bit(x, 0) * bit(x, 1) * bit(y, 2)
        return -1 if e % 2 else 1

    return TableCochain(3, [[f(x, y) for y in range(8)] for x in range(8)])

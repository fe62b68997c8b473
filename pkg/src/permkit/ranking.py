"""Ranking, unranking and random generation of perms of a fixed size.

Two bijections between the perms of ``range(size)`` and ``range(size!)``
are provided: lexicographic order of array forms, computed from the
inversion vector in O(n^2), and the Myrvold-Ruskey order, computed in O(n)
arithmetic operations.
"""

from __future__ import annotations

import math
import operator
import random

from permkit.errors import RankOutOfRange
from permkit.perms import Perm

__all__ = [
    "RandomSource",
    "inversion_vector",
    "rank_lex",
    "unrank_lex",
    "rank_mr",
    "unrank_mr",
    "random_perm",
    "make_rng",
]

RandomSource = random.Random


def _size(size) -> int:
    size = operator.index(size)
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    return size


def inversion_vector(p: Perm, size: int) -> list[int]:
    """Lehmer code: for each position, the smaller entries to its right."""
    a = p.list(size)
    lehmer = [0] * size
    for i in range(size):
        ai = a[i]
        counter = 0
        for j in range(i + 1, size):
            if ai > a[j]:
                counter += 1
        lehmer[i] = counter
    return lehmer


def rank_lex(p: Perm, size: int) -> int:
    """Position of ``p.list(size)`` among all size! arrays in lex order."""
    lehmer = inversion_vector(p, size)
    # factorial base: entry i weighs (size-1-i)!
    return _join(lehmer, range(size, 0, -1), 0, size)[0]


# Mixed-radix conversions.  digits[i] has weight prod(radices[i+1:]).
# Splitting in halves keeps the big-integer work on balanced operands,
# which matters once ranks reach thousands of bits.

_LEAF = 32


def _prod(radices, lo, hi):
    if hi - lo <= _LEAF:
        return math.prod(radices[lo:hi])
    mid = (lo + hi) // 2
    return _prod(radices, lo, mid) * _prod(radices, mid, hi)


def _join(digits, radices, lo, hi):
    if hi - lo <= _LEAF:
        value = 0
        scale = 1
        for i in range(lo, hi):
            value = value * radices[i] + digits[i]
            scale *= radices[i]
        return value, scale
    mid = (lo + hi) // 2
    left, left_scale = _join(digits, radices, lo, mid)
    right, right_scale = _join(digits, radices, mid, hi)
    return left * right_scale + right, left_scale * right_scale


def _split(value, radices, lo, hi, out):
    if hi - lo <= _LEAF:
        for i in range(hi - 1, lo - 1, -1):
            value, out[i] = divmod(value, radices[i])
        return
    mid = (lo + hi) // 2
    left, right = divmod(value, _prod(radices, mid, hi))
    _split(left, radices, lo, mid, out)
    _split(right, radices, mid, hi, out)


def _digits(rank, radices) -> list[int]:
    rank = operator.index(rank)
    if rank < 0:
        raise RankOutOfRange(f"rank must be nonnegative, got {rank}")
    if rank >= math.factorial(len(radices)):
        raise RankOutOfRange("size is too small")
    out = [0] * len(radices)
    _split(rank, radices, 0, len(radices), out)
    return out


def unrank_lex(size: int, rank: int) -> Perm:
    """Inverse of :func:`rank_lex`."""
    size = _size(size)
    lehmer = _digits(rank, range(size, 0, -1))
    elements = list(range(size))
    return Perm(data=[elements.pop(d) for d in lehmer])


def rank_mr(p: Perm, size: int) -> int:
    """Myrvold-Ruskey rank of ``p`` among the perms of ``range(size)``."""
    a = p.list(size)
    b = [0] * size
    for i, v in enumerate(a):
        b[v] = i
    # rank = d[size-1] + size * (d[size-2] + (size-1) * (... + 2 * d[1]))
    digits = [0] * size
    for n in range(size, 1, -1):
        s = a[n - 1]
        j = b[n - 1]
        a[n - 1], a[j] = a[j], a[n - 1]
        b[s], b[n - 1] = b[n - 1], b[s]
        digits[n - 1] = s
    return _join(digits, range(1, size + 1), 0, size)[0]


def unrank_mr(size: int, rank: int) -> Perm:
    """Inverse of :func:`rank_mr`."""
    size = _size(size)
    digits = _digits(rank, range(1, size + 1))
    a = list(range(size))
    for n in range(size, 0, -1):
        r = digits[n - 1]
        a[n - 1], a[r] = a[r], a[n - 1]
    return Perm(data=a)


def make_rng(seed: int | None = None) -> RandomSource:
    """Seeded generator; identical seeds give identical draws."""
    return random.Random(seed)


def random_perm(size: int, rng: RandomSource | int | None = None) -> Perm:
    """Uniformly random perm of ``range(size)`` by Fisher-Yates.

    ``rng`` may be a ``random.Random`` instance or an integer seed.
    """
    size = _size(size)
    if rng is None or isinstance(rng, int):
        rng = make_rng(rng)
    a = list(range(size))
    for i in range(size - 1, 0, -1):
        j = rng.randrange(i + 1)
        a[i], a[j] = a[j], a[i]
    return Perm(data=a)

"""Sparse, immutable permutations of the nonnegative integers.

A :class:`Perm` stores only the points it moves; every other point is
fixed.  Products follow the convention ``(p * q)[i] == p[q[i]]``, so the
right-hand factor acts first.
"""

from __future__ import annotations

import operator
from functools import reduce
from typing import Iterable, Iterator, Mapping, Sequence

from permkit.errors import MalformedCycle, NotABijection, PermError, SizeTooSmall

__all__ = [
    "Perm",
    "identity",
    "from_cycles",
    "from_array",
    "compose",
    "gcd",
    "lcm",
]

_LABEL_LETTERS = (
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ" "abcdefghijklmnopqrstuvwxyz_"
)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor by Euclid's algorithm."""
    while b:
        a, b = b, a % b
    return a


def lcm(a: int, b: int) -> int:
    """Least common multiple."""
    return a * b // gcd(a, b)


def _point(value) -> int:
    k = operator.index(value)
    if k < 0:
        raise MalformedCycle(f"points must be nonnegative, got {k}")
    return k


class Perm:
    """A finite-support bijection on ``{0, 1, 2, ...}``.

    ``Perm()`` is the identity and ``Perm(data=[0, 2, 1, 3])`` builds a perm
    from its array form.  Calling a perm with the points of a cycle returns
    the product of the perm and that cycle, so ``Perm()(0, 1)(1, 2)`` is the
    same as ``Perm()(0, 1) * Perm()(1, 2)``.

    Instances are immutable and hashable; equal perms have equal hashes.
    """

    __slots__ = ("_map", "_key", "_hash")

    def __init__(self, data: Sequence[int] | None = None):
        mapping: dict[int, int] = {}
        if data is not None:
            values = [operator.index(v) for v in data]
            n = len(values)
            if sorted(values) != list(range(n)):
                raise NotABijection(
                    f"{values!r} is not a permutation of range({n})"
                )
            mapping = {i: v for i, v in enumerate(values) if i != v}
        self._set(mapping)

    def _set(self, mapping: dict[int, int]) -> None:
        self._map = mapping
        self._key = tuple(sorted(mapping.items()))
        self._hash = hash(self._key)

    @classmethod
    def _canonical(cls, mapping: dict[int, int]) -> Perm:
        # caller guarantees a bijection with no fixed points stored
        perm = cls.__new__(cls)
        perm._set(mapping)
        return perm

    # construction

    @classmethod
    def from_array(cls, values: Sequence[int]) -> Perm:
        """Perm mapping ``i -> values[i]``."""
        return cls(data=values)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> Perm:
        """Product of the given cycles, taken left to right."""
        perm = cls()
        for cycle in cycles:
            perm = perm(*cycle)
        return perm

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> Perm:
        """Perm from an explicit ``{point: image}`` mapping.

        The mapping must be a bijection of its key set onto itself.
        """
        items = {_point(k): _point(v) for k, v in mapping.items()}
        if set(items.values()) != set(items):
            raise NotABijection("mapping is not a bijection of its keys")
        return cls._canonical({k: v for k, v in items.items() if k != v})

    def __call__(self, *cycle: int) -> Perm:
        points = [_point(c) for c in cycle]
        if len(set(points)) != len(points):
            raise MalformedCycle(f"cycle {tuple(points)} repeats a point")
        n = len(points)
        if n < 2:
            return self
        mapping = dict(self._map)
        get = self._map.get
        for i, pt in enumerate(points):
            nxt = points[(i + 1) % n]
            mapping[pt] = get(nxt, nxt)
        return Perm._canonical({k: v for k, v in mapping.items() if k != v})

    # mapping protocol

    def __getitem__(self, k: int) -> int:
        return self._map.get(k, k)

    def apply(self, k: int) -> int:
        return self._map.get(k, k)

    def items(self) -> Iterator[tuple[int, int]]:
        """``(point, image)`` pairs for the moved points, ascending."""
        return iter(self._key)

    @property
    def key(self) -> tuple[tuple[int, int], ...]:
        """Canonical key: sorted ``(point, image)`` pairs of the support."""
        return self._key

    # algebra

    def __mul__(self, other: Perm) -> Perm:
        if not isinstance(other, Perm):
            return NotImplemented
        get_p = self._map.get
        get_q = other._map.get
        mapping = {}
        for k in self._map.keys() | other._map.keys():
            q = get_q(k, k)
            v = get_p(q, q)
            if v != k:
                mapping[k] = v
        return Perm._canonical(mapping)

    def __invert__(self) -> Perm:
        return Perm._canonical({v: k for k, v in self._map.items()})

    inverse = __invert__

    def __pow__(self, m: int) -> Perm:
        m = operator.index(m)
        if m < 0:
            return pow(~self, -m)
        result = Perm()
        base = self
        # binary exponentiation, O(n log m)
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Perm) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self._key < other._key

    def __bool__(self) -> bool:
        return bool(self._map)

    def is_identity(self) -> bool:
        return not self._map

    def commutes_with(self, other: Perm) -> bool:
        return self * other == other * self

    def commutator(self, other: Perm) -> Perm:
        """``p * q * ~p * ~q``."""
        return self * other * ~self * ~other

    # structure

    def support(self) -> list[int]:
        return sorted(self._map)

    def max(self) -> int:
        """Highest moved point, or 0 for the identity."""
        return max(self._map) if self._map else 0

    def min(self) -> int:
        """Lowest moved point, or 0 for the identity."""
        return min(self._map) if self._map else 0

    def _check_size(self, size: int | None) -> int:
        if size is None:
            return self.max() + 1
        size = operator.index(size)
        if size < 1 or (self._map and size <= self.max()):
            raise SizeTooSmall(
                f"size {size} does not cover moved point {self.max()}"
            )
        return size

    def list(self, size: int | None = None) -> list[int]:
        """Array form ``[p[0], ..., p[size-1]]``."""
        size = self._check_size(size)
        get = self._map.get
        return [get(k, k) for k in range(size)]

    to_array = list

    def label(self, size: int | None = None) -> str:
        """Array form encoded with one base-62 character per point."""
        size = self._check_size(size)
        if size > 62:
            raise PermError("size is too large for labels")
        return "".join(_LABEL_LETTERS[v] for v in self.list(size))

    def cycles(self) -> list[list[int]]:
        """Disjoint cycles without 1-cycles.

        Each cycle starts at its smallest point and cycles are sorted by
        that point.
        """
        result = []
        seen = set()
        for start in sorted(self._map):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self._map[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self._map[j]
            result.append(cycle)
        return result

    def order(self) -> int:
        return reduce(lcm, (len(c) for c in self.cycles()), 1)

    def parity(self) -> int:
        """0 for even perms, 1 for odd ones."""
        size = self.max() + 1
        # cycle count including the 1-cycles of range(size)
        count = size - len(self._map) + len(self.cycles())
        return (size - count) % 2

    def is_even(self) -> bool:
        return self.parity() == 0

    def is_odd(self) -> bool:
        return self.parity() == 1

    def sign(self) -> int:
        return 1 if self.parity() == 0 else -1

    def __repr__(self) -> str:
        return "Perm()" + "".join(str(tuple(c)) for c in self.cycles())

    def __str__(self) -> str:
        if not self._map:
            return "()"
        return "".join(
            "(" + " ".join(map(str, c)) + ")" for c in self.cycles()
        )


def identity() -> Perm:
    return Perm()


def from_cycles(cycles: Iterable[Sequence[int]]) -> Perm:
    return Perm.from_cycles(cycles)


def from_array(values: Sequence[int]) -> Perm:
    return Perm.from_array(values)


def compose(*perms: Perm) -> Perm:
    """Left-to-right product; the last factor acts first."""
    return reduce(operator.mul, perms, Perm())

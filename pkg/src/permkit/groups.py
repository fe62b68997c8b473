"""Perm groups held as a fully enumerated set of elements.

Suitable only for groups small enough to list; ``max_order`` guards
against runaway closures.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

from permkit.errors import GroupTooLarge
from permkit.perms import Perm

__all__ = ["Group", "DEFAULT_MAX_ORDER", "commutator_subgroup"]

DEFAULT_MAX_ORDER = 100_000


class Group:
    """A finite perm group, built by inserting generators.

    >>> s4 = Group().insert(Perm()(0, 1)).insert(Perm()(0, 1, 2, 3))
    >>> s4.order()
    24

    :meth:`insert` extends the group in place and returns it.  Every other
    method leaves the group untouched; derived subgroups are new objects
    sharing ``max_order``.
    """

    def __init__(self, max_order: int = DEFAULT_MAX_ORDER):
        if max_order < 1:
            raise ValueError("max_order must be positive")
        self.max_order = max_order
        self._elements: set[Perm] = {Perm()}
        self._gens: list[Perm] = []

    @classmethod
    def generated_by(
        cls, gens: Iterable[Perm], max_order: int = DEFAULT_MAX_ORDER
    ) -> Group:
        group = cls(max_order=max_order)
        for g in gens:
            group.insert(g)
        return group

    def _new(self) -> Group:
        return Group(max_order=self.max_order)

    def copy(self) -> Group:
        group = self._new()
        group._elements = set(self._elements)
        group._gens = list(self._gens)
        return group

    # basic queries

    def order(self) -> int:
        return len(self._elements)

    __len__ = order

    def is_trivial(self) -> bool:
        return len(self._elements) == 1

    def __contains__(self, perm: Perm) -> bool:
        return perm in self._elements

    def __iter__(self) -> Iterator[Perm]:
        return iter(self._elements)

    def iterperms(self) -> Iterator[Perm]:
        """Elements sorted by canonical key (identity first)."""
        return iter(sorted(self._elements))

    @property
    def generators(self) -> tuple[Perm, ...]:
        return tuple(self._gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        return self._elements == other._elements

    __hash__ = None

    def __repr__(self) -> str:
        return f"<Group of order {self.order()}>"

    # closure

    def insert(self, perm: Perm) -> Group:
        """Add ``perm`` and everything it generates with the current group."""
        if perm in self._elements:
            return self
        elements = self._elements
        new = set()
        gens = self._gens + [perm]
        # old elements are already closed under the old generators
        frontier = [g * perm for g in elements]
        frontier = [g for g in frontier if g not in elements]
        new.update(frontier)
        limit = self.max_order - len(elements)
        if len(new) > limit:
            raise GroupTooLarge(len(elements) + len(new), self.max_order)
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = g * s
                    if h not in elements and h not in new:
                        new.add(h)
                        nxt.append(h)
                        if len(new) > limit:
                            raise GroupTooLarge(
                                len(elements) + len(new), self.max_order
                            )
            frontier = nxt
        elements.update(new)
        self._gens = gens
        return self

    # structure

    def is_abelian(self) -> bool:
        if self._gens:
            gens = self._gens
            return all(a.commutes_with(b) for a in gens for b in gens)
        return True

    def is_subgroup(self, other: Group) -> bool:
        """``H.is_subgroup(G)``: every element of H lies in G."""
        if other.order() % self.order():
            return False
        return self._elements <= other._elements

    def is_normal(self, other: Group) -> bool:
        """``H.is_normal(G)``: g h g^-1 lies in H for all h in H, g in G."""
        for g in other._elements:
            g_inv = ~g
            for h in self._elements:
                if g * h * g_inv not in self._elements:
                    return False
        return True

    def subgroup_search(self, prop: Callable[[Perm], bool]) -> Group:
        """Subgroup generated by the elements satisfying ``prop``."""
        group = self._new()
        for g in self.iterperms():
            if prop(g):
                group.insert(g)
        return group

    def normalizer(self, other: Group) -> Group:
        """``G.normalizer(H)``."""
        h_elems = other._elements

        def normalizes(g):
            g_inv = ~g
            return all(g * h * g_inv in h_elems for h in h_elems)

        return self.subgroup_search(normalizes)

    def centralizer(self, other: Group) -> Group:
        """``G.centralizer(H)``."""
        if other.is_trivial() or self.is_trivial():
            return self.copy()
        # commuting with the generators of H is enough
        hs = other._gens or list(other._elements)
        return self.subgroup_search(lambda g: all(g * h == h * g for h in hs))

    def center(self) -> Group:
        return self.centralizer(self)

    def commutator(self, h: Group, k: Group) -> Group:
        """``[H, K]``, built with this group's ``max_order``."""
        return commutator_subgroup(h, k, max_order=self.max_order)

    def derived_subgroup(self) -> Group:
        return commutator_subgroup(self, self, max_order=self.max_order)

    def derived_series(self) -> list[Group]:
        """G, [G,G], [[G,G],[G,G]], ... until two terms coincide."""
        series = [self]
        while True:
            nxt = series[-1].derived_subgroup()
            if nxt.order() == series[-1].order():
                return series
            series.append(nxt)

    # action on points

    def orbit(self, point: int) -> set[int]:
        return {g[point] for g in self._elements}

    def orbits(self, points: Iterable[int]) -> list[list[int]]:
        """Orbits of the given points, each sorted ascending.

        Orbits appear in the order their first point occurs in ``points``.
        Points reached by the action are included even when they are not
        listed in ``points``.
        """
        used = set()
        result = []
        for pt in points:
            if pt in used:
                continue
            orb = self.orbit(pt)
            used |= orb
            result.append(sorted(orb))
        return result

    def is_transitive(self, points: Iterable[int], strict: bool = True) -> bool:
        """Single orbit on ``points``.

        With ``strict=False`` fixed points are ignored and the group is
        transitive when exactly one orbit has length greater than 1.
        """
        orbs = self.orbits(points)
        if strict:
            return len(orbs) == 1
        return sum(1 for orb in orbs if len(orb) > 1) == 1

    def stabilizer(self, point: int) -> Group:
        return self.subgroup_search(lambda g: g[point] == point)


def commutator_subgroup(
    h: Group, k: Group, max_order: int = DEFAULT_MAX_ORDER
) -> Group:
    """Subgroup generated by all commutators ``[a, b]``, a in H, b in K."""
    group = Group(max_order=max_order)
    for a in h.iterperms():
        for b in k.iterperms():
            group.insert(a.commutator(b))
    return group

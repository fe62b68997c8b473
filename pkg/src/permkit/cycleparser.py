"""Text form of perms in cycle notation.

Grammar accepted by :func:`parse`::

    perm  := "()" | cycle+          ("()" written without inner space)
    cycle := "(" point (sep point)* ")"
    sep   := "," | whitespace
    point := decimal nonnegative integer

Whitespace is allowed around tokens.  Cycles are multiplied left to right
and need not be disjoint; 1-cycles are accepted and ignored.  A cycle may
not repeat a point.  :func:`format` always emits the canonical form:
disjoint cycles, each starting at its smallest point, sorted by that point,
points separated by single spaces, and ``"()"`` for the identity.
"""

from __future__ import annotations

import re

from permkit.errors import MalformedCycle, ParseError
from permkit.perms import Perm

__all__ = ["parse", "format", "parse_cycles"]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<sym>[(),])|(?P<bad>\S))")


def _tokens(text: str):
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            # only trailing whitespace remains
            return
        start = m.start(m.lastgroup)
        if m.lastgroup == "bad":
            raise ParseError(f"unexpected character {text[start]!r}", start)
        yield m.lastgroup, m.group(m.lastgroup), start
        pos = m.end()


def parse_cycles(text: str) -> list[list[int]]:
    """Split cycle text into its cycles, without multiplying them."""
    toks = list(_tokens(text))
    end = len(text)
    if not toks:
        raise ParseError("empty input", 0)
    if text.strip() == "()":
        return []
    cycles = []
    i = 0
    while i < len(toks):
        kind, val, pos = toks[i]
        if val != "(":
            raise ParseError(f"expected '(' but found {val!r}", pos)
        i += 1
        cycle = []
        expect_point = True
        while True:
            if i >= len(toks):
                raise ParseError("unclosed cycle", end)
            kind, val, pos = toks[i]
            i += 1
            if kind == "num":
                cycle.append(int(val))
                expect_point = False
            elif val == ",":
                if expect_point:
                    raise ParseError("expected a point before ','", pos)
                expect_point = True
            elif val == ")":
                if expect_point:
                    what = "empty cycle" if not cycle else "dangling ','"
                    raise ParseError(what, pos)
                break
            else:
                raise ParseError(f"unexpected {val!r} inside a cycle", pos)
        if len(set(cycle)) != len(cycle):
            raise MalformedCycle(f"cycle {tuple(cycle)} repeats a point")
        cycles.append(cycle)
    return cycles


def parse(text: str) -> Perm:
    """Perm denoted by ``text``."""
    return Perm.from_cycles(parse_cycles(text))


def format(p: Perm) -> str:
    """Canonical cycle text of ``p``."""
    return str(p)

"""Cycle notation: parsing and canonical formatting.

Grammar (whitespace allowed between tokens):

    perm  := "()" | cycle+
    cycle := "(" point ("," point)+ ")"
    point := decimal integer, 1-based

A point may appear in at most one cycle, every point must lie in 1..degree,
and a cycle needs at least two points (fixed points are simply omitted).
Formatting is canonical: each cycle is rotated to start at its least point,
cycles are sorted by least point, and the identity prints as "()", so
parse(format(p)) == p for every permutation.
"""

from __future__ import annotations

from .errors import CycleSyntaxError, PointOutOfRange, RepeatedPoint
from .perm import Permutation


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation into a permutation of the given degree."""
    if degree < 1:
        raise CycleSyntaxError("degree must be at least 1", 0)
    s = text
    n = len(s)
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < n and s[pos].isspace():
            pos += 1

    def read_point() -> int:
        nonlocal pos
        skip_ws()
        start = pos
        while pos < n and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise CycleSyntaxError("expected a point", start)
        value = int(s[start:pos])
        if not 1 <= value <= degree:
            raise PointOutOfRange(
                f"point {value} outside 1..{degree}", start
            )
        return value

    images = list(range(degree))
    used: set[int] = set()
    saw_cycle = False

    skip_ws()
    if pos >= n:
        raise CycleSyntaxError("empty input", pos)
    while True:
        skip_ws()
        if pos >= n:
            break
        if s[pos] != "(":
            raise CycleSyntaxError(f"expected '(' not {s[pos]!r}", pos)
        open_at = pos
        pos += 1
        skip_ws()
        if pos < n and s[pos] == ")":
            # "()" stands for the identity; only valid as the whole input.
            pos += 1
            if saw_cycle or used:
                raise CycleSyntaxError("'()' cannot follow a cycle", open_at)
            skip_ws()
            if pos < n:
                raise CycleSyntaxError("text after identity '()'", pos)
            break
        cycle = [read_point()]
        while True:
            skip_ws()
            if pos < n and s[pos] == ",":
                pos += 1
                cycle.append(read_point())
            elif pos < n and s[pos] == ")":
                pos += 1
                break
            else:
                raise CycleSyntaxError("expected ',' or ')'", pos)
        if len(cycle) < 2:
            raise CycleSyntaxError("cycle needs at least two points", open_at)
        for v in cycle:
            if v in used:
                raise RepeatedPoint(f"point {v} appears twice", open_at)
            used.add(v)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b - 1
        saw_cycle = True

    return Permutation(v + 1 for v in images)


def format_cycles(p: Permutation) -> str:
    """Canonical cycle string for a permutation (identity is '()')."""
    img = p.images
    seen = [False] * p.degree
    parts: list[str] = []
    for i in range(1, p.degree + 1):
        if seen[i - 1] or img[i - 1] == i:
            continue
        cyc = []
        j = i
        while not seen[j - 1]:
            seen[j - 1] = True
            cyc.append(j)
            j = img[j - 1]
        parts.append("(" + ",".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "()"

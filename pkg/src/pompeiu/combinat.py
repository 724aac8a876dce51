"""Finite checkers on abstract copy systems: balanced colorings (every copy
gets exactly n/d points of each color) and m-transversals (sets meeting
every copy in exactly m points), plus the 1-D Steinhaus count.

Both searches are plain backtracking in canonical order, so the answer is
the least solution in that order and agrees with brute-force enumeration.
A ``None`` answer is an obstruction for the given finite fragment only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linsys import SparseRow

__all__ = [
    "CopySystem",
    "Coloring",
    "Transversal",
    "color_search",
    "transversal_search",
    "check_coloring",
    "check_transversal",
    "coloring_solution",
    "copy_rows",
    "copies_from_placements",
    "steinhaus_1d_count",
]


@dataclass(frozen=True)
class CopySystem:
    point_count: int
    copies: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        copies = tuple(tuple(c) for c in self.copies)
        object.__setattr__(self, "copies", copies)
        if self.point_count < 0:
            raise ValueError("negative point count")
        sizes = {len(c) for c in copies}
        if len(sizes) > 1:
            raise ValueError("copies have different sizes")
        for c in copies:
            if len(set(c)) != len(c):
                raise ValueError(f"copy {c} repeats a point")
            if any(not 0 <= i < self.point_count for i in c):
                raise ValueError(f"copy {c} has an id outside 0..{self.point_count - 1}")

    @property
    def n(self) -> int:
        return len(self.copies[0]) if self.copies else 0


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]


@dataclass(frozen=True)
class Transversal:
    members: tuple[int, ...]


def _incidence(sys: CopySystem) -> list[list[int]]:
    inc: list[list[int]] = [[] for _ in range(sys.point_count)]
    for ci, c in enumerate(sys.copies):
        for p in c:
            inc[p].append(ci)
    return inc


def color_search(sys: CopySystem, d: int) -> Coloring | None:
    """Least coloring (point order, colors ascending, point 0 colored 0) with
    exactly n/d points of every color in every copy."""
    n = sys.n
    if d < 2:
        raise ValueError("need at least two colors")
    if n % d:
        raise ValueError(f"{d} colors do not divide copies of size {n}")
    quota = n // d
    P = sys.point_count
    if P == 0:
        return Coloring(())
    inc = _incidence(sys)
    counts = [[0] * d for _ in sys.copies]
    colors = [-1] * P

    def fits(p: int, c: int) -> bool:
        return all(counts[ci][c] < quota for ci in inc[p])

    def rec(p: int) -> bool:
        if p == P:
            return True
        choices = (0,) if p == 0 else range(d)
        for c in choices:
            if fits(p, c):
                colors[p] = c
                for ci in inc[p]:
                    counts[ci][c] += 1
                if rec(p + 1):
                    return True
                for ci in inc[p]:
                    counts[ci][c] -= 1
        colors[p] = -1
        return False

    return Coloring(tuple(colors)) if rec(0) else None


def check_coloring(sys: CopySystem, d: int, coloring: Coloring) -> bool:
    """Recount every copy from scratch."""
    if len(coloring.colors) != sys.point_count:
        return False
    quota = sys.n // d
    for c in sys.copies:
        hist = [0] * d
        for p in c:
            col = coloring.colors[p]
            if not 0 <= col < d:
                return False
            hist[col] += 1
        if any(h != quota for h in hist):
            return False
    return True


def transversal_search(sys: CopySystem, m: int) -> Transversal | None:
    """Least set (include-before-exclude, lowest undecided id first) meeting
    every copy in exactly m points, with unit propagation on pinned copies."""
    n = sys.n
    if m < 1:
        raise ValueError("m must be positive")
    if sys.copies and m >= n:
        raise ValueError(f"m={m} >= copy size {n}: the whole space is a trivial solution")
    P = sys.point_count
    inc = _incidence(sys)
    state = [-1] * P  # -1 undecided, 0 out, 1 in
    inside = [0] * len(sys.copies)
    undecided = [len(c) for c in sys.copies]
    trail: list[int] = []

    def assign(p: int, v: int) -> bool:
        """Set p := v and propagate; False on conflict (trail keeps everything set)."""
        stack = [(p, v)]
        while stack:
            q, val = stack.pop()
            if state[q] != -1:
                if state[q] != val:
                    return False
                continue
            state[q] = val
            trail.append(q)
            for ci in inc[q]:
                undecided[ci] -= 1
                inside[ci] += val
            for ci in inc[q]:
                if inside[ci] > m or inside[ci] + undecided[ci] < m:
                    return False
                if undecided[ci]:
                    if inside[ci] == m:
                        stack.extend((r, 0) for r in sys.copies[ci] if state[r] == -1)
                    elif inside[ci] + undecided[ci] == m:
                        stack.extend((r, 1) for r in sys.copies[ci] if state[r] == -1)
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            q = trail.pop()
            for ci in inc[q]:
                undecided[ci] += 1
                inside[ci] -= state[q]
            state[q] = -1

    def rec(start: int) -> bool:
        p = start
        while p < P and state[p] != -1:
            p += 1
        if p == P:
            return True
        for v in (1, 0):
            mark = len(trail)
            if assign(p, v) and rec(p + 1):
                return True
            undo(mark)
        return False

    if not rec(0):
        return None
    return Transversal(tuple(p for p in range(P) if state[p] == 1))


def check_transversal(sys: CopySystem, m: int, t: Transversal) -> bool:
    members = set(t.members)
    if any(not 0 <= p < sys.point_count for p in members):
        return False
    return all(sum(p in members for p in c) == m for c in sys.copies)


def copy_rows(sys: CopySystem) -> list[SparseRow]:
    """All-ones equations ``sum_{x in copy} f(x) = 0``, labelled by copy index."""
    return [SparseRow.build(((p, 1) for p in c), i) for i, c in enumerate(sys.copies)]


def coloring_solution(coloring: Coloring, d: int) -> list[Fraction]:
    """``f(x) = b[color(x)]`` with nonzero ``b = (1, ..., 1, -(d-1))`` summing to zero."""
    b = [Fraction(1)] * (d - 1) + [Fraction(-(d - 1))]
    return [b[c] for c in coloring.colors]


def copies_from_placements(placements, point_count: int) -> CopySystem:
    """Copy system of realized placements (duplicate image sets kept once)."""
    seen = set()
    copies = []
    for pl in placements:
        key = frozenset(pl.image_ids)
        if len(key) != len(pl.image_ids) or key in seen:
            continue
        seen.add(key)
        copies.append(tuple(pl.image_ids))
    return CopySystem(point_count, tuple(copies))


def steinhaus_1d_count(n: int, t, sign: int = 1) -> int:
    """``|S cap {sign*1 + t, ..., sign*n + t}|`` for ``S = union_z [0,1) + n z``."""
    if n < 1:
        raise ValueError("n must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    t = Fraction(t)
    count = 0
    for j in range(1, n + 1):
        x = sign * j + t
        r = x - n * math.floor(x / n)
        if 0 <= r < 1:
            count += 1
    return count

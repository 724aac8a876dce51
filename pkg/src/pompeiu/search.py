"""Witness search: grow a set of placements of the base tuple, stream their
equations into elimination, and stop as soon as the target value is forced.

Candidate placements come from three queues:

* re-hits: planar placements anchored on two existing points whose images
  are all already interned (they only add equations, never points);
* fresh: send the first base point to an existing point under each pool
  rotation (points in id order, rotations in pool order);
* growth: anchored placements that would add new points.

Re-hits are drained first; fresh and growth candidates then alternate.  The
whole enumeration is deterministic, and a budget only cuts it short, so a
larger ``max_placements`` / ``max_points`` replays the same prefix.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import deque
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator, Sequence

from .exactfield import ComplexElem, Field, QQ, as_complex
from .geometry import (
    Placement,
    Point,
    PointStore,
    RigidMotion,
    RotationMatrix,
    anchored_motion_2d,
    apply_motion,
    cayley_rotation,
    embed_planar_rotation,
    gamma,
    squared_distance,
    surd_unit,
)
from .linsys import EliminationState, ForcingCertificate, SparseRow, explain_certificate

log = logging.getLogger(__name__)

__all__ = [
    "Problem",
    "SearchBudget",
    "SearchOutcome",
    "rotation_pool",
    "surd_units",
    "witness_search",
    "enumerate_placements",
    "minimize_witness",
    "placement_row",
]

ZERO_SUM_MESSAGE = (
    "weights sum to zero: a constant function then satisfies every copy "
    "equation, so no point value can be forced (the weighted property needs "
    "c1 + ... + cn != 0)"
)


@dataclass(frozen=True)
class Problem:
    base: tuple[Point, ...]
    weights: tuple[ComplexElem, ...]
    target: Point

    def __post_init__(self):
        if not self.base:
            raise ValueError("base tuple is empty")
        f = self.target.field
        k = self.target.dim
        if any(p.dim != k for p in self.base):
            raise ValueError("base points and target have different dimensions")
        if any(p.field != f for p in self.base):
            raise ValueError("base points and target live in different fields")
        if len(self.weights) != len(self.base):
            raise ValueError(f"{len(self.base)} base points but {len(self.weights)} weights")
        weights = tuple(as_complex(w, f) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not sum(weights, ComplexElem(0, 0, f)):
            raise ValueError(ZERO_SUM_MESSAGE)

    @property
    def dim(self) -> int:
        return self.target.dim

    @property
    def field(self) -> Field:
        return self.target.field

    @property
    def n(self) -> int:
        return len(self.base)


@dataclass(frozen=True)
class SearchBudget:
    max_placements: int = 200
    max_points: int = 400
    rotation_pool_size: int = 8

    def __post_init__(self):
        if min(self.max_placements, self.max_points, self.rotation_pool_size) < 1:
            raise ValueError("budget fields must be positive")


@dataclass
class SearchOutcome:
    certificate: ForcingCertificate | None
    placements: list[Placement]
    rows: list[SparseRow]
    store: PointStore
    reason: str = ""
    stats: dict = dc_field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.certificate is not None

    def cited_placements(self) -> list[tuple[int, Placement]]:
        if self.certificate is None:
            return []
        return [(lab, self.placements[lab]) for lab in self.certificate.labels]


# -- rotation pool ------------------------------------------------------------------


def surd_units(f: Field) -> Iterator[tuple]:
    """Unit vectors ``(x, y*sqrt d)`` with rational x, y > 0.

    Yielded by increasing common denominator, then by decreasing x (smaller
    angle first).  For d = 3 the first one is the 60 degree rotation.
    """
    d = f.d
    emitted: set = set()
    bound = 2
    while True:
        found = []
        # a unit with denominator <= bound comes from s = p/q with q^2 + d p^2 <= 2 d bound
        lim = 2 * d * bound
        for q in itertools.count(1):
            if q * q + d > lim:
                break
            for p in itertools.count(1):
                if q * q + d * p * p > lim:
                    break
                s = Fraction(p, q)
                if s.denominator != q:
                    continue
                x, y = surd_unit(s, f)
                den = math.lcm(x.a.denominator, y.b.denominator)
                if den <= bound and (x.a, y.b) not in emitted:
                    found.append((den, -x.a, x, y))
        found.sort(key=lambda t: (t[0], t[1]))
        for _, _, x, y in found:
            emitted.add((x.a, y.b))
            yield x, y
        bound *= 2


def _pool_candidates(f: Field, k: int) -> Iterator[RotationMatrix]:
    yield RotationMatrix.identity(k, f)
    planes = list(itertools.combinations(range(k), 2))
    surds = surd_units(f) if f.d is not None else None
    m = k * (k - 1) // 2
    for g in itertools.count(1):
        u = gamma(g)
        for i, j in planes:
            yield embed_planar_rotation(u, i, j, k, f)
        if surds is not None:
            su = next(surds)
            for i, j in planes:
                yield embed_planar_rotation(su, i, j, k, f)
        if k >= 3:
            for params in itertools.product(range(-g, g + 1), repeat=m):
                if max(abs(x) for x in params) == g:
                    yield cayley_rotation(params, k, f)


def rotation_pool(f: Field, k: int, size: int) -> list[RotationMatrix]:
    """Deterministic, duplicate-free list of ``size`` exact rotations.

    Order: identity; then for g = 1, 2, ...: ``gamma(g)`` in every coordinate
    plane, the g-th surd unit in every plane (quadratic fields only), and for
    k >= 3 the Cayley rotations whose integer parameters have max norm g.
    """
    if size < 1:
        raise ValueError("pool size must be positive")
    if k < 2:
        raise ValueError("rotations need dimension >= 2")
    out: list[RotationMatrix] = []
    seen = set()
    for rot in _pool_candidates(f, k):
        if rot in seen:
            continue
        seen.add(rot)
        out.append(rot)
        if len(out) == size:
            break
    return out


# -- search -------------------------------------------------------------------------


def placement_row(problem: Problem, image_ids: Sequence[int], label) -> SparseRow:
    return SparseRow.build(zip(image_ids, problem.weights), label)


class _Search:
    def __init__(self, problem: Problem, budget: SearchBudget, force: bool = True):
        self.problem = problem
        self.force = force
        self.budget = budget
        self.store = PointStore(problem.field)
        self.store.intern(problem.target)
        self.state = EliminationState()
        self.placements: list[Placement] = []
        self.rows: list[SparseRow] = []
        self.row_keys: set = set()
        self.pool = rotation_pool(problem.field, problem.dim, budget.rotation_pool_size)
        self.rehit: deque = deque()
        self.growth: deque = deque()
        self.fresh = self._fresh_candidates()
        self.skipped = 0
        # squared base distance -> ordered index pairs realizing it
        self.base_pairs: dict = {}
        if problem.dim == 2:
            for j1, j2 in itertools.permutations(range(problem.n), 2):
                dd = squared_distance(problem.base[j1], problem.base[j2])
                if dd:
                    self.base_pairs.setdefault(dd, []).append((j1, j2))
            self._discover_pairs(0)

    def _fresh_candidates(self) -> Iterator[RigidMotion]:
        a1 = self.problem.base[0]
        pid = 0
        while pid < len(self.store):
            p = self.store[pid]
            for rot in self.pool:
                ra = rot.apply(a1.coords)
                t = Point(tuple(pc - rc for pc, rc in zip(p.coords, ra)))
                yield RigidMotion(rot, t)
            pid += 1

    def _discover_pairs(self, new_id: int) -> None:
        if not self.base_pairs:
            return
        q = self.store[new_id]
        for pid in range(new_id):
            p = self.store[pid]
            pairs = self.base_pairs.get(squared_distance(p, q))
            if not pairs:
                continue
            for j1, j2 in pairs:
                m = anchored_motion_2d(self.problem.base, j1, j2, p, q)
                images = [apply_motion(m, a) for a in self.problem.base]
                if all(img in self.store for img in images):
                    self.rehit.append(m)
                else:
                    self.growth.append(m)

    def _next_candidate(self, turn: list) -> RigidMotion | None:
        if self.rehit:
            return self.rehit.popleft()
        order = ("fresh", "growth") if turn[0] == "fresh" else ("growth", "fresh")
        turn[0] = order[1]
        for source in order:
            if source == "fresh":
                m = next(self.fresh, None)
                if m is not None:
                    return m
            elif self.growth:
                return self.growth.popleft()
        return None

    def run(self) -> SearchOutcome:
        turn = ["fresh"]
        reason = ""
        cert = None
        while cert is None:
            m = self._next_candidate(turn)
            if m is None:
                reason = "candidate queues exhausted"
                break
            images = [apply_motion(m, a) for a in self.problem.base]
            new_pts = []
            for img in images:
                if img not in self.store and img not in new_pts:
                    new_pts.append(img)
            if not new_pts:
                ids = [self.store.lookup(img) for img in images]
                key = placement_row(self.problem, ids, None).terms
                if not key or key in self.row_keys:
                    self.skipped += 1
                    continue
            if len(self.store) + len(new_pts) > self.budget.max_points:
                reason = "max_points reached"
                break
            if len(self.placements) >= self.budget.max_placements:
                reason = "max_placements reached"
                break
            before = len(self.store)
            ids = tuple(self.store.intern(img) for img in images)
            label = len(self.placements)
            row = placement_row(self.problem, ids, label)
            self.placements.append(Placement(m, ids))
            self.rows.append(row)
            self.row_keys.add(row.terms)
            for new_id in range(before, len(self.store)):
                self._discover_pairs(new_id)
            if not row.terms or not self.force:
                continue
            self.state.add_row(row)
            cert = self.state.forcing_certificate(0)
        if cert is not None:
            problem = explain_certificate(self.rows, cert)
            if problem is not None:
                raise AssertionError(f"elimination produced a bad certificate: {problem}")
            reason = "forced"
        stats = {
            "placements": len(self.placements),
            "points": len(self.store),
            "rank": self.state.rank,
            "skipped_duplicates": self.skipped,
        }
        log.debug("search finished: %s %s", reason, stats)
        return SearchOutcome(cert, self.placements, self.rows, self.store, reason, stats)


def witness_search(problem: Problem, budget: SearchBudget = SearchBudget()) -> SearchOutcome:
    """Search for a finite forcing witness for ``problem.target`` (id 0)."""
    return _Search(problem, budget).run()


def enumerate_placements(problem: Problem, budget: SearchBudget = SearchBudget()) -> SearchOutcome:
    """Same enumeration as ``witness_search`` but without elimination; runs
    until the budget or the candidate queues are exhausted."""
    return _Search(problem, budget, force=False).run()


def _certificate_from(rows: Sequence[SparseRow], target: int) -> ForcingCertificate | None:
    state = EliminationState()
    for r in rows:
        if r.terms:
            state.add_row(r)
    return state.forcing_certificate(target)


def minimize_witness(rows: Sequence[SparseRow], cert: ForcingCertificate) -> ForcingCertificate:
    """Greedily drop cited rows (in ``rows`` order) while the target stays forced."""
    why = explain_certificate(rows, cert)
    if why is not None:
        raise ValueError(f"certificate does not verify: {why}")
    cited = {lab for lab, lam in cert.multipliers if lam}
    keep = [r for r in rows if r.label in cited]
    for r in list(keep):
        trial = [x for x in keep if x is not r]
        if _certificate_from(trial, cert.target) is not None:
            keep = trial
    out = _certificate_from(keep, cert.target)
    assert out is not None and explain_certificate(rows, out) is None
    return out

"""Standalone checker for ``forcing_certificate`` documents.

Deliberately independent of the search and elimination code: it only uses
the field arithmetic and redoes every step by direct computation from what
the document states.  Rotations are re-checked for orthogonality and
determinant, every placement is re-applied to the base tuple, the images
are matched against the listed witness coordinates, and the weighted sum of
the cited placement equations is recomputed term by term.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .documents import CertificateDocument

__all__ = ["Check", "verify_document"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _leibniz_det(m):
    k = len(m)
    total = 0
    for perm in itertools.permutations(range(k)):
        term = _perm_sign(perm)
        for i in range(k):
            term = term * m[i][perm[i]]
        total = total + term
    return total


def _rotation_problem(q, k: int) -> str | None:
    if len(q) != k or any(len(row) != k for row in q):
        return f"rotation is not {k}x{k}"
    for i in range(k):
        for j in range(k):
            dot = 0
            for r in range(k):
                dot = dot + q[r][i] * q[r][j]
            if dot != (1 if i == j else 0):
                return f"columns {i},{j} have inner product {dot}"
    if _leibniz_det(q) != 1:
        return "determinant is not 1"
    return None


def verify_document(doc: CertificateDocument) -> list[Check]:
    checks: list[Check] = []

    def add(name, problem):
        checks.append(Check(name, problem is None, problem or ""))

    k = len(doc.target)
    n = len(doc.base)
    shape = None
    if n == 0 or len(doc.weights) != n:
        shape = "base tuple empty or weight count mismatch"
    elif any(len(p) != k for p in doc.base):
        shape = "base points and target have different dimensions"
    add("problem shape", shape)

    coords: dict[int, tuple] = {}
    dup = None
    for pid, c in doc.witness_points:
        if pid in coords:
            dup = f"point id {pid} listed twice"
            break
        if len(c) != k:
            dup = f"point {pid} has dimension {len(c)}"
            break
        coords[pid] = c
    if dup is None:
        by_coords: dict[tuple, int] = {}
        for pid, c in coords.items():
            if c in by_coords:
                dup = f"points {by_coords[c]} and {pid} coincide"
                break
            by_coords[c] = pid
    add("witness points distinct", dup)

    tgt = None
    if doc.target_id not in coords:
        tgt = f"target id {doc.target_id} is not a witness point"
    elif coords[doc.target_id] != doc.target:
        tgt = "target id does not carry the target coordinates"
    add("target", tgt)

    rows: dict[int, dict[int, object]] = {}
    geom = None
    for pl in doc.placements:
        if pl.label in rows:
            geom = f"placement label {pl.label} used twice"
            break
        why = _rotation_problem(pl.rotation, k)
        if why is not None:
            geom = f"placement {pl.label}: {why}"
            break
        if len(pl.translation) != k or len(pl.image_ids) != n:
            geom = f"placement {pl.label}: wrong translation length or image count"
            break
        row: dict[int, object] = {}
        for a, c, pid in zip(doc.base, doc.weights, pl.image_ids):
            img = []
            for i in range(k):
                s = pl.translation[i]
                for j in range(k):
                    s = s + pl.rotation[i][j] * a[j]
                img.append(s)
            img = tuple(img)
            if pid not in coords:
                geom = f"placement {pl.label}: image id {pid} is not a witness point"
                break
            if coords[pid] != img:
                geom = f"placement {pl.label}: image of a base point is not at point {pid}"
                break
            row[pid] = row[pid] + c if pid in row else c
        if geom is not None:
            break
        rows[pl.label] = row
    add("placements re-derived", geom)

    combo = None
    if geom is None:
        total: dict[int, object] = {}
        cited = set()
        for lab, lam in doc.multipliers:
            if lab in cited:
                combo = f"placement {lab} cited twice"
                break
            cited.add(lab)
            if lab not in rows:
                combo = f"multiplier cites unknown placement {lab}"
                break
            for pid, c in rows[lab].items():
                total[pid] = total[pid] + lam * c if pid in total else lam * c
        if combo is None:
            nonzero = {pid: v for pid, v in total.items() if v}
            if set(nonzero) != {doc.target_id} or nonzero[doc.target_id] != 1:
                combo = "weighted sum of cited equations is not the unit functional at the target"
    else:
        combo = "skipped: placements did not re-derive"
    add("multipliers combine to target", combo)
    return checks

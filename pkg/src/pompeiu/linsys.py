"""Sparse exact linear systems with certificate-tracking elimination.

Rows are homogeneous equations ``sum_j c_j * x[id_j] = 0`` over any exact
field-like scalar (int, Fraction, FieldElem, ComplexElem).  Every reduced row
keeps a ledger expressing it as a combination of the original rows, so a
unit row ``x[target]`` found in the row space comes with multipliers over the
original equations.  Those multipliers are the forcing certificate: any
function satisfying the cited equations vanishes at the target.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Hashable, Iterable, Sequence

__all__ = [
    "SparseRow",
    "EliminationState",
    "AddReport",
    "ForcingCertificate",
    "GenSystem",
    "InfeasibleCore",
    "forcing_certificate",
    "verify_certificate",
    "explain_certificate",
    "vandermonde_det",
    "prop1_rows",
    "prop1_force",
    "is_feasible",
    "infeasible_core",
]


@dataclass(frozen=True)
class SparseRow:
    """``terms`` are ``(id, coefficient)`` pairs, ids strictly increasing, no zeros."""

    terms: tuple[tuple[int, Any], ...]
    label: Hashable = None

    @classmethod
    def build(cls, pairs: Iterable[tuple[int, Any]], label: Hashable = None) -> SparseRow:
        acc: dict[int, Any] = {}
        for i, c in pairs:
            acc[i] = acc[i] + c if i in acc else c
        return cls(tuple((i, acc[i]) for i in sorted(acc) if acc[i]), label)

    def __post_init__(self):
        ids = [i for i, _ in self.terms]
        if any(a >= b for a, b in zip(ids, ids[1:])):
            raise ValueError("row ids must be strictly increasing")
        if any(not c for _, c in self.terms):
            raise ValueError("row stores a zero coefficient")

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.terms)

    def as_dict(self) -> dict[int, Any]:
        return dict(self.terms)


@dataclass(frozen=True)
class AddReport:
    kind: str  # "new_pivot" or "reduced_to_zero"
    pivot: int | None = None


@dataclass(frozen=True)
class ForcingCertificate:
    target: int
    multipliers: tuple[tuple[Hashable, Any], ...]
    witness_points: tuple[int, ...]

    @property
    def labels(self) -> tuple[Hashable, ...]:
        return tuple(lab for lab, _ in self.multipliers)


def _axpy(dst: dict, scale, src: dict) -> None:
    """``dst -= scale * src`` in place, dropping exact zeros."""
    for k, v in src.items():
        if k in dst:
            nv = dst[k] - scale * v
            if nv:
                dst[k] = nv
            else:
                del dst[k]
        else:
            dst[k] = -(scale * v)


class EliminationState:
    """Row echelon form keyed by the lowest id of each reduced row.

    The pivot of a reduced row is its lowest id and its pivot coefficient is 1.
    ``ledger[p]`` maps original row index to multiplier so that
    ``reduced[p] == sum(mult * original[idx])`` exactly.
    """

    def __init__(self):
        self.rows: list[SparseRow] = []
        self.reduced: dict[int, dict[int, Any]] = {}
        self.ledger: dict[int, dict[int, Any]] = {}
        self._labels: dict[Hashable, int] = {}

    def __len__(self):
        return len(self.rows)

    def add_row(self, row: SparseRow) -> AddReport:
        label = row.label if row.label is not None else len(self.rows)
        if label in self._labels:
            raise ValueError(f"duplicate row label {label!r}")
        idx = len(self.rows)
        self.rows.append(row if row.label is not None else SparseRow(row.terms, label))
        self._labels[label] = idx
        vec = row.as_dict()
        led: dict[int, Any] = {idx: 1}
        while vec:
            p = min(vec)
            prow = self.reduced.get(p)
            if prow is None:
                inv = Fraction(1) / vec[p]
                self.reduced[p] = {k: v * inv for k, v in vec.items()}
                self.ledger[p] = {k: v * inv for k, v in led.items()}
                return AddReport("new_pivot", p)
            c = vec[p]
            _axpy(vec, c, prow)
            _axpy(led, c, self.ledger[p])
        return AddReport("reduced_to_zero")

    def in_row_space(self, vec: dict[int, Any]) -> dict[int, Any] | None:
        """Multipliers over original row indices expressing ``vec``, or None."""
        vec = {k: v for k, v in vec.items() if v}
        combo: dict[int, Any] = {}
        while vec:
            p = min(vec)
            prow = self.reduced.get(p)
            if prow is None:
                return None
            c = vec[p]
            _axpy(vec, c, prow)
            # combo += c * ledger[p]
            _axpy(combo, -c, self.ledger[p])
        return combo

    def forcing_certificate(self, target: int) -> ForcingCertificate | None:
        combo = self.in_row_space({target: 1})
        if combo is None:
            return None
        mults = tuple((self.rows[i].label, combo[i]) for i in sorted(combo))
        ids = {target}
        for i in combo:
            ids.update(self.rows[i].ids)
        return ForcingCertificate(target, mults, tuple(sorted(ids)))

    def check_ledger(self) -> bool:
        """Recompute every reduced row from its ledger."""
        for p, red in self.reduced.items():
            acc: dict[int, Any] = {}
            for idx, m in self.ledger[p].items():
                _axpy(acc, -m, self.rows[idx].as_dict())
            if acc != red:
                return False
        return True

    @property
    def rank(self) -> int:
        return len(self.reduced)


def forcing_certificate(state: EliminationState, target: int) -> ForcingCertificate | None:
    return state.forcing_certificate(target)


def explain_certificate(rows: Sequence[SparseRow], cert: ForcingCertificate) -> str | None:
    """Independent re-check by direct summation.  Returns a reason on failure, None on success."""
    by_label: dict[Hashable, SparseRow] = {}
    for r in rows:
        if r.label in by_label:
            return f"ambiguous row label {r.label!r}"
        by_label[r.label] = r
    total: dict[int, Any] = {}
    seen = set()
    witness = set(cert.witness_points)
    if cert.target not in witness:
        return "target is not among the witness points"
    for label, lam in cert.multipliers:
        if label in seen:
            return f"row {label!r} cited twice"
        seen.add(label)
        row = by_label.get(label)
        if row is None:
            return f"certificate cites unknown row {label!r}"
        if not lam:
            continue
        for i, c in row.terms:
            if i not in witness:
                return f"row {label!r} uses point {i} outside the witness set"
            total[i] = total[i] + lam * c if i in total else lam * c
    total = {i: v for i, v in total.items() if v}
    if set(total) != {cert.target} or total[cert.target] != 1:
        return "combination of cited rows is not the unit row at the target"
    return None


def verify_certificate(rows: Sequence[SparseRow], cert: ForcingCertificate) -> bool:
    return explain_certificate(rows, cert) is None


# -- Vandermonde ----------------------------------------------------------------


def vandermonde_det(z: Sequence) -> Any:
    """Determinant of ``M[k][j] = z_j ** k`` for ``k = 1..s``.

    Equals ``prod(z) * prod_{i<j} (z_j - z_i)``, nonzero for distinct nonzero entries.
    """
    z = list(z)
    if not z:
        raise ValueError("empty tuple")
    if any(not x for x in z):
        raise ValueError("entries must be nonzero")
    for i, j in itertools.combinations(range(len(z)), 2):
        if z[i] == z[j]:
            raise ValueError("entries must be pairwise distinct")
    out = z[0]
    for x in z[1:]:
        out = out * x
    for i, j in itertools.combinations(range(len(z)), 2):
        out = out * (z[j] - z[i])
    return out


# -- simple similarities on Z^k --------------------------------------------------


def _lattice(p) -> tuple[int, ...]:
    return (p,) if isinstance(p, int) else tuple(p)


def prop1_rows(a, c, target, b_range, k_range):
    """Rows ``sum_j c_j x[b + kappa a_j] = 0`` for ``b`` in b_range, ``kappa`` in k_range.

    Returns ``(rows, points)`` where ``points[id]`` is the lattice point of an
    id; the target is id 0.  Rows are generated with b outer, kappa inner and
    are labelled ``(b, kappa)``.
    """
    a = [_lattice(p) for p in a]
    if len(a) != len(c) or not a:
        raise ValueError("need one weight per tuple point")
    b_range = [_lattice(b) for b in b_range]
    k_range = list(k_range)
    if not b_range or not k_range:
        raise ValueError("empty translation or dilation range")
    if any(not isinstance(k, int) or k < 1 for k in k_range):
        raise ValueError("dilations must be positive integers")
    dim = len(a[0])
    if any(len(p) != dim for p in a + b_range) or len(_lattice(target)) != dim:
        raise ValueError("lattice points of mixed dimension")
    ids: dict[tuple[int, ...], int] = {_lattice(target): 0}
    points = [_lattice(target)]
    rows = []
    for b in b_range:
        for kappa in k_range:
            pairs = []
            for aj, cj in zip(a, c):
                q = tuple(bi + kappa * ai for bi, ai in zip(b, aj))
                if q not in ids:
                    ids[q] = len(points)
                    points.append(q)
                pairs.append((ids[q], cj))
            label = (b[0] if dim == 1 else b, kappa)
            rows.append(SparseRow.build(pairs, label))
    return rows, points


def prop1_force(a, c, target, b_range, k_range) -> ForcingCertificate | None:
    """Stream the similarity rows into elimination until ``x[target]`` is forced."""
    rows, _ = prop1_rows(a, c, target, b_range, k_range)
    state = EliminationState()
    for row in rows:
        if not row.terms:
            continue
        state.add_row(row)
        cert = state.forcing_certificate(0)
        if cert is not None:
            return cert
    return None


# -- affine systems and infeasible cores ------------------------------------------


@dataclass(frozen=True)
class GenSystem:
    """Affine system: ``rows[i] = (lhs, rhs)`` meaning ``lhs . x = rhs``."""

    rows: tuple[tuple[SparseRow, Any], ...]

    @classmethod
    def of(cls, rows) -> GenSystem:
        return cls(tuple((r, b) for r, b in rows))

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class InfeasibleCore:
    indices: tuple[int, ...]
    # (index, lambda) with sum(lambda * lhs) = 0 and sum(lambda * rhs) = 1
    refutation: tuple[tuple[int, Any], ...] = ()


def _refute(sys: GenSystem, indices: Sequence[int]):
    """Multipliers ``{index: lambda}`` giving ``0 = nonzero``, or None if consistent."""
    if not indices:
        return None
    rhs_id = 1 + max((i for k in indices for i in sys.rows[k][0].ids), default=-1)
    state = EliminationState()
    for k in indices:
        lhs, rhs = sys.rows[k]
        pairs = list(lhs.terms)
        if rhs:
            pairs.append((rhs_id, -rhs))
        state.add_row(SparseRow.build(pairs, k))
    # rows are lhs - rhs*e; -e in the span means sum(lam*lhs) = 0, sum(lam*rhs) = 1
    combo = state.in_row_space({rhs_id: -1})
    if combo is None:
        return None
    return {state.rows[i].label: m for i, m in combo.items()}


def is_feasible(sys: GenSystem, indices: Sequence[int] | None = None) -> bool:
    if indices is None:
        indices = range(len(sys))
    return _refute(sys, list(indices)) is None


def infeasible_core(sys: GenSystem) -> InfeasibleCore | None:
    """Deletion filter: drop rows in index order while the rest stays infeasible."""
    core = list(range(len(sys)))
    if is_feasible(sys, core):
        return None
    for k in range(len(sys)):
        trial = [i for i in core if i != k]
        if not is_feasible(sys, trial):
            core = trial
    ref = _refute(sys, core)
    return InfeasibleCore(tuple(core), tuple(sorted(ref.items())))

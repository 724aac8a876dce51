"""JSON documents written by every subcommand.

All documents share one envelope (``schema_version`` and ``kind``) and one
encoding: sorted keys, two-space indent, UTF-8, trailing newline.  Exact
numbers are strings (``"1/2"``, ``"-1/2√3"``, ``"(1/2)+(1)i"``); floats only
appear in the numeric gallery.  ``emit(parse(text)) == text`` for any emitted
document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .exactfield import (
    ComplexElem,
    Field,
    FieldElem,
    format_complex,
    format_real,
    parse_complex,
    parse_field,
    parse_real,
)

__all__ = [
    "SCHEMA_VERSION",
    "DocumentError",
    "emit",
    "parse",
    "envelope",
    "CertificateDocument",
    "point_strs",
    "rotation_strs",
]

SCHEMA_VERSION = 1

KINDS = (
    "forcing_certificate",
    "exhaustion_report",
    "verification_report",
    "coloring",
    "transversal",
    "lemma2_relation",
    "rotation_pool",
    "prop1_certificate",
    "infeasible_core",
    "gallery1d",
)


class DocumentError(ValueError):
    pass


def emit(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not a JSON document: {e}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {doc.get('schema_version')!r}")
    if doc.get("kind") not in KINDS:
        raise DocumentError(f"unknown document kind {doc.get('kind')!r}")
    return doc


def envelope(kind: str, **body) -> dict:
    if kind not in KINDS:
        raise ValueError(f"unknown document kind {kind!r}")
    return {"schema_version": SCHEMA_VERSION, "kind": kind, **body}


def point_strs(coords) -> list[str]:
    return [format_real(c) for c in coords]


def rotation_strs(rows) -> list[list[str]]:
    return [[format_real(x) for x in row] for row in rows]


def _reals(items, f: Field) -> tuple[FieldElem, ...]:
    return tuple(parse_real(s, f) for s in items)


@dataclass(frozen=True)
class PlacementEntry:
    label: int
    rotation: tuple[tuple[FieldElem, ...], ...]
    translation: tuple[FieldElem, ...]
    image_ids: tuple[int, ...]


@dataclass(frozen=True)
class CertificateDocument:
    """Typed view of a ``forcing_certificate`` document."""

    field: Field
    base: tuple[tuple[FieldElem, ...], ...]
    weights: tuple[ComplexElem, ...]
    target: tuple[FieldElem, ...]
    target_id: int
    witness_points: tuple[tuple[int, tuple[FieldElem, ...]], ...]
    placements: tuple[PlacementEntry, ...]
    multipliers: tuple[tuple[int, ComplexElem], ...]
    budget: dict
    stats: dict
    verification: str = "verified"

    def to_dict(self) -> dict:
        return envelope(
            "forcing_certificate",
            problem={
                "dimension": len(self.target),
                "field": self.field.name,
                "points": [point_strs(p) for p in self.base],
                "weights": [format_complex(w) for w in self.weights],
                "target": point_strs(self.target),
            },
            budget=dict(self.budget),
            target_id=self.target_id,
            witness_points=[{"id": i, "coords": point_strs(c)} for i, c in self.witness_points],
            placements=[
                {
                    "label": p.label,
                    "rotation": rotation_strs(p.rotation),
                    "translation": point_strs(p.translation),
                    "image_ids": list(p.image_ids),
                }
                for p in self.placements
            ],
            multipliers=[{"placement": lab, "lambda": format_complex(lam)} for lab, lam in self.multipliers],
            verification=self.verification,
            stats=dict(self.stats),
        )

    @classmethod
    def from_dict(cls, doc: dict) -> CertificateDocument:
        if doc.get("kind") != "forcing_certificate":
            raise DocumentError(f"expected a forcing_certificate, got {doc.get('kind')!r}")
        try:
            prob = doc["problem"]
            f = parse_field(prob["field"])
            return cls(
                field=f,
                base=tuple(_reals(p, f) for p in prob["points"]),
                weights=tuple(parse_complex(w, f) for w in prob["weights"]),
                target=_reals(prob["target"], f),
                target_id=_int(doc["target_id"]),
                witness_points=tuple((_int(w["id"]), _reals(w["coords"], f)) for w in doc["witness_points"]),
                placements=tuple(
                    PlacementEntry(
                        _int(p["label"]),
                        tuple(_reals(row, f) for row in p["rotation"]),
                        _reals(p["translation"], f),
                        tuple(_int(i) for i in p["image_ids"]),
                    )
                    for p in doc["placements"]
                ),
                multipliers=tuple((_int(m["placement"]), parse_complex(m["lambda"], f)) for m in doc["multipliers"]),
                budget=dict(doc["budget"]),
                stats=dict(doc["stats"]),
                verification=doc["verification"],
            )
        except (KeyError, TypeError, AttributeError) as e:
            raise DocumentError(f"malformed certificate document: {e!r}") from None
        except ValueError as e:
            raise DocumentError(f"malformed value in certificate document: {e}") from None


def _int(x: Any) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError(f"expected an integer, got {x!r}")
    return x

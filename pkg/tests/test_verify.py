import ast
import random
from pathlib import Path

import pytest

import pompeiu
from pompeiu import documents as docs
from pompeiu.cli import certificate_document
from pompeiu.config import parse_problem
from pompeiu.documents import CertificateDocument
from pompeiu.linsys import EliminationState, explain_certificate
from pompeiu.search import witness_search
from pompeiu.verify import verify_document

from mutations import KINDS, mutate


def certificate_dict(fixtures_dir, name="triangle_q3.conf"):
    cfg = parse_problem((fixtures_dir / name).read_text())
    out = witness_search(cfg.to_problem(), cfg.budget)
    assert out.found
    return certificate_document(cfg, out).to_dict()


def verdict(d: dict) -> bool:
    return all(c.passed for c in verify_document(CertificateDocument.from_dict(d)))


@pytest.mark.parametrize("name", ["triangle_q3.conf", "weighted_pair_q.conf"])
def test_valid_certificates_pass(fixtures_dir, name):
    assert verdict(certificate_dict(fixtures_dir, name))


@pytest.mark.parametrize("kind", KINDS)
def test_mutations_rejected(fixtures_dir, kind):
    base = certificate_dict(fixtures_dir)
    rng = random.Random(kind)
    for _ in range(20):
        bad, what = mutate(base, rng, kind)
        assert not verdict(bad), what


def test_other_tampering(fixtures_dir):
    base = certificate_dict(fixtures_dir)
    d = docs.parse(docs.emit(base))
    d["witness_points"][1]["coords"][0] = "7"
    assert not verdict(d)
    d = docs.parse(docs.emit(base))
    d["target_id"] = 1
    assert not verdict(d)
    d = docs.parse(docs.emit(base))
    d["placements"][0]["translation"][0] = "1/3"
    assert not verdict(d)
    d = docs.parse(docs.emit(base))
    d["multipliers"].append(dict(d["multipliers"][0]))
    assert not verdict(d)
    d = docs.parse(docs.emit(base))
    d["placements"][1]["label"] = d["placements"][0]["label"]
    assert not verdict(d)
    # a reflection is orthogonal but not a rotation
    d = docs.parse(docs.emit(base))
    d["placements"][0]["rotation"] = [["1", "0"], ["0", "-1"]]
    assert not verdict(d)


def test_verification_field_is_not_trusted(fixtures_dir):
    d = certificate_dict(fixtures_dir)
    d["verification"] = "rejected"
    assert verdict(d)
    d["multipliers"][0]["lambda"] = "5"
    d["verification"] = "verified"
    assert not verdict(d)


def _imports(module) -> set[str]:
    tree = ast.parse(Path(module.__file__).read_text())
    out = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            out.add(node.module or "")
        elif isinstance(node, ast.Import):
            out.update(a.name for a in node.names)
    return out


def test_verifier_does_not_import_search_or_elimination():
    from pompeiu import documents, verify

    for mod in (verify, documents):
        assert not ({"linsys", "search", "geometry", "polyring"} & {m.split(".")[-1] for m in _imports(mod)})


def test_corrupt_elimination_does_not_change_verdict(fixtures_dir, monkeypatch):
    good = certificate_dict(fixtures_dir)
    bad, _ = mutate(good, random.Random(1), "multiplier")

    def broken(self, *a, **k):
        raise RuntimeError("elimination is corrupted")

    monkeypatch.setattr(EliminationState, "add_row", broken)
    monkeypatch.setattr(EliminationState, "in_row_space", broken)
    monkeypatch.setattr(pompeiu.linsys, "explain_certificate", lambda *a: "corrupted")
    assert verdict(good)
    assert not verdict(bad)


def test_corrupt_verifier_does_not_change_search(fixtures_dir, monkeypatch):
    import pompeiu.verify as v

    cfg = parse_problem((fixtures_dir / "triangle_q3.conf").read_text())
    monkeypatch.setattr(v, "_leibniz_det", lambda m: 0)
    monkeypatch.setattr(v, "verify_document", lambda doc: [])
    out = witness_search(cfg.to_problem(), cfg.budget)
    assert out.found and explain_certificate(out.rows, out.certificate) is None

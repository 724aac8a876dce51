"""``pompeiu`` command line.

Every subcommand writes one JSON document (see ``documents``) to ``--out`` or
stdout.  Exit codes: 0 success or verified, 1 inconclusive / failed
verification / feasible when infeasibility was sought, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import documents as docs
from .combinat import (
    check_coloring,
    check_transversal,
    color_search,
    coloring_solution,
    copies_from_placements,
    copy_rows,
    steinhaus_1d_count,
    transversal_search,
)
from .config import ConfigError, parse_copy_system, parse_gen_system, parse_problem, parse_prop1
from .documents import CertificateDocument, DocumentError, PlacementEntry, point_strs, rotation_strs
from .exactfield import ComplexElem, format_complex, format_real, parse_field
from .gallery1d import RootNotFound, copy_residual, exp_counterexample_1d
from .geometry import Point, det, mat_mul, transpose, identity
from .linsys import infeasible_core, prop1_force, prop1_rows
from .polyring import IntPolynomial, lemma2_relation, quot_power, relation_quotient
from .search import enumerate_placements, minimize_witness, rotation_pool, witness_search
from .verify import verify_document

log = logging.getLogger(__name__)

__all__ = ["main", "run", "build_parser", "certificate_document"]

OK, INCONCLUSIVE, USAGE = 0, 1, 2

OBSTRUCTION_NOTE = "obstruction for this finite instance only; says nothing about the whole space"


class UsageError(Exception):
    pass


# -- helpers ------------------------------------------------------------------------


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _need_config(args) -> str:
    if not args.config:
        raise UsageError(f"{args.command} needs --config PATH")
    return _read(args.config)


def _problem_echo(cfg) -> dict:
    return {
        "dimension": cfg.dimension,
        "field": cfg.field.name,
        "points": [point_strs(p) for p in cfg.points],
        "weights": [format_complex(w) for w in cfg.weights],
        "target": point_strs(cfg.target),
    }


def _budget_echo(budget) -> dict:
    return {
        "max_placements": budget.max_placements,
        "max_points": budget.max_points,
        "rotation_pool_size": budget.rotation_pool_size,
    }


def _frac(x) -> str:
    return str(Fraction(x))


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


# -- witness / verify ---------------------------------------------------------------


def certificate_document(cfg, outcome) -> CertificateDocument:
    """Minimize the found certificate and package it with its placements."""
    cert = minimize_witness(outcome.rows, outcome.certificate)
    store = outcome.store
    placements = []
    for lab in cert.labels:
        pl = outcome.placements[lab]
        m = pl.motion
        placements.append(PlacementEntry(lab, m.rotation.entries, m.translation.coords, pl.image_ids))
    stats = dict(outcome.stats)
    stats.update(cited_placements=len(placements), witness_size=len(cert.witness_points))
    return CertificateDocument(
        field=cfg.field,
        base=tuple(p.coords for p in cfg.points),
        weights=cfg.weights,
        target=cfg.target.coords,
        target_id=cert.target,
        witness_points=tuple((i, store[i].coords) for i in cert.witness_points),
        placements=tuple(placements),
        multipliers=tuple((lab, ComplexElem(0, 0, cfg.field) + lam) for lab, lam in cert.multipliers),
        budget=_budget_echo(cfg.budget),
        stats=stats,
    )


def cmd_witness(args):
    cfg = parse_problem(_need_config(args))
    outcome = witness_search(cfg.to_problem(), cfg.budget)
    if not outcome.found:
        doc = docs.envelope(
            "exhaustion_report",
            problem=_problem_echo(cfg),
            budget=_budget_echo(cfg.budget),
            reason=outcome.reason,
            stats=outcome.stats,
            note="no forcing certificate within the budget; this does not show that the target is free",
        )
        return doc, INCONCLUSIVE
    cd = certificate_document(cfg, outcome)
    failed = [c for c in verify_document(cd) if not c.passed]
    if failed:
        raise AssertionError(f"emitted certificate fails verification: {failed}")
    return cd.to_dict(), OK


def cmd_verify(args):
    if not args.document:
        raise UsageError("verify needs a certificate document path")
    raw = docs.parse(_read(args.document))
    cd = CertificateDocument.from_dict(raw)
    checks = verify_document(cd)
    ok = all(c.passed for c in checks)
    doc = docs.envelope(
        "verification_report",
        document=str(args.document) if args.echo_path else None,
        status="pass" if ok else "fail",
        checks=[{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
    )
    if doc["document"] is None:
        del doc["document"]
    return doc, OK if ok else INCONCLUSIVE


# -- color / transversal ------------------------------------------------------------


def _copy_system(args, size_key: str):
    text = _need_config(args)
    system, size, kv = parse_copy_system(text, size_key)
    extra = {}
    if system is None:
        # geometric instance: enumerate placements and use their image sets as copies
        wkeys = {k: v for k, v in kv.items() if k not in ("point_count", "copies", size_key)}
        cfg = parse_problem("\n".join(f"{k} = {v}" for k, (v, _) in sorted(wkeys.items(), key=lambda kv_: kv_[1][1])))
        outcome = enumerate_placements(cfg.to_problem(), cfg.budget)
        system = copies_from_placements(outcome.placements, len(outcome.store))
        extra = {
            "problem": _problem_echo(cfg),
            "budget": _budget_echo(cfg.budget),
            "points": [point_strs(p.coords) for p in outcome.store.points()],
        }
    return system, size, extra


def _instance(system) -> dict:
    return {"point_count": system.point_count, "copies": [list(c) for c in system.copies]}


def cmd_color(args):
    system, size, extra = _copy_system(args, "colors")
    d = args.d if args.d is not None else size
    if d is None:
        raise UsageError("number of colors missing (use --d or 'colors =' in the config)")
    try:
        col = color_search(system, d)
    except ValueError as e:
        raise UsageError(str(e)) from None
    body = {"instance": _instance(system), "colors": d, **extra}
    if col is None:
        body.update(status="none", note=OBSTRUCTION_NOTE)
    else:
        values = coloring_solution(col, d)
        residual_zero = all(sum(values[p] for p in c) == 0 for c in system.copies)
        residual_zero = residual_zero and all(
            sum(c * values[i] for i, c in row.terms) == 0 for row in copy_rows(system)
        )
        body.update(
            status="solution",
            coloring=list(col.colors),
            balanced=check_coloring(system, d, col),
            nonzero_solution=[_frac(v) for v in values],
            solution_satisfies_all_copies=residual_zero,
        )
    return docs.envelope("coloring", **body), OK


def cmd_transversal(args):
    system, size, extra = _copy_system(args, "m")
    m = args.m if args.m is not None else size
    if m is None:
        raise UsageError("m missing (use --m or 'm =' in the config)")
    try:
        tr = transversal_search(system, m)
    except ValueError as e:
        raise UsageError(str(e)) from None
    body = {"instance": _instance(system), "m": m, **extra}
    if tr is None:
        body.update(status="none", note=OBSTRUCTION_NOTE)
    else:
        body.update(status="solution", members=list(tr.members), exact=check_transversal(system, m, tr))
    return docs.envelope("transversal", **body), OK


# -- lemma2 / rotations -------------------------------------------------------------


def cmd_lemma2(args):
    if args.c is None or args.exponents is None:
        raise UsageError("lemma2 needs --c C and --exponents r,s,t")
    exps = _int_list(args.exponents, "--exponents")
    if len(exps) != 3:
        raise UsageError("--exponents takes exactly three integers r,s,t")
    r, s, t = exps
    try:
        n = lemma2_relation(args.c, r, s, t)
    except ValueError as e:
        raise UsageError(str(e)) from None
    p = IntPolynomial.of(args.c, 1, args.c)
    powers = [quot_power(e, p) for e in exps]
    acc = powers[0].scale(n[0]) + powers[1].scale(n[1]) + powers[2].scale(n[2])
    cof = relation_quotient(args.c, tuple(exps), n)
    doc = docs.envelope(
        "lemma2_relation",
        c=args.c,
        exponents=exps,
        modulus=str(p),
        relation=list(n),
        reduced_powers=[[_frac(x) for x in q.coeffs] for q in powers],
        relation_vanishes=acc.is_zero(),
        primitive=math.gcd(*n) == 1,
        coefficient_sum=sum(n),
        gcd_sum_c=math.gcd(sum(n), args.c),
        cofactor=list(cof.coeffs),
    )
    return doc, OK


def cmd_rotations(args):
    try:
        f = parse_field(args.field)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.dimension < 2 or args.size < 1:
        raise UsageError("need --dimension >= 2 and --size >= 1")
    pool = rotation_pool(f, args.dimension, args.size)
    k = args.dimension
    out = []
    for rot in pool:
        q = rot.entries
        out.append(
            {
                "entries": rotation_strs(q),
                "orthogonal": mat_mul(transpose(q), q) == identity(k, f),
                "det": format_real(det(q)),
            }
        )
    doc = docs.envelope("rotation_pool", field=f.name, dimension=k, size=args.size, rotations=out)
    return doc, OK


# -- prop1 / core -------------------------------------------------------------------


def cmd_prop1(args):
    spec = parse_prop1(_need_config(args))
    f = spec["field"]
    weights = spec["weights"]
    rows, points = prop1_rows(spec["points"], weights, spec["target"], spec["b_range"], spec["k_range"])
    cert = prop1_force(spec["points"], weights, spec["target"], spec["b_range"], spec["k_range"])

    def lab(x):
        b, kappa = x
        return [list(b) if isinstance(b, tuple) else b, kappa]

    body = {
        "field": f.name,
        "points": [list(p) for p in spec["points"]],
        "weights": [format_complex(w) for w in weights],
        "target": list(spec["target"]),
        "b_range": [list(b) for b in spec["b_range"]],
        "k_range": list(spec["k_range"]),
        "lattice_points": [list(p) for p in points],
        "rows": [{"label": lab(r.label), "terms": [[i, format_complex(c)] for i, c in r.terms]} for r in rows],
    }
    zero = ComplexElem(0, 0, f)
    if sum(weights, zero) == 0:
        body["constant_one_satisfies_all_rows"] = all(sum((c for _, c in r.terms), zero) == 0 for r in rows)
    if cert is None:
        body.update(status="none")
        return docs.envelope("prop1_certificate", **body), INCONCLUSIVE
    body.update(
        status="forced",
        multipliers=[{"row": lab(label), "lambda": format_complex(zero + lam)} for label, lam in cert.multipliers],
        witness_points=list(cert.witness_points),
    )
    return docs.envelope("prop1_certificate", **body), OK


def cmd_core(args):
    system, names, texts = parse_gen_system(_need_config(args))
    core = infeasible_core(system)
    body = {"variables": names, "equations": texts}
    if core is None:
        body.update(status="feasible")
        return docs.envelope("infeasible_core", **body), INCONCLUSIVE
    body.update(
        status="infeasible",
        core=list(core.indices),
        core_equations=[texts[i] for i in core.indices],
        refutation=[{"equation": i, "lambda": _frac(lam)} for i, lam in core.refutation],
    )
    return docs.envelope("infeasible_core", **body), OK


# -- gallery1d ----------------------------------------------------------------------


def cmd_gallery1d(args):
    if args.points:
        try:
            a = [Fraction(x.strip()) for x in args.points.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"--points must be comma-separated rationals, got {args.points!r}") from None
    elif args.n:
        a = [Fraction(j) for j in range(1, args.n + 1)]
    else:
        raise UsageError("gallery1d needs --n N or --points a1,a2,...")
    if len(a) < 2 or len(set(a)) != len(a):
        raise UsageError("need at least two distinct points")
    n = len(a)
    consecutive = sorted(a) == [Fraction(j) for j in range(1, n + 1)]
    body = {"points": [_frac(x) for x in a], "tolerance": args.tolerance, "samples": args.samples}
    passed = True
    if consecutive:
        natural = exp_counterexample_1d(a, args.tolerance, args.samples, lam=complex(0.0, 2 * math.pi / n))
        body["natural_root"] = natural.as_dict()
        passed = passed and natural.passed
        ts = [Fraction(j, args.translations) * n - n for j in range(args.translations)]
        counts = {str(sign): sorted({steinhaus_1d_count(n, t, sign) for t in ts}) for sign in (1, -1)}
        body["steinhaus"] = {"translations": args.translations, "distinct_counts": counts}
        passed = passed and all(v == [1] for v in counts.values())
    try:
        found = exp_counterexample_1d(a, args.tolerance, args.samples)
        body["newton_root"] = found.as_dict()
        passed = passed and found.passed
    except RootNotFound as e:
        body["newton_root"] = {"error": str(e)}
        passed = False
    body["status"] = "pass" if passed else "fail"
    return docs.envelope("gallery1d", **body), OK if passed else INCONCLUSIVE


# -- entry point --------------------------------------------------------------------


COMMANDS = {
    "witness": cmd_witness,
    "verify": cmd_verify,
    "color": cmd_color,
    "transversal": cmd_transversal,
    "lemma2": cmd_lemma2,
    "rotations": cmd_rotations,
    "prop1": cmd_prop1,
    "core": cmd_core,
    "gallery1d": cmd_gallery1d,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="pompeiu", description="Exact forcing certificates for discrete Pompeiu problems.")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, config=True):
        if config:
            p.add_argument("--config", metavar="PATH", help="key = value problem file")
        p.add_argument("--out", metavar="PATH", help="write the document here instead of stdout")
        return p

    common(sub.add_parser("witness", help="search for a forcing certificate"))
    p = common(sub.add_parser("verify", help="re-check a certificate document from scratch"), config=False)
    p.add_argument("document", nargs="?", help="certificate document (JSON)")
    p.add_argument("--echo-path", action="store_true", help="record the input path in the report")
    p = common(sub.add_parser("color", help="balanced coloring of a copy system"))
    p.add_argument("--d", type=int, help="number of colors")
    p = common(sub.add_parser("transversal", help="m-transversal of a copy system"))
    p.add_argument("--m", type=int, help="points per copy")
    p = common(sub.add_parser("lemma2", help="integer relation among three powers"), config=False)
    p.add_argument("--c", type=int)
    p.add_argument("--exponents", metavar="R,S,T")
    p = common(sub.add_parser("rotations", help="list the exact rotation pool"), config=False)
    p.add_argument("--field", default="q")
    p.add_argument("--dimension", type=int, default=2)
    p.add_argument("--size", type=int, default=8)
    common(sub.add_parser("prop1", help="forcing under simple similarities of Z^k"))
    common(sub.add_parser("core", help="infeasible core of an affine system"))
    p = common(sub.add_parser("gallery1d", help="exponential and Steinhaus examples on the line"), config=False)
    p.add_argument("--n", type=int)
    p.add_argument("--points", metavar="A1,A2,...")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--translations", type=int, default=1000)
    return ap


def run(argv=None, stdout=None, stderr=None) -> int:
    """Parse ``argv``, run one subcommand, write its document; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"pompeiu: {e}", file=stderr)
        return USAGE
    except SystemExit as e:  # --help
        return OK if e.code in (0, None) else USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=stderr)
    try:
        doc, code = COMMANDS[args.command](args)
    except (UsageError, ConfigError, DocumentError) as e:
        print(f"pompeiu {args.command}: {e}", file=stderr)
        return USAGE
    except ValueError as e:
        print(f"pompeiu {args.command}: {e}", file=stderr)
        return USAGE
    except Exception as e:  # noqa: BLE001 - exit codes must stay total
        log.debug("internal failure", exc_info=True)
        print(f"pompeiu {args.command}: internal error: {e!r}", file=stderr)
        return INCONCLUSIVE
    text = docs.emit(doc)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as e:
            print(f"pompeiu: cannot write {args.out}: {e.strerror}", file=stderr)
            return USAGE
        status = doc.get("status") or doc.get("verification") or doc["kind"]
        print(f"{args.command}: {status} -> {args.out}", file=stdout)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())

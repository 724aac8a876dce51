"""Plain-text ``key = value`` problem configs.

One key per line, ``#`` starts a comment, blank lines are ignored.  Lists
use ``,`` between scalars and ``;`` between points::

    dimension = 2
    field = quad:3
    points = (0, 0); (1, 0)
    weights = 1, 1
    target = (0, 0)
    max_placements = 20
    max_points = 50
    rotation_pool_size = 8

Numbers are exact literals: ``3``, ``-1/2``, ``1/2+1/2√3`` (``sqrt3`` also
accepted) and complex weights such as ``1+2i`` or ``(1/2)+(1/2√3)i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .combinat import CopySystem
from .exactfield import ComplexElem, Field, QQ, parse_complex, parse_field, parse_real
from .geometry import Point
from .linsys import GenSystem, SparseRow
from .search import ZERO_SUM_MESSAGE, Problem, SearchBudget

__all__ = [
    "ConfigError",
    "ProblemConfig",
    "read_kv",
    "parse_problem",
    "parse_copy_system",
    "parse_prop1",
    "parse_gen_system",
    "WITNESS_KEYS",
]


class ConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


WITNESS_KEYS = (
    "dimension",
    "field",
    "points",
    "weights",
    "target",
    "max_placements",
    "max_points",
    "rotation_pool_size",
)


def read_kv(text: str, allowed) -> dict[str, tuple[str, int]]:
    """``{key: (raw value, line number)}``; unknown or repeated keys are errors."""
    out: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lower()
        if key not in allowed:
            raise ConfigError(f"unknown key {key!r} (allowed: {', '.join(sorted(allowed))})", lineno)
        if key in out:
            raise ConfigError(f"key {key!r} given twice", lineno)
        out[key] = (value, lineno)
    return out


def _int(kv, key, default=None, minimum=None) -> int | None:
    if key not in kv:
        return default
    value, line = kv[key]
    try:
        v = int(value)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {value!r}", line) from None
    if minimum is not None and v < minimum:
        raise ConfigError(f"{key} must be >= {minimum}", line)
    return v


def _field(kv) -> Field:
    if "field" not in kv:
        return QQ
    value, line = kv["field"]
    try:
        return parse_field(value)
    except ValueError as e:
        raise ConfigError(str(e), line) from None


def _split_points(value: str) -> list[list[str]]:
    pts = []
    for chunk in value.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk.startswith("(") and chunk.endswith(")"):
            chunk = chunk[1:-1]
        pts.append([c.strip() for c in chunk.split(",")])
    return pts


def _points(kv, key, f: Field, dim: int | None = None) -> list[Point]:
    value, line = kv[key]
    out = []
    try:
        for coords in _split_points(value):
            out.append(Point(tuple(parse_real(c, f) for c in coords)))
    except ValueError as e:
        raise ConfigError(f"{key}: {e}", line) from None
    if not out:
        raise ConfigError(f"{key} is empty", line)
    dims = {p.dim for p in out}
    if len(dims) != 1 or (dim is not None and dims != {dim}):
        raise ConfigError(f"{key}: points must all have dimension {dim or dims}", line)
    return out


def _weights(kv, f: Field, n: int) -> tuple[ComplexElem, ...]:
    if "weights" not in kv:
        return tuple(ComplexElem(1, 0, f) for _ in range(n))
    value, line = kv["weights"]
    try:
        ws = tuple(parse_complex(w, f) for w in value.split(",") if w.strip())
    except ValueError as e:
        raise ConfigError(f"weights: {e}", line) from None
    if len(ws) != n:
        raise ConfigError(f"{n} points but {len(ws)} weights", line)
    if not sum(ws, ComplexElem(0, 0, f)):
        raise ConfigError(ZERO_SUM_MESSAGE, line)
    return ws


@dataclass
class ProblemConfig:
    dimension: int
    field: Field
    points: tuple[Point, ...]
    weights: tuple[ComplexElem, ...]
    target: Point
    budget: SearchBudget
    options: dict = dc_field(default_factory=dict)

    def to_problem(self) -> Problem:
        return Problem(self.points, self.weights, self.target)


def parse_problem(text: str, extra_keys=()) -> ProblemConfig:
    """Parse a witness-style config.  Extra keys are returned raw in ``options``."""
    kv = read_kv(text, set(WITNESS_KEYS) | set(extra_keys))
    f = _field(kv)
    if "points" not in kv:
        raise ConfigError("missing required key 'points'")
    dim = _int(kv, "dimension", minimum=1)
    pts = _points(kv, "points", f, dim)
    dim = pts[0].dim
    ws = _weights(kv, f, len(pts))
    if "target" in kv:
        target = _points(kv, "target", f, dim)
        if len(target) != 1:
            raise ConfigError("target must be a single point", kv["target"][1])
        target = target[0]
    else:
        target = Point(tuple(f.zero() for _ in range(dim)))
    budget = SearchBudget(
        max_placements=_int(kv, "max_placements", 200, 1),
        max_points=_int(kv, "max_points", 400, 1),
        rotation_pool_size=_int(kv, "rotation_pool_size", 8, 1),
    )
    options = {k: v for k, v in kv.items() if k in extra_keys}
    return ProblemConfig(dim, f, tuple(pts), ws, target, budget, options)


def parse_copy_system(text: str, size_key: str) -> tuple[CopySystem | None, int | None, dict]:
    """Abstract instance (``point_count`` + ``copies``) or a geometric config.

    Returns ``(system or None, value of size_key or None, kv)``; when the
    system is None the caller builds copies from the geometric keys.
    """
    kv = read_kv(text, set(WITNESS_KEYS) | {"point_count", "copies", size_key})
    size = _int(kv, size_key, minimum=1)
    if "copies" not in kv:
        if "points" not in kv:
            raise ConfigError("need either 'copies' or geometric 'points'")
        return None, size, kv
    value, line = kv["copies"]
    try:
        copies = tuple(tuple(int(x) for x in chunk.replace(",", " ").split()) for chunk in value.split(";") if chunk.strip())
    except ValueError:
        raise ConfigError("copies must be ';'-separated lists of point ids", line) from None
    count = _int(kv, "point_count", minimum=0)
    if count is None:
        count = 1 + max((i for c in copies for i in c), default=-1)
    try:
        return CopySystem(count, copies), size, kv
    except ValueError as e:
        raise ConfigError(str(e), line) from None


def _lattice_list(value: str, line: int) -> list[tuple[int, ...]]:
    try:
        return [tuple(int(c) for c in coords) for coords in _split_points(value)]
    except ValueError:
        raise ConfigError(f"expected integer lattice points, got {value!r}", line) from None


def parse_prop1(text: str) -> dict:
    """Keys: points, weights, target, b_range (lattice points), k_range (ints)."""
    kv = read_kv(text, {"points", "weights", "target", "b_range", "k_range", "field"})
    for key in ("points", "b_range", "k_range"):
        if key not in kv:
            raise ConfigError(f"missing required key {key!r}")
    f = _field(kv)
    pts = _lattice_list(*kv["points"])
    # zero-sum weights are allowed here: the demo then reports that nothing is forced
    ws = _raw_weights(kv, f, len(pts))
    target = _lattice_list(*kv["target"])[0] if "target" in kv else (0,) * len(pts[0])
    b_range = _lattice_list(*kv["b_range"])
    value, line = kv["k_range"]
    try:
        k_range = [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise ConfigError("k_range must be comma-separated positive integers", line) from None
    return {"field": f, "points": pts, "weights": ws, "target": target, "b_range": b_range, "k_range": k_range}


def _raw_weights(kv, f, n):
    if "weights" not in kv:
        return tuple(ComplexElem(1, 0, f) for _ in range(n))
    value, line = kv["weights"]
    try:
        ws = tuple(parse_complex(w, f) for w in value.split(",") if w.strip())
    except ValueError as e:
        raise ConfigError(f"weights: {e}", line) from None
    if len(ws) != n:
        raise ConfigError(f"{n} points but {len(ws)} weights", line)
    return ws


_TERM_RE = re.compile(r"([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z_]\w*)?")


def _linear(expr: str, line: int) -> tuple[dict[str, Fraction], Fraction]:
    coeffs: dict[str, Fraction] = {}
    const = Fraction(0)
    pos = 0
    expr = expr.strip()
    if not expr:
        raise ConfigError("empty side of an equation", line)
    while pos < len(expr):
        m = _TERM_RE.match(expr, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ConfigError(f"cannot parse linear expression {expr!r}", line)
        sign = -1 if m.group(1) == "-" else 1
        if pos > 0 and m.group(1) is None:
            raise ConfigError(f"missing operator in {expr!r}", line)
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            coeffs[m.group(3)] = coeffs.get(m.group(3), Fraction(0)) + sign * c
        else:
            const += sign * c
        pos = m.end()
        while pos < len(expr) and expr[pos] == " ":
            pos += 1
    return coeffs, const


def parse_gen_system(text: str) -> tuple[GenSystem, list[str], list[str]]:
    """``equations = x + y = 1; x = 0`` (optionally ``variables = x, y`` to fix ids).

    Returns the system, the variable names by id, and the equation texts.
    """
    kv = read_kv(text, {"equations", "variables"})
    if "equations" not in kv:
        raise ConfigError("missing required key 'equations'")
    names: list[str] = []
    if "variables" in kv:
        names = [v.strip() for v in kv["variables"][0].split(",") if v.strip()]
    value, line = kv["equations"]
    rows = []
    texts = []
    for eq in value.split(";"):
        eq = eq.strip()
        if not eq:
            continue
        if eq.count("=") != 1:
            raise ConfigError(f"equation {eq!r} needs exactly one '='", line)
        lhs_txt, rhs_txt = eq.split("=")
        lc, lk = _linear(lhs_txt, line)
        rc, rk = _linear(rhs_txt, line)
        coeffs = dict(lc)
        for v, c in rc.items():
            coeffs[v] = coeffs.get(v, Fraction(0)) - c
        for v in coeffs:
            if v not in names:
                if "variables" in kv:
                    raise ConfigError(f"undeclared variable {v!r}", line)
                names.append(v)
        pairs = [(names.index(v), c) for v, c in coeffs.items()]
        rows.append((SparseRow.build(pairs, len(rows)), rk - lk))
        texts.append(" ".join(eq.split()))
    if not rows:
        raise ConfigError("no equations given", line)
    return GenSystem.of(rows), names, texts

from fractions import Fraction

import pytest

from pompeiu.config import ConfigError, parse_copy_system, parse_gen_system, parse_problem, parse_prop1
from pompeiu.exactfield import Field, FieldElem
from pompeiu.linsys import infeasible_core

BASE = """
dimension = 2
field = quad:3
points = (0, 0); (1, 0)
weights = 1, 1
target = (0, 0)
"""


def test_parse_problem():
    cfg = parse_problem(BASE + "max_placements = 7\n")
    assert cfg.field == Field(3) and cfg.dimension == 2
    assert cfg.budget.max_placements == 7 and cfg.budget.max_points == 400
    prob = cfg.to_problem()
    assert prob.n == 2


def test_surd_coordinate():
    cfg = parse_problem(BASE.replace("(1, 0)", "(1/2+1/2√3, 0)"))
    assert cfg.points[1].coords[0] == FieldElem(Fraction(1, 2), Fraction(1, 2), Field(3))


def test_zero_sum_weights_rejected_with_line():
    with pytest.raises(ConfigError) as e:
        parse_problem(BASE.replace("weights = 1, 1", "weights = 1, -1"))
    assert e.value.line == 5
    assert "constant function" in str(e.value) and "!= 0" in str(e.value)


@pytest.mark.parametrize(
    "bad,line",
    [
        ("field = quad:4", 3),
        ("points = (0, 0); (1/, 0)", 4),
        ("colour = 2", 7),
        ("dimension = two", 2),
        ("weights = 1, 1, 1", 5),
        ("points = (0, 0); (1, 0, 0)", 4),
    ],
)
def test_errors_carry_line_numbers(bad, line):
    text = BASE
    key = bad.split("=")[0].strip()
    lines = text.split("\n")
    replaced = False
    for i, l in enumerate(lines):
        if l.startswith(key + " "):
            lines[i] = bad
            replaced = True
    if not replaced:
        lines.insert(line - 1, bad)
    with pytest.raises(ConfigError) as e:
        parse_problem("\n".join(lines))
    assert e.value.line == line


def test_comments_and_defaults():
    cfg = parse_problem("# a comment\npoints = 0, 0; 1, 0   # trailing\n")
    assert cfg.field == Field() and cfg.target.coords == (0, 0)
    assert all(w == 1 for w in cfg.weights)


def test_duplicate_key():
    with pytest.raises(ConfigError, match="twice"):
        parse_problem("points = 0, 0\npoints = 1, 0\n")


def test_copy_system_config():
    sys, size, _ = parse_copy_system("copies = 0 1; 1 2; 2 0\ncolors = 2\n", "colors")
    assert sys.point_count == 3 and size == 2
    with pytest.raises(ConfigError):
        parse_copy_system("copies = 0 1; 1 2 3\n", "colors")
    sys, _, kv = parse_copy_system("points = (0, 0); (1, 0)\n", "m")
    assert sys is None and "points" in kv


def test_prop1_config_allows_zero_sum():
    spec = parse_prop1("points = 0; 1\nweights = 1, -1\nb_range = 0; 1\nk_range = 1, 2\n")
    assert spec["target"] == (0,) and spec["k_range"] == [1, 2]


def test_gen_system():
    sys, names, texts = parse_gen_system("equations = x + y = 1; 2x - 1/2 y = 0; x = 3 - y\n")
    assert names == ["x", "y"]
    (r0, b0), (r1, b1), (r2, b2) = sys.rows
    assert r0.terms == ((0, 1), (1, 1)) and b0 == 1
    assert r1.terms == ((0, 2), (1, Fraction(-1, 2))) and b1 == 0
    assert r2.terms == ((0, 1), (1, 1)) and b2 == 3
    assert infeasible_core(sys).indices == (0, 2)
    with pytest.raises(ConfigError):
        parse_gen_system("equations = x + = 1\n")
    with pytest.raises(ConfigError):
        parse_gen_system("variables = x\nequations = x + y = 1\n")

import cmath
import math

import pytest

from pompeiu.gallery1d import copy_residual, exp_counterexample_1d, find_exp_root


@pytest.mark.parametrize("n", range(2, 9))
def test_natural_root(n):
    rep = exp_counterexample_1d(range(1, n + 1), lam=complex(0, 2 * math.pi / n))
    assert rep.passed and rep.max_residual < 1e-9
    # the exponent without the imaginary unit does not annihilate the copies
    assert rep.real_exponent_residual > 1


def test_pair_root_is_i_pi():
    lam = find_exp_root([0, 1])
    assert abs(cmath.exp(lam) + 1) < 1e-12
    rep = exp_counterexample_1d([0, 1], lam=complex(0, math.pi))
    assert rep.max_residual < 1e-12


@pytest.mark.parametrize("n", [2, 3])
def test_root_finder(n):
    rep = exp_counterexample_1d(range(1, n + 1))
    assert rep.passed and rep.max_residual < 1e-9


def test_symmetric_set_reflections():
    rep = exp_counterexample_1d([-1, 0, 1])
    assert rep.symmetric and rep.reflection_residual is not None
    assert rep.passed and rep.reflection_residual < 1e-9


def test_rational_points():
    rep = exp_counterexample_1d(["0", "1/2", "3/2"])
    assert rep.passed


def test_too_few_points():
    with pytest.raises(ValueError):
        exp_counterexample_1d([1])


def test_residual_definition():
    assert copy_residual([0, 1], complex(0, math.pi), [0.0, 1.5]) < 1e-12
    assert copy_residual([0, 1], complex(0, 1.0), [0.0]) == pytest.approx(abs(1 + cmath.exp(1j)))


def test_deterministic():
    assert exp_counterexample_1d([0, 1, 3]).as_dict() == exp_counterexample_1d([0, 1, 3]).as_dict()

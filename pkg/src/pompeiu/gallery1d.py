"""One-dimensional counterexamples: exponentials ``f(x) = exp(lam x)`` whose
sum over every translate of ``K = {a_1, ..., a_n}`` vanishes.

``lam`` must be a root of ``g(z) = sum_j exp(a_j z)``.  For ``K = {1..n}``
the root ``2 pi i / n`` works; note the imaginary unit, a purely real
exponent ``2 pi / n`` does not annihilate anything (the report records that
residual too).  This is the only floating-point code in the package.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

__all__ = [
    "ExpReport",
    "RootNotFound",
    "find_exp_root",
    "copy_residual",
    "exp_counterexample_1d",
]


class RootNotFound(RuntimeError):
    """Newton iteration failed from every grid start."""


@dataclass
class ExpReport:
    lam_re: float
    lam_im: float
    max_residual: float
    reflection_residual: float | None
    symmetric: bool
    real_exponent_residual: float | None
    tolerance: float
    samples: int
    passed: bool

    @property
    def lam(self) -> complex:
        return complex(self.lam_re, self.lam_im)

    def as_dict(self) -> dict:
        return asdict(self)


def _g(a: np.ndarray, z: complex) -> tuple[complex, complex, float]:
    terms = np.exp(a * z)
    return complex(terms.sum()), complex((a * terms).sum()), float(np.abs(terms).sum())


def find_exp_root(a: Sequence, tolerance: float = 1e-12, max_iter: int = 100) -> complex:
    """Newton's method on ``sum_j exp(a_j z)`` from a fixed grid of starts.

    Starts run over ``Re z`` in {0, +-0.5, +-1} and ``Im z`` in 0.5, 1, ..., 10;
    the first start whose iteration reaches relative residual below
    ``tolerance`` wins.
    """
    arr = np.array([float(Fraction(x)) for x in a])
    if len(arr) < 2:
        raise ValueError("need at least two points")
    for im in np.arange(0.5, 10.01, 0.5):
        for re in (0.0, 0.5, -0.5, 1.0, -1.0):
            z = complex(re, im)
            for _ in range(max_iter):
                g, dg, scale = _g(arr, z)
                if abs(g) <= tolerance * scale:
                    return z
                if dg == 0 or not cmath.isfinite(z):
                    break
                z = z - g / dg
                if abs(z) > 1e6:
                    break
    raise RootNotFound(f"Newton did not converge for a={list(a)}")


def copy_residual(a: Sequence, lam: complex, translations: Sequence[float], reflect: bool = False) -> float:
    """``max_t |sum_j exp(lam (t +- a_j))| / |exp(lam t)|``."""
    arr = np.array([float(Fraction(x)) for x in a])
    sgn = -1.0 if reflect else 1.0
    worst = 0.0
    for t in translations:
        s = np.exp(lam * (t + sgn * arr)).sum()
        worst = max(worst, abs(s) / abs(cmath.exp(lam * t)))
    return float(worst)


def exp_counterexample_1d(
    a: Sequence,
    tolerance: float = 1e-9,
    samples: int = 100,
    lam: complex | None = None,
) -> ExpReport:
    """Find (or take) ``lam`` and measure how well ``exp(lam x)`` kills every copy.

    Translations are ``samples`` evenly spaced values in [-5, 5].  For a
    symmetric K the reflected copies ``t - K`` are checked as well.
    """
    fa = sorted(Fraction(x) for x in a)
    if len(fa) < 2:
        raise ValueError("need at least two points")
    if lam is None:
        lam = find_exp_root(fa)
    ts = np.linspace(-5.0, 5.0, samples)
    res = copy_residual(fa, lam, ts)
    symmetric = fa == sorted(-x for x in fa)
    refl = copy_residual(fa, lam, ts, reflect=True) if symmetric else None
    real_res = None
    n = len(fa)
    if fa == [Fraction(j) for j in range(1, n + 1)]:
        real_res = copy_residual(fa, complex(2 * math.pi / n, 0.0), ts)
    passed = res < tolerance and (refl is None or refl < tolerance)
    return ExpReport(
        lam_re=float(lam.real),
        lam_im=float(lam.imag),
        max_residual=res,
        reflection_residual=refl,
        symmetric=symmetric,
        real_exponent_residual=real_res,
        tolerance=tolerance,
        samples=samples,
        passed=passed,
    )

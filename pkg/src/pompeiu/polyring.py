"""Integer polynomials, Q[x]/(p) quotient rings, and the integer relations
among powers of a root of ``c x^2 + x + c``.

Polynomials are stored lowest degree first.  Intermediate arithmetic is over
Fractions; denominators are cleared only when an integer vector is wanted.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "IntPolynomial",
    "QuotElem",
    "primitive_part",
    "has_rational_root",
    "poly_divmod",
    "quot_power",
    "lemma2_relation",
    "relation_quotient",
]


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Element of Z[x]; ``coeffs[i]`` multiplies ``x**i``.  Zero is ``()``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(c, int) for c in self.coeffs):
            raise TypeError("IntPolynomial coefficients must be int")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> IntPolynomial:
        return cls(tuple(coeffs))

    @classmethod
    def monomial_sum(cls, terms: dict[int, int]) -> IntPolynomial:
        """Build from ``{exponent: coefficient}``."""
        if not terms:
            return cls(())
        out = [0] * (max(terms) + 1)
        for e, c in terms.items():
            out[e] += c
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if e == 1 else f"x^{e}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def primitive_part(p: IntPolynomial) -> tuple[int, IntPolynomial]:
    """Split ``p`` into positive content and primitive part (sign stays with the part).

    >>> primitive_part(IntPolynomial.of(6, 2, 4))
    (2, IntPolynomial(coeffs=(3, 1, 2)))
    """
    if p.is_zero():
        raise ValueError("primitive part of the zero polynomial is undefined")
    g = 0
    for c in p.coeffs:
        g = math.gcd(g, c)
    return g, IntPolynomial(tuple(c // g for c in p.coeffs))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f * f != n:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def has_rational_root(p: IntPolynomial) -> Fraction | None:
    """Return a rational root of ``p`` if there is one.

    Candidates are ``+-u/v`` with ``u | p(0)`` and ``v | lead(p)``.  Among the
    roots, the one with smallest ``|num| + |den|`` is returned, positive first.
    """
    if p.degree < 1:
        raise ValueError("rational-root test needs a polynomial of degree >= 1")
    if p.coeffs[0] == 0:
        return Fraction(0)
    candidates = set()
    for u in _divisors(p.coeffs[0]):
        for v in _divisors(p.leading):
            candidates.add(Fraction(u, v))
    best = None
    for r in sorted(candidates, key=lambda q: (q.numerator + q.denominator, q)):
        for cand in (r, -r):
            if p(cand) == 0:
                key = (abs(cand.numerator) + cand.denominator, cand < 0)
                if best is None or key < best[0]:
                    best = (key, cand)
        if best is not None:
            break
    return None if best is None else best[1]


def poly_divmod(num: Sequence, den: Sequence) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Exact long division over Q of coefficient sequences (lowest degree first)."""
    den = _trim(Fraction(c) for c in den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in _trim(num)]
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return (), tuple(rem)
    quo = [Fraction(0)] * (len(rem) - dd)
    lead = den[-1]
    for shift in range(len(rem) - 1 - dd, -1, -1):
        coef = rem[shift + dd] / lead
        quo[shift] = coef
        if coef:
            for i, dc in enumerate(den):
                rem[shift + i] -= coef * dc
    return _trim(quo), _trim(rem[:dd])


@functools.lru_cache(maxsize=256)
def _check_modulus(p: IntPolynomial) -> None:
    if p.degree < 2:
        raise ValueError(f"quotient modulus must have degree >= 2, got {p}")
    # for degree 2 and 3 a rational root is the only way to be reducible;
    # for higher degrees this is only a necessary condition
    if has_rational_root(p) is not None:
        raise ValueError(f"modulus {p} is reducible over Q")


@dataclass(frozen=True)
class QuotElem:
    """Element of Q[x]/(p); ``coeffs`` has exactly ``deg p`` entries."""

    coeffs: tuple[Fraction, ...]
    modulus: IntPolynomial

    def __post_init__(self):
        n = self.modulus.degree
        c = tuple(Fraction(x) for x in self.coeffs)
        if len(c) > n:
            _, c = poly_divmod(c, self.modulus.coeffs)
        c = tuple(c) + (Fraction(0),) * (n - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def one(cls, modulus: IntPolynomial) -> QuotElem:
        return cls((Fraction(1),), modulus)

    def _same(self, other: QuotElem):
        if other.modulus != self.modulus:
            raise ValueError("quotient elements with different moduli")

    def __add__(self, other: QuotElem) -> QuotElem:
        self._same(other)
        return QuotElem(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.modulus)

    def __sub__(self, other: QuotElem) -> QuotElem:
        self._same(other)
        return QuotElem(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.modulus)

    def scale(self, k) -> QuotElem:
        return QuotElem(tuple(k * a for a in self.coeffs), self.modulus)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._same(other)
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return QuotElem(tuple(prod), self.modulus)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def quot_power(e: int, p: IntPolynomial) -> QuotElem:
    """``x**e`` reduced modulo ``p`` (square and multiply)."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    _check_modulus(p)
    result = QuotElem.one(p)
    base = QuotElem((Fraction(0), Fraction(1)), p)
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


@functools.lru_cache(maxsize=256)
def _power_table(p: IntPolynomial, top: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced ``x^0 .. x^top`` by repeated multiplication with x."""
    n = p.degree
    lead = Fraction(p.leading)
    out = [(Fraction(1),) + (Fraction(0),) * (n - 1)]
    for _ in range(top):
        prev = out[-1]
        spill = prev[-1]
        shifted = (Fraction(0),) + prev[:-1]
        out.append(tuple(a - spill * pc / lead for a, pc in zip(shifted, p.coeffs)))
    return tuple(out)


def lemma2_relation(c: int, r: int, s: int, t: int) -> tuple[int, int, int]:
    """Integer triple with ``n1 a^r + n2 a^s + n3 a^t = 0`` for a root a of ``c x^2 + x + c``.

    The reduced powers are vectors in the 2-dimensional space Q[x]/(p), so the
    three of them satisfy one linear relation; it is the cross product of the
    two coordinate rows.  The triple is made primitive and normalized so that
    ``n3 > 0`` (or ``n2 > 0`` when ``n3 == 0``).  Its sum is prime to ``c``.
    """
    if c <= 1:
        raise ValueError("c must be an integer > 1")
    if not 0 <= r < s < t:
        raise ValueError("exponents must satisfy 0 <= r < s < t")
    p = IntPolynomial.of(c, 1, c)
    _check_modulus(p)
    table = _power_table(p, t)
    u, v, w = table[r], table[s], table[t]
    # kernel of [[u0 v0 w0], [u1 v1 w1]]
    n = (v[0] * w[1] - w[0] * v[1], w[0] * u[1] - u[0] * w[1], u[0] * v[1] - v[0] * u[1])
    if not any(n):
        raise ArithmeticError("reduced powers are collinear; x^(s-r) would be rational")
    lcm = 1
    for q in n:
        lcm = lcm * q.denominator // math.gcd(lcm, q.denominator)
    ints = IntPolynomial(tuple(int(q * lcm) for q in n))
    content, prim = primitive_part(ints)
    n1, n2, n3 = prim.coeffs + (0,) * (3 - len(prim.coeffs))
    if n3 < 0 or (n3 == 0 and n2 < 0):
        n1, n2, n3 = -n1, -n2, -n3
    return n1, n2, n3


def relation_quotient(c: int, exps: tuple[int, int, int], ns: tuple[int, int, int]) -> IntPolynomial:
    """The cofactor ``q`` with ``n1 x^r + n2 x^s + n3 x^t = (c x^2 + x + c) q(x)``.

    Raises ``ArithmeticError`` if the division leaves a remainder or ``q`` is
    not integral; both would contradict the relation or Gauss's lemma.
    """
    rel = IntPolynomial.monomial_sum(dict(zip(exps, ns)))
    quo, rem = poly_divmod(rel.coeffs, (c, 1, c))
    if rem:
        raise ArithmeticError(f"{rel} is not divisible by {c}x^2 + x + {c}")
    if any(q.denominator != 1 for q in quo):
        raise ArithmeticError("cofactor is not integral")
    return IntPolynomial(tuple(int(q) for q in quo))

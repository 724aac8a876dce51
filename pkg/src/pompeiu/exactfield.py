"""Exact scalars: rationals, one real quadratic extension Q(sqrt d), and
their complexification.

Rationals are plain ``fractions.Fraction``.  A :class:`Field` names the
tower (``Q`` or ``Q(sqrt d)``); every :class:`FieldElem` carries its field
and arithmetic between two different fields raises :class:`FieldMismatchError`.
Python ints and Fractions are lifted silently into whatever field they meet.

Literal syntax (used by configs and documents)::

    3   -1/2   1/2+1/2√3   -√3   2/3√5   1/2-3√3      (real, √ or "sqrt")
    1+2i   -i   (1/2+1/2√3)+(1)i                      (complex)
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = [
    "Field",
    "FieldElem",
    "ComplexElem",
    "FieldMismatchError",
    "QQ",
    "is_squarefree",
    "parse_field",
    "parse_real",
    "parse_complex",
    "format_real",
    "format_complex",
]


class FieldMismatchError(ValueError):
    """Two scalars from different field descriptors were combined."""


def is_squarefree(d: int) -> bool:
    d = abs(d)
    if d == 0:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class Field:
    """Field descriptor.  ``d=None`` is Q; otherwise Q(sqrt d), d >= 2 squarefree."""

    d: int | None = None

    def __post_init__(self):
        if self.d is None:
            return
        if not isinstance(self.d, int) or self.d < 2 or not is_squarefree(self.d):
            # negative d would make re^2 + im^2 vanish for nonzero complex
            # scalars, so only real extensions are allowed
            raise ValueError(f"quadratic field needs a squarefree integer d >= 2, got {self.d!r}")

    @property
    def is_rational(self) -> bool:
        return self.d is None

    @property
    def name(self) -> str:
        return "q" if self.d is None else f"quad:{self.d}"

    def __str__(self):
        return "Q" if self.d is None else f"Q(√{self.d})"

    def __call__(self, a=0, b=0) -> FieldElem:
        return FieldElem(a, b, self)

    def zero(self) -> FieldElem:
        return FieldElem(0, 0, self)

    def one(self) -> FieldElem:
        return FieldElem(1, 0, self)

    def sqrt_d(self) -> FieldElem:
        if self.d is None:
            raise ValueError("Q has no surd generator")
        return FieldElem(0, 1, self)


QQ = Field()

Scalar = Union[int, Fraction, "FieldElem"]


class FieldElem:
    """``a + b*sqrt(d)`` with rational a, b (b == 0 over Q).  Immutable."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a=0, b=0, field: Field = QQ):
        a = Fraction(a)
        b = Fraction(b)
        if field.d is None and b:
            raise ValueError("nonzero surd part in Q")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> FieldElem | None:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Rational)):
            return FieldElem(other, 0, self.field)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElem(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.field.d is None:
            return FieldElem(self.a * o.a, 0, self.field)
        d = self.field.d
        return FieldElem(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __neg__(self):
        return FieldElem(-self.a, -self.b, self.field)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> FieldElem:
        """Galois conjugate ``a - b*sqrt(d)``."""
        return FieldElem(self.a, -self.b, self.field)

    def norm(self) -> Fraction:
        """``a^2 - d*b^2``; zero only for the zero element."""
        if self.field.d is None:
            return self.a * self.a
        return self.a * self.a - self.field.d * self.b * self.b

    def inv(self) -> FieldElem:
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        n = self.norm()
        return FieldElem(self.a / n, -self.b / n, self.field)

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(d), decided exactly."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with d*b^2
        diff = a * a - self.field.d * b * b
        return (1 if a > 0 else -1) if diff > 0 else (1 if b > 0 else -1)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __float__(self):
        if self.field.d is None:
            return float(self.a)
        return float(self.a) + float(self.b) * math.sqrt(self.field.d)

    # -- comparison / hashing -----------------------------------------------

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.field.d))

    def is_rational(self) -> bool:
        return not self.b

    def __repr__(self):
        return f"FieldElem({format_real(self)!r}, {self.field.name})"

    def __str__(self):
        return format_real(self)


class ComplexElem:
    """``re + i*im`` with re, im in one real field.  Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0, field: Field | None = None):
        if field is None:
            field = re.field if isinstance(re, FieldElem) else im.field if isinstance(im, FieldElem) else QQ
        re = re if isinstance(re, FieldElem) else FieldElem(re, 0, field)
        im = im if isinstance(im, FieldElem) else FieldElem(im, 0, field)
        if re.field != field or im.field != field:
            raise FieldMismatchError(f"complex parts live in {re.field} and {im.field}, expected {field}")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexElem is immutable")

    @property
    def field(self) -> Field:
        return self.re.field

    def _coerce(self, other) -> ComplexElem | None:
        if isinstance(other, ComplexElem):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return ComplexElem(other, 0, self.field)
        if isinstance(other, (int, Rational)):
            return ComplexElem(other, 0, self.field)
        if isinstance(other, complex):
            # only exact Gaussian integers/rationals are accepted from Python complex
            if other.real.is_integer() and other.imag.is_integer():
                return ComplexElem(int(other.real), int(other.imag), self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexElem(self.re + o.re, self.im + o.im, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexElem(self.re - o.re, self.im - o.im, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return ComplexElem(self.re * o.re, 0, self.field)
        return ComplexElem(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
            self.field,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __neg__(self):
        return ComplexElem(-self.re, -self.im, self.field)

    def __pos__(self):
        return self

    def conjugate(self) -> ComplexElem:
        return ComplexElem(self.re, -self.im, self.field)

    def abs2(self) -> FieldElem:
        return self.re * self.re + self.im * self.im

    def inv(self) -> ComplexElem:
        if not self:
            raise ZeroDivisionError("inverse of zero complex element")
        if not self.im:
            return ComplexElem(self.re.inv(), 0, self.field)
        # the field is real, so re^2 + im^2 > 0 for nonzero input
        n = self.abs2().inv()
        return ComplexElem(self.re * n, -self.im * n, self.field)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexElem({format_complex(self)!r}, {self.field.name})"

    def __str__(self):
        return format_complex(self)


def as_complex(x, field: Field) -> ComplexElem:
    """Lift an int, Fraction, FieldElem or ComplexElem into ``field``'s complexification."""
    if isinstance(x, ComplexElem):
        if x.field != field:
            raise FieldMismatchError(f"expected {field}, got {x.field}")
        return x
    if isinstance(x, FieldElem):
        if x.field != field:
            raise FieldMismatchError(f"expected {field}, got {x.field}")
        return ComplexElem(x, 0, field)
    if isinstance(x, str):
        return parse_complex(x, field)
    return ComplexElem(x, 0, field)


def as_real(x, field: Field) -> FieldElem:
    if isinstance(x, FieldElem):
        if x.field != field:
            raise FieldMismatchError(f"expected {field}, got {x.field}")
        return x
    if isinstance(x, str):
        return parse_real(x, field)
    return FieldElem(x, 0, field)


# -- literals ---------------------------------------------------------------

_RAT = r"\d+(?:/\d+)?"
_REAL_RE = re.compile(
    rf"^(?P<a>[+-]?{_RAT})?"
    rf"(?:(?P<bsign>[+-])?(?P<b>{_RAT})?(?:√|sqrt)\(?(?P<d>\d+)\)?(?P<bden>/\d+)?)?$"
)


def parse_field(text: str) -> Field:
    """``q`` / ``Q`` / ``quad:3`` / ``quad 3`` / ``quad(3)``."""
    t = text.strip().lower()
    if t in ("q", "rational", "rationals"):
        return QQ
    m = re.fullmatch(r"quad\s*[:( ]\s*(-?\d+)\s*\)?", t)
    if not m:
        raise ValueError(f"unknown field {text!r} (expected 'q' or 'quad:<d>')")
    return Field(int(m.group(1)))


def parse_real(text: str, field: Field) -> FieldElem:
    """Parse ``p/q``, ``p/q+r/s√d``, ``-√3/2`` and friends into ``field``."""
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty number")
    m = _REAL_RE.fullmatch(t)
    if not m or (m.group("a") is None and m.group("d") is None):
        raise ValueError(f"malformed number {text!r}")
    a_txt, b_txt, bsign = m.group("a"), m.group("b"), m.group("bsign")
    if m.group("d") is not None and bsign is None and a_txt is not None:
        # "2/3√5" or "-√3": the leading rational is the surd coefficient
        if b_txt is not None:
            raise ValueError(f"malformed number {text!r}")
        a_txt, b_txt = None, a_txt.lstrip("+")
        if b_txt.startswith("-"):
            bsign, b_txt = "-", b_txt[1:]
    a = Fraction(a_txt) if a_txt else Fraction(0)
    b = Fraction(0)
    if m.group("d") is not None:
        d = int(m.group("d"))
        if field.d is None:
            raise FieldMismatchError(f"surd √{d} in {text!r} but the field is Q")
        if d != field.d:
            raise FieldMismatchError(f"surd √{d} in {text!r} but the field is {field}")
        b = Fraction(b_txt) if b_txt else Fraction(1)
        if m.group("bden"):
            b /= int(m.group("bden")[1:])
        if bsign == "-":
            b = -b
    return FieldElem(a, b, field)


def _split_complex(t: str) -> tuple[str, str]:
    """Split ``re+imi`` at the last top-level sign; returns (re, im) texts."""
    body = t[:-1]
    depth = 0
    cut = None
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and body[i - 1] not in "+-(":
            cut = i
    if cut is None:
        return "", body
    return body[:cut], body[cut:]


def _strip_parens(s: str) -> str:
    s = s.strip()
    sign = ""
    if s[:1] in "+-" and s[1:2] == "(":
        sign, s = s[0], s[1:]
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
        if sign == "-":
            return f"-({s})"
    return s


def _parse_signed_real(s: str, field: Field) -> FieldElem:
    s = s.strip()
    if s.startswith("-(") and s.endswith(")"):
        return -parse_real(s[2:-1], field)
    if s.startswith("+"):
        s = s[1:]
    return parse_real(s, field)


def parse_complex(text: str, field: Field) -> ComplexElem:
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty number")
    if not t.endswith("i"):
        return ComplexElem(_parse_signed_real(_strip_parens(t), field), 0, field)
    re_txt, im_txt = _split_complex(t)
    im_txt = _strip_parens(im_txt)
    if im_txt in ("", "+"):
        im = field.one()
    elif im_txt == "-":
        im = -field.one()
    else:
        im = _parse_signed_real(im_txt, field)
    re_val = _parse_signed_real(_strip_parens(re_txt), field) if re_txt else field.zero()
    return ComplexElem(re_val, im, field)


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_real(x: FieldElem) -> str:
    """Canonical literal: ``a``, ``b√d`` or ``a±b√d`` with fraction strings."""
    if not x.b:
        return _frac(x.a)
    surd = f"{_frac(abs(x.b))}√{x.field.d}"
    if not x.a:
        return surd if x.b > 0 else "-" + surd
    return f"{_frac(x.a)}{'+' if x.b > 0 else '-'}{surd}"


def format_complex(z: ComplexElem) -> str:
    if not z.im:
        return format_real(z.re)
    im = format_real(z.im)
    im_part = f"({im})i"
    if not z.re:
        return im_part
    return f"({format_real(z.re)})+{im_part}"

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pompeiu.exactfield import (
    QQ,
    ComplexElem,
    Field,
    FieldElem,
    FieldMismatchError,
    format_complex,
    format_real,
    is_squarefree,
    parse_complex,
    parse_field,
    parse_real,
)

from conftest import complex_elems, field_elems, fields

Q3 = Field(3)


def test_conjugate_product():
    x = FieldElem(Fraction(1, 2), Fraction(1, 2), Q3)
    assert x * x.conjugate() == Fraction(-1, 2)


def test_rational_inverse():
    assert FieldElem(Fraction(3, 7)).inv() == Fraction(7, 3)


def test_i_squared():
    i = ComplexElem(0, 1, QQ)
    assert i * i == ComplexElem(-1, 0, QQ)


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        FieldElem(0, 0, Q3).inv()
    with pytest.raises(ZeroDivisionError):
        ComplexElem(0, 0, Q3).inv()


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        FieldElem(1, 1, Field(2)) + FieldElem(1, 1, Q3)
    with pytest.raises(FieldMismatchError):
        ComplexElem(1, 0, Field(2)) * ComplexElem(1, 0, Q3)


@pytest.mark.parametrize("d", [0, 1, 4, 12, -1])
def test_bad_discriminant(d):
    with pytest.raises(ValueError):
        Field(d)


def test_squarefree():
    assert [d for d in range(2, 20) if is_squarefree(d)] == [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]


def test_exact_sign_near_zero():
    # 1393/985 sits about 3.6e-7 below sqrt 2; the sign must still be exact
    x = FieldElem(Fraction(1393, 985), -1, Field(2))
    assert x.sign() == -1
    y = FieldElem(Fraction(1393, 985) + Fraction(1, 10**6), -1, Field(2))
    assert y.sign() == 1
    assert FieldElem(Fraction(1393, 985), -1, Field(2)) < 0 < y


@pytest.mark.parametrize(
    "text,a,b",
    [
        ("1/2+1/2√3", Fraction(1, 2), Fraction(1, 2)),
        ("-√3/2", 0, Fraction(-1, 2)),
        ("2/3√3", 0, Fraction(2, 3)),
        ("sqrt3", 0, 1),
        ("1-sqrt(3)", 1, -1),
        ("-5/4", Fraction(-5, 4), 0),
    ],
)
def test_parse_real(text, a, b):
    assert parse_real(text, Q3) == FieldElem(a, b, Q3)


@pytest.mark.parametrize("text", ["", "1/", "abc", "1/2+", "√"])
def test_parse_real_rejects(text):
    with pytest.raises(ValueError):
        parse_real(text, Q3)


def test_surd_in_wrong_field():
    with pytest.raises(FieldMismatchError):
        parse_real("√3", QQ)
    with pytest.raises(FieldMismatchError):
        parse_real("√2", Q3)


@pytest.mark.parametrize(
    "text,re,im",
    [
        ("1+2i", 1, 2),
        ("-i", 0, -1),
        ("i", 0, 1),
        ("(1/2)+(1/2√3)i", Fraction(1, 2), FieldElem(0, Fraction(1, 2), Q3)),
        ("3", 3, 0),
        ("(-1√3)i", 0, FieldElem(0, -1, Q3)),
    ],
)
def test_parse_complex(text, re, im):
    assert parse_complex(text, Q3) == ComplexElem(re, im, Q3)


def test_parse_field():
    assert parse_field("q") == QQ
    assert parse_field("quad:3") == Q3
    assert parse_field("quad(5)").d == 5
    with pytest.raises(ValueError):
        parse_field("quad:4")
    with pytest.raises(ValueError):
        parse_field("cubic:2")


@given(field_elems())
def test_inverse_property(x):
    if x:
        assert x * x.inv() == 1


@given(complex_elems())
def test_complex_inverse_property(z):
    if z:
        assert z * z.inv() == ComplexElem(1, 0, z.field)


@given(fields.flatmap(lambda f: st.tuples(field_elems(f), field_elems(f), field_elems(f))))
def test_field_axioms(t):
    x, y, z = t
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x - x == 0


@given(field_elems())
def test_sign_matches_float(x):
    f = float(x)
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)


@given(field_elems())
def test_real_literal_roundtrip(x):
    s = format_real(x)
    assert parse_real(s, x.field) == x
    assert format_real(parse_real(s, x.field)) == s


@given(complex_elems())
def test_complex_literal_roundtrip(z):
    s = format_complex(z)
    assert parse_complex(s, z.field) == z
    assert format_complex(parse_complex(s, z.field)) == s


@given(field_elems(), field_elems())
def test_hash_consistent_with_eq(x, y):
    if x.field == y.field and x == y:
        assert hash(x) == hash(y)

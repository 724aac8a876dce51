from fractions import Fraction
import itertools

import pytest
from hypothesis import given, strategies as st

from pompeiu.exactfield import QQ, Field, FieldElem, FieldMismatchError
from pompeiu.geometry import (
    Point,
    PointStore,
    RigidMotion,
    RotationMatrix,
    UnitComplex,
    anchored_motion_2d,
    apply_motion,
    cayley_rotation,
    det,
    embed_planar_rotation,
    gamma,
    identity,
    intern,
    mat_mul,
    point,
    realize_placement,
    squared_distance,
    transpose,
)

Q3 = Field(3)
SIXTY = ((FieldElem(Fraction(1, 2), 0, Q3), FieldElem(0, Fraction(-1, 2), Q3)),
         (FieldElem(0, Fraction(1, 2), Q3), FieldElem(Fraction(1, 2), 0, Q3)))


def is_rotation(q, f):
    k = len(q)
    return mat_mul(transpose(q), q) == identity(k, f) and det(q) == 1


def test_gamma_values():
    assert gamma(1) == UnitComplex(0, 1)
    assert gamma(2) == UnitComplex(Fraction(-3, 5), Fraction(4, 5))
    assert gamma(3) == UnitComplex(Fraction(-4, 5), Fraction(3, 5))
    with pytest.raises(ValueError):
        gamma(0)


def test_cayley_examples():
    q = cayley_rotation([1], 2)
    assert q.entries == tuple(tuple(FieldElem(x) for x in row) for row in ((0, 1), (-1, 0)))
    assert cayley_rotation([0, 0, 0], 3) == RotationMatrix.identity(3)
    m = 4
    col0 = (q := cayley_rotation([m], 2)).entries[0][0], q.entries[1][0]
    assert col0 == (Fraction(1 - m * m, 1 + m * m), Fraction(-2 * m, 1 + m * m))


@pytest.mark.parametrize("m", [1, 2, 3, 7, 100])
def test_cayley_is_gamma_transposed(m):
    assert cayley_rotation([m], 2) == embed_planar_rotation(gamma(m), 0, 1, 2).T


def test_embed_examples():
    q = embed_planar_rotation(gamma(1), 0, 1, 3)
    assert q.apply(point(QQ, 1, 0, 0).coords) == point(QQ, 0, 1, 0).coords
    assert q.apply(point(QQ, 0, 0, 5).coords) == point(QQ, 0, 0, 5).coords
    q = embed_planar_rotation(gamma(2), 0, 2, 3)
    assert sorted(set(x.a for row in q.entries for x in row)) == [Fraction(-4, 5), Fraction(-3, 5), 0, Fraction(4, 5), 1]
    assert is_rotation(q.entries, QQ)
    assert embed_planar_rotation(UnitComplex(1, 0), 1, 2, 4) == RotationMatrix.identity(4)
    with pytest.raises(ValueError):
        embed_planar_rotation(gamma(1), 1, 1, 3)
    with pytest.raises(ValueError):
        embed_planar_rotation(gamma(1), 0, 3, 3)


def test_rotation_rejects_reflection_and_skew():
    with pytest.raises(ValueError):
        RotationMatrix(((FieldElem(1), FieldElem(0)), (FieldElem(0), FieldElem(-1))))
    with pytest.raises(ValueError):
        RotationMatrix(((FieldElem(1), FieldElem(1)), (FieldElem(0), FieldElem(1))))


def test_apply_motion_examples():
    p = point(QQ, 3, -2)
    assert apply_motion(RigidMotion.identity(2), p) == p
    rot = embed_planar_rotation(gamma(1), 0, 1, 2)
    assert apply_motion(RigidMotion(rot, point(QQ, 0, 0)), point(QQ, 1, 0)) == point(QQ, 0, 1)
    m = RigidMotion(embed_planar_rotation(gamma(2), 0, 1, 2), point(QQ, 1, 0))
    assert apply_motion(m, point(QQ, 1, 0)) == point(QQ, Fraction(2, 5), Fraction(4, 5))
    with pytest.raises(ValueError):
        apply_motion(m, point(QQ, 1, 0, 0))
    with pytest.raises(FieldMismatchError):
        apply_motion(m, point(Q3, 1, 0))


def test_intern_exact():
    store = PointStore(Q3)
    a = intern(store, point(Q3, "1/2", "1/2√3"))
    rot = RotationMatrix(SIXTY)
    b = intern(store, apply_motion(RigidMotion(rot, point(Q3, 0, 0)), point(Q3, 1, 0)))
    assert a == b == 0
    store = PointStore(QQ)
    x = intern(store, point(QQ, 1, 0))
    y = intern(store, point(QQ, 1 + Fraction(1, 10**40), 0))
    assert (x, y) == (0, 1) and len(store) == 2


def test_realize_placement_examples():
    base = [point(QQ, 0, 0), point(QQ, 1, 0)]
    store = PointStore(QQ)
    assert realize_placement(base, RigidMotion.identity(2), store).image_ids == (0, 1)
    pl = realize_placement(base, RigidMotion(embed_planar_rotation(gamma(1), 0, 1, 2), point(QQ, 0, 0)), store)
    assert store[pl.image_ids[1]] == point(QQ, 0, 1)
    base3 = [point(Q3, 0, 0), point(Q3, 1, 0)]
    store3 = PointStore(Q3)
    pl = realize_placement(base3, RigidMotion(RotationMatrix(SIXTY), point(Q3, 0, 0)), store3)
    assert [store3[i] for i in pl.image_ids] == [point(Q3, 0, 0), point(Q3, "1/2", "1/2√3")]


def test_anchored_examples():
    base = [point(QQ, 0, 0), point(QQ, 1, 0)]
    m = anchored_motion_2d(base, 0, 1, point(QQ, 0, 0), point(QQ, 0, 1))
    assert m.rotation == embed_planar_rotation(gamma(1), 0, 1, 2)
    assert m.translation == point(QQ, 0, 0)
    assert anchored_motion_2d(base, 0, 1, point(QQ, 0, 0), point(QQ, 2, 0)) is None
    base3 = [point(Q3, 0, 0), point(Q3, 1, 0)]
    m = anchored_motion_2d(base3, 0, 1, point(Q3, 0, 0), point(Q3, "1/2", "1/2√3"))
    assert m.rotation == RotationMatrix(SIXTY)
    with pytest.raises(ValueError):
        anchored_motion_2d(base, 0, 0, point(QQ, 0, 0), point(QQ, 0, 1))
    with pytest.raises(ValueError):
        anchored_motion_2d([point(QQ, 1, 1), point(QQ, 1, 1)], 0, 1, point(QQ, 0, 0), point(QQ, 0, 0))


def test_gamma_distinct_small():
    vals = {gamma(k) for k in range(1, 500)}
    assert len(vals) == 499


@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_cayley_3d_is_rotation(params):
    q = cayley_rotation(params, 3)
    assert is_rotation(q.entries, QQ)


@given(st.lists(st.fractions(max_denominator=5, min_value=-3, max_value=3), min_size=6, max_size=6))
def test_cayley_4d_rational_params(params):
    assert is_rotation(cayley_rotation(params, 4).entries, QQ)


coords = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@given(st.integers(1, 30), st.tuples(coords, coords), st.lists(st.tuples(coords, coords), min_size=2, max_size=4))
def test_placement_preserves_distances(k, t, pts):
    base = [point(QQ, *p) for p in pts]
    m = RigidMotion(embed_planar_rotation(gamma(k), 0, 1, 2), point(QQ, *t))
    store = PointStore(QQ)
    for a in base:
        intern(store, a)
    pl = realize_placement(base, m, store)
    for i, j in itertools.combinations(range(len(base)), 2):
        assert squared_distance(store[pl.image_ids[i]], store[pl.image_ids[j]]) == squared_distance(base[i], base[j])


@given(st.integers(1, 50), st.tuples(coords, coords), st.tuples(coords, coords), st.tuples(coords, coords))
def test_anchored_roundtrip(k, a1, a2, p):
    base = [point(QQ, *a1), point(QQ, *a2)]
    if base[0] == base[1]:
        return
    # image of the base under a known motion gives an exactly matching pair
    m0 = RigidMotion(embed_planar_rotation(gamma(k), 0, 1, 2), point(QQ, *p))
    pp, qq = apply_motion(m0, base[0]), apply_motion(m0, base[1])
    m = anchored_motion_2d(base, 0, 1, pp, qq)
    assert apply_motion(m, base[0]) == pp and apply_motion(m, base[1]) == qq
    assert m == m0


@given(st.integers(1, 20), st.integers(1, 20), st.tuples(coords, coords), st.tuples(coords, coords))
def test_compose_and_inverse(k1, k2, t1, t2):
    m1 = RigidMotion(embed_planar_rotation(gamma(k1), 0, 1, 2), point(QQ, *t1))
    m2 = RigidMotion(embed_planar_rotation(gamma(k2), 0, 1, 2), point(QQ, *t2))
    p = point(QQ, 1, 2)
    assert m1.compose(m2)(p) == m1(m2(p))
    assert m1.inverse()(m1(p)) == p

"""Exact rigid motions of k-space over a field descriptor, point interning and
realized placements of the base tuple.

Rotation matrices act on column vectors: ``phi(x) = Q x + t``.  A unit
complex number ``u = re + i*im`` becomes the planar block ``[[re, -im],
[im, re]]`` (counterclockwise by arg u).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

from .exactfield import Field, FieldElem, FieldMismatchError, QQ, as_real

__all__ = [
    "Point",
    "UnitComplex",
    "RotationMatrix",
    "RigidMotion",
    "PointStore",
    "Placement",
    "point",
    "gamma",
    "surd_unit",
    "cayley_rotation",
    "embed_planar_rotation",
    "apply_motion",
    "realize_placement",
    "anchored_motion_2d",
    "squared_distance",
    "det",
]

Matrix = tuple[tuple[FieldElem, ...], ...]


@dataclass(frozen=True)
class Point:
    coords: tuple[FieldElem, ...]

    def __post_init__(self):
        if not self.coords:
            raise ValueError("a point needs at least one coordinate")
        f = self.coords[0].field
        if any(c.field != f for c in self.coords):
            raise FieldMismatchError("point coordinates from different fields")

    @property
    def field(self) -> Field:
        return self.coords[0].field

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __add__(self, other: Point) -> Point:
        _same_dim(self, other)
        return Point(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Point) -> Point:
        _same_dim(self, other)
        return Point(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def point(field: Field, *coords) -> Point:
    """``point(QQ, 0, 1)`` or ``point(Field(3), "1/2", "1/2√3")``."""
    return Point(tuple(as_real(c, field) for c in coords))


def _same_dim(p: Point, q: Point):
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")


def squared_distance(p: Point, q: Point) -> FieldElem:
    diff = p - q
    return sum((c * c for c in diff.coords), diff.field.zero())


# -- matrices ------------------------------------------------------------------


def identity(k: int, f: Field) -> Matrix:
    one, zero = f.one(), f.zero()
    return tuple(tuple(one if i == j else zero for j in range(k)) for i in range(k))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), row[0].field.zero()) for col in bt) for row in a)


def mat_vec(a: Matrix, v: Sequence[FieldElem]) -> tuple[FieldElem, ...]:
    return tuple(sum((x * y for x, y in zip(row, v)), row[0].field.zero()) for row in a)


def det(m: Matrix) -> FieldElem:
    """Determinant by Gaussian elimination over the field."""
    k = len(m)
    rows = [list(r) for r in m]
    f = rows[0][0].field
    result = f.one()
    for col in range(k):
        piv = next((r for r in range(col, k) if rows[r][col]), None)
        if piv is None:
            return f.zero()
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            result = -result
        p = rows[col][col]
        result = result * p
        for r in range(col + 1, k):
            if rows[r][col]:
                factor = rows[r][col] / p
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return result


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises ``ZeroDivisionError`` if singular."""
    k = len(m)
    f = m[0][0].field
    ident = identity(k, f)
    rows = [list(m[i]) + list(ident[i]) for i in range(k)]
    for col in range(k):
        piv = next((r for r in range(col, k) if rows[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col].inv()
        rows[col] = [x * p for x in rows[col]]
        for r in range(k):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(r[k:]) for r in rows)


@dataclass(frozen=True)
class UnitComplex:
    """Rational point (re, im) of the unit circle."""

    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))
        if self.re * self.re + self.im * self.im != 1:
            raise ValueError(f"({self.re}, {self.im}) is not on the unit circle")

    def __mul__(self, other: UnitComplex) -> UnitComplex:
        return UnitComplex(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    def conjugate(self) -> UnitComplex:
        return UnitComplex(self.re, -self.im)


def gamma(k: int) -> UnitComplex:
    """The rational unit vector ``((1 - k^2) + 2k i) / (1 + k^2)``."""
    if k < 1:
        raise ValueError("gamma needs k >= 1")
    den = 1 + k * k
    return UnitComplex(Fraction(1 - k * k, den), Fraction(2 * k, den))


def surd_unit(s: Fraction, f: Field) -> tuple[FieldElem, FieldElem]:
    """Unit vector ``(x, y*sqrt d)`` from the rational parameter ``s``.

    Stereographic projection of the ellipse ``x^2 + d y^2 = 1`` from (-1, 0):
    ``x = (1 - d s^2)/(1 + d s^2)``, ``y = 2s/(1 + d s^2)``.
    """
    if f.d is None:
        raise ValueError("surd rotations need a quadratic field")
    s = Fraction(s)
    den = 1 + f.d * s * s
    return FieldElem((1 - f.d * s * s) / den, 0, f), FieldElem(0, 2 * s / den, f)


@dataclass(frozen=True)
class RotationMatrix:
    """k x k matrix over one field with ``Q^T Q = I`` and ``det Q = 1`` (checked)."""

    entries: Matrix

    def __post_init__(self):
        m = self.entries
        k = len(m)
        if k == 0 or any(len(r) != k for r in m):
            raise ValueError("rotation matrix must be square and nonempty")
        f = m[0][0].field
        if any(x.field != f for r in m for x in r):
            raise FieldMismatchError("rotation entries from different fields")
        if mat_mul(transpose(m), m) != identity(k, f):
            raise ValueError("matrix is not orthogonal")
        if det(m) != 1:
            raise ValueError("orthogonal matrix has determinant -1 (reflection)")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def field(self) -> Field:
        return self.entries[0][0].field

    @classmethod
    def identity(cls, k: int, f: Field = QQ) -> RotationMatrix:
        return cls(identity(k, f))

    def __matmul__(self, other: RotationMatrix) -> RotationMatrix:
        return RotationMatrix(mat_mul(self.entries, other.entries))

    @property
    def T(self) -> RotationMatrix:
        return RotationMatrix(transpose(self.entries))

    def apply(self, v: Sequence[FieldElem]) -> tuple[FieldElem, ...]:
        return mat_vec(self.entries, v)


def embed_planar_rotation(u, i: int, j: int, k: int, f: Field = QQ) -> RotationMatrix:
    """Identity except the (i, j) plane, which carries the rotation by ``u``.

    ``u`` is a :class:`UnitComplex` or a pair ``(re, im)`` of field elements.
    Column i is ``re e_i + im e_j``, column j is ``-im e_i + re e_j``.
    """
    if not (0 <= i < j < k):
        raise ValueError(f"need 0 <= i < j < k, got i={i}, j={j}, k={k}")
    if isinstance(u, UnitComplex):
        re, im = as_real(u.re, f), as_real(u.im, f)
    else:
        re, im = (as_real(x, f) for x in u)
    rows = [list(r) for r in identity(k, f)]
    rows[i][i] = re
    rows[j][j] = re
    rows[j][i] = im
    rows[i][j] = -im
    return RotationMatrix(tuple(tuple(r) for r in rows))


def cayley_rotation(params: Sequence, k: int, f: Field = QQ) -> RotationMatrix:
    """``(I - A)^-1 (I + A)`` for the skew matrix with upper triangle ``params``.

    ``params`` lists ``A[i][j]`` for ``i < j`` in row-major order
    (``k(k-1)/2`` values).  For k = 2 and parameter m this is the transpose of
    the planar rotation by ``gamma(m)``.
    """
    expected = k * (k - 1) // 2
    if len(params) != expected:
        raise ValueError(f"need {expected} skew parameters for k={k}, got {len(params)}")
    a = [[f.zero()] * k for _ in range(k)]
    it = iter(params)
    for i in range(k):
        for j in range(i + 1, k):
            v = as_real(next(it), f)
            a[i][j] = v
            a[j][i] = -v
    ident = identity(k, f)
    minus = tuple(tuple(ident[i][j] - a[i][j] for j in range(k)) for i in range(k))
    plus = tuple(tuple(ident[i][j] + a[i][j] for j in range(k)) for i in range(k))
    return RotationMatrix(mat_mul(inverse(minus), plus))


@dataclass(frozen=True)
class RigidMotion:
    rotation: RotationMatrix
    translation: Point

    def __post_init__(self):
        if self.rotation.dim != self.translation.dim:
            raise ValueError("rotation and translation dimensions differ")
        if self.rotation.field != self.translation.field:
            raise FieldMismatchError("rotation and translation fields differ")

    @classmethod
    def identity(cls, k: int, f: Field = QQ) -> RigidMotion:
        return cls(RotationMatrix.identity(k, f), Point(tuple(f.zero() for _ in range(k))))

    @property
    def dim(self) -> int:
        return self.rotation.dim

    def __call__(self, p: Point) -> Point:
        return apply_motion(self, p)

    def compose(self, other: RigidMotion) -> RigidMotion:
        """``self after other``."""
        rot = self.rotation @ other.rotation
        return RigidMotion(rot, apply_motion(self, other.translation))

    def inverse(self) -> RigidMotion:
        rt = self.rotation.T
        t = rt.apply(self.translation.coords)
        return RigidMotion(rt, Point(tuple(-x for x in t)))


def apply_motion(m: RigidMotion, p: Point) -> Point:
    if p.dim != m.dim:
        raise ValueError(f"motion acts on dimension {m.dim}, point has {p.dim}")
    if p.field != m.rotation.field:
        raise FieldMismatchError(f"point in {p.field}, motion in {m.rotation.field}")
    q = m.rotation.apply(p.coords)
    return Point(tuple(x + t for x, t in zip(q, m.translation.coords)))


@dataclass
class PointStore:
    """Exact interning of points to dense ids, in insertion order."""

    field: Field = QQ
    _ids: dict = dc_field(default_factory=dict)
    _points: list = dc_field(default_factory=list)

    def intern(self, p: Point) -> int:
        if p.field != self.field:
            raise FieldMismatchError(f"store holds {self.field}, point is in {p.field}")
        pid = self._ids.get(p)
        if pid is None:
            pid = len(self._points)
            self._ids[p] = pid
            self._points.append(p)
        return pid

    def lookup(self, p: Point) -> int | None:
        return self._ids.get(p)

    def __getitem__(self, pid: int) -> Point:
        return self._points[pid]

    def __len__(self):
        return len(self._points)

    def __contains__(self, p: Point) -> bool:
        return p in self._ids

    def points(self) -> list[Point]:
        return list(self._points)


def intern(store: PointStore, p: Point) -> int:
    return store.intern(p)


@dataclass(frozen=True)
class Placement:
    motion: RigidMotion
    image_ids: tuple[int, ...]


def realize_placement(base: Sequence[Point], m: RigidMotion, store: PointStore) -> Placement:
    """Apply ``m`` to every base point and intern the images."""
    ids = tuple(store.intern(apply_motion(m, a)) for a in base)
    return Placement(m, ids)


def anchored_motion_2d(base: Sequence[Point], j1: int, j2: int, p: Point, q: Point) -> RigidMotion | None:
    """The rigid motion of the plane with ``base[j1] -> p`` and ``base[j2] -> q``.

    Returns None when ``|p - q|`` differs from ``|base[j1] - base[j2]|``.
    """
    if j1 == j2:
        raise ValueError("anchor indices must differ")
    a1, a2 = base[j1], base[j2]
    if a1.dim != 2 or p.dim != 2 or q.dim != 2:
        raise ValueError("anchored motions are planar")
    v = a2 - a1
    w = q - p
    vv = squared_distance(a2, a1)
    if not vv:
        raise ValueError("anchor points coincide")
    if squared_distance(q, p) != vv:
        return None
    (vx, vy), (wx, wy) = v.coords, w.coords
    cos = (vx * wx + vy * wy) / vv
    sin = (vx * wy - vy * wx) / vv
    rot = RotationMatrix(((cos, -sin), (sin, cos)))
    t = Point(tuple(pc - rc for pc, rc in zip(p.coords, rot.apply(a1.coords))))
    return RigidMotion(rot, t)

"""Exact 3-space primitives: points, Plücker lines, planes, triangles,
quadrics, and the incidence predicates built on them.

Scalars are ``fractions.Fraction`` except where a construction lands in a
quadratic extension, in which case components are ``QuadExt`` over a common
radicand.  Everything here is a pure value; all operations are reentrant.

Lines are held as (direction, moment) 6-vectors with moment = p x dir for
any point p on the line, so dir . moment = 0 identically and two lines meet
(possibly at infinity) exactly when their side product vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

from .exact import Q, QuadExt, parse_rational, quad_sign
from .linalg import kernel_basis

Scalar = Union[Fraction, QuadExt]
Vec3 = tuple  # 3-tuple of scalars


class DegenerateInput(ValueError):
    """Input violates a constructor's non-degeneracy requirement."""


class DegenerateConfiguration(ValueError):
    """A geometric operation received a configuration it cannot resolve."""


class CoincidentLines(ValueError):
    """Two lines expected to be distinct are projectively equal."""


class PreconditionError(ValueError):
    """Caller violated a documented operation precondition."""


class InternalInconsistency(RuntimeError):
    """An invariant that should be unreachable failed; indicates a bug."""


class InputError(ValueError):
    """Malformed external input; ``field`` names the offending location."""

    def __init__(self, message: str, field: str):
        super().__init__(f"{field}: {message}")
        self.field = field


# ---------------------------------------------------------------------------
# vector helpers (work uniformly over Fraction and QuadExt components)

def vec(x, y, z) -> Vec3:
    return (Q(x), Q(y), Q(z))


def v_add(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def v_sub(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def v_scale(s, u: Vec3) -> Vec3:
    return (s * u[0], s * u[1], s * u[2])


def dot(u: Vec3, v: Vec3):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec3, v: Vec3) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def is_zero_vec(u: Vec3) -> bool:
    return not (u[0] or u[1] or u[2])


# ---------------------------------------------------------------------------
# lines

@dataclass(frozen=True)
class PluckerLine:
    """A line as a projective (direction, moment) pair.

    ``dir`` is zero exactly for lines at infinity; those are legal values
    (they arise as transversal solutions) but carry no affine points.
    """

    dir: Vec3
    moment: Vec3

    @staticmethod
    def from_points(p: Vec3, q: Vec3) -> "PluckerLine":
        if p == q:
            raise DegenerateInput(f"coincident points {p}")
        d = v_sub(q, p)
        return PluckerLine(d, cross(p, d))

    @property
    def is_affine(self) -> bool:
        return not is_zero_vec(self.dir)

    def sixvec(self) -> tuple:
        return self.dir + self.moment

    def point_on(self) -> Vec3:
        """The point of the line closest to the origin (affine lines only)."""
        if not self.is_affine:
            raise DegenerateInput("line at infinity has no affine points")
        d2 = dot(self.dir, self.dir)
        return v_scale(1 / d2, cross(self.dir, self.moment))

    def plucker_product(self):
        """dir . moment; zero for every actual line (the quadric relation)."""
        return dot(self.dir, self.moment)


def plucker_from_points(p: Vec3, q: Vec3) -> PluckerLine:
    return PluckerLine.from_points(p, q)


def line_from_param(p0: Vec3, direction: Vec3) -> PluckerLine:
    """Line through p0 with the given direction vector."""
    if is_zero_vec(direction):
        raise DegenerateInput("zero direction")
    return PluckerLine(tuple(direction), cross(p0, direction))


def side(l1: PluckerLine, l2: PluckerLine):
    """Reciprocal Plücker pairing; zero iff the lines are coplanar."""
    return dot(l1.dir, l2.moment) + dot(l2.dir, l1.moment)


def canonical_sixvec(line: PluckerLine) -> tuple:
    """Projective normal form: the 6-vector scaled so its first nonzero
    component is 1 (division inside the line's own scalar field)."""
    v = line.sixvec()
    lead = next((c for c in v if c), None)
    if lead is None:
        raise DegenerateInput("zero Plücker vector")
    return tuple(c / lead for c in v)


def line_key(line: PluckerLine) -> tuple:
    """Hashable exact identity of the projective line, valid across
    different quadratic extensions."""
    return tuple(QuadExt.of(c)._key() for c in canonical_sixvec(line))


def lines_projectively_equal(l1: PluckerLine, l2: PluckerLine) -> bool:
    u = l1.sixvec()
    v = l2.sixvec()
    lead_u = next((i for i, c in enumerate(u) if c), None)
    lead_v = next((i for i, c in enumerate(v) if c), None)
    if lead_u != lead_v:
        return False
    uu = [c / u[lead_u] for c in u]
    vv = [c / v[lead_v] for c in v]
    return all(QuadExt.of(a) == QuadExt.of(b) for a, b in zip(uu, vv))


def on_line(point_h: tuple, line: PluckerLine) -> bool:
    """Membership of a homogeneous point (w, x, y, z) on an affine line."""
    w, xyz = point_h[0], point_h[1:]
    if w:
        p = v_scale(1 / w, xyz)
        return cross(p, line.dir) == line.moment
    return is_zero_vec(cross(xyz, line.dir))


# ---------------------------------------------------------------------------
# planes

@dataclass(frozen=True)
class Plane:
    """Locus normal . p = offset with a nonzero rational normal."""

    normal: Vec3
    offset: Fraction

    def evaluate(self, p: Vec3):
        return dot(self.normal, p) - self.offset

    def contains(self, p: Vec3) -> bool:
        return self.evaluate(p) == 0


def plane_through_points(a: Vec3, b: Vec3, c: Vec3) -> Plane:
    n = cross(v_sub(b, a), v_sub(c, a))
    if is_zero_vec(n):
        raise DegenerateInput("collinear points span no plane")
    return Plane(n, dot(n, a))


def plane4_through_line_point(line: PluckerLine, point_h: tuple) -> tuple:
    """Homogeneous plane 4-vector (e, n) through a line and a point.

    The plane is { (w, p) : e*w + n.p = 0 }; the zero vector comes back
    exactly when the point lies on the line.
    """
    w, p = point_h[0], point_h[1:]
    n = v_add(cross(line.dir, p), v_scale(w, line.moment))
    e = -dot(line.moment, p)
    return (e,) + n


def plane_through_line_point(line: PluckerLine, p: Vec3) -> Plane:
    e, *n = plane4_through_line_point(line, (Q(1),) + tuple(p))
    n = tuple(n)
    if is_zero_vec(n) and e == 0:
        raise DegenerateInput("point lies on the line")
    return Plane(n, -e)


def plane_pair_line(p1: tuple, p2: tuple) -> PluckerLine:
    """Intersection line of two homogeneous planes (e, nx, ny, nz)."""
    e1, n1 = p1[0], p1[1:]
    e2, n2 = p2[0], p2[1:]
    d = cross(n1, n2)
    m = v_sub(v_scale(e1, n2), v_scale(e2, n1))
    if is_zero_vec(d) and is_zero_vec(m):
        raise DegenerateInput("planes coincide")
    return PluckerLine(d, m)


def line_line_intersection(l1: PluckerLine, l2: PluckerLine) -> Vec3 | None:
    """Affine intersection point of two coplanar distinct lines, or None
    when they are parallel.  Caller guarantees side(l1, l2) == 0."""
    w = cross(l1.dir, l2.dir)
    if is_zero_vec(w):
        return None
    p = l1.point_on()
    rhs = v_sub(l2.moment, cross(p, l2.dir))
    k = next(i for i in range(3) if w[i])
    t = rhs[k] / w[k]
    return v_add(p, v_scale(t, l1.dir))


# ---------------------------------------------------------------------------
# triangles and edges

@dataclass(frozen=True)
class Edge:
    """Closed segment of a triangle with its supporting line.

    ``owner`` is the 1-based index of the triangle inside a quadruple (0 for
    free-standing edges) and ``label`` the 1-based edge index.
    """

    p: Vec3
    q: Vec3
    support: PluckerLine
    owner: int = 0
    label: int = 0

    @staticmethod
    def between(p: Vec3, q: Vec3, owner: int = 0, label: int = 0) -> "Edge":
        return Edge(p, q, PluckerLine.from_points(p, q), owner, label)

    @property
    def direction(self) -> Vec3:
        return v_sub(self.q, self.p)


class Triangle:
    """Convex hull of three distinct non-collinear points.

    Edge k (label k+1) joins vertex k to vertex (k+1) mod 3.
    """

    __slots__ = ("v0", "v1", "v2", "plane", "edges", "index")

    def __init__(self, v0: Vec3, v1: Vec3, v2: Vec3, index: int = 0):
        n = cross(v_sub(v1, v0), v_sub(v2, v0))
        if is_zero_vec(n):
            raise DegenerateInput("triangle vertices are collinear")
        self.v0, self.v1, self.v2 = v0, v1, v2
        self.plane = Plane(n, dot(n, v0))
        self.index = index
        verts = (v0, v1, v2)
        self.edges = tuple(
            Edge.between(verts[k], verts[(k + 1) % 3], owner=index, label=k + 1)
            for k in range(3)
        )

    @property
    def vertices(self) -> tuple:
        return (self.v0, self.v1, self.v2)

    def __repr__(self):
        return f"Triangle({self.v0}, {self.v1}, {self.v2})"


# ---------------------------------------------------------------------------
# incidence predicates

class StabResult(Enum):
    NO = 0
    YES = 1
    COPLANAR = 2


def stab(e: Edge, t: Triangle) -> StabResult:
    """Does the supporting line of ``e`` meet the open interior of ``t``?

    A line lying inside the triangle's plane is reported as COPLANAR, a
    distinct outcome the caller must handle (it is neither a strict hit nor
    a clean miss).
    """
    line = e.support
    n = t.plane.normal
    denom = dot(n, line.dir)
    p0 = line.point_on()
    if denom == 0:
        if t.plane.contains(p0):
            return StabResult.COPLANAR
        return StabResult.NO
    s = (t.plane.offset - dot(n, p0)) / denom
    y = v_add(p0, v_scale(s, line.dir))
    verts = t.vertices
    for k in range(3):
        a, b = verts[k], verts[(k + 1) % 3]
        if dot(cross(v_sub(b, a), v_sub(y, a)), n) <= 0:
            return StabResult.NO
    return StabResult.YES


def stabs(e: Edge, t: Triangle) -> bool:
    return stab(e, t) is StabResult.YES


def line_meets_segment_param(line: PluckerLine, e: Edge):
    """Intersection parameter of a line with a closed segment.

    The line must be coplanar with (side == 0) and distinct from the edge's
    supporting line.  Returns tau with intersection p + tau*(q - p) when
    0 <= tau <= 1 (vertices included), None for a miss or parallel lines.
    """
    sup = e.support
    if side(line, sup) != 0:
        raise PreconditionError("lines are not coplanar")
    if lines_projectively_equal(line, sup):
        raise CoincidentLines("line coincides with the segment's support")
    w = cross(e.direction, line.dir)
    if is_zero_vec(w):
        return None
    rhs = v_sub(line.moment, cross(e.p, line.dir))
    k = next(i for i in range(3) if w[i])
    tau = QuadExt.of(rhs[k]) / QuadExt.of(w[k])
    if quad_sign(tau) >= 0 and quad_sign(QuadExt.of(1) - tau) >= 0:
        return tau
    return None


def line_hits_edge(line: PluckerLine, e: Edge) -> bool:
    """Closed-segment hit test via sign tests only (no field division).

    Coincident supporting lines count as a hit: a line containing the whole
    segment certainly meets it.
    """
    sup = e.support
    w = cross(e.direction, line.dir)
    if is_zero_vec(w):
        return lines_projectively_equal(line, sup)
    rhs = v_sub(line.moment, cross(e.p, line.dir))
    k = next(i for i in range(3) if w[i])
    den = QuadExt.of(w[k])
    num = QuadExt.of(rhs[k])
    sd = quad_sign(den)
    sn = quad_sign(num)
    if sn * sd < 0:
        return False
    return quad_sign(den - num) * sd >= 0


# ---------------------------------------------------------------------------
# quadrics

MONOMIAL_ORDER = ("w2", "wx", "wy", "wz", "x2", "xy", "xz", "y2", "yz", "z2")


@dataclass(frozen=True)
class Quadric:
    """Quadratic form on homogeneous (w, x, y, z), coefficients in the
    fixed order w2, wx, wy, wz, x2, xy, xz, y2, yz, z2."""

    coeffs: tuple

    def evaluate(self, point_h: tuple):
        w, x, y, z = point_h
        c = self.coeffs
        return (
            c[0] * w * w + c[1] * w * x + c[2] * w * y + c[3] * w * z
            + c[4] * x * x + c[5] * x * y + c[6] * x * z
            + c[7] * y * y + c[8] * y * z + c[9] * z * z
        )

    def contains_line(self, line: PluckerLine) -> bool:
        p = line.point_on()
        pts = [p, v_add(p, line.dir), v_add(p, v_scale(Q(2), line.dir))]
        return all(self.evaluate((Q(1),) + tuple(x)) == 0 for x in pts)


def _monomial_row(point_h: tuple) -> list:
    w, x, y, z = point_h
    return [w * w, w * x, w * y, w * z, x * x, x * y, x * z, y * y, y * z, z * z]


def quadric_through_three_lines(
    l1: PluckerLine, l2: PluckerLine, l3: PluckerLine
) -> Quadric:
    """The unique quadric containing three pairwise skew lines.

    Solved from the 9x10 homogeneous system of three points per line; a
    degree-2 form vanishing at three points of a line vanishes on it.
    """
    lines = (l1, l2, l3)
    for i in range(3):
        for j in range(i + 1, 3):
            if side(lines[i], lines[j]) == 0:
                raise DegenerateConfiguration(
                    f"input lines {i + 1} and {j + 1} are coplanar"
                )
    rows = []
    for line in lines:
        p = line.point_on()
        for k in range(3):
            pt = v_add(p, v_scale(Q(k), line.dir))
            rows.append(_monomial_row((Q(1),) + tuple(pt)))
    rank, basis = kernel_basis(rows)
    if len(basis) != 1:
        raise InternalInconsistency(
            f"quadric system has kernel dimension {len(basis)}, expected 1"
        )
    return Quadric(tuple(Q(c) for c in basis[0]))


def quadrics_proportional(q1: Quadric, q2: Quadric) -> bool:
    u, v = q1.coeffs, q2.coeffs
    lead = next((i for i in range(10) if u[i] or v[i]), None)
    if lead is None:
        return True
    if not (u[lead] and v[lead]):
        return False
    return all(u[lead] * v[j] == v[lead] * u[j] for j in range(10))


# ---------------------------------------------------------------------------
# quadruple JSON schema

def _coord_from_json(value, field: str) -> Fraction:
    if isinstance(value, bool):
        raise InputError("coordinate must be an integer or string", field)
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except ValueError as exc:
            raise InputError(str(exc), field) from None
    raise InputError(
        f"coordinate must be an integer, a decimal string, or 'p/q', "
        f"got {type(value).__name__}",
        field,
    )


def triangles_from_json(data) -> list[Triangle]:
    """Parse the quadruple schema {"triangles": [[[x,y,z] x3] x4]}."""
    if not isinstance(data, dict) or "triangles" not in data:
        raise InputError("missing key", "triangles")
    tris = data["triangles"]
    if not isinstance(tris, list) or len(tris) != 4:
        raise InputError("expected a list of 4 triangles", "triangles")
    out = []
    for i, tri in enumerate(tris):
        path = f"triangles[{i}]"
        if not isinstance(tri, list) or len(tri) != 3:
            raise InputError("expected 3 vertices", path)
        verts = []
        for j, vtx in enumerate(tri):
            vpath = f"{path}[{j}]"
            if not isinstance(vtx, list) or len(vtx) != 3:
                raise InputError("expected [x, y, z]", vpath)
            verts.append(
                tuple(
                    _coord_from_json(vtx[k], f"{vpath}[{k}]") for k in range(3)
                )
            )
        try:
            out.append(Triangle(*verts, index=i + 1))
        except DegenerateInput as exc:
            raise InputError(str(exc), path) from None
    return out


def triangles_to_json(triangles: Sequence[Triangle]) -> dict:
    return {
        "triangles": [
            [[str(c) for c in v] for v in t.vertices] for t in triangles
        ]
    }

"""The four-line transversal problem, solved exactly.

A transversal X must satisfy four linear side conditions plus the quadric
relation dir . moment = 0.  The kernel of the 4x6 side system generically
has dimension 2; restricting the quadric relation to that plane gives a
binary quadratic whose discriminant classifies the outcome: two real
transversals, one double (tangential) line, a complex-conjugate pair, or
infinitely many.

Real solutions are returned with coordinates in Q(sqrt(D)); lines at
infinity among them are kept (they matter for general-position analysis)
and flagged via ``PluckerLine.is_affine``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact import Q, QuadExt
from .geometry import (
    DegenerateConfiguration,
    InternalInconsistency,
    PluckerLine,
    Quadric,
    cross,
    dot,
    is_zero_vec,
    lines_projectively_equal,
    on_line,
    plane4_through_line_point,
    plane_pair_line,
    quadric_through_three_lines,
    side,
    v_add,
    v_scale,
)
from .linalg import kernel_basis


class OracleNotApplicable(ValueError):
    """The quadric-route solver needs a pairwise skew first triple."""


class TransversalKind(Enum):
    NO_REAL = "no_real"        # two complex-conjugate solutions
    ONE_DOUBLE = "one_double"  # tangential contact, multiplicity 2
    TWO_REAL = "two_real"
    INFINITE = "infinite"


@dataclass(frozen=True)
class TransversalResult:
    kind: TransversalKind
    lines: tuple = ()
    discriminant: Fraction = Q(0)
    kernel_dim: int = 2
    quad_vanished: bool = False

    @property
    def real_lines(self) -> tuple:
        return self.lines


def _plucker_row(line: PluckerLine) -> list:
    # side(X, l) is linear in X = (dir, moment): coefficients (m_l, d_l)
    return list(line.moment) + list(line.dir)


def _form(v: list) -> int:
    # dir . moment on an integer 6-vector
    return v[0] * v[3] + v[1] * v[4] + v[2] * v[5]


def _polar(u: list, v: list) -> int:
    return (
        u[0] * v[3] + u[1] * v[4] + u[2] * v[5]
        + v[0] * u[3] + v[1] * u[4] + v[2] * u[5]
    )


def _line_from_sixvec(v) -> PluckerLine:
    return PluckerLine((v[0], v[1], v[2]), (v[3], v[4], v[5]))


def _combine(a_coef, av: list, b_coef, bv: list) -> PluckerLine:
    six = tuple(a_coef * av[i] + b_coef * bv[i] for i in range(6))
    return _line_from_sixvec(six)


def _root_lines(s: int, p_a: int, disc: int, av: list, bv: list) -> tuple:
    """Both roots of p_a*t^2 + s*t + p_b = 0 as lines alpha*A + B, scaled by
    2*p_a so coordinates stay fraction-free.  Root 0 takes +sqrt(disc)."""
    r = math.isqrt(disc)
    if r * r == disc:
        return (
            _combine(Q(-s + r), av, Q(2 * p_a), bv),
            _combine(Q(-s - r), av, Q(2 * p_a), bv),
        )
    plus = QuadExt(-s, 1, disc)
    minus = QuadExt(-s, -1, disc)
    return (
        _combine(plus, av, QuadExt(2 * p_a), bv),
        _combine(minus, av, QuadExt(2 * p_a), bv),
    )


def transversals(
    l1: PluckerLine, l2: PluckerLine, l3: PluckerLine, l4: PluckerLine
) -> TransversalResult:
    """Classify and compute the common transversals of four lines."""
    rows = [_plucker_row(l) for l in (l1, l2, l3, l4)]
    rank, basis = kernel_basis(rows)
    kern_dim = 6 - rank
    if kern_dim < 2:
        raise InternalInconsistency("side system has full rank 5+")
    if kern_dim > 2:
        return TransversalResult(TransversalKind.INFINITE, kernel_dim=kern_dim)
    av, bv = basis
    p_a = _form(av)
    p_b = _form(bv)
    s = _polar(av, bv)
    if p_a == 0 and p_b == 0 and s == 0:
        # the whole kernel plane sits inside the quadric of lines
        return TransversalResult(
            TransversalKind.INFINITE, kernel_dim=2, quad_vanished=True
        )
    disc = s * s - 4 * p_a * p_b
    if p_a == 0:
        # A itself is a line: root (1:0) degenerates the usual formula
        if s == 0:
            return TransversalResult(
                TransversalKind.ONE_DOUBLE,
                (_line_from_sixvec([Q(c) for c in av]),),
                Q(0),
                2,
            )
        lines = (
            _line_from_sixvec([Q(c) for c in av]),
            _combine(Q(-p_b), av, Q(s), bv),
        )
        return TransversalResult(TransversalKind.TWO_REAL, lines, Q(disc), 2)
    if disc == 0:
        line = _combine(Q(-s), av, Q(2 * p_a), bv)
        return TransversalResult(TransversalKind.ONE_DOUBLE, (line,), Q(0), 2)
    if disc < 0:
        return TransversalResult(TransversalKind.NO_REAL, (), Q(disc), 2)
    lines = _root_lines(s, p_a, disc, av, bv)
    return TransversalResult(TransversalKind.TWO_REAL, lines, Q(disc), 2)


# ---------------------------------------------------------------------------
# independent geometric route: quadric through the first three lines

def _transversal_through_point(point_h: tuple, lines) -> PluckerLine:
    """The line through a point meeting two of the three given skew lines
    (it automatically meets the third when the point lies on their quadric)."""
    planes = []
    for l in lines:
        if on_line(point_h, l):
            continue
        planes.append(plane4_through_line_point(l, point_h))
        if len(planes) == 2:
            break
    if len(planes) < 2:
        raise InternalInconsistency("point lies on two skew lines")
    return plane_pair_line(planes[0], planes[1])


def transversals_via_quadric(
    l1: PluckerLine, l2: PluckerLine, l3: PluckerLine, l4: PluckerLine
) -> TransversalResult:
    """Oracle route: intersect l4 with the quadric spanned by l1, l2, l3.

    Each intersection point carries a unique transversal to the first three
    lines.  Requires l1, l2, l3 pairwise skew; raises OracleNotApplicable
    otherwise so the caller may permute or fall back.
    """
    triple = (l1, l2, l3)
    for i in range(3):
        for j in range(i + 1, 3):
            if side(triple[i], triple[j]) == 0:
                raise OracleNotApplicable("first triple is not pairwise skew")
    if any(lines_projectively_equal(l4, l) for l in triple):
        return TransversalResult(TransversalKind.INFINITE, kernel_dim=3)
    try:
        quadric = quadric_through_three_lines(l1, l2, l3)
    except DegenerateConfiguration as exc:
        raise OracleNotApplicable(str(exc)) from None
    p0 = (Q(1),) + tuple(l4.point_on())
    pinf = (Q(0),) + tuple(l4.dir)
    c0 = quadric.evaluate(p0)
    c2 = quadric.evaluate(pinf)
    both = tuple(a + b for a, b in zip(p0, pinf))
    c1 = quadric.evaluate(both) - c0 - c2
    if c0 == 0 and c1 == 0 and c2 == 0:
        # l4 lies on the quadric: ruling mate of the transversal family, or
        # a member of that family itself (then it is the unique, doubled,
        # transversal)
        if side(l4, l1) == 0:
            return TransversalResult(
                TransversalKind.ONE_DOUBLE, (l4,), Q(0), 2
            )
        return TransversalResult(
            TransversalKind.INFINITE, kernel_dim=3, quad_vanished=True
        )
    # scale to integers for fraction-free roots
    den = math.lcm(c0.denominator, c1.denominator, c2.denominator)
    a0, a1, a2 = int(c0 * den), int(c1 * den), int(c2 * den)
    disc = a1 * a1 - 4 * a0 * a2
    if disc < 0:
        return TransversalResult(TransversalKind.NO_REAL, (), Q(disc), 2)

    def point_at(mu, tau):
        return tuple(mu * p0[i] + tau * pinf[i] for i in range(4))

    if a0 == 0:
        if a1 == 0:
            # a2 alone survives: double root at the base point
            roots = [(Q(1), Q(0))]
        else:
            roots = [(Q(1), Q(0)), (Q(-a2), Q(a1))]
    elif disc == 0:
        roots = [(Q(-a1), Q(2 * a0))]
    else:
        r = math.isqrt(disc)
        if r * r == disc:
            roots = [(Q(-a1 + r), Q(2 * a0)), (Q(-a1 - r), Q(2 * a0))]
        else:
            roots = [
                (QuadExt(-a1, 1, disc), QuadExt(2 * a0)),
                (QuadExt(-a1, -1, disc), QuadExt(2 * a0)),
            ]
    lines = tuple(
        _transversal_through_point(point_at(mu, tau), triple)
        for mu, tau in roots
    )
    kind = (
        TransversalKind.ONE_DOUBLE if len(lines) == 1 else TransversalKind.TWO_REAL
    )
    return TransversalResult(kind, lines, Q(disc), 2)


def results_agree(r1: TransversalResult, r2: TransversalResult) -> bool:
    """Same classification and the same projective set of real lines."""
    if r1.kind is not r2.kind:
        return False
    if len(r1.lines) != len(r2.lines):
        return False
    unmatched = list(r2.lines)
    for line in r1.lines:
        for i, other in enumerate(unmatched):
            if lines_projectively_equal(line, other):
                del unmatched[i]
                break
        else:
            return False
    return True

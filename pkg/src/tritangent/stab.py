"""Pencil-of-planes combinatorics around a fixed edge.

For an edge e, the planes through its supporting line form a projective
circle RP^1.  Each edge f of another triangle is met by an arc of that
circle; the triangle is stabbed by e's line exactly when its three arcs
cover the whole circle.  Overlaying the three diagrams of the other
triangles and sweeping the circle yields the set of contributing edge
triples, which bounds how many of the 81 edge quadruples of four disjoint
triangles can carry a common tangent.

The pencil is parametrized projectively by a rational (s : t) against two
fixed basis planes, never by an angle; the combinatorics only use the
cyclic order of parameters, with (1 : 0) as the wrap point of the slope
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Q
from .geometry import (
    Edge,
    Plane,
    PluckerLine,
    PreconditionError,
    InternalInconsistency,
    StabResult,
    Triangle,
    cross,
    dot,
    is_zero_vec,
    line_line_intersection,
    plane_through_line_point,
    side,
    stab,
    v_add,
    v_scale,
    v_sub,
)


class UndefinedParameter(ValueError):
    """Pencil parameter requested for a point on the base line."""


class DiagramDegenerate(ValueError):
    """The edge/triangle pair admits no clean arc diagram."""


class AnalysisDegenerate(ValueError):
    """Contributing-triple analysis hit a degenerate diagram."""


# ---------------------------------------------------------------------------
# pencil parameters on RP^1

class PencilParam:
    """Projective parameter (s : t), canonical as t == 1 or (s, t) == (1, 0)."""

    __slots__ = ("s", "t")

    def __init__(self, s, t):
        s = Q(s)
        t = Q(t)
        if s == 0 and t == 0:
            raise ValueError("(0 : 0) is not a pencil parameter")
        if t != 0:
            s, t = s / t, Q(1)
        else:
            s, t = Q(1), Q(0)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)

    def __setattr__(self, name, value):
        raise AttributeError("PencilParam is immutable")

    @property
    def is_infinite(self) -> bool:
        return self.t == 0

    @property
    def slope(self) -> Fraction | None:
        return None if self.is_infinite else self.s

    def sort_key(self):
        # finite slopes ascending, the wrap point (1 : 0) greatest
        return (1, Q(0)) if self.is_infinite else (0, self.s)

    def __eq__(self, other):
        if not isinstance(other, PencilParam):
            return NotImplemented
        return self.s == other.s and self.t == other.t

    def __hash__(self):
        return hash((self.s, self.t))

    def __repr__(self):
        return f"({self.s}:{self.t})"


INFINITE_PARAM = PencilParam(1, 0)


def cyclic_orientation(a: PencilParam, b: PencilParam, c: PencilParam) -> int:
    """+1 when (a, b, c) is an even rotation of their slope-sorted order."""
    ka, kb, kc = a.sort_key(), b.sort_key(), c.sort_key()
    if ka == kb or kb == kc or ka == kc:
        raise ValueError("cyclic orientation needs distinct parameters")
    if ka < kb < kc or kb < kc < ka or kc < ka < kb:
        return 1
    return -1


# ---------------------------------------------------------------------------
# basis planes and point parameters

def pencil_basis(e: Edge) -> tuple[Plane, Plane]:
    """Two fixed independent planes through e's supporting line.

    Chosen deterministically from the edge data: offset the first endpoint
    by the two coordinate axes least aligned with the edge direction, and
    normalize each plane to content 1 with positive leading coefficient.
    """
    d = e.direction
    k = max(range(3), key=lambda i: (abs(d[i]), -i))
    aux = [i for i in range(3) if i != k]
    planes = []
    for i in aux:
        offset_pt = list(e.p)
        offset_pt[i] = offset_pt[i] + 1
        plane = plane_through_line_point(e.support, tuple(offset_pt))
        planes.append(_normalize_plane(plane))
    return planes[0], planes[1]


def _normalize_plane(plane: Plane) -> Plane:
    coeffs = list(plane.normal) + [plane.offset]
    lead = next(c for c in coeffs if c != 0)
    n = tuple(c / lead for c in plane.normal)
    return Plane(n, plane.offset / lead)


def pencil_param_of_point(e: Edge, x, basis=None) -> PencilParam:
    """Parameter of the unique pencil plane through x."""
    if basis is None:
        basis = pencil_basis(e)
    a, b = basis
    av = a.evaluate(x)
    bv = b.evaluate(x)
    if av == 0 and bv == 0:
        raise UndefinedParameter(f"point {x} lies on the base line")
    return PencilParam(bv, -av)


# ---------------------------------------------------------------------------
# arcs

@dataclass(frozen=True)
class Arc:
    """Closed arc of pencil parameters whose planes meet a fixed edge.

    ``start == end`` encodes a single-point arc (the edge is coplanar with
    the base line and off it); otherwise ``via`` is an interior witness and
    ``wraps`` records whether the wrap point (1 : 0) is interior.
    """

    start: PencilParam
    end: PencilParam
    via: PencilParam
    wraps: bool
    edge_label: tuple = (0, 0)

    @property
    def is_point(self) -> bool:
        return self.start == self.end

    def contains(self, x: PencilParam) -> bool:
        if self.is_point:
            return x == self.start
        if x == self.start or x == self.end:
            return True
        return cyclic_orientation(self.start, x, self.end) == cyclic_orientation(
            self.start, self.via, self.end
        )


@dataclass(frozen=True)
class FullCircleArc:
    """Degenerate arc: the base line crosses the edge, every plane meets it."""

    edge_label: tuple = (0, 0)

    @property
    def is_point(self) -> bool:
        return False

    def contains(self, x: PencilParam) -> bool:
        return True


def arc_of_edge(e: Edge, f: Edge, basis=None) -> Arc | FullCircleArc:
    """Arc of pencil planes through e's line that meet the closed edge f."""
    if basis is None:
        basis = pencil_basis(e)
    label = (f.owner, f.label)
    base = e.support
    for endpoint in (f.p, f.q):
        a, b = basis
        if a.evaluate(endpoint) == 0 and b.evaluate(endpoint) == 0:
            raise UndefinedParameter(
                f"edge endpoint {endpoint} lies on the base line"
            )
    if side(base, f.support) == 0:
        x = line_line_intersection(base, f.support)
        if x is not None:
            # crossing point is on the base line; inside f it forces every
            # plane of the pencil to meet f
            d = f.direction
            k = next(i for i in range(3) if d[i])
            tau = (x[k] - f.p[k]) / d[k]
            if 0 < tau < 1:
                return FullCircleArc(label)
        p1 = pencil_param_of_point(e, f.p, basis)
        p2 = pencil_param_of_point(e, f.q, basis)
        if p1 != p2:
            raise InternalInconsistency("coplanar edge with split parameters")
        return Arc(p1, p1, p1, False, label)
    p1 = pencil_param_of_point(e, f.p, basis)
    p2 = pencil_param_of_point(e, f.q, basis)
    mid = pencil_param_of_point(e, v_scale(Q(1, 2), v_add(f.p, f.q)), basis)
    if p1 == p2 or mid == p1 or mid == p2:
        raise InternalInconsistency("skew edge produced coincident parameters")
    if INFINITE_PARAM in (p1, p2):
        wraps = False
    elif mid == INFINITE_PARAM:
        wraps = True
    else:
        wraps = cyclic_orientation(p1, INFINITE_PARAM, p2) == cyclic_orientation(
            p1, mid, p2
        )
    return Arc(p1, p2, mid, wraps, label)


# ---------------------------------------------------------------------------
# diagrams

@dataclass(frozen=True)
class StabDiagram:
    base_edge: Edge
    target: Triangle
    arcs: tuple
    stabbing: bool

    def active_labels(self, x: PencilParam) -> tuple:
        return tuple(
            arc.edge_label[1] for arc in self.arcs if arc.contains(x)
        )


def build_diagram(e: Edge, t: Triangle, basis=None) -> StabDiagram:
    """Arc diagram of a triangle against the pencil of a base edge."""
    if any(
        lines_equal_support(e, edge) for edge in t.edges
    ):
        raise PreconditionError("base edge belongs to the target triangle")
    result = stab(e, t)
    if result is StabResult.COPLANAR:
        raise DiagramDegenerate("base line lies in the target plane")
    if basis is None:
        basis = pencil_basis(e)
    try:
        arcs = tuple(arc_of_edge(e, f, basis) for f in t.edges)
    except UndefinedParameter as exc:
        raise DiagramDegenerate(str(exc)) from None
    return StabDiagram(e, t, arcs, result is StabResult.YES)


def lines_equal_support(e: Edge, f: Edge) -> bool:
    from .geometry import lines_projectively_equal

    return lines_projectively_equal(e.support, f.support)


# ---------------------------------------------------------------------------
# sweeping the circle

def arc_events(arcs) -> list[PencilParam]:
    """Distinct arc endpoints in slope order (wrap point last)."""
    seen = set()
    for arc in arcs:
        if isinstance(arc, FullCircleArc):
            continue
        seen.add(arc.start)
        seen.add(arc.end)
    return sorted(seen, key=PencilParam.sort_key)


def interval_witnesses(events: list[PencilParam]) -> list[PencilParam]:
    """One parameter strictly inside each elementary arc between cyclically
    consecutive events."""
    if not events:
        return [PencilParam(0, 1), INFINITE_PARAM]
    if len(events) == 1:
        e = events[0]
        if e.is_infinite:
            return [PencilParam(0, 1)]
        return [PencilParam(e.s + 1, 1), INFINITE_PARAM]
    witnesses = []
    for u, w in zip(events, events[1:]):
        if w.is_infinite:
            witnesses.append(PencilParam(u.s + 1, 1))
        else:
            witnesses.append(PencilParam((u.s + w.s) / 2, 1))
    last, first = events[-1], events[0]
    if last.is_infinite:
        witnesses.append(PencilParam(first.s - 1, 1))
    else:
        witnesses.append(INFINITE_PARAM)
    return witnesses


def covered_everywhere(arcs) -> bool:
    """Do the closed arcs cover all of RP^1?"""
    events = arc_events(arcs)
    for x in events + interval_witnesses(events):
        if not any(arc.contains(x) for arc in arcs):
            return False
    return True


def uncovered_witnesses(arcs) -> list[PencilParam]:
    events = arc_events(arcs)
    return [
        x
        for x in events + interval_witnesses(events)
        if not any(arc.contains(x) for arc in arcs)
    ]


def contributing_triples(e: Edge, others: Sequence[Triangle]) -> set:
    """Edge triples, one per other triangle, met simultaneously by some
    plane through the base edge's supporting line."""
    if len(others) != 3:
        raise ValueError("need exactly three other triangles")
    basis = pencil_basis(e)
    try:
        diagrams = [build_diagram(e, t, basis) for t in others]
    except DiagramDegenerate as exc:
        raise AnalysisDegenerate(str(exc)) from None
    all_arcs = [arc for d in diagrams for arc in d.arcs]
    events = arc_events(all_arcs)
    triples: set = set()
    for x in events + interval_witnesses(events):
        actives = [d.active_labels(x) for d in diagrams]
        if all(actives):
            for a in actives[0]:
                for b in actives[1]:
                    for c in actives[2]:
                        triples.add((a, b, c))
    return triples


# ---------------------------------------------------------------------------
# the stab graph

@dataclass(frozen=True)
class StabGraph:
    """Bipartite incidences between the 12 edges and the 4 triangles.

    ``arcs`` holds ((triangle index, edge label), target index) pairs, both
    1-based; ``coplanar`` collects pairs where the supporting line lies in
    the target plane (excluded from the graph but flagged for the caller).
    """

    arcs: frozenset
    coplanar: frozenset

    def weight(self, triangle_index: int) -> int:
        return sum(1 for (owner, _), _t in self.arcs if owner == triangle_index)

    def pair_count(self, i: int, j: int) -> int:
        return sum(
            1
            for (owner, _), target in self.arcs
            if (owner, target) in ((i, j), (j, i))
        )


def build_stab_graph(triangles: Sequence[Triangle]) -> StabGraph:
    arcs = set()
    coplanar = set()
    for i, t in enumerate(triangles, start=1):
        for edge in t.edges:
            for j, other in enumerate(triangles, start=1):
                if i == j:
                    continue
                r = stab(edge, other)
                if r is StabResult.YES:
                    arcs.add(((i, edge.label), j))
                elif r is StabResult.COPLANAR:
                    coplanar.add(((i, edge.label), j))
    return StabGraph(frozenset(arcs), frozenset(coplanar))


# ---------------------------------------------------------------------------
# exact triangle-triangle disjointness

def _orient_in_plane(a, b, c, n) -> int:
    v = dot(cross(v_sub(b, a), v_sub(c, a)), n)
    return -1 if v < 0 else (1 if v > 0 else 0)


def _point_in_triangle(x, t: Triangle) -> bool:
    """Closed membership; x must lie in the triangle's plane."""
    n = t.plane.normal
    verts = t.vertices
    for k in range(3):
        if _orient_in_plane(verts[k], verts[(k + 1) % 3], x, n) < 0:
            return False
    return True


def _collinear_overlap(p1, q1, p2) -> bool:
    # p2 on the line p1 q1: closed bounding-box membership per component
    for k in range(3):
        lo, hi = sorted((p1[k], q1[k]))
        if not (lo <= p2[k] <= hi):
            return False
    return True


def _segments_meet_coplanar(p1, q1, p2, q2, n) -> bool:
    o1 = _orient_in_plane(p1, q1, p2, n)
    o2 = _orient_in_plane(p1, q1, q2, n)
    o3 = _orient_in_plane(p2, q2, p1, n)
    o4 = _orient_in_plane(p2, q2, q1, n)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _collinear_overlap(p1, q1, p2):
        return True
    if o2 == 0 and _collinear_overlap(p1, q1, q2):
        return True
    if o3 == 0 and _collinear_overlap(p2, q2, p1):
        return True
    if o4 == 0 and _collinear_overlap(p2, q2, q1):
        return True
    return False


def segment_meets_triangle(p, q, t: Triangle) -> bool:
    """Closed segment against closed triangle, exact."""
    sp = t.plane.evaluate(p)
    sq = t.plane.evaluate(q)
    if sp == 0 and sq == 0:
        if _point_in_triangle(p, t) or _point_in_triangle(q, t):
            return True
        n = t.plane.normal
        verts = t.vertices
        return any(
            _segments_meet_coplanar(p, q, verts[k], verts[(k + 1) % 3], n)
            for k in range(3)
        )
    if sp == 0:
        return _point_in_triangle(p, t)
    if sq == 0:
        return _point_in_triangle(q, t)
    if (sp > 0) == (sq > 0):
        return False
    tau = sp / (sp - sq)
    x = v_add(p, v_scale(tau, v_sub(q, p)))
    return _point_in_triangle(x, t)


def triangles_disjoint(t1: Triangle, t2: Triangle) -> bool:
    for e in t1.edges:
        if segment_meets_triangle(e.p, e.q, t2):
            return False
    for e in t2.edges:
        if segment_meets_triangle(e.p, e.q, t1):
            return False
    return True


# ---------------------------------------------------------------------------
# the quadruple bound

def contributing_quadruple_count(triangles: Sequence[Triangle]) -> int:
    """Upper count of edge quadruples that could carry a common tangent,
    summed over the edges of a minimum-weight triangle of the stab graph.

    Requires pairwise disjoint triangles.  Verifies en route that every
    quadruple actually carrying a tangent is contributing.
    """
    if len(triangles) != 4:
        raise ValueError("need exactly 4 triangles")
    for i in range(4):
        for j in range(i + 1, 4):
            if not triangles_disjoint(triangles[i], triangles[j]):
                raise PreconditionError(
                    f"triangles {i + 1} and {j + 1} are not disjoint"
                )
    graph = build_stab_graph(triangles)
    weights = [graph.weight(i) for i in range(1, 5)]
    mi = weights.index(min(weights))
    other_positions = [j for j in range(4) if j != mi]
    others = [triangles[j] for j in other_positions]
    triples_by_edge = {}
    total = 0
    for edge in triangles[mi].edges:
        triples = contributing_triples(edge, others)
        triples_by_edge[edge.label] = triples
        total += len(triples)

    from .counting import count_tangents

    report = count_tangents(triangles)
    for tangent in report.tangents:
        labels = tangent.quadruple
        triple = tuple(labels[j] for j in other_positions)
        if triple not in triples_by_edge[labels[mi]]:
            raise InternalInconsistency(
                f"tangent quadruple {labels} escapes the contributing set"
            )
    return total

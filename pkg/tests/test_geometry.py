"""Geometric primitives: lines, incidence, quadrics, segment hits."""

from fractions import Fraction as Q

import pytest

from conftest import rand_line, rand_point, rand_triangle, stream
from tritangent.exact import QuadExt, quad_sign
from tritangent.geometry import (
    CoincidentLines,
    DegenerateConfiguration,
    DegenerateInput,
    Edge,
    InputError,
    PluckerLine,
    Quadric,
    StabResult,
    Triangle,
    canonical_sixvec,
    cross,
    dot,
    line_hits_edge,
    line_meets_segment_param,
    lines_projectively_equal,
    plucker_from_points,
    quadric_through_three_lines,
    quadrics_proportional,
    side,
    stab,
    triangles_from_json,
    v_add,
    v_scale,
    v_sub,
    vec,
)

L1 = plucker_from_points(vec(0, 1, 0), vec(1, 1, 1))      # (t, 1, t)
L2 = plucker_from_points(vec(0, -1, 0), vec(1, -1, -1))   # (t, -1, -t)
L4 = plucker_from_points(vec(0, 0, 0), vec(1, 0, 0))      # x-axis
LAM1 = plucker_from_points(vec(Q(1, 2), 0, 0), vec(Q(1, 2), 2, 1))

XY_MINUS_WZ = Quadric((Q(0), Q(0), Q(0), Q(-1), Q(0), Q(1), Q(0), Q(0), Q(0), Q(0)))


class TestPlucker:
    def test_from_points_examples(self):
        l = plucker_from_points(vec(0, 0, 0), vec(1, 0, 0))
        assert l.dir == vec(1, 0, 0) and l.moment == vec(0, 0, 0)
        assert L1.dir == vec(1, 0, 1) and L1.moment == vec(1, 0, -1)
        l3 = plucker_from_points(vec(0, 0, 0), vec(0, 0, 1))
        assert l3.dir == vec(0, 0, 1) and l3.moment == vec(0, 0, 0)

    def test_coincident_points_rejected(self):
        with pytest.raises(DegenerateInput):
            plucker_from_points(vec(1, 2, 3), vec(1, 2, 3))

    def test_plucker_relation_always_zero(self):
        rng = stream(10)
        for _ in range(300):
            l = rand_line(rng)
            assert l.plucker_product() == 0

    def test_side_examples(self):
        assert side(L1, L1) == 0
        assert side(L4, L1) == 1
        assert side(L1, LAM1) == 0

    def test_side_symmetric(self):
        rng = stream(11)
        for _ in range(200):
            a, b = rand_line(rng), rand_line(rng)
            assert side(a, b) == side(b, a)

    def test_side_matches_determinant_oracle(self):
        # side vanishes exactly when the 4x4 determinant of homogeneous
        # point rows does
        rng = stream(12)
        hits = 0
        for _ in range(1000):
            p1, q1 = rand_point(rng, 8), rand_point(rng, 8)
            p2, q2 = rand_point(rng, 8), rand_point(rng, 8)
            if p1 == q1 or p2 == q2:
                continue
            det = dot(v_sub(q1, p1), cross(v_sub(p2, p1), v_sub(q2, p1))) - \
                dot(v_sub(q1, p1), cross(v_sub(p2, p1), v_sub(p2, q2)))
            # direct 4x4 expansion: det[ (p1,1),(q1,1),(p2,1),(q2,1) ]
            m = [list(p1) + [Q(1)], list(q1) + [Q(1)],
                 list(p2) + [Q(1)], list(q2) + [Q(1)]]
            det = _det4(m)
            s = side(plucker_from_points(p1, q1), plucker_from_points(p2, q2))
            assert (s == 0) == (det == 0)
            hits += s == 0
        assert hits  # coplanar pairs occurred (small coordinates force some)

    def test_projective_equality(self):
        a = plucker_from_points(vec(0, 0, 0), vec(1, 2, 3))
        b = plucker_from_points(vec(2, 4, 6), vec(-1, -2, -3))
        assert lines_projectively_equal(a, b)
        assert not lines_projectively_equal(a, L4)


def _det4(m):
    from itertools import permutations

    total = Q(0)
    for perm in permutations(range(4)):
        sign = 1
        seen = list(perm)
        for i in range(4):
            for j in range(i + 1, 4):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = Q(1)
        for i in range(4):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


class TestQuadric:
    def test_three_line_quadric_is_xy_minus_wz(self):
        q = quadric_through_three_lines(L1, L2, L4)
        assert quadrics_proportional(q, XY_MINUS_WZ)

    def test_intersecting_lines_rejected(self):
        x_axis = plucker_from_points(vec(0, 0, 0), vec(1, 0, 0))
        y_axis = plucker_from_points(vec(0, 0, 0), vec(0, 1, 0))
        with pytest.raises(DegenerateConfiguration):
            quadric_through_three_lines(x_axis, y_axis, L1)

    def test_vanishes_on_fresh_sample_points(self):
        q = quadric_through_three_lines(L1, L2, L4)
        for line in (L1, L2, L4):
            p = line.point_on()
            for k in (5, 7, 11, -3, 13):
                pt = v_add(p, v_scale(Q(k), line.dir))
                assert q.evaluate((Q(1),) + tuple(pt)) == 0

    def test_affine_equivariance(self):
        # random invertible affine map: quadric of mapped lines equals the
        # pullback of the original quadric, projectively
        rng = stream(13)
        done = 0
        while done < 20:
            m = [[Q(int(rng.integers(-4, 5))) for _ in range(3)] for _ in range(3)]
            det = _det3(m)
            if det == 0:
                continue
            shift = rand_point(rng, 5)
            done += 1

            def apply(p):
                return tuple(
                    sum(m[i][j] * p[j] for j in range(3)) + shift[i]
                    for i in range(3)
                )

            lines = [L1, L2, L4]
            mapped = [
                plucker_from_points(apply(l.point_on()),
                                    apply(v_add(l.point_on(), l.dir)))
                for l in lines
            ]
            q_mapped = quadric_through_three_lines(*mapped)
            q_orig = quadric_through_three_lines(*lines)
            inv = _inv_affine(m, shift, det)
            # compare q_mapped(x) with q_orig(inv(x)) on sample points
            samples = [rand_point(rng, 7) for _ in range(8)]
            vals = []
            for s in samples:
                a = q_mapped.evaluate((Q(1),) + tuple(s))
                b = q_orig.evaluate((Q(1),) + tuple(inv(s)))
                vals.append((a, b))
            nonzero = [(a, b) for a, b in vals if a != 0 or b != 0]
            a0, b0 = nonzero[0]
            assert a0 != 0 and b0 != 0
            for a, b in nonzero[1:]:
                assert a * b0 == b * a0


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _inv_affine(m, shift, det):
    adj = [
        [
            (m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
             - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3])
            for j in range(3)
        ]
        for i in range(3)
    ]

    def inv(p):
        d = v_sub(p, shift)
        return tuple(
            sum(adj[i][j] * d[j] for j in range(3)) / det for i in range(3)
        )

    return inv


class TestStab:
    def test_crossing_interior(self):
        e = Edge.between(vec(0, 0, 0), vec(1, 0, 0))
        t = Triangle(vec(1, -1, -1), vec(1, 1, -1), vec(1, 0, 2))
        assert stab(e, t) is StabResult.YES

    def test_crossing_at_vertex_is_not_interior(self):
        e = Edge.between(vec(0, 0, 0), vec(1, 0, 0))
        t = Triangle(vec(1, 0, 0), vec(1, 1, 1), vec(1, -1, 1))
        assert stab(e, t) is StabResult.NO

    def test_parallel_off_plane(self):
        e = Edge.between(vec(0, 0, 5), vec(1, 0, 5))
        t = Triangle(vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0))
        assert stab(e, t) is StabResult.NO

    def test_coplanar_flagged(self):
        e = Edge.between(vec(5, 5, 0), vec(6, 7, 0))
        t = Triangle(vec(0, 0, 0), vec(1, 0, 0), vec(0, 1, 0))
        assert stab(e, t) is StabResult.COPLANAR

    def test_invariances(self):
        rng = stream(14)
        e = Edge.between(vec(-3, 1, 1), vec(5, 0, 0))
        for _ in range(50):
            t = rand_triangle(rng, 6)
            base = stab(e, t)
            assert stab(e, Triangle(t.v1, t.v2, t.v0)) is base
            assert stab(e, Triangle(t.v2, t.v1, t.v0)) is base
            stretched = Edge.between(e.p, v_add(e.p, v_scale(Q(7), e.direction)))
            assert stab(stretched, t) is base


class TestSegmentParam:
    def test_known_tau(self):
        # transversal (1/2, 2t, t) meets the x-axis segment from (9.5,0,0)
        # to (-.511,0,0) at (1/2,0,0)
        e = Edge.between(vec(Q(19, 2), 0, 0), vec(Q(-511, 1000), 0, 0))
        tau = line_meets_segment_param(LAM1, e)
        assert tau == Q(3000, 3337)

    def test_endpoint_counts_as_hit(self):
        e = Edge.between(vec(Q(1, 2), 0, 0), vec(5, 0, 0))
        tau = line_meets_segment_param(LAM1, e)
        assert tau == 0

    def test_beyond_endpoint_misses(self):
        e = Edge.between(vec(1, 0, 0), vec(5, 0, 0))
        assert line_meets_segment_param(LAM1, e) is None

    def test_parallel_coplanar_misses(self):
        l = plucker_from_points(vec(0, 0, 1), vec(1, 0, 1))
        e = Edge.between(vec(0, 0, 0), vec(1, 0, 0))
        assert line_meets_segment_param(l, e) is None

    def test_coincident_raises(self):
        e = Edge.between(vec(0, 0, 0), vec(1, 0, 0))
        l = plucker_from_points(vec(2, 0, 0), vec(3, 0, 0))
        with pytest.raises(CoincidentLines):
            line_meets_segment_param(l, e)
        assert line_hits_edge(l, e)  # hit test treats it as meeting

    def test_hit_test_matches_param_route(self):
        # a line through a random point of the segment's support is always
        # coplanar with it; the sign-only hit test must agree with the
        # explicit parameter computation
        rng = stream(15)
        checked = 0
        while checked < 300:
            try:
                e = Edge.between(rand_point(rng, 6), rand_point(rng, 6))
            except DegenerateInput:
                continue
            t = Q(int(rng.integers(-8, 9)), int(rng.integers(1, 5)))
            on_support = v_add(e.p, v_scale(t, e.direction))
            x = rand_point(rng, 6)
            if x == on_support:
                continue
            l = plucker_from_points(x, on_support)
            if lines_projectively_equal(l, e.support):
                continue
            tau = line_meets_segment_param(l, e)
            assert (tau is not None) == line_hits_edge(l, e)
            if tau is not None:
                assert quad_sign(tau) >= 0
                assert quad_sign(QuadExt.of(1) - tau) >= 0
            checked += 1

    def test_quadext_line_hit(self):
        # line with irrational direction through the edge's endpoint
        r2 = QuadExt(0, 1, 2)
        d = (r2, QuadExt.of(2), QuadExt.of(1))
        p0 = (QuadExt.of(0), QuadExt.of(0), QuadExt.of(0))
        line = PluckerLine(d, cross(p0, d))
        e = Edge.between(vec(0, 0, 0), vec(1, 1, 1))
        assert line_hits_edge(line, e)


class TestJsonSchema:
    def test_parse_mixed_coordinate_forms(self):
        data = {
            "triangles": [
                [[0, 0, 0], ["1.5", 0, 0], ["1/3", "1", 0]],
                [[0, 0, 1], [1, 0, 1], [0, 1, 1]],
                [[0, 0, 2], [1, 0, 2], [0, 1, 2]],
                [[0, 0, 3], [1, 0, 3], [0, 1, 3]],
            ]
        }
        tris = triangles_from_json(data)
        assert tris[0].v1[0] == Q(3, 2)
        assert tris[0].v2[0] == Q(1, 3)

    def test_error_names_field(self):
        data = {"triangles": [[[0, 0, "x"], [1, 0, 0], [0, 1, 0]]] + [
            [[0, 0, i], [1, 0, i], [0, 1, i]] for i in (1, 2, 3)
        ]}
        with pytest.raises(InputError) as err:
            triangles_from_json(data)
        assert "triangles[0][0][2]" in str(err.value)

    def test_float_coordinates_rejected(self):
        data = {"triangles": [[[0.5, 0, 0], [1, 0, 0], [0, 1, 0]]] + [
            [[0, 0, i], [1, 0, i], [0, 1, i]] for i in (1, 2, 3)
        ]}
        with pytest.raises(InputError):
            triangles_from_json(data)

    def test_collinear_triangle_rejected(self):
        data = {"triangles": [[[0, 0, 0], [1, 1, 1], [2, 2, 2]]] + [
            [[0, 0, i], [1, 0, i], [0, 1, i]] for i in (1, 2, 3)
        ]}
        with pytest.raises(InputError) as err:
            triangles_from_json(data)
        assert "triangles[0]" in str(err.value)

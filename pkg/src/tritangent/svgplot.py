"""Static SVG rendering of a quadruple and its common tangents.

Orthographic projection along a rational view direction; exact coordinates
are converted to floats for display only.  Output is deterministic for a
fixed input and flags: fixed formatting, fixed element order.
"""

from __future__ import annotations

from fractions import Fraction as Q

from .geometry import canonical_sixvec, cross, dot, is_zero_vec

DEFAULT_PROJECTION = (Q(2), Q(3), Q(5))

_CANVAS = 720.0
_MARGIN = 24.0
_COLORS = ("#c0392b", "#2471a3", "#229954", "#b7950b")


def _projection_basis(direction):
    if is_zero_vec(direction):
        raise ValueError("projection direction must be nonzero")
    k = min(range(3), key=lambda i: (abs(direction[i]), i))
    axis = tuple(Q(1) if i == k else Q(0) for i in range(3))
    u = cross(direction, axis)
    v = cross(direction, u)
    return u, v


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def render_svg(triangles, tangent_lines, projection=DEFAULT_PROJECTION) -> str:
    """SVG document: one polygon per triangle, one clipped line per tangent.

    Tangent lines are clipped against the projected bounding box of the
    triangles plus all tangent/edge meeting points, so every tangent shows
    up as exactly one line element.
    """
    u, v = _projection_basis(projection)

    def project(p):
        return float(dot(p, u)), float(dot(p, v))

    tri_pts = [[project(p) for p in t.vertices] for t in triangles]
    xs = [x for pts in tri_pts for x, _ in pts]
    ys = [y for pts in tri_pts for _, y in pts]

    uf = tuple(float(c) for c in u)
    vf = tuple(float(c) for c in v)
    projected_lines = []
    for line in tangent_lines:
        six = [float(c) for c in canonical_sixvec(line)]
        d3, m3 = six[:3], six[3:]
        n2 = d3[0] ** 2 + d3[1] ** 2 + d3[2] ** 2
        # point of the line closest to the origin, in float: (d x m) / |d|^2
        pt = (
            (d3[1] * m3[2] - d3[2] * m3[1]) / n2,
            (d3[2] * m3[0] - d3[0] * m3[2]) / n2,
            (d3[0] * m3[1] - d3[1] * m3[0]) / n2,
        )
        d = (
            sum(a * b for a, b in zip(d3, uf)),
            sum(a * b for a, b in zip(d3, vf)),
        )
        p2 = (
            sum(a * b for a, b in zip(pt, uf)),
            sum(a * b for a, b in zip(pt, vf)),
        )
        projected_lines.append((p2, d))
        xs.append(p2[0])
        ys.append(p2[1])

    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y, 1e-9)
    pad = 0.05 * span
    min_x -= pad
    min_y -= pad
    span += 2 * pad
    scale = (_CANVAS - 2 * _MARGIN) / span

    def to_canvas(p):
        return (
            _MARGIN + (p[0] - min_x) * scale,
            _CANVAS - _MARGIN - (p[1] - min_y) * scale,
        )

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(_CANVAS)}" '
        f'height="{int(_CANVAS)}" viewBox="0 0 {int(_CANVAS)} {int(_CANVAS)}">',
        f'<rect width="{int(_CANVAS)}" height="{int(_CANVAS)}" fill="white"/>',
    ]
    for (p0, d) in projected_lines:
        seg = _clip_line(p0, d, min_x, min_y, min_x + span, min_y + span)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = to_canvas(seg[0]), to_canvas(seg[1])
        out.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
            f'y2="{_fmt(y2)}" stroke="#777777" stroke-width="0.6"/>'
        )
    for idx, pts in enumerate(tri_pts):
        corners = " ".join(
            f"{_fmt(x)},{_fmt(y)}" for x, y in (to_canvas(p) for p in pts)
        )
        color = _COLORS[idx % len(_COLORS)]
        out.append(
            f'<polygon points="{corners}" fill="{color}" fill-opacity="0.35" '
            f'stroke="{color}" stroke-width="1.2"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _clip_line(p0, d, x_min, y_min, x_max, y_max):
    """Liang-Barsky clip of the full line p0 + t*d to a box."""
    if d == (0.0, 0.0):
        return None
    t0, t1 = -1e18, 1e18
    for coord, delta, lo, hi in (
        (p0[0], d[0], x_min, x_max),
        (p0[1], d[1], y_min, y_max),
    ):
        if delta == 0.0:
            if coord < lo or coord > hi:
                return None
            continue
        ta = (lo - coord) / delta
        tb = (hi - coord) / delta
        if ta > tb:
            ta, tb = tb, ta
        t0 = max(t0, ta)
        t1 = min(t1, tb)
        if t0 > t1:
            return None
    a = (p0[0] + t0 * d[0], p0[1] + t0 * d[1])
    b = (p0[0] + t1 * d[0], p0[1] + t1 * d[1])
    return a, b

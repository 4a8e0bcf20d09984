"""Pure-Python fallback of the filtered per-sample counting kernel.

Same contract as the compiled extension ``_kernel``: given outward-rounded
interval bounds on the 36 vertex coordinates of four triangles, certify as
many of the 81 edge-quadruple transversal problems as hardware-float
interval arithmetic allows.  Anything the intervals cannot decide is left
to the caller's exact fallback, so results are sound but never complete on
degenerate input.

Intervals are (lo, hi) float pairs widened outward by one ulp after every
operation.
"""

from __future__ import annotations

import math

NAME = "pure-python"

_INF = math.inf

STATUS_NO_REAL = 0
STATUS_TWO_REAL = 1
STATUS_UNCERTAIN = 2


def _dn(x):
    return math.nextafter(x, -_INF)


def _up(x):
    return math.nextafter(x, _INF)


def _add(a, b):
    return _dn(a[0] + b[0]), _up(a[1] + b[1])


def _sub(a, b):
    return _dn(a[0] - b[1]), _up(a[1] - b[0])


def _mul(a, b):
    p0 = a[0] * b[0]
    p1 = a[0] * b[1]
    p2 = a[1] * b[0]
    p3 = a[1] * b[1]
    return _dn(min(p0, p1, p2, p3)), _up(max(p0, p1, p2, p3))


def _div(a, b):
    # caller guarantees 0 not in b
    q0 = a[0] / b[0]
    q1 = a[0] / b[1]
    q2 = a[1] / b[0]
    q3 = a[1] / b[1]
    return _dn(min(q0, q1, q2, q3)), _up(max(q0, q1, q2, q3))


def _sqrt(a):
    lo = max(a[0], 0.0)
    return max(0.0, _dn(math.sqrt(lo))), _up(math.sqrt(a[1]))


def _nonzero(a):
    return a[0] > 0.0 or a[1] < 0.0


def _mid(a):
    return 0.5 * (a[0] + a[1])


def _cross(u, v):
    return (
        _sub(_mul(u[1], v[2]), _mul(u[2], v[1])),
        _sub(_mul(u[2], v[0]), _mul(u[0], v[2])),
        _sub(_mul(u[0], v[1]), _mul(u[1], v[0])),
    )


def _sub3(u, v):
    return (_sub(u[0], v[0]), _sub(u[1], v[1]), _sub(u[2], v[2]))


def _dot(u, v):
    return _add(_add(_mul(u[0], v[0]), _mul(u[1], v[1])), _mul(u[2], v[2]))


_ZERO = (0.0, 0.0)


def _edge_rows(lo, hi):
    """Plücker rows (moment, dir) for the 12 edges, as interval 6-vectors."""
    rows = []
    for t in range(4):
        verts = [
            ((lo[t][k][0], hi[t][k][0]),
             (lo[t][k][1], hi[t][k][1]),
             (lo[t][k][2], hi[t][k][2]))
            for k in range(3)
        ]
        tri_rows = []
        for k in range(3):
            p = verts[k]
            q = verts[(k + 1) % 3]
            d = _sub3(q, p)
            m = _cross(p, d)
            tri_rows.append((m[0], m[1], m[2], d[0], d[1], d[2], p, q, d))
        rows.append(tri_rows)
    return rows


def _solve_kernel(rows):
    """Interval Gaussian elimination of the 4x6 side system.

    Returns (A, B) interval 6-vectors spanning the kernel, or None when a
    rank-4 pivot sequence cannot be certified.
    """
    m = [list(r) for r in rows]
    pivot_cols = []
    pivot_rows = []
    used_rows = [False] * 4
    for _step in range(4):
        best = None
        best_mag = 0.0
        for i in range(4):
            if used_rows[i]:
                continue
            for j in range(6):
                if j in pivot_cols:
                    continue
                e = m[i][j]
                if _nonzero(e):
                    mag = abs(_mid(e))
                    if best is None or mag > best_mag:
                        best = (i, j)
                        best_mag = mag
        if best is None:
            return None
        r, c = best
        used_rows[r] = True
        pivot_rows.append(r)
        pivot_cols.append(c)
        p = m[r][c]
        for i in range(4):
            if used_rows[i]:
                continue
            f = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(6):
                if j in pivot_cols:
                    continue
                row_i[j] = _sub(_mul(row_i[j], p), _mul(f, row_r[j]))
            row_i[c] = _ZERO
    free_cols = [j for j in range(6) if j not in pivot_cols]
    basis = []
    for f in free_cols:
        x = [_ZERO] * 6
        x[f] = (1.0, 1.0)
        for step in range(3, -1, -1):
            r, c = pivot_rows[step], pivot_cols[step]
            acc = _ZERO
            for j in range(6):
                if j != c and x[j] != _ZERO:
                    acc = _add(acc, _mul(m[r][j], x[j]))
            x[c] = _div((-acc[1], -acc[0]), m[r][c])
        basis.append(x)
    return basis[0], basis[1]


def _form(v):
    return _add(_add(_mul(v[0], v[3]), _mul(v[1], v[4])), _mul(v[2], v[5]))


def _polar(u, v):
    acc = _ZERO
    for i in range(3):
        acc = _add(acc, _mul(u[i], v[3 + i]))
        acc = _add(acc, _mul(v[i], u[3 + i]))
    return acc


def _edge_hit(edge, dx, mx):
    """1 hit, 0 miss, -1 uncertain; edge = (..., p, q, d_e) from _edge_rows."""
    p, d_e = edge[6], edge[8]
    w = _cross(d_e, dx)
    k = -1
    mag = -1.0
    for i in range(3):
        if _nonzero(w[i]) and abs(_mid(w[i])) > mag:
            k = i
            mag = abs(_mid(w[i]))
    if k < 0:
        return -1
    rhs = _sub3(mx, _cross(p, dx))
    num = rhs[k]
    den = w[k]
    t1 = _mul(num, den)
    if t1[1] < 0.0:
        return 0
    t2 = _mul(_sub(den, num), den)
    if t2[1] < 0.0:
        return 0
    if t1[0] > 0.0 and t2[0] > 0.0:
        return 1
    return -1


def _root_line(s_coef, a_vec, two_pa, b_vec):
    dx = []
    mx = []
    for i in range(6):
        comp = _add(_mul(s_coef, a_vec[i]), _mul(two_pa, b_vec[i]))
        (dx if i < 3 else mx).append(comp)
    return tuple(dx), tuple(mx)


def process_sample(lo, hi):
    """Filtered classification and tangent counting for one quadruple.

    ``lo``/``hi``: nested (4, 3, 3) float bounds on vertex coordinates.
    Returns (status, counts, pairs_uncertain) with per-quadruple status
    codes and certified tangent counts in lexicographic edge-label order.
    """
    if hasattr(lo, "tolist"):
        lo = lo.tolist()
    if hasattr(hi, "tolist"):
        hi = hi.tolist()
    edges = _edge_rows(lo, hi)
    status = [STATUS_UNCERTAIN] * 81
    counts = [0] * 81
    lines = []
    qi = 0
    for e1 in range(3):
        for e2 in range(3):
            for e3 in range(3):
                for e4 in range(3):
                    chosen = (
                        edges[0][e1],
                        edges[1][e2],
                        edges[2][e3],
                        edges[3][e4],
                    )
                    status[qi], counts[qi] = _one_quadruple(chosen, qi, lines)
                    qi += 1
    pairs_uncertain = _count_uncertain_pairs(lines)
    return status, counts, pairs_uncertain


def _one_quadruple(chosen, qi, lines):
    rows = [e[:6] for e in chosen]
    basis = _solve_kernel(rows)
    if basis is None:
        return STATUS_UNCERTAIN, 0
    a_vec, b_vec = basis
    pa = _form(a_vec)
    pb = _form(b_vec)
    s = _polar(a_vec, b_vec)
    s2 = _mul(s, s)
    four = (4.0, 4.0)
    disc = _sub(s2, _mul(four, _mul(pa, pb)))
    if disc[1] < 0.0:
        return STATUS_NO_REAL, 0
    if disc[0] <= 0.0:
        return STATUS_UNCERTAIN, 0
    if not _nonzero(pa):
        return STATUS_UNCERTAIN, 0
    sq = _sqrt(disc)
    two_pa = _add(pa, pa)
    neg_s = (-s[1], -s[0])
    count = 0
    local_lines = []
    for sign_branch in (1, -1):
        if sign_branch > 0:
            coef = _add(neg_s, sq)
        else:
            coef = _sub(neg_s, sq)
        dx, mx = _root_line(coef, a_vec, two_pa, b_vec)
        if not any(_nonzero(dx[i]) for i in range(3)):
            return STATUS_UNCERTAIN, 0
        local_lines.append((qi, dx + mx))
        hit_all = True
        for edge in chosen:
            h = _edge_hit(edge, dx, mx)
            if h < 0:
                return STATUS_UNCERTAIN, 0
            if h == 0:
                hit_all = False
                break
        if hit_all:
            count += 1
    lines.extend(local_lines)
    return STATUS_TWO_REAL, count


def _count_uncertain_pairs(lines):
    uncertain = 0
    n = len(lines)
    for i in range(n):
        qi, u = lines[i]
        for j in range(i + 1, n):
            qj, v = lines[j]
            if qj == qi:
                continue  # the two roots of one quadruple are distinct
            distinct = False
            for a in range(6):
                if distinct:
                    break
                for b in range(a + 1, 6):
                    minor = _sub(_mul(u[a], v[b]), _mul(u[b], v[a]))
                    if _nonzero(minor):
                        distinct = True
                        break
            if not distinct:
                uncertain += 1
    return uncertain

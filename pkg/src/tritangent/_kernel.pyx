# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled filtered-counting kernel.

Straight transcription of ``_kernel_py`` into C doubles: outward-rounded
interval arithmetic over the 81 edge-quadruple transversal problems of one
quadruple of triangles.  Certifies NoReal / TwoReal classifications, per
root tangency against the four closed segments, and pairwise distinctness
of all certified real transversal lines; everything else is reported as
uncertain for the caller's exact fallback.

The heavy loop runs without the GIL so sample-parallel threads scale.
"""

from libc.math cimport INFINITY, fabs, nextafter, sqrt

NAME = "compiled"

STATUS_NO_REAL = 0
STATUS_TWO_REAL = 1
STATUS_UNCERTAIN = 2

cdef enum:
    C_NO_REAL = 0
    C_TWO_REAL = 1
    C_UNCERTAIN = 2

DEF N_QUAD = 81
DEF MAX_LINES = 162


ctypedef struct IV:
    double lo
    double hi


cdef inline IV iv_make(double lo, double hi) noexcept nogil:
    cdef IV r
    r.lo = lo
    r.hi = hi
    return r


cdef inline IV iv_add(IV a, IV b) noexcept nogil:
    return iv_make(nextafter(a.lo + b.lo, -INFINITY),
                   nextafter(a.hi + b.hi, INFINITY))


cdef inline IV iv_sub(IV a, IV b) noexcept nogil:
    return iv_make(nextafter(a.lo - b.hi, -INFINITY),
                   nextafter(a.hi - b.lo, INFINITY))


cdef inline IV iv_neg(IV a) noexcept nogil:
    return iv_make(-a.hi, -a.lo)


cdef inline IV iv_mul(IV a, IV b) noexcept nogil:
    cdef double p0 = a.lo * b.lo
    cdef double p1 = a.lo * b.hi
    cdef double p2 = a.hi * b.lo
    cdef double p3 = a.hi * b.hi
    cdef double lo = p0
    cdef double hi = p0
    if p1 < lo: lo = p1
    if p2 < lo: lo = p2
    if p3 < lo: lo = p3
    if p1 > hi: hi = p1
    if p2 > hi: hi = p2
    if p3 > hi: hi = p3
    return iv_make(nextafter(lo, -INFINITY), nextafter(hi, INFINITY))


cdef inline IV iv_div(IV a, IV b) noexcept nogil:
    # caller guarantees 0 outside b
    cdef double q0 = a.lo / b.lo
    cdef double q1 = a.lo / b.hi
    cdef double q2 = a.hi / b.lo
    cdef double q3 = a.hi / b.hi
    cdef double lo = q0
    cdef double hi = q0
    if q1 < lo: lo = q1
    if q2 < lo: lo = q2
    if q3 < lo: lo = q3
    if q1 > hi: hi = q1
    if q2 > hi: hi = q2
    if q3 > hi: hi = q3
    return iv_make(nextafter(lo, -INFINITY), nextafter(hi, INFINITY))


cdef inline IV iv_sqrt(IV a) noexcept nogil:
    cdef double lo = a.lo
    if lo < 0.0:
        lo = 0.0
    lo = nextafter(sqrt(lo), -INFINITY)
    if lo < 0.0:
        lo = 0.0
    return iv_make(lo, nextafter(sqrt(a.hi), INFINITY))


cdef inline bint iv_nonzero(IV a) noexcept nogil:
    return a.lo > 0.0 or a.hi < 0.0


cdef inline double iv_mid(IV a) noexcept nogil:
    return 0.5 * (a.lo + a.hi)


cdef inline void cross3(IV *u, IV *v, IV *out) noexcept nogil:
    out[0] = iv_sub(iv_mul(u[1], v[2]), iv_mul(u[2], v[1]))
    out[1] = iv_sub(iv_mul(u[2], v[0]), iv_mul(u[0], v[2]))
    out[2] = iv_sub(iv_mul(u[0], v[1]), iv_mul(u[1], v[0]))


cdef inline IV dot33(IV *u, IV *v) noexcept nogil:
    return iv_add(iv_add(iv_mul(u[0], v[0]), iv_mul(u[1], v[1])),
                  iv_mul(u[2], v[2]))


cdef int solve_kernel(IV m[4][6], IV *a_out, IV *b_out) noexcept nogil:
    """Interval elimination of the 4x6 system; fills two kernel 6-vectors.

    Returns 0 on success, -1 if a rank-4 pivot sequence cannot be certified.
    """
    cdef bint used_row[4]
    cdef bint used_col[6]
    cdef int pivot_rows[4]
    cdef int pivot_cols[4]
    cdef int step, i, j, r, c, best_i, best_j, f, k, nfree
    cdef double mag, best_mag
    cdef IV p, fct, acc
    cdef IV x[6]
    cdef int free_cols[2]

    for i in range(4):
        used_row[i] = 0
    for j in range(6):
        used_col[j] = 0

    for step in range(4):
        best_i = -1
        best_j = -1
        best_mag = -1.0
        for i in range(4):
            if used_row[i]:
                continue
            for j in range(6):
                if used_col[j]:
                    continue
                if iv_nonzero(m[i][j]):
                    mag = fabs(iv_mid(m[i][j]))
                    if mag > best_mag:
                        best_mag = mag
                        best_i = i
                        best_j = j
        if best_i < 0:
            return -1
        r = best_i
        c = best_j
        used_row[r] = 1
        used_col[c] = 1
        pivot_rows[step] = r
        pivot_cols[step] = c
        p = m[r][c]
        for i in range(4):
            if used_row[i]:
                continue
            fct = m[i][c]
            for j in range(6):
                if used_col[j]:
                    continue
                m[i][j] = iv_sub(iv_mul(m[i][j], p), iv_mul(fct, m[r][j]))
            m[i][c] = iv_make(0.0, 0.0)

    nfree = 0
    for j in range(6):
        if not used_col[j]:
            free_cols[nfree] = j
            nfree += 1

    for f in range(2):
        for j in range(6):
            x[j] = iv_make(0.0, 0.0)
        x[free_cols[f]] = iv_make(1.0, 1.0)
        for step in range(3, -1, -1):
            r = pivot_rows[step]
            c = pivot_cols[step]
            acc = iv_make(0.0, 0.0)
            for j in range(6):
                if j != c and not (x[j].lo == 0.0 and x[j].hi == 0.0):
                    acc = iv_add(acc, iv_mul(m[r][j], x[j]))
            x[c] = iv_div(iv_neg(acc), m[r][c])
        for j in range(6):
            if f == 0:
                a_out[j] = x[j]
            else:
                b_out[j] = x[j]
    return 0


cdef inline IV form6(IV *v) noexcept nogil:
    return iv_add(iv_add(iv_mul(v[0], v[3]), iv_mul(v[1], v[4])),
                  iv_mul(v[2], v[5]))


cdef inline IV polar6(IV *u, IV *v) noexcept nogil:
    cdef IV acc = iv_make(0.0, 0.0)
    cdef int i
    for i in range(3):
        acc = iv_add(acc, iv_mul(u[i], v[3 + i]))
        acc = iv_add(acc, iv_mul(v[i], u[3 + i]))
    return acc


cdef int edge_hit(IV *p, IV *d_e, IV *dx, IV *mx) noexcept nogil:
    """1 hit, 0 miss, -1 uncertain (closed-segment test, division-free)."""
    cdef IV w[3]
    cdef IV pxd[3]
    cdef IV num, den, t1, t2
    cdef int k = -1
    cdef int i
    cdef double mag = -1.0
    cross3(d_e, dx, w)
    for i in range(3):
        if iv_nonzero(w[i]) and fabs(iv_mid(w[i])) > mag:
            k = i
            mag = fabs(iv_mid(w[i]))
    if k < 0:
        return -1
    cross3(p, dx, pxd)
    num = iv_sub(mx[k], pxd[k])
    den = w[k]
    t1 = iv_mul(num, den)
    if t1.hi < 0.0:
        return 0
    t2 = iv_mul(iv_sub(den, num), den)
    if t2.hi < 0.0:
        return 0
    if t1.lo > 0.0 and t2.lo > 0.0:
        return 1
    return -1


cdef int count_uncertain_pairs(IV lines[MAX_LINES][6], int *line_q,
                               int n_lines) noexcept nogil:
    cdef int uncertain = 0
    cdef int i, j, a, b
    cdef bint distinct
    cdef IV minor
    for i in range(n_lines):
        for j in range(i + 1, n_lines):
            if line_q[j] == line_q[i]:
                continue
            distinct = 0
            for a in range(6):
                if distinct:
                    break
                for b in range(a + 1, 6):
                    minor = iv_sub(iv_mul(lines[i][a], lines[j][b]),
                                   iv_mul(lines[i][b], lines[j][a]))
                    if iv_nonzero(minor):
                        distinct = 1
                        break
            if not distinct:
                uncertain += 1
    return uncertain


cdef int compute(double[:, :, ::1] lo, double[:, :, ::1] hi,
                 unsigned char *status, unsigned char *counts) noexcept nogil:
    cdef IV verts[4][3][3]
    cdef IV edge_m[4][3][3]
    cdef IV edge_d[4][3][3]
    cdef IV edge_p[4][3][3]
    cdef IV lines[MAX_LINES][6]
    cdef int line_q[MAX_LINES]
    cdef int n_lines = 0
    cdef int t, k, c, kn, qi, e1, e2, e3, e4, i, j, branch, h
    cdef int choice[4]
    cdef IV d3[3]
    cdef IV m3[3]
    cdef IV rows[4][6]
    cdef IV a_vec[6]
    cdef IV b_vec[6]
    cdef IV root[6]
    cdef IV pa, pb, s, disc, sq, two_pa, neg_s, coef
    cdef bint affine, hit_all, bad
    cdef int count, n_local
    cdef IV local_lines[2][6]

    for t in range(4):
        for k in range(3):
            for c in range(3):
                verts[t][k][c] = iv_make(lo[t, k, c], hi[t, k, c])
    for t in range(4):
        for k in range(3):
            kn = (k + 1) % 3
            for c in range(3):
                edge_d[t][k][c] = iv_sub(verts[t][kn][c], verts[t][k][c])
                edge_p[t][k][c] = verts[t][k][c]
            cross3(edge_p[t][k], edge_d[t][k], edge_m[t][k])

    qi = 0
    for e1 in range(3):
        for e2 in range(3):
            for e3 in range(3):
                for e4 in range(3):
                    choice[0] = e1
                    choice[1] = e2
                    choice[2] = e3
                    choice[3] = e4
                    for t in range(4):
                        for c in range(3):
                            rows[t][c] = edge_m[t][choice[t]][c]
                            rows[t][3 + c] = edge_d[t][choice[t]][c]
                    status[qi] = C_UNCERTAIN
                    counts[qi] = 0
                    if solve_kernel(rows, a_vec, b_vec) != 0:
                        qi += 1
                        continue
                    pa = form6(a_vec)
                    pb = form6(b_vec)
                    s = polar6(a_vec, b_vec)
                    disc = iv_sub(iv_mul(s, s),
                                  iv_mul(iv_make(4.0, 4.0), iv_mul(pa, pb)))
                    if disc.hi < 0.0:
                        status[qi] = C_NO_REAL
                        qi += 1
                        continue
                    if disc.lo <= 0.0 or not iv_nonzero(pa):
                        qi += 1
                        continue
                    sq = iv_sqrt(disc)
                    two_pa = iv_add(pa, pa)
                    neg_s = iv_neg(s)
                    count = 0
                    bad = 0
                    n_local = 0
                    for branch in range(2):
                        if branch == 0:
                            coef = iv_add(neg_s, sq)
                        else:
                            coef = iv_sub(neg_s, sq)
                        for j in range(6):
                            root[j] = iv_add(iv_mul(coef, a_vec[j]),
                                             iv_mul(two_pa, b_vec[j]))
                        affine = 0
                        for c in range(3):
                            if iv_nonzero(root[c]):
                                affine = 1
                                break
                        if not affine:
                            bad = 1
                            break
                        for j in range(6):
                            local_lines[n_local][j] = root[j]
                        n_local += 1
                        hit_all = 1
                        for t in range(4):
                            h = edge_hit(edge_p[t][choice[t]],
                                         edge_d[t][choice[t]],
                                         root, &root[3])
                            if h < 0:
                                bad = 1
                                break
                            if h == 0:
                                hit_all = 0
                                break
                        if bad:
                            break
                        if hit_all:
                            count += 1
                    if bad:
                        qi += 1
                        continue
                    for i in range(n_local):
                        if n_lines < MAX_LINES:
                            for j in range(6):
                                lines[n_lines][j] = local_lines[i][j]
                            line_q[n_lines] = qi
                            n_lines += 1
                    status[qi] = C_TWO_REAL
                    counts[qi] = count
                    qi += 1
    return count_uncertain_pairs(lines, line_q, n_lines)


def process_sample(double[:, :, ::1] lo, double[:, :, ::1] hi):
    """Filtered classification and tangent counting for one quadruple.

    Same contract as the pure-Python kernel: (status, counts,
    pairs_uncertain) with one entry per edge quadruple in lexicographic
    label order.
    """
    cdef unsigned char status[N_QUAD]
    cdef unsigned char counts[N_QUAD]
    cdef int pairs_uncertain
    with nogil:
        pairs_uncertain = compute(lo, hi, status, counts)
    return (
        [status[i] for i in range(N_QUAD)],
        [counts[i] for i in range(N_QUAD)],
        pairs_uncertain,
    )

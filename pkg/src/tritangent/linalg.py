"""Fraction-free exact linear algebra for small dense rational systems.

Only what the geometric solvers need: row-scaling to integers, Bareiss
forward elimination with first-nonzero column pivoting, and kernel bases.
Pivoting decisions are exact zero tests, so degeneracy detection is
deterministic and rounding-free.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Q = Fraction


def scale_rows_to_int(rows: Iterable[Sequence[Q]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (kernel-preserving)."""
    out = []
    for row in rows:
        row = [Q(x) for x in row]
        mult = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mult) for x in row])
    return out


def echelon(rows: list[list[int]]) -> tuple[int, list[tuple[int, int]], list[list[int]]]:
    """Bareiss fraction-free row echelon form.

    Returns (rank, pivots, M) where pivots is a list of (row, col) pairs in
    elimination order and M is the echelon matrix (integer entries).
    """
    M = [row[:] for row in rows]
    m = len(M)
    n = len(M[0]) if m else 0
    rank = 0
    prev = 1
    pivots: list[tuple[int, int]] = []
    for c in range(n):
        if rank == m:
            break
        pr = next((i for i in range(rank, m) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[rank], M[pr] = M[pr], M[rank]
        p = M[rank][c]
        for i in range(rank + 1, m):
            mic = M[i][c]
            row_i, row_r = M[i], M[rank]
            for j in range(n):
                row_i[j] = (row_i[j] * p - mic * row_r[j]) // prev
        prev = p
        pivots.append((rank, c))
        rank += 1
    return rank, pivots, M


def _reduce_int_vector(vec: list[int]) -> list[int]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g > 1:
        vec = [x // g for x in vec]
    lead = next((x for x in vec if x != 0), 1)
    if lead < 0:
        vec = [-x for x in vec]
    return vec


def kernel_basis(rows: Iterable[Sequence[Q]]) -> tuple[int, list[list[int]]]:
    """Rank and an integer basis of the kernel of a rational matrix.

    Basis vectors are gcd-reduced with positive leading entry, one per free
    column in increasing column order (deterministic).
    """
    int_rows = scale_rows_to_int(rows)
    if not int_rows:
        return 0, []
    n = len(int_rows[0])
    rank, pivots, M = echelon(int_rows)
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        x: list[Q] = [Q(0)] * n
        x[f] = Q(1)
        for r, c in reversed(pivots):
            acc = Q(0)
            row = M[r]
            for j in range(c + 1, n):
                if row[j] and x[j]:
                    acc += row[j] * x[j]
            x[c] = -acc / row[c]
        mult = lcm(*(v.denominator for v in x))
        vec = _reduce_int_vector([int(v * mult) for v in x])
        basis.append(vec)
    for vec in basis:
        for row in int_rows:
            if sum(a * b for a, b in zip(row, vec)) != 0:
                raise ArithmeticError("kernel back-substitution inconsistency")
    return rank, basis

"""Shared deterministic random generators for the test suite."""

from __future__ import annotations

from fractions import Fraction as Q

import numpy as np
import pytest

from tritangent.geometry import (
    DegenerateInput,
    PluckerLine,
    Triangle,
    cross,
    is_zero_vec,
    plucker_from_points,
    v_sub,
)


def stream(seed: int, index: int = 0) -> np.random.Generator:
    key = np.array([seed, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def rand_point(rng, bound=50):
    return tuple(Q(int(c)) for c in rng.integers(-bound, bound + 1, size=3))


def rand_triangle(rng, bound=50, index=0) -> Triangle:
    while True:
        verts = [rand_point(rng, bound) for _ in range(3)]
        if not is_zero_vec(cross(v_sub(verts[1], verts[0]), v_sub(verts[2], verts[0]))):
            return Triangle(*verts, index=index)


def rand_quadruple(rng, bound=50):
    return [rand_triangle(rng, bound, index=i + 1) for i in range(4)]


def rand_line(rng, bound=50) -> PluckerLine:
    while True:
        p = rand_point(rng, bound)
        q = rand_point(rng, bound)
        if p != q:
            return plucker_from_points(p, q)


def rand_fraction(rng, bound=30) -> Q:
    num = int(rng.integers(-bound, bound + 1))
    den = int(rng.integers(1, bound + 1))
    return Q(num, den)


@pytest.fixture
def rng():
    return stream(20240)

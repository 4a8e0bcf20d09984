"""Exact scalar layer: decimal parsing, quadratic extensions, the filter."""

from fractions import Fraction as Q

import pytest

from conftest import rand_fraction, stream
from tritangent.exact import (
    IntervalF,
    MixedRadicalError,
    ParseError,
    QuadExt,
    decimal_str,
    filtered_sign,
    parse_decimal,
    parse_rational,
    quad_eq_cross,
    quad_sign,
)


class TestParseDecimal:
    def test_simple(self):
        assert parse_decimal("-10.5") == Q(-21, 2)
        assert parse_decimal("0.250") == Q(1, 4)
        assert parse_decimal("17") == 17
        assert parse_decimal("+3.") == 3
        assert parse_decimal(".5") == Q(1, 2)

    def test_long_vertex_coordinate(self):
        got = parse_decimal(".5628568345479573470378601")
        assert got == Q(5628568345479573470378601, 10**25)

    def test_malformed(self):
        for bad, pos in [("", 0), ("-", 1), (".", 1), ("1.2.3", 3), ("1e5", 1),
                         ("a", 0), ("1,5", 1)]:
            with pytest.raises(ParseError) as err:
                parse_decimal(bad)
            assert err.value.position == pos

    def test_roundtrip_terminating(self):
        rng = stream(1)
        for _ in range(300):
            num = int(rng.integers(-10**6, 10**6))
            scale = 2 ** int(rng.integers(0, 8)) * 5 ** int(rng.integers(0, 8))
            q = Q(num, scale)
            assert parse_decimal(decimal_str(q)) == q

    def test_parse_rational(self):
        assert parse_rational("-21/2") == Q(-21, 2)
        assert parse_rational("0.5") == Q(1, 2)
        with pytest.raises(ParseError):
            parse_rational("1/0")


class TestQuadExt:
    def test_sign_cases(self):
        assert quad_sign(QuadExt(1, 0, 2)) == 1
        assert quad_sign(QuadExt(-3, 2, 2)) == -1  # 9 > 8, sign follows a
        assert quad_sign(QuadExt(0, 0, 5)) == 0
        assert quad_sign(QuadExt(-3, 2, 3)) == 1   # 9 < 12, sign follows b
        assert quad_sign(QuadExt(2, -1, 4)) == 0   # 2 - sqrt(4) = 0

    def test_sign_is_odd(self):
        rng = stream(2)
        for _ in range(500):
            x = QuadExt(rand_fraction(rng), rand_fraction(rng),
                        abs(rand_fraction(rng)))
            assert quad_sign(x) == -quad_sign(-x)

    def test_cross_radicand_equality(self):
        assert quad_eq_cross(QuadExt(3, 0, 7), QuadExt(3, 0, 11))
        assert not quad_eq_cross(QuadExt(0, 1, 2), QuadExt(0, 1, 3))
        assert not quad_eq_cross(QuadExt(1, 1, 2), QuadExt(1, -1, 2))
        # same value reached through different (b, d) factorizations
        assert quad_eq_cross(QuadExt(1, 2, 2), QuadExt(1, 1, 8))

    def test_perfect_square_normalizes(self):
        x = QuadExt(1, 3, Q(4, 9))  # 1 + 3*(2/3) = 3
        assert x.is_rational and x.a == 3
        assert QuadExt(0, 1, 0) == QuadExt(0)

    def test_field_axioms_random(self):
        rng = stream(3)
        for _ in range(1000):
            d = abs(rand_fraction(rng)) + 2
            x, y, z = (
                QuadExt(rand_fraction(rng), rand_fraction(rng), d)
                for _ in range(3)
            )
            assert (x + y) * z == x * z + y * z
            assert x * y == y * x
            assert (x - y) + y == x
            if quad_sign(z) != 0:
                assert (x / z) * z == x

    def test_mixed_radicands_forbidden(self):
        with pytest.raises(MixedRadicalError):
            QuadExt(0, 1, 2) + QuadExt(0, 1, 3)
        # rational values coerce into any extension
        assert QuadExt(1, 1, 2) + QuadExt(5) == QuadExt(6, 1, 2)
        assert QuadExt(1, 1, 2) + Q(1, 2) == QuadExt(Q(3, 2), 1, 2)

    def test_division(self):
        x = QuadExt(1, 1, 2)
        assert x / x == QuadExt(1)
        assert QuadExt(1) / x == QuadExt(-1, 1, 2)  # 1/(1+r2) = r2 - 1
        with pytest.raises(ZeroDivisionError):
            x / QuadExt(0)

    def test_hash_consistent_with_eq(self):
        assert hash(QuadExt(3, 0, 7)) == hash(QuadExt(3, 0, 11)) == hash(Q(3))
        assert hash(QuadExt(1, 2, 2)) == hash(QuadExt(1, 1, 8))


class TestIntervalFilter:
    def test_certain_signs(self):
        assert IntervalF(0.5, 0.6).sign() == 1
        assert IntervalF(-2.0, -1.0).sign() == -1
        assert IntervalF(-1e-12, 1e-12).sign() is None

    def test_filtered_sign_uses_exact_fallback(self):
        narrow = IntervalF(-1e-12, 1e-12)
        assert filtered_sign(narrow, lambda: Q(0)) == 0
        assert filtered_sign(narrow, lambda: Q(1, 10**30)) == 1
        calls = []
        assert filtered_sign(IntervalF(0.5, 0.6), lambda: calls.append(1)) == 1
        assert not calls  # certain interval never evaluates the thunk

    def test_from_fraction_contains_value(self):
        rng = stream(4)
        for _ in range(500):
            q = Q(int(rng.integers(-10**9, 10**9)),
                  int(rng.integers(1, 10**9)))
            iv = IntervalF.from_fraction(q)
            assert Q(iv.lo) <= q <= Q(iv.hi)

    def test_oracle_equivalence_random_expressions(self):
        # random {+,-,*} DAGs evaluated both ways: the filter may never
        # disagree with the exact sign
        rng = stream(5)
        for _ in range(1000):
            exact = [rand_fraction(rng, 10) for _ in range(4)]
            approx = [IntervalF.from_fraction(q) for q in exact]
            for _ in range(6):
                i, j = (int(v) for v in rng.integers(0, len(exact), size=2))
                op = int(rng.integers(0, 3))
                if op == 0:
                    exact.append(exact[i] + exact[j])
                    approx.append(approx[i] + approx[j])
                elif op == 1:
                    exact.append(exact[i] - exact[j])
                    approx.append(approx[i] - approx[j])
                else:
                    exact.append(exact[i] * exact[j])
                    approx.append(approx[i] * approx[j])
            value = exact[-1]
            want = -1 if value < 0 else (1 if value > 0 else 0)
            assert filtered_sign(approx[-1], lambda: value) == want

    def test_interval_arithmetic_outward(self):
        a = IntervalF.exact(0.1)
        b = IntervalF.exact(0.2)
        s = a + b
        assert s.lo <= 0.1 + 0.2 <= s.hi and s.lo < s.hi
        p = a * b
        assert p.lo <= 0.1 * 0.2 <= p.hi
        r = IntervalF(2.0, 2.0).sqrt()
        assert r.lo <= 2**0.5 <= r.hi

    def test_division_by_zero_interval_is_whole_line(self):
        q = IntervalF(1.0, 2.0) / IntervalF(-1.0, 1.0)
        assert q.sign() is None

"""Exact scalar arithmetic: rationals, quadratic extensions, interval filter.

Rationals are plain ``fractions.Fraction`` (always lowest terms, positive
denominator).  ``QuadExt`` represents a + b*sqrt(d) with rational a, b and a
nonnegative rational d; values with the same d form a field.  ``IntervalF``
is an outward-rounded hardware-float interval used to skip exact evaluation
whenever the sign of an expression is already determined.

All value types are immutable and safe to share between threads.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Q = Fraction  # rational scalar type used throughout the package

_DECIMAL_RE = re.compile(r"[+-]?(\d*)(?:\.(\d*))?")

# trial divisors used to pull small square factors out of a radicand
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ParseError(ValueError):
    """Malformed numeric string; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class MixedRadicalError(ValueError):
    """Arithmetic between quadratic extensions over different radicands."""


_Q0 = Q(0)


def parse_decimal(s: str) -> Q:
    """Parse a plain decimal string (optional sign, optional point) exactly.

    Grammar: ``[+-]? digits* ('.' digits*)?`` with at least one digit overall.
    """
    m = _DECIMAL_RE.match(s)
    if m.end() != len(s):
        raise ParseError(f"invalid decimal {s!r}", m.end())
    int_part, frac_part = m.group(1), m.group(2)
    if not int_part and not frac_part:
        raise ParseError(f"no digits in {s!r}", len(s))
    sign = -1 if s.startswith("-") else 1
    frac_part = frac_part or ""
    scale = 10 ** len(frac_part)
    value = int(int_part or "0") * scale + int(frac_part or "0")
    return Q(sign * value, scale)


def parse_rational(s: str) -> Q:
    """Parse ``"p/q"`` or a decimal string into an exact rational."""
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            return Q(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"invalid rational {s!r}: {exc}", 0) from None
    return parse_decimal(s)


def format_rational(q: Q) -> str:
    """Serialize as ``p/q`` in lowest terms (``p`` alone when q == 1)."""
    return str(q)


def decimal_str(q: Q) -> str:
    """Exact decimal expansion of a rational with terminating expansion.

    Raises ValueError when the denominator has prime factors besides 2 and 5.
    """
    den = q.denominator
    two = five = 0
    while den % 2 == 0:
        den //= 2
        two += 1
    while den % 5 == 0:
        den //= 5
        five += 1
    if den != 1:
        raise ValueError(f"{q} has no terminating decimal expansion")
    digits = max(two, five)
    scaled = abs(q.numerator) * 10**digits // q.denominator
    sign = "-" if q < 0 else ""
    if digits == 0:
        return f"{sign}{scaled}"
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def _split_square(n: int) -> tuple[int, int]:
    """Return (k, m) with n = k^2 * m, pulling out the full square root when
    n is a perfect square and small prime-square factors otherwise."""
    if n == 0:
        return 1, 0
    r = math.isqrt(n)
    if r * r == n:
        return r, 1
    k = 1
    for p in _SMALL_PRIMES:
        sq = p * p
        while n % sq == 0:
            n //= sq
            k *= p
    return k, n


class QuadExt:
    """An element a + b*sqrt(d) of a real quadratic extension of Q.

    Normal form: d is a nonnegative square-free-reduced integer (perfect
    square factors of small primes removed, perfect squares folded into the
    rational part), and d == 0 whenever b == 0.  With that convention two
    values are equal iff their (a, sign(b), b^2*d) invariants match, which is
    how cross-radicand equality and hashing are decided.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        a = Q(a)
        b = Q(b)
        d = Q(d)
        if d < 0:
            raise ValueError("negative radicand")
        if b == 0 or d == 0:
            a, b, d = a, Q(0), Q(0)
        else:
            # fold the denominator into b, then extract square factors
            num, den = d.numerator, d.denominator
            k, m = _split_square(num * den)
            b = b * Q(k, den)
            if m == 1:
                a, b, d = a + b, Q(0), Q(0)
            elif m == 0:
                a, b, d = a, Q(0), Q(0)
            else:
                d = Q(m)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def _raw(cls, a, b, d):
        """Internal constructor for arithmetic results whose operands are
        already canonical: skips radicand renormalization."""
        self = object.__new__(cls)
        if not b:
            d = _Q0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)
        return self

    @staticmethod
    def of(x) -> "QuadExt":
        if isinstance(x, QuadExt):
            return x
        return QuadExt(Q(x))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _join(self, other) -> tuple["QuadExt", "QuadExt", Q]:
        """Coerce both operands into a common radicand or raise."""
        other = QuadExt.of(other)
        if self.b == 0:
            return self, other, other.d
        if other.b == 0:
            return self, other, self.d
        if self.d != other.d:
            raise MixedRadicalError(
                f"cannot mix sqrt({self.d}) with sqrt({other.d})"
            )
        return self, other, self.d

    def __add__(self, other):
        x, y, d = self._join(other)
        return QuadExt._raw(x.a + y.a, x.b + y.b, d)

    __radd__ = __add__

    def __sub__(self, other):
        x, y, d = self._join(other)
        return QuadExt._raw(x.a - y.a, x.b - y.b, d)

    def __rsub__(self, other):
        return QuadExt.of(other).__sub__(self)

    def __neg__(self):
        return QuadExt._raw(-self.a, -self.b, self.d)

    def __mul__(self, other):
        x, y, d = self._join(other)
        return QuadExt._raw(
            x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        x, y, d = self._join(other)
        norm = y.a * y.a - y.b * y.b * d
        if norm == 0:
            raise ZeroDivisionError("division by zero quadratic value")
        num_a = x.a * y.a - x.b * y.b * d
        num_b = x.b * y.a - x.a * y.b
        return QuadExt._raw(num_a / norm, num_b / norm, d)

    def __rtruediv__(self, other):
        return QuadExt.of(other).__truediv__(self)

    def conjugate(self) -> "QuadExt":
        return QuadExt._raw(self.a, -self.b, self.d)

    def _key(self):
        b = self.b
        return (self.a, 0 if b == 0 else (1 if b > 0 else -1), b * b * self.d)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadExt(other)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash(self._key())

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def sign(self) -> int:
        return quad_sign(self)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(float(self.d))

    def to_json(self) -> dict:
        return {
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "d": format_rational(self.d),
        }

    def __repr__(self):
        if self.b == 0:
            return f"QuadExt({self.a})"
        return f"QuadExt({self.a} + {self.b}*sqrt({self.d}))"


def quad_sign(x: QuadExt) -> int:
    """Exact sign of a + b*sqrt(d), decided by rational comparisons only."""
    a, b, d = x.a, x.b, x.d
    if b == 0:
        return -1 if a < 0 else (1 if a > 0 else 0)
    if a == 0:
        return 1 if b > 0 else -1
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: compare a^2 against b^2 d, the larger magnitude wins
    lhs = a * a
    rhs = b * b * d
    if lhs == rhs:
        return 0
    big_is_a = lhs > rhs
    if big_is_a:
        return 1 if a > 0 else -1
    return 1 if b > 0 else -1


def quad_eq_cross(x: QuadExt, y: QuadExt) -> bool:
    """Exact equality of two quadratic values over possibly different d."""
    return x._key() == y._key()


_INF = math.inf


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


class IntervalF:
    """Closed float interval [lo, hi] guaranteed to contain an exact value.

    Every operation widens its result outward by one ulp, so the containment
    invariant survives rounding regardless of the FPU rounding mode.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float | None = None):
        if hi is None:
            hi = lo
        if not (lo <= hi):  # also catches NaN
            lo, hi = -_INF, _INF
        self.lo = lo
        self.hi = hi

    @staticmethod
    def exact(x: float) -> "IntervalF":
        return IntervalF(x, x)

    @staticmethod
    def from_fraction(q: Q) -> "IntervalF":
        f = float(q)
        if math.isinf(f):
            return IntervalF(-_INF, _INF)
        exact = Fraction(f)
        lo = f if exact <= q else _down(f)
        hi = f if exact >= q else _up(f)
        return IntervalF(lo, hi)

    def __add__(self, other):
        return IntervalF(_down(self.lo + other.lo), _up(self.hi + other.hi))

    def __sub__(self, other):
        return IntervalF(_down(self.lo - other.hi), _up(self.hi - other.lo))

    def __neg__(self):
        return IntervalF(-self.hi, -self.lo)

    def __mul__(self, other):
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return IntervalF(_down(min(products)), _up(max(products)))

    def __truediv__(self, other):
        if other.lo <= 0.0 <= other.hi:
            return IntervalF(-_INF, _INF)
        quotients = (
            self.lo / other.lo,
            self.lo / other.hi,
            self.hi / other.lo,
            self.hi / other.hi,
        )
        return IntervalF(_down(min(quotients)), _up(max(quotients)))

    def sqrt(self) -> "IntervalF":
        if self.hi < 0.0:
            return IntervalF(-_INF, _INF)
        lo = max(self.lo, 0.0)
        return IntervalF(
            max(0.0, _down(math.sqrt(lo))), _up(math.sqrt(self.hi))
        )

    def contains_zero(self) -> bool:
        return self.lo <= 0.0 <= self.hi

    def sign(self) -> int | None:
        """Certified sign, or None when the interval straddles zero."""
        if self.lo > 0.0:
            return 1
        if self.hi < 0.0:
            return -1
        if self.lo == 0.0 == self.hi:
            return 0
        return None

    def __repr__(self):
        return f"IntervalF({self.lo!r}, {self.hi!r})"


def filtered_sign(approx: IntervalF, exact_expr) -> int:
    """Sign via the float filter with an exact fallback.

    ``exact_expr`` is a thunk evaluating the same expression exactly; it is
    only called when the interval does not certify a sign.
    """
    s = approx.sign()
    if s is not None:
        return s
    value = exact_expr()
    if isinstance(value, QuadExt):
        return quad_sign(value)
    return -1 if value < 0 else (1 if value > 0 else 0)

"""Exact arithmetic in real quadratic fields Q(sqrt(D)).

A QuadNum is the element x + y*sqrt(D) of the field of discriminant D,
stored as reduced rationals (x, y) together with D.  The value is read
through the first real embedding; the second embedding is reached only via
galois_conj.  Signs and comparisons are decided exactly in integer
arithmetic, never through floats.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arith import is_square, is_squarefree

Rational = Fraction


def is_fundamental(value: int) -> bool:
    """True when value is a fundamental real quadratic discriminant."""
    if value <= 0 or is_square(value):
        return False
    if value % 4 == 1:
        return is_squarefree(value)
    if value % 4 == 0:
        m = value // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


@dataclass(frozen=True, order=True)
class Discriminant:
    """A positive nonsquare integer congruent to 0 or 1 mod 4."""

    value: int

    def __post_init__(self):
        v = self.value
        if not isinstance(v, int) or v <= 0:
            raise ValueError(f"discriminant must be a positive integer: {v!r}")
        if v % 4 not in (0, 1):
            raise ValueError(f"discriminant must be 0 or 1 mod 4: {v}")
        if is_square(v):
            raise ValueError(f"discriminant must not be a perfect square: {v}")

    @property
    def is_fundamental(self) -> bool:
        return is_fundamental(self.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Discriminant({self.value})"


def as_discriminant(d: Union[int, Discriminant]) -> Discriminant:
    return d if isinstance(d, Discriminant) else Discriminant(d)


def decompose(d: Union[int, Discriminant]) -> tuple[int, Discriminant]:
    """Write D = f^2 * E with E a fundamental discriminant and f maximal."""
    v = as_discriminant(d).value
    f = math.isqrt(v)
    while f >= 1:
        if v % (f * f) == 0 and is_fundamental(v // (f * f)):
            return f, Discriminant(v // (f * f))
        f -= 1
    raise AssertionError(f"no fundamental part for {v}")  # unreachable


def _sign_pair(x: Fraction, y: Fraction, d: int) -> int:
    # sign of x + y*sqrt(d), exact
    sx = (x > 0) - (x < 0)
    sy = (y > 0) - (y < 0)
    if sy == 0:
        return sx
    if sx == 0:
        return sy
    if sx == sy:
        return sx
    # opposite signs: compare x^2 against d*y^2
    t = x * x - d * y * y
    s = (t > 0) - (t < 0)
    return s * sx


class QuadNum:
    """x + y*sqrt(D), exact.  Immutable and hashable."""

    __slots__ = ("d", "x", "y")

    def __init__(self, d: Union[int, Discriminant], x=0, y=0):
        object.__setattr__(self, "d", int(as_discriminant(d).value))
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))

    def __setattr__(self, *a):
        raise AttributeError("QuadNum is immutable")

    # -- coercion helpers ------------------------------------------------
    def _coerce(self, other) -> "QuadNum":
        if isinstance(other, QuadNum):
            if other.d != self.d:
                raise ValueError(
                    f"mixed discriminants: sqrt({self.d}) vs sqrt({other.d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum(self.d, other)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadNum(self.d, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(self.d, -self.x, -self.y)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadNum(self.d, self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadNum(
            self.d,
            self.x * o.x + self.d * self.y * o.y,
            self.x * o.y + self.y * o.x,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadNum":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(D))")
        return QuadNum(self.d, self.x / n, -self.y / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadNum(self.d, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- field structure ---------------------------------------------------
    def galois_conj(self) -> "QuadNum":
        return QuadNum(self.d, self.x, -self.y)

    def norm(self) -> Fraction:
        return self.x * self.x - self.d * self.y * self.y

    def trace(self) -> Fraction:
        return 2 * self.x

    def sign(self) -> int:
        return _sign_pair(self.x, self.y, self.d)

    @property
    def is_rational(self) -> bool:
        return self.y == 0

    def rational_value(self) -> Fraction:
        if self.y != 0:
            raise ValueError(f"{self} is irrational")
        return self.x

    def floor(self) -> int:
        """Exact floor of the first embedding."""
        if self.y == 0:
            return math.floor(self.x)
        # x + y*sqrt(d): bracket y*sqrt(d) by integer bounds and refine
        lo = math.floor(float(self)) - 2
        hi = lo + 5
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if (self - mid).sign() >= 0:
                lo = mid
            else:
                hi = mid
        return lo if (self - lo).sign() >= 0 and (self - (lo + 1)).sign() < 0 else lo

    # -- comparisons -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        if isinstance(other, QuadNum):
            return self.d == other.d and self.x == other.x and self.y == other.y
        return NotImplemented

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.d, self.x, self.y))

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare QuadNum with {type(other)}")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- conversions ---------------------------------------------------------
    def __float__(self) -> float:
        return float(self.x) + float(self.y) * math.sqrt(self.d)

    def key(self) -> tuple:
        """Deterministic sort/hash key (structural, not value-based)."""
        return (
            self.x.numerator,
            self.x.denominator,
            self.y.numerator,
            self.y.denominator,
        )

    def __repr__(self):
        return f"QuadNum({self.d}, {self.x}, {self.y})"

    def __str__(self):
        return format_quadnum(self)


def sign_of(q: Union[QuadNum, int, Fraction]) -> int:
    """Exact sign of the first embedding."""
    if isinstance(q, QuadNum):
        return q.sign()
    return (q > 0) - (q < 0)


def galois_conj(q: QuadNum) -> QuadNum:
    return q.galois_conj()


def quad_sqrt_d(d: Union[int, Discriminant]) -> QuadNum:
    """The element sqrt(D)."""
    return QuadNum(d, 0, 1)


# -- string form -----------------------------------------------------------
#
# Grammar: "p/q" or "p/q+r/s*sqrt(D)", optional signs and omitted "/1"
# denominators, no whitespace.  Formatting is canonical (lowest terms,
# "/1" suppressed) and round-trips exactly through parse_quadnum.

_FRACTION = r"[+-]?\d+(?:/\d+)?"
_QUAD_RE = re.compile(
    rf"^(?P<x>{_FRACTION})?"
    rf"(?:(?P<sign>[+-])?(?:(?P<y>\d+(?:/\d+)?)\*)?sqrt\((?P<m>\d+)\))?$"
)


def _fmt_frac(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_quadnum(q: QuadNum) -> str:
    if q.y == 0:
        return _fmt_frac(q.x)
    ay = abs(q.y)
    sign = "+" if q.y > 0 else "-"
    rad = f"{_fmt_frac(ay)}*sqrt({q.d})"
    return f"{_fmt_frac(q.x)}{sign}{rad}"


def parse_radical(text: str) -> tuple[Fraction, Fraction, int]:
    """Parse "p/q", "p/q+r/s*sqrt(m)" etc. into (x, y, m); m = 0 if rational."""
    s = text.strip().replace(" ", "")
    m = _QUAD_RE.match(s)
    if not m or (m.group("x") is None and m.group("m") is None):
        raise ValueError(f"cannot parse field element: {text!r}")
    x = Fraction(m.group("x")) if m.group("x") is not None else Fraction(0)
    if m.group("m") is None:
        return x, Fraction(0), 0
    y = Fraction(m.group("y")) if m.group("y") is not None else Fraction(1)
    if m.group("sign") == "-":
        y = -y
    elif m.group("sign") is None and m.group("x") is not None:
        raise ValueError(f"missing sign before radical part: {text!r}")
    rad = int(m.group("m"))
    if rad <= 0:
        raise ValueError(f"radicand must be positive: {text!r}")
    if is_square(rad):
        # fold an exact square root into the rational part
        return x + y * math.isqrt(rad), Fraction(0), 0
    return x, y, rad


def _squarefree_core(n: int) -> tuple[int, int]:
    """n = s^2 * core with core squarefree; returns (core, s)."""
    core, s = 1, 1
    from .arith import factorize

    for p, e in factorize(n):
        if e % 2:
            core *= p
        s *= p ** (e // 2)
    return core, s


def parse_quadnum(text: str, d: Union[int, Discriminant, None] = None) -> QuadNum:
    """Parse a field element, re-expressing sqrt(m) in Q(sqrt(D)).

    With d=None a discriminant is inferred: the fundamental discriminant of
    Q(sqrt(m)) for irrational input, which fails for purely rational input.
    """
    x, y, rad = parse_radical(text)
    if rad == 0:
        if d is None:
            raise ValueError(f"no discriminant given for rational value {text!r}")
        return QuadNum(d, x)
    core, s = _squarefree_core(rad)
    if d is None:
        d = core if core % 4 == 1 else 4 * core
    dv = as_discriminant(d).value
    dcore, ds = _squarefree_core(dv)
    if dcore != core:
        raise ValueError(
            f"sqrt({rad}) does not lie in Q(sqrt({dv})) (cores {core} vs {dcore})"
        )
    # sqrt(rad) = (s/ds) * sqrt(D)
    return QuadNum(dv, x, y * Fraction(s, ds))


def fundamental_discriminant_for_radicand(rad: int) -> Discriminant:
    """Smallest discriminant whose field contains sqrt(rad)."""
    if rad <= 0 or is_square(rad):
        raise ValueError(f"radicand must be a positive nonsquare: {rad}")
    core, _ = _squarefree_core(rad)
    return Discriminant(core if core % 4 == 1 else 4 * core)

"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

A :class:`QuadNumber` stores a value (a + b*sqrt(d)) / c with integer a, b, c
and a nonnegative integer radicand d.  The representation is canonical:
c > 0, gcd(a, b, c) = 1, square factors are pulled out of d, and purely
rational values are stored with b = 0, d = 1.  Comparisons are exact (no
floating point); the total order is decided by at most one certified
square-root comparison.

Mixing two irrational radicands in one operation is an error; rationals
combine with any radicand.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Union

_Rational = Union[int, Fraction]

_SMALL_PRIMES_LIMIT = 20_000


def _squarefree_split(d: int) -> tuple[int, int]:
    """Return (f, d0) with d = f*f*d0 and d0 free of small square factors.

    Square factors with prime part above _SMALL_PRIMES_LIMIT are only
    detected when the remainder is a perfect square; this keeps the split
    cheap and is canonical as long as all values in a computation come from
    the same discriminant.
    """
    if d in (0, 1):
        return 1, d
    f = 1
    p = 2
    while p * p <= d and p <= _SMALL_PRIMES_LIMIT:
        while d % (p * p) == 0:
            d //= p * p
            f *= p
        p += 1 if p == 2 else 2
    root = isqrt(d)
    if root * root == d:
        return f * root, 1
    return f, d


class QuadNumber:
    """An exact element (a + b*sqrt(d)) / c of a real quadratic field."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int = 0, c: int = 1, d: int = 1):
        if c == 0:
            raise ZeroDivisionError("denominator is zero")
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        f, d0 = _squarefree_split(d)
        if f != 1:
            b *= f
        if d0 <= 1:
            a += b * d0  # d0 == 1 folds the root into the rational part
            b = 0
            d0 = 1
        if b == 0:
            d0 = 1
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(abs(a), abs(b)), c)
        if g > 1:
            a //= g
            b //= g
            c //= g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d0)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("QuadNumber is immutable")

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def from_rational(q: _Rational) -> "QuadNumber":
        q = Fraction(q)
        return QuadNumber(q.numerator, 0, q.denominator, 1)

    @staticmethod
    def sqrt_of(d: int) -> "QuadNumber":
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        return QuadNumber(0, 1, 1, d)

    # -- predicates ------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is irrational")
        return Fraction(self.a, self.c)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    # -- coercion ----------------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "QuadNumber":
        if isinstance(value, QuadNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return QuadNumber.from_rational(value)
        return NotImplemented

    def _common_d(self, other: "QuadNumber") -> int:
        if self.b == 0:
            return other.d
        if other.b == 0:
            return self.d
        if self.d != other.d:
            raise ValueError(f"incompatible radicands {self.d} and {other.d}")
        return self.d

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        other = QuadNumber._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_d(other)
        return QuadNumber(
            self.a * other.c + other.a * self.c,
            self.b * other.c + other.b * self.c,
            self.c * other.c,
            d,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other):
        other = QuadNumber._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = QuadNumber._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = QuadNumber._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_d(other)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return QuadNumber(a, b, self.c * other.c, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadNumber":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        return QuadNumber(self.c * self.a, -self.c * self.b, norm, self.d)

    def __truediv__(self, other):
        other = QuadNumber._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = QuadNumber._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadNumber(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- order ----------------------------------------------------------------

    def sign(self) -> int:
        """Exact sign: -1, 0, or +1."""
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d
        lhs, rhs = a * a, b * b * d
        if a > 0:  # b < 0
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return 1 if rhs > lhs else (-1 if rhs < lhs else 0)

    def _cmp(self, other) -> int:
        other = QuadNumber._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign()

    def __eq__(self, other):
        c = self._cmp(other)
        return c == 0 if c is not NotImplemented else NotImplemented

    def __lt__(self, other):
        c = self._cmp(other)
        return c < 0 if c is not NotImplemented else NotImplemented

    def __le__(self, other):
        c = self._cmp(other)
        return c <= 0 if c is not NotImplemented else NotImplemented

    def __gt__(self, other):
        c = self._cmp(other)
        return c > 0 if c is not NotImplemented else NotImplemented

    def __ge__(self, other):
        c = self._cmp(other)
        return c >= 0 if c is not NotImplemented else NotImplemented

    def __hash__(self):
        if self.is_rational:
            return hash(Fraction(self.a, self.c))
        return hash((self.a, self.b, self.c, self.d))

    def __bool__(self):
        return self.sign() != 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- rounding / approximation ----------------------------------------------

    def floor(self) -> int:
        """Exact floor, decided by certified comparisons."""
        if self.is_rational:
            return self.a // self.c
        m = int(self.to_float())  # candidate, then fix up exactly
        while (self - m).sign() < 0:
            m -= 1
        while (self - (m + 1)).sign() >= 0:
            m += 1
        return m

    def ceil(self) -> int:
        return -((-self).floor())

    def approx(self, bits: int = 96) -> Fraction:
        """Rational approximation with absolute error below |b|/c * 2**-bits."""
        if self.b == 0:
            return Fraction(self.a, self.c)
        root = Fraction(isqrt(self.d << (2 * bits)), 1 << bits)
        return Fraction(self.a, self.c) + Fraction(self.b, self.c) * root

    def to_float(self) -> float:
        return float(self.approx())

    def root_float(self, n: int) -> float:
        """Float n-th root of a nonnegative value (diagnostic precision)."""
        if self.sign() < 0:
            raise ValueError("negative value has no real even root here")
        return float(self.approx()) ** (1.0 / n)

    def __float__(self):
        return self.to_float()

    def __repr__(self):
        if self.is_rational:
            return f"QuadNumber({self.a}/{self.c})" if self.c != 1 else f"QuadNumber({self.a})"
        return f"QuadNumber(({self.a} + {self.b}*sqrt({self.d}))/{self.c})"

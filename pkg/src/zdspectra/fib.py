"""Exact arithmetic for a weighted Fibonacci family and its quadratic pair.

The family is F[0] = F[1] = 1 and F[k] = F[k-1] + (m-1)*F[k-2] for an
integer weight m >= 2 (m = 2 gives the classical Fibonacci numbers).
Consecutive-term ratios are exact rationals, and the two roots of
x**2 - x - (m-1) form the pair (phi, xi) with phi + xi = 1 and
phi*xi = -(m-1).  Everything here is integer or rational arithmetic;
no floats are produced except on explicit conversion.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

# Exact rationals are normalized fractions in lowest terms.
Rational = Fraction

__all__ = [
    "Rational",
    "FibSequence",
    "QuadraticNumber",
    "fib",
    "gamma",
    "docagne_residual",
    "golden_pair",
]


def _check_weight(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise ValueError(f"weight m must be an integer >= 2, got {m!r}")


class FibSequence:
    """Memoized values of F[k] = F[k-1] + (m-1)*F[k-2] with F[0] = F[1] = 1.

    The cache extends on demand and extension is locked, so one instance
    may be shared across threads.
    """

    def __init__(self, m: int) -> None:
        _check_weight(m)
        self.m = m
        self._values = [1, 1]
        self._lock = threading.Lock()

    def value(self, k: int) -> int:
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise ValueError(f"index k must be an integer >= 0, got {k!r}")
        if k >= len(self._values):
            with self._lock:
                vals = self._values
                while len(vals) <= k:
                    vals.append(vals[-1] + (self.m - 1) * vals[-2])
        return self._values[k]

    def ratio(self, k: int) -> Fraction:
        """gamma[k] = F[k+1]/F[k] in lowest terms; gamma[0] == 1."""
        return Fraction(self.value(k + 1), self.value(k))

    def __repr__(self) -> str:
        return f"FibSequence(m={self.m})"


def fib(m: int, k: int) -> int:
    """F[k] for weight m."""
    return FibSequence(m).value(k)


def gamma(m: int, k: int) -> Fraction:
    """Ratio F[k+1]/F[k] for weight m, as an exact rational."""
    return FibSequence(m).ratio(k)


def docagne_residual(m: int, l: int, r: int) -> int:
    """F[l]*F[r+1] - F[l+1]*F[r] - (1-m)**(r+1) * F[l-r-1].

    Zero exactly when the cross-product identity holds.  Requires
    l > r >= 0; the degenerate l == r case is rejected rather than
    silently reported as zero.
    """
    if not isinstance(l, int) or not isinstance(r, int):
        raise ValueError(f"indices must be integers, got l={l!r}, r={r!r}")
    if r < 0 or l <= r:
        raise ValueError(f"need l > r >= 0, got l={l}, r={r}")
    f = FibSequence(m)
    lhs = f.value(l) * f.value(r + 1) - f.value(l + 1) * f.value(r)
    return lhs - (1 - m) ** (r + 1) * f.value(l - r - 1)


@dataclass(frozen=True, eq=False)
class QuadraticNumber:
    """Exact a + b*sqrt(d) with rational a, b and integer d >= 0.

    Values are canonical: when d is a perfect square (or b == 0) the
    number collapses to a plain rational stored as (a, 0, 0), so field
    equality is value equality.  Binary operations require matching d
    unless one operand is rational.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self) -> None:
        a = Fraction(self.a)
        b = Fraction(self.b)
        d = self.d
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            raise ValueError(f"radicand d must be an integer >= 0, got {d!r}")
        if b == 0:
            d = 0
        else:
            root = math.isqrt(d)
            if root * root == d:
                a += b * root
                b = Fraction(0)
                d = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    # -- predicates and conversions --------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b, self.d)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(value: object) -> "QuadraticNumber | None":
        if isinstance(value, QuadraticNumber):
            return value
        if isinstance(value, bool):
            return None
        if isinstance(value, (int, Fraction)):
            return QuadraticNumber(Fraction(value))
        return None

    def _common_d(self, other: QuadraticNumber) -> int:
        if self.d == other.d or other.d == 0:
            return self.d
        if self.d == 0:
            return other.d
        raise ValueError(f"mixed radicands: sqrt({self.d}) vs sqrt({other.d})")

    def __add__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._common_d(o)
        return QuadraticNumber(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self) -> QuadraticNumber:
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._common_d(o)
        return QuadraticNumber(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadraticNumber:
        # (a + b*sqrt(d))**-1 = (a - b*sqrt(d)) / (a**2 - b**2 * d); the
        # norm only vanishes for the zero value because d is canonical.
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero quadratic number")
        return QuadraticNumber(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> QuadraticNumber:
        if not isinstance(exponent, int) or isinstance(exponent, bool) or exponent < 0:
            raise ValueError(f"exponent must be an integer >= 0, got {exponent!r}")
        result = QuadraticNumber(Fraction(1))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b, self.d) == (o.a, o.b, o.d)

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)
        root = f"sqrt({self.d})" if self.b.numerator in (1, -1) and self.b.denominator == 1 \
            else f"{abs(self.b)}*sqrt({self.d})"
        sign = "-" if self.b < 0 else "+"
        if self.a == 0:
            return root if self.b > 0 else f"-{root}"
        return f"{self.a} {sign} {root}"

    def __repr__(self) -> str:
        return f"QuadraticNumber(a={self.a!r}, b={self.b!r}, d={self.d})"


def golden_pair(m: int) -> tuple[QuadraticNumber, QuadraticNumber]:
    """The roots (phi, xi) of x**2 - x - (m-1), exactly.

    phi = (1 + sqrt(4m-3))/2 and xi = (1 - sqrt(4m-3))/2 = -(m-1)/phi, so
    phi + xi == 1 and phi*xi == -(m-1).  Both collapse to plain rationals
    whenever 4m-3 is a perfect square (for example m = 3 gives (2, -1)).
    """
    _check_weight(m)
    d = 4 * m - 3
    half = Fraction(1, 2)
    return QuadraticNumber(half, half, d), QuadraticNumber(half, -half, d)

"""Exact complex numbers with rational real and imaginary parts.

Instances live inside numpy ``object`` arrays so the same slicing and
broadcasting code serves both the float and the exact numeric mode.
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction

__all__ = ["GaussianRational", "to_gaussian", "parse_rational"]


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an integer into a :class:`Fraction`.

    Decimal strings are rejected; an exact file must not smuggle in floats.
    """
    if isinstance(text, bool):
        raise TypeError("booleans are not rational amplitudes")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = str(text).strip()
    if any(c in s for c in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(s)


def _inexact(x) -> bool:
    # float-like scalars promote to complex; arrays and others defer
    return isinstance(x, numbers.Complex) and not isinstance(x, bool)


class GaussianRational:
    """A number ``re + im*i`` with ``re`` and ``im`` held as fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, numbers.Rational):
            return GaussianRational(Fraction(other.numerator, other.denominator))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) + other if _inexact(other) else NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) - other if _inexact(other) else NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return other - complex(self) if _inexact(other) else NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) * other if _inexact(other) else NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) / other if _inexact(other) else NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return other / complex(self) if _inexact(other) else NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral) or k < 0:
            return complex(self) ** k
        out = GaussianRational(1)
        for _ in range(int(k)):
            out = out * self
        return out

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.sqrt(self.abs2())

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, numbers.Number):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"({self.re}{sign}{abs(self.im)}i)"


def to_gaussian(x) -> GaussianRational:
    """Convert an exact scalar (int, Fraction, GaussianRational) or a
    ``(re, im)`` pair of rationals/strings into a :class:`GaussianRational`."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (tuple, list)):
        re, im = x
        return GaussianRational(parse_rational(re), parse_rational(im))
    if isinstance(x, numbers.Rational) and not isinstance(x, bool):
        return GaussianRational(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return GaussianRational(parse_rational(x))
    raise TypeError(f"cannot represent {x!r} exactly")

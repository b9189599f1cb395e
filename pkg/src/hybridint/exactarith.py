"""Exact scalars: rationals, Gaussian rationals and dyadic big floats.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in canonical form (reduced, positive denominator).  Gaussian rationals and
big floats are small immutable wrappers around them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from mpmath import libmp

Rational = Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "BigFloat",
    "normalize",
    "to_rational_exact",
    "gaussian_div",
    "parse_rational",
    "format_rational",
    "as_rational",
]


def normalize(n: int, d: int) -> Fraction:
    """Return the canonical rational ``n/d``."""
    if d == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(n, d)


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, BigFloat):
        return value.to_rational()
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


_DECIMAL = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")
_POWER = re.compile(r"^([+-]?\d+)\s*(?:\^|\*\*)\s*\(?\s*([+-]?\d+)\s*\)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer, a decimal (``"1.5e-3"``) or ``"2^-40"``.

    Decimal strings are read exactly, so ``"0.1"`` is ``1/10``.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    m = _POWER.match(s)
    if m:
        return Fraction(int(m.group(1))) ** int(m.group(2))
    if "/" in s:
        num, _, den = s.partition("/")
        d = parse_rational(den)
        if d == 0:
            raise ZeroDivisionError("division by zero")
        return parse_rational(num) / d
    if _DECIMAL.match(s):
        return Fraction(s)
    raise ValueError(f"invalid rational literal {text!r}")


def format_rational(q: Fraction) -> str:
    """Ratio form used for exact interchange: ``"p/q"`` or ``"p"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, slots=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", as_rational(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", as_rational(self.im))

    @staticmethod
    def coerce(value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return GaussianRational(Fraction(value.real), Fraction(value.imag))
        return GaussianRational(as_rational(value), Fraction(0))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        return gaussian_div(self, o)

    def __rtruediv__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return o
        return gaussian_div(o, self)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return gaussian_div(GaussianRational(Fraction(1)), self**-n)
        result = GaussianRational(Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = _gq(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({format_rational(self.re)}, {format_rational(self.im)})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)} {sign} {format_rational(abs(self.im))}i"


def _gq(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(Fraction(value), Fraction(0))
    return NotImplemented


def gaussian_div(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    """Exact quotient ``a / b``."""
    den = b.abs2()
    if den == 0:
        raise ZeroDivisionError("division by zero Gaussian rational")
    return GaussianRational(
        (a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den
    )


_ROUNDING = {"nearest": libmp.round_nearest, "floor": libmp.round_floor,
             "ceiling": libmp.round_ceiling, "down": libmp.round_down,
             "up": libmp.round_up}


@dataclass(frozen=True, slots=True)
class BigFloat:
    """Binary floating point value ``mantissa * 2**exponent``.

    ``precision`` is the number of mantissa bits arithmetic results are
    rounded to; it travels with the value rather than living in a global
    context.
    """

    mantissa: int
    exponent: int
    precision: int = 53

    def __post_init__(self):
        if self.precision <= 0:
            raise ValueError("precision must be positive")

    @classmethod
    def from_raw(cls, raw, precision: int) -> "BigFloat":
        sign, man, exp, _bc = raw
        if man == 0:
            return cls(0, 0, precision)
        man = int(man)
        return cls(-man if sign else man, int(exp), precision)

    @classmethod
    def from_rational(cls, q, precision: int = 53, rounding: str = "nearest") -> "BigFloat":
        q = as_rational(q)
        raw = libmp.from_rational(q.numerator, q.denominator, precision, _ROUNDING[rounding])
        return cls.from_raw(raw, precision)

    @classmethod
    def from_mpf(cls, value, precision: int | None = None) -> "BigFloat":
        raw = value._mpf_
        if precision is None:
            precision = max(int(raw[3]), 1)
        return cls.from_raw(raw, precision)

    def _raw(self):
        return libmp.from_man_exp(self.mantissa, self.exponent)

    def _binary(self, other, op, rounding):
        if not isinstance(other, BigFloat):
            other = BigFloat.from_rational(other, self.precision)
        prec = max(self.precision, other.precision)
        raw = op(self._raw(), other._raw(), prec, _ROUNDING[rounding])
        return BigFloat.from_raw(raw, prec)

    def add(self, other, rounding: str = "nearest") -> "BigFloat":
        return self._binary(other, libmp.mpf_add, rounding)

    def sub(self, other, rounding: str = "nearest") -> "BigFloat":
        return self._binary(other, libmp.mpf_sub, rounding)

    def mul(self, other, rounding: str = "nearest") -> "BigFloat":
        return self._binary(other, libmp.mpf_mul, rounding)

    def div(self, other, rounding: str = "nearest") -> "BigFloat":
        if isinstance(other, BigFloat) and other.mantissa == 0:
            raise ZeroDivisionError("division by zero")
        return self._binary(other, libmp.mpf_div, rounding)

    def sqrt(self, rounding: str = "nearest") -> "BigFloat":
        raw = libmp.mpf_sqrt(self._raw(), self.precision, _ROUNDING[rounding])
        return BigFloat.from_raw(raw, self.precision)

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __truediv__ = div

    def __neg__(self):
        return BigFloat(-self.mantissa, self.exponent, self.precision)

    def __abs__(self):
        return BigFloat(abs(self.mantissa), self.exponent, self.precision)

    def __float__(self):
        return libmp.to_float(self._raw())

    def __lt__(self, other):
        return self.to_rational() < as_rational(other)

    def __le__(self, other):
        return self.to_rational() <= as_rational(other)

    def to_rational(self) -> Fraction:
        return to_rational_exact(self)

    def __repr__(self):
        return f"BigFloat({self.mantissa}, {self.exponent}, precision={self.precision})"


def to_rational_exact(x: BigFloat) -> Fraction:
    """The exact rational value of a dyadic float; no rounding happens."""
    if x.exponent >= 0:
        return Fraction(x.mantissa << x.exponent)
    return Fraction(x.mantissa, 1 << -x.exponent)

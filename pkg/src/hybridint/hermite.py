"""Hermite reduction over Q.

Splits the integral of a proper rational function into a rational part and
an integral whose denominator is squarefree, without ever leaving Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Poly, half_extended_gcd, poly_divmod, poly_gcd, squarefree_factor

__all__ = ["RationalFunction", "HermiteResult", "canonicalize", "hermite_reduce"]


class RationalFunction:
    """Reduced quotient ``num/den`` with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, reduced: bool = False):
        if den is None:
            den = Poly((1,))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly((1,))
            return
        if not reduced:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        if lc != 1:
            num = num / lc
            den = den / lc
        self.num, self.den = num, den

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFunction":
        return cls(p, Poly((1,)), reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_proper(self) -> bool:
        return self.num.degree < self.den.degree

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if isinstance(other, Poly):
            other = RationalFunction.from_poly(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        a = other.den.exact_div(g)
        b = self.den.exact_div(g)
        return RationalFunction(self.num * a + other.num * b, self.den * a)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, reduced=True)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        if isinstance(other, Poly):
            other = RationalFunction.from_poly(other)
        return self + (-other)

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return RationalFunction(self.num * other.num, self.den * other.den)
        if isinstance(other, Poly):
            return RationalFunction(self.num * other, self.den)
        return RationalFunction(self.num * Fraction(other), self.den, reduced=True)

    __rmul__ = __mul__

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        if d.degree == 0:
            return RationalFunction.from_poly(n.derivative())
        # (n/d)' = (n'd - nd')/d^2; divide out gcd(d, d') first to keep degrees low
        dd = d.derivative()
        g = poly_gcd(d, dd)
        dg = d.exact_div(g)
        return RationalFunction(n.derivative() * dg - n * dd.exact_div(g), d * dg)

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = RationalFunction.from_poly(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            return self.num.eval_rational(x) / self.den.eval_rational(x)
        return self.num(x) / self.den(x)

    def to_str(self, var: str = "x") -> str:
        if self.den.degree == 0:
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


@dataclass(frozen=True)
class HermiteResult:
    """``integral(P + A/B) = integral(P) + C/D + integral(G/H)``."""

    rational_part: RationalFunction
    remaining: RationalFunction
    polynomial_part: Poly

    @property
    def poly_antiderivative(self) -> Poly:
        return self.polynomial_part.integral()


def canonicalize(A: Poly, B: Poly) -> tuple[Poly, RationalFunction]:
    """Split ``A/B`` into a polynomial part and a proper reduced fraction."""
    if B.is_zero():
        raise ZeroDivisionError("zero denominator")
    if A.is_zero():
        return Poly(), RationalFunction(Poly())
    g = poly_gcd(A, B)
    if g.degree > 0:
        A = A.exact_div(g)
        B = B.exact_div(g)
    P, R = poly_divmod(A, B)
    return P, RationalFunction(R, B, reduced=True)


def hermite_reduce(f: RationalFunction, polynomial_part: Poly | None = None) -> HermiteResult:
    """Quadratic Hermite reduction of a proper rational function.

    For each squarefree factor ``V`` of multiplicity ``m >= 2`` (highest
    first), the identity ``B*U*V' + C*V = -A/j`` lowers the power of ``V``
    one step at a time, moving ``B/V^j`` into the rational part.
    """
    if polynomial_part is None:
        polynomial_part = Poly()
    if not f.is_proper():
        raise ValueError("hermite_reduce expects a proper rational function")
    A, D = f.num, f.den
    if A.is_zero():
        zero = RationalFunction(Poly())
        return HermiteResult(zero, zero, polynomial_part)
    sqf = squarefree_factor(D)
    pieces: list[tuple[Poly, Poly]] = []
    for V, i in sorted(sqf.factors, key=lambda t: -t[1]):
        if i < 2:
            continue
        U = D.exact_div(V**i)
        UdV = U * V.derivative()
        for j in range(i - 1, 0, -1):
            B, C = half_extended_gcd(UdV, V, A * Fraction(-1, j))
            pieces.append((B, V**j))
            A = C * (-j) - U * B.derivative()
        D = U * V
    rational = _sum_fractions(pieces)
    return HermiteResult(rational, RationalFunction(A, D), polynomial_part)


def _sum_fractions(pieces: list[tuple[Poly, Poly]]) -> RationalFunction:
    """Sum ``num/den`` pieces over one common denominator, reduced once."""
    if not pieces:
        return RationalFunction(Poly())
    den = Poly((1,))
    for _, d in pieces:
        den = den * d.exact_div(poly_gcd(den, d))
    num = Poly()
    for n, d in pieces:
        num = num + n * den.exact_div(d)
    return RationalFunction(num, den)

"""Dense univariate polynomials over Q and bivariate polynomials in (c, x).

A :class:`Poly` keeps its coefficients as a tuple of Python integers over a
single positive common denominator, in ascending degree.  Products, Horner
evaluation at rational or dyadic points and pseudo-division therefore run on
machine-backed big integers; :class:`fractions.Fraction` only appears at the
API boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

from .exactarith import GaussianRational, as_rational, format_rational

__all__ = [
    "Poly",
    "ComplexPoly",
    "BiPoly",
    "SquarefreeFactorization",
    "SubresultantChain",
    "poly_gcd",
    "extended_gcd",
    "half_extended_gcd",
    "squarefree_factor",
    "subresultant_chain",
    "resultant",
    "X",
]


def _int_gcd_list(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


class Poly:
    """Immutable polynomial with rational coefficients (ascending order)."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        fr = [as_rational(c) for c in coeffs]
        den = lcm(*(f.denominator for f in fr)) if fr else 1
        nums = [f.numerator * (den // f.denominator) for f in fr]
        self._set(nums, den)

    def _set(self, nums: list[int], den: int) -> None:
        while nums and nums[-1] == 0:
            nums.pop()
        if not nums:
            den = 1
        else:
            if den < 0:
                nums = [-v for v in nums]
                den = -den
            g = gcd(_int_gcd_list(nums), den)
            if g > 1:
                nums = [v // g for v in nums]
                den //= g
        self._num = tuple(nums)
        self._den = den
        self._hash = None

    @classmethod
    def from_ints(cls, nums: Sequence[int], den: int = 1) -> "Poly":
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        p = cls.__new__(cls)
        p._set(list(nums), den)
        return p

    @classmethod
    def constant(cls, value) -> "Poly":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Poly":
        q = as_rational(coeff)
        return cls.from_ints([0] * degree + [q.numerator], q.denominator)

    # -- basic views -------------------------------------------------------

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(v, d) for v in self._num)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._num) - 1

    def __len__(self):
        return len(self._num)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._num):
            return Fraction(self._num[i], self._den)
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return len(self._num) <= 1

    @property
    def lc(self) -> Fraction:
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[-1], self._den)

    def __bool__(self):
        return bool(self._num)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.from_ints([other.numerator], other.denominator) if isinstance(
                other, Fraction) else Poly.from_ints([other])
        return None

    def __add__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        if not o._num:
            return self
        if not self._num:
            return o
        den = lcm(self._den, o._den)
        fa, fb = den // self._den, den // o._den
        a, b = self._num, o._num
        n = max(len(a), len(b))
        out = [(a[i] * fa if i < len(a) else 0) + (b[i] * fb if i < len(b) else 0)
               for i in range(n)]
        return Poly.from_ints(out, den)

    __radd__ = __add__

    def __neg__(self):
        return Poly.from_ints([-v for v in self._num], self._den)

    def __sub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Poly.from_ints([v * q.numerator for v in self._num], self._den * q.denominator)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly.from_ints(_convolve(self._num, other._num), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = as_rational(other)
        if q == 0:
            raise ZeroDivisionError("division by zero")
        return self * (1 / q)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.from_ints([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: "Poly"):
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly"):
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly"):
        return poly_divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = poly_divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __eq__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    # -- calculus and normal forms -----------------------------------------

    def derivative(self) -> "Poly":
        return Poly.from_ints([i * v for i, v in enumerate(self._num)][1:], self._den)

    def integral(self) -> "Poly":
        """Antiderivative with zero constant term."""
        if not self._num:
            return self
        n = len(self._num)
        L = lcm(*range(1, n + 1))
        return Poly.from_ints([0] + [v * (L // (i + 1)) for i, v in enumerate(self._num)],
                              self._den * L)

    def monic(self) -> "Poly":
        if not self._num:
            return self
        return Poly.from_ints(list(self._num), self._num[-1])

    def primitive(self) -> tuple[Fraction, "Poly"]:
        """Split into ``(content, pp)`` with ``pp`` integral, primitive, lc > 0."""
        if not self._num:
            return Fraction(0), self
        g = _int_gcd_list(self._num)
        if self._num[-1] < 0:
            g = -g
        pp = Poly.from_ints([v // g for v in self._num])
        return Fraction(g, self._den), pp

    def integer_coeffs(self) -> tuple[int, ...]:
        """Coefficients of the primitive integral associate."""
        return self.primitive()[1]._num

    def shift_degree(self, k: int) -> "Poly":
        if not self._num:
            return self
        return Poly.from_ints([0] * k + list(self._num), self._den)

    def compose(self, other: "Poly") -> "Poly":
        result = Poly()
        for c in reversed(self.coeffs):
            result = result * other + c
        return result

    def height(self) -> int:
        return max((abs(v) for v in self.integer_coeffs()), default=0)

    # -- evaluation --------------------------------------------------------

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            return self.eval_rational(x)
        if isinstance(x, GaussianRational):
            return self.eval_gaussian(x)
        return self.eval_numeric(x)

    def eval_rational(self, x) -> Fraction:
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        acc = 0
        qpow = 1
        for v in reversed(self._num):
            acc = acc * p + v * qpow
            qpow *= q
        # acc = q^(n) * num(x) with n = len; undo the extra factor
        if not self._num:
            return Fraction(0)
        return Fraction(acc, self._den * q ** (len(self._num) - 1))

    def eval_gaussian(self, z: GaussianRational) -> GaussianRational:
        re, im = z.re, z.im
        d = lcm(re.denominator, im.denominator)
        a, b = re.numerator * (d // re.denominator), im.numerator * (d // im.denominator)
        ar, ai = gaussian_horner_int(self._num, a, b, d)
        if not self._num:
            return GaussianRational(Fraction(0), Fraction(0))
        scale = self._den * d ** (len(self._num) - 1)
        return GaussianRational(Fraction(ar, scale), Fraction(ai, scale))

    def eval_numeric(self, x):
        """Horner evaluation for floats, complex numbers, numpy arrays or mpmath values."""
        if _is_mp(x):
            ctx = x.context
            consts = [ctx.mpf(c.numerator) / c.denominator for c in self.coeffs]
        else:
            consts = self.float_coeffs()
        acc = 0 * x
        for c in reversed(consts):
            acc = acc * x + c
        return acc

    def float_coeffs(self) -> list[float]:
        return [v / self._den for v in self._num]

    # -- display -----------------------------------------------------------

    def to_str(self, var: str = "x") -> str:
        if not self._num:
            return "0"
        parts = []
        for i in range(len(self._num) - 1, -1, -1):
            c = self[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = format_rational(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{format_rational(a)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"


def _is_mp(x) -> bool:
    return type(x).__module__.startswith("mpmath")


def gaussian_horner_int(nums: Sequence[int], a: int, b: int, d: int) -> tuple[int, int]:
    """Scaled Horner at ``z = (a + ib)/d`` over integers.

    Returns ``d**(n-1) * sum nums[k] z**k`` as an integer pair, ``n = len(nums)``.
    """
    ar = ai = 0
    dpow = 1
    for v in reversed(nums):
        ar, ai = ar * a - ai * b + v * dpow, ar * b + ai * a
        dpow *= d
    return ar, ai


X = Poly((0, 1))


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division over Q: ``a = q*b + r`` with ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    da, db = a.degree, b.degree
    if da < db:
        return Poly(), a
    # integer pseudo-division: lc^k * A = Q*B + R, then rescale
    A = list(a._num)
    B = b._num
    lb = B[-1]
    k = da - db + 1
    Q = [0] * k
    for i in range(da - db, -1, -1):
        coef = A[i + db]
        Q = [q * lb for q in Q]
        Q[i] = coef
        if coef:
            A = [v * lb for v in A]
            for j, bj in enumerate(B):
                A[i + j] -= coef * bj
        else:
            A = [v * lb for v in A]
        A[i + db] = 0
    # lb^k * a.num = Q * b.num + R  (with a, b scaled by their denominators)
    scale = lb ** k
    q = Poly.from_ints(Q, scale) * Fraction(b._den, a._den)
    r = Poly.from_ints(A[:db], scale * a._den)
    return q, r


def _prem_int(A: list[int], B: Sequence[int]) -> list[int]:
    """Integer pseudo-remainder ``lc(B)^(deg A - deg B + 1) A mod B``."""
    A = list(A)
    db = len(B) - 1
    lb = B[-1]
    while len(A) - 1 >= db and A:
        coef = A[-1]
        shift = len(A) - 1 - db
        A = [v * lb for v in A]
        for j, bj in enumerate(B):
            A[shift + j] -= coef * bj
        A.pop()
        while A and A[-1] == 0:
            A.pop()
    return A


def _int_primitive(v: list[int]) -> list[int]:
    g = _int_gcd_list(v)
    if g > 1:
        v = [x // g for x in v]
    return v


_GCD_PRIME = (1 << 61) - 1


def _coprime_mod_p(A: Sequence[int], B: Sequence[int], p: int = _GCD_PRIME) -> bool:
    """True if the gcd over GF(p) is constant and both leading terms survive.

    The degree of the modular gcd bounds the true one from above, so this
    proves coprimality; ``False`` is inconclusive.
    """
    a = [v % p for v in A]
    b = [v % p for v in B]
    if a[-1] == 0 or b[-1] == 0:
        return False
    while b:
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        if len(b) == 1:
            return True
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            q = a[-1] * inv % p
            shift = len(a) - len(b)
            for j, bj in enumerate(b):
                a[shift + j] = (a[shift + j] - q * bj) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return False


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (primitive PRS over Z, modular coprimality shortcut)."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    A = list(a.integer_coeffs())
    B = list(b.integer_coeffs())
    if len(A) < len(B):
        A, B = B, A
    if len(B) > 1 and _coprime_mod_p(A, B):
        return Poly.from_ints([1])
    while B:
        if len(B) == 1:
            return Poly.from_ints([1])
        R = _prem_int(A, B)
        A, B = B, _int_primitive(R)
    return Poly.from_ints(A).monic()


def extended_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = Poly((1,)), Poly()
    t0, t1 = Poly(), Poly((1,))
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        raise ValueError("gcd of two zero polynomials")
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def half_extended_gcd(a: Poly, b: Poly, rhs: Poly) -> tuple[Poly, Poly]:
    """Solve ``C*a + D*b = rhs`` with ``deg C < deg b``."""
    g, s, _ = extended_gcd(a, b)
    q, r = poly_divmod(rhs, g)
    if r:
        raise ArithmeticError("diophantine equation has no polynomial solution")
    C = (s * q) % b if b.degree > 0 else Poly()
    D, rem = poly_divmod(rhs - C * a, b)
    if rem:
        raise ArithmeticError("diophantine equation has no polynomial solution")
    return C, D


@dataclass(frozen=True)
class SquarefreeFactorization:
    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly((self.unit,))
        for f, m in self.factors:
            out = out * f**m
        return out

    def by_multiplicity(self) -> dict[int, Poly]:
        return {m: f for f, m in self.factors}

    def pattern(self) -> tuple[tuple[int, int], ...]:
        """``(multiplicity, degree)`` pairs, the shape of the factorization."""
        return tuple((m, f.degree) for f, m in self.factors)


def squarefree_factor(p: Poly) -> SquarefreeFactorization:
    """Yun's algorithm over Q; factors are monic."""
    if p.is_zero():
        raise ValueError("squarefree factorization of the zero polynomial")
    unit = p.lc
    f = p.monic()
    if f.degree == 0:
        return SquarefreeFactorization(unit, ())
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    factors = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            factors.append((a, i))
        i += 1
    return SquarefreeFactorization(unit, tuple(factors))


def is_squarefree(p: Poly) -> bool:
    return p.degree <= 0 or poly_gcd(p, p.derivative()).degree == 0


class ComplexPoly(NamedTuple):
    """Polynomial with Gaussian-rational coefficients, kept as ``re + i*im``."""

    re: Poly
    im: Poly

    @classmethod
    def real(cls, p: Poly) -> "ComplexPoly":
        return cls(p, Poly())

    @classmethod
    def linear_root(cls, z: GaussianRational) -> "ComplexPoly":
        """``x - z``."""
        return cls(Poly((-z.re, 1)), Poly((-z.im,)))

    def __mul__(self, other: "ComplexPoly") -> "ComplexPoly":
        a, b = self
        c, d = other
        return ComplexPoly(a * c - b * d, a * d + b * c)

    def scale(self, z: GaussianRational) -> "ComplexPoly":
        a, b = self
        return ComplexPoly(a * z.re - b * z.im, a * z.im + b * z.re)

    def __add__(self, other: "ComplexPoly") -> "ComplexPoly":
        return ComplexPoly(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexPoly") -> "ComplexPoly":
        return ComplexPoly(self.re - other.re, self.im - other.im)

    def conjugate(self) -> "ComplexPoly":
        return ComplexPoly(self.re, -self.im)

    def derivative(self) -> "ComplexPoly":
        return ComplexPoly(self.re.derivative(), self.im.derivative())

    @property
    def degree(self) -> int:
        return max(self.re.degree, self.im.degree)

    def is_real(self) -> bool:
        return self.im.is_zero()

    def norm2(self) -> Poly:
        return self.re * self.re + self.im * self.im

    def __call__(self, x):
        return self.re(x) + 1j * self.im(x) if not isinstance(x, GaussianRational) else (
            self.re(x) + GaussianRational(0, 1) * self.im(x))


class BiPoly:
    """Polynomial in x whose coefficients are polynomials in c.

    ``coeffs[j]`` is the coefficient of ``x**j``, itself a :class:`Poly` in c.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Poly] = ()):
        cs = [c if isinstance(c, Poly) else Poly((c,)) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_x(cls, p: Poly) -> "BiPoly":
        """Embed a polynomial in x (constant in c)."""
        return cls(Poly((c,)) for c in p.coeffs)

    @classmethod
    def from_c(cls, p: Poly) -> "BiPoly":
        """Embed a polynomial in c (constant in x)."""
        return cls((p,))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "BiPoly":
        """Build from ``rows[i][j]`` = coefficient of ``c**i x**j``."""
        ncols = max((len(r) for r in rows), default=0)
        return cls(Poly(r[j] if j < len(r) else 0 for r in rows) for j in range(ncols))

    def to_matrix(self) -> list[list[Fraction]]:
        dc = self.deg_c
        return [[self.coeffs[j][i] for j in range(len(self.coeffs))] for i in range(dc + 1)]

    @property
    def deg_x(self) -> int:
        return len(self.coeffs) - 1

    @property
    def deg_c(self) -> int:
        return max((c.degree for c in self.coeffs), default=-1)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc_x(self) -> Poly:
        return self.coeffs[-1] if self.coeffs else Poly()

    def __add__(self, other: "BiPoly") -> "BiPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        z = Poly()
        return BiPoly((self.coeffs[i] if i < len(self.coeffs) else z)
                      + (other.coeffs[i] if i < len(other.coeffs) else z) for i in range(n))

    def __neg__(self) -> "BiPoly":
        return BiPoly(-c for c in self.coeffs)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            if not self.coeffs or not other.coeffs:
                return BiPoly()
            out = [Poly()] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coeffs):
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return BiPoly(out)
        if isinstance(other, (Poly, int, Fraction)):
            return BiPoly(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def exact_div_c(self, d: Poly) -> "BiPoly":
        """Divide every coefficient by the c-polynomial ``d`` (must be exact)."""
        return BiPoly(c.exact_div(d) for c in self.coeffs)

    def shift_x(self, k: int) -> "BiPoly":
        return BiPoly([Poly()] * k + list(self.coeffs))

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def diff_x(self) -> "BiPoly":
        return BiPoly(c * j for j, c in enumerate(self.coeffs) if j > 0)

    def diff_c(self) -> "BiPoly":
        return BiPoly(c.derivative() for c in self.coeffs)

    def eval_c(self, value) -> Poly:
        """Substitute a rational value for c."""
        return Poly(c.eval_rational(value) for c in self.coeffs)

    def eval_c_gaussian(self, z: GaussianRational) -> ComplexPoly:
        """Substitute a Gaussian-rational value for c exactly."""
        vals = [c.eval_gaussian(z) for c in self.coeffs]
        return ComplexPoly(Poly(v.re for v in vals), Poly(v.im for v in vals))

    def eval_x(self, value) -> Poly:
        """Substitute a rational value for x, giving a polynomial in c."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * Fraction(value) + c
        return acc

    def content_c(self) -> Poly:
        """Monic gcd in Q[c] of the x-coefficients."""
        nz = [c for c in self.coeffs if not c.is_zero()]
        if not nz:
            return Poly()
        return reduce(poly_gcd, nz[1:], nz[0].monic())

    def primitive_part_x(self) -> "BiPoly":
        """Remove the content in c, then the rational content.

        The result has integer coefficients with no common factor and a
        leading x-coefficient whose own leading coefficient is positive.
        """
        if not self.coeffs:
            raise ValueError("primitive part of zero")
        g = self.content_c()
        out = self.exact_div_c(g) if g.degree > 0 else self
        dens = [c.denominator for c in out.coeffs]
        L = lcm(*dens)
        nums = [v * (L // c.denominator) for c in out.coeffs for v in c.numerators]
        k = _int_gcd_list(nums)
        scale = Fraction(L, k)
        if out.lc_x.lc < 0:
            scale = -scale
        return BiPoly(c * scale for c in out.coeffs)

    def __repr__(self):
        return f"BiPoly({[repr(c) for c in self.coeffs]})"

    def to_str(self, cvar: str = "c", xvar: str = "x") -> str:
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c.is_zero():
                continue
            mono = "" if j == 0 else (xvar if j == 1 else f"{xvar}^{j}")
            body = c.to_str(cvar)
            if mono:
                body = f"({body})*{mono}" if c.degree > 0 or len(c) > 1 else (
                    mono if c == 1 else f"{body}*{mono}")
            terms.append(body)
        return " + ".join(terms) if terms else "0"


def _bi_prem_exact(A: BiPoly, B: BiPoly) -> BiPoly:
    """``lc(B)^(deg A - deg B + 1) * A mod B`` (true pseudo-remainder)."""
    lb = B.lc_x
    db = B.deg_x
    e = A.deg_x - db + 1
    R = A
    used = 0
    while not R.is_zero() and R.deg_x >= db:
        shift = R.deg_x - db
        R = R * lb - B.shift_x(shift) * R.lc_x
        used += 1
    if used < e:
        R = R * (lb ** (e - used))
    return R


@dataclass(frozen=True)
class SubresultantChain:
    """Subresultant PRS of two polynomials in x over Q[c].

    ``chain[0]`` is the resultant (degree 0 in x); later entries have strictly
    increasing x-degree and end with the two inputs.
    """

    chain: tuple[BiPoly, ...]
    principal: tuple[Poly, ...]

    @property
    def resultant(self) -> Poly:
        r = self.chain[0]
        return r.coeffs[0] if r.coeffs else Poly()

    def element_of_degree(self, i: int) -> BiPoly | None:
        for elem in self.chain[1:]:
            if elem.deg_x == i:
                return elem
        return None


def subresultant_chain(h: BiPoly, g: BiPoly) -> SubresultantChain:
    """Subresultant PRS of ``h`` and ``g`` w.r.t. x, with the resultant.

    Requires ``deg_x h >= 1``.  The PRS elements are the subresultants up
    to sign (Brown-Collins scaling); the resultant is exact, including sign,
    with respect to the formal degrees of the inputs.
    """
    if h.deg_x < 1:
        raise ValueError("subresultant chain needs deg_x(h) >= 1")
    if g.is_zero():
        zero = BiPoly()
        return SubresultantChain((zero, g, h), (Poly(), Poly(), h.lc_x))
    A, B = h, g
    sign = 1
    if A.deg_x < B.deg_x:
        A, B = B, A
        if A.deg_x % 2 == 1 and B.deg_x % 2 == 1:
            sign = -1
    prs = [A, B]
    one = Poly((1,))
    gg, hh = one, one
    while B.deg_x > 0:
        delta = A.deg_x - B.deg_x
        if A.deg_x % 2 == 1 and B.deg_x % 2 == 1:
            sign = -sign
        R = _bi_prem_exact(A, B)
        A = B
        B = R.exact_div_c(gg * hh**delta) if not R.is_zero() else R
        gg = A.lc_x
        if delta == 0:
            hh = hh
        else:
            hh = (gg**delta).exact_div(hh ** (delta - 1)) if delta > 1 else gg
        if B.is_zero():
            break
        prs.append(B)
    if B.is_zero():
        res = Poly()
    else:
        da = A.deg_x
        lcb = B.lc_x
        if da == 0:
            hres = one
        else:
            hres = (lcb**da).exact_div(hh ** (da - 1)) if da > 1 else lcb
        res = hres * sign
    elems = [e for e in prs if e.deg_x > 0]
    elems.sort(key=lambda e: e.deg_x)
    chain = (BiPoly.from_c(res),) + tuple(elems)
    principal = tuple(e.lc_x for e in chain)
    return SubresultantChain(chain, principal)


def resultant(a: Poly, b: Poly) -> Fraction:
    """Resultant of two univariate polynomials w.r.t. their formal degrees."""
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    if a.degree == 0:
        return a.lc ** b.degree
    if b.degree == 0:
        return b.lc ** a.degree
    r = subresultant_chain(BiPoly.from_x(a), BiPoly.from_x(b)).resultant
    return r[0]

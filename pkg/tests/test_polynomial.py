from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from hybridint.exactarith import GaussianRational
from hybridint.polynomial import (
    BiPoly,
    Poly,
    extended_gcd,
    half_extended_gcd,
    is_squarefree,
    poly_divmod,
    poly_gcd,
    resultant,
    squarefree_factor,
    subresultant_chain,
)

X = Poly((0, 1))
small = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(small, min_size=1, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def bi(rows):
    return BiPoly.from_matrix(rows)


def sylvester_resultant(a: Poly, b: Poly) -> Fraction:
    m, n = a.degree, b.degree
    ca = [sympy.Rational(c.numerator, c.denominator) for c in reversed(a.coeffs)]
    cb = [sympy.Rational(c.numerator, c.denominator) for c in reversed(b.coeffs)]
    rows = [[0] * i + ca + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + cb + [0] * (m - 1 - i) for i in range(m)]
    r = sympy.Matrix(rows).det()
    return Fraction(int(r.p), int(r.q))


# -- arithmetic -----------------------------------------------------------------

def test_product_and_division_examples():
    assert (X + 1) * (X - 1) == X**2 - 1
    assert poly_divmod(X**2 + 1, X + 1) == (X - 1, Poly((2,)))
    assert poly_divmod(X**3, X**2 + 1) == (X, -X)
    with pytest.raises(ZeroDivisionError):
        poly_divmod(X, Poly())


def test_gcd_examples():
    a = (X - 1) ** 2 * (X + 2)
    b = (X - 1) * (X + 3)
    assert poly_gcd(a, b) == X - 1
    assert poly_gcd(X**2 + 1, X**2 - 2) == Poly((1,))
    assert poly_gcd(Poly(), X + 5) == X + 5


def test_half_extended_gcd_examples():
    assert half_extended_gcd(Poly((1,)), X, Poly((1,))) == (Poly((1,)), Poly())
    C, D = half_extended_gcd(X + 1, X - 1, X)
    assert (C, D) == (Poly((Fraction(1, 2),)), Poly((Fraction(1, 2),)))
    C, D = half_extended_gcd(2 * X, X**2 + 1, Poly((1,)))
    assert C * (2 * X) + D * (X**2 + 1) == Poly((1,))
    assert C.degree < 2


def test_squarefree_examples():
    assert squarefree_factor(X**2 - 1).factors == ((X**2 - 1, 1),)
    assert squarefree_factor((X - 1) ** 2 * (X + 2)).factors == ((X + 2, 1), (X - 1, 2))
    assert squarefree_factor(X**3).factors == ((X, 3),)
    assert is_squarefree(X**2 + 1)
    assert not is_squarefree(X**4 - 2 * X**2 + 1)


def test_evaluation_examples():
    assert (X**2 + 2).eval_gaussian(GaussianRational(0, 1)) == GaussianRational(1)
    assert (X**2 - 2).eval_rational(0) == -2
    assert (X**3 - X).eval_gaussian(GaussianRational(1, 1)) == GaussianRational(-3, 1)


def test_derivative_examples():
    assert (X**3 + 2 * X).derivative() == 3 * X**2 + 2
    assert Poly((7,)).derivative().is_zero()
    cx2 = bi([[0, 0, 0], [0, 0, 1]])  # c x^2
    assert cx2.diff_x() == bi([[0, 0], [0, 2]])
    assert cx2.diff_c() == bi([[0, 0, 1]])
    assert cx2.diff_x().diff_c() == cx2.diff_c().diff_x()


# -- resultants -----------------------------------------------------------------

def test_resultant_examples():
    # frozen from a Sylvester determinant
    assert resultant(X**2 - 2, 2 * X + 1) == -7
    r = subresultant_chain(BiPoly.from_x(X**2 - 2), bi([[1, 0], [0, -2]])).resultant
    assert r == Poly((1, 0, -8))
    r = subresultant_chain(BiPoly.from_x(X**2 + 1), bi([[0], [1]])).resultant
    assert r == Poly((0, 0, 1))
    r = subresultant_chain(BiPoly.from_x(X - Fraction(3, 7)), bi([[1]])).resultant
    assert r == Poly((1,))
    r = subresultant_chain(BiPoly.from_x(X**2 + 3), bi([[0, 2], [0, -2]])).resultant
    assert r == Poly((12, -24, 12))


def test_resultant_of_quartic_example():
    A = X**2 - 1
    B = X**4 + 5 * X**2 + 7
    g = BiPoly.from_x(A) - BiPoly.from_c(Poly((0, 1))) * BiPoly.from_x(B.derivative())
    r = subresultant_chain(BiPoly.from_x(B), g).resultant
    assert r == Poly((169, 0, -816, 0, 1008))


def test_content_and_primitive_part():
    p = bi([[0, 0], [1, 1], [1, 1]])  # (c^2 + c) x + (c^2 + c)
    assert p.content_c() == Poly((0, 1, 1))
    assert p.primitive_part_x() == BiPoly.from_x(X + 1)
    q = bi([[0, 0], [4, 2]])  # 2c x + 4c
    assert q.primitive_part_x() == BiPoly.from_x(X + 2)


# -- properties -----------------------------------------------------------------

@given(polys, nonzero_polys)
def test_divmod_reconstructs(a, b):
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(1, 3)), min_size=1, max_size=4))
def test_squarefree_reconstructs(roots):
    p = Poly((3,))
    for r, m in roots:
        p = p * (X - r) ** m
    sqf = squarefree_factor(p)
    assert sqf.expand() == p
    for f, _ in sqf.factors:
        assert is_squarefree(f)
    mults = [m for _, m in sqf.factors]
    assert mults == sorted(set(mults))


@given(nonzero_polys, nonzero_polys)
def test_resultant_matches_sylvester(a, b):
    assume(a.degree >= 1 and b.degree >= 1 and a.degree + b.degree <= 8)
    assert resultant(a, b) == sylvester_resultant(a, b)


@given(nonzero_polys, nonzero_polys, st.fractions(min_value=-9, max_value=9, max_denominator=5))
def test_gcd_divides_and_is_scale_invariant(a, b, k):
    assume(k != 0)
    g = poly_gcd(a, b)
    assert poly_divmod(a, g)[1].is_zero()
    assert poly_divmod(b, g)[1].is_zero()
    assert poly_gcd(a * k, b) == g


@given(nonzero_polys, nonzero_polys)
def test_extended_gcd_bezout(a, b):
    g, s, t = extended_gcd(a, b)
    assert s * a + t * b == g
    assert g == poly_gcd(a, b)


@given(polys, polys)
def test_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(nonzero_polys, nonzero_polys, polys)
def test_half_extended_gcd_solves(a, b, rhs):
    assume(b.degree >= 1 and poly_gcd(a, b).degree == 0)
    C, D = half_extended_gcd(a, b, rhs)
    assert C * a + D * b == rhs
    assert C.is_zero() or C.degree < b.degree


def test_more_division_and_gcd_examples():
    assert poly_divmod(X**3, X**2) == (X, Poly())
    assert poly_gcd(X**2 - 1, X - 1) == X - 1
    assert poly_gcd(X**2 + 1, X + 2) == Poly((1,))
    p = bi([[0, 1], [0, 0, 1]])  # c x^2 + x
    assert p.primitive_part_x() == p


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_of_common_multiple(p, q, g):
    assert poly_gcd(p * g, q * g) == (g * poly_gcd(p, q)).monic()


@given(polys, polys, small)
def test_derivative_is_linear(a, b, k):
    assert (a * k + b).derivative() == a.derivative() * k + b.derivative()

from fractions import Fraction

from hypothesis import assume, given, strategies as st

from hybridint.hermite import RationalFunction
from hybridint.polynomial import Poly
from hybridint.postprocess import (
    ComplexLogPair,
    combine_atan_args,
    combine_atan_terms,
    combine_log_terms,
    pair_to_real,
    rioboo_atan,
)

X = Poly((0, 1))
small_polys = st.lists(st.integers(-5, 5), min_size=1, max_size=5).map(Poly)


def atan_derivative(X_: Poly, Y_: Poly) -> RationalFunction:
    # d/dx arctan(X/Y) = (X'Y - XY')/(X^2 + Y^2)
    return RationalFunction(X_.derivative() * Y_ - X_ * Y_.derivative(), X_ * X_ + Y_ * Y_)


def test_pair_to_real():
    log, atan = pair_to_real(ComplexLogPair(Fraction(1, 2), Fraction(3), X, Poly((1,))))
    assert log == (Fraction(1, 2), X**2 + 1)
    assert atan == (Fraction(6), X, Poly((1,)))
    log, atan = pair_to_real(ComplexLogPair(Fraction(0), Fraction(1), X, Poly((2,))))
    assert log is None and atan == (Fraction(2), X, Poly((2,)))


def test_rioboo_examples():
    assert rioboo_atan(X, Poly((1,))) == [X]
    assert rioboo_atan(Poly((3,)), Poly((1,))) == []
    out = rioboo_atan(X**3 - 3 * X, X**2 - 2)
    total = RationalFunction(Poly())
    for P in out:
        total = total + atan_derivative(P, Poly((1,)))
    assert total == atan_derivative(X**3 - 3 * X, X**2 - 2)
    assert all(P.degree > 0 for P in out)


def test_combine_log_terms():
    terms = [(Fraction(2), 2 * X - 2), (Fraction(2), X + 1), (Fraction(1), X**2), (Fraction(0), X)]
    assert combine_log_terms(terms) == [(Fraction(2), X**2 - 1), (Fraction(1), X**2)]


def test_combine_atan_args():
    X1, Y1 = combine_atan_args(X, Poly((1,)), Poly((2, -1)), Poly((3,)))
    # (x + i)((2 - x) + 3i)
    assert X1 == -(X**2) + 2 * X - 3
    assert Y1 == 3 * X + 2 - X


@given(small_polys, small_polys)
def test_rioboo_preserves_derivative(A, B):
    assume(not A.is_zero() and not B.is_zero())
    total = RationalFunction(Poly())
    for P in rioboo_atan(A, B):
        total = total + atan_derivative(P, Poly((1,)))
    assert total == atan_derivative(A, B)


def test_more_examples():
    log, atan = pair_to_real(ComplexLogPair(Fraction(1), Fraction(0), X, Poly((1,))))
    assert log == (Fraction(1), X**2 + 1) and atan is None
    one = Fraction(1)
    assert combine_log_terms([(one, X - 1), (one, X + 1)]) == [(one, X**2 - 1)]
    assert combine_log_terms([(one, X), (Fraction(2), X)]) == [(one, X), (Fraction(2), X)]
    half = Fraction(1, 2)
    assert combine_log_terms([(half, X - 2), (half, X + 2), (Fraction(3), X)]) == [(half, X**2 - 4), (Fraction(3), X)]


def test_combine_atan_terms_examples():
    t = (Fraction(2), X, Poly((1,)))
    assert combine_atan_terms([t]) == [t]
    u = (Fraction(3), X + 1, Poly((2,)))
    assert combine_atan_terms([t, u]) == [t, u]
    (w, A, B), = combine_atan_terms([t, (Fraction(2), Poly((1, -1)), Poly((2,)))])
    assert w == 2
    assert atan_derivative(A, B) == atan_derivative(X, Poly((1,))) + atan_derivative(Poly((1, -1)), Poly((2,)))


@given(small_polys, small_polys, st.fractions(-20, 20, max_denominator=7),
       st.fractions(-20, 20, max_denominator=7).filter(lambda q: q != 0))
def test_combining_rule_is_sound(Xp, Yp, alpha, beta):
    assume(not Xp.is_zero() or not Yp.is_zero())
    X2, Y2 = Poly((alpha, -1)), Poly((beta,))
    A, B = combine_atan_args(Xp, Yp, X2, Y2)
    assume(not A.is_zero() or not B.is_zero())
    assert atan_derivative(A, B) == atan_derivative(Xp, Yp) + atan_derivative(X2, Y2)

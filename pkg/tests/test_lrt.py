from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from hybridint.integrate import integrate
from hybridint.lrt import lrt_numeric, lrt_symbolic
from hybridint.hermite import RationalFunction
from hybridint.polynomial import BiPoly, Poly, is_squarefree, poly_divmod

X = Poly((0, 1))
EPS = Fraction(1, 2**40)


def test_quartic_example_symbolic():
    sym = lrt_symbolic(X**2 - 1, X**4 + 5 * X**2 + 7)
    assert sym.resultant == Poly((169, 0, -816, 0, 1008))
    assert [(U.degree, i) for U, i, _ in sym.pairs] == [(4, 1)]
    _, _, S = sym.pairs[0]
    assert S.deg_x == 1


def test_log_derivative_gives_single_term():
    # 2x/(x^2+3): resultant 12(c-1)^2, one term with argument x^2 + 3
    sym = lrt_symbolic(2 * X, X**2 + 3)
    assert sym.resultant == Poly((12, -24, 12))
    ((U, i, S),) = sym.pairs
    assert U == Poly((-1, 1)) and i == 2
    assert S == BiPoly.from_x(X**2 + 3)


def test_numeric_terms_are_exact_for_rational_residues():
    terms = lrt_numeric(lrt_symbolic(Poly((1,)), X**2 - 1), EPS).terms
    assert sorted(t.root.re for t in terms) == [Fraction(-1, 2), Fraction(1, 2)]
    assert all(t.root.is_exact for t in terms)


def test_low_degree_resultant_factor_kept_exactly():
    res = integrate(Poly((1,)), X**2 + 1, EPS, "lrt")
    # residues +-i/2 are found exactly; atan(x) comes out unperturbed
    assert res.integral.atan_terms == [(Fraction(1), [X])]
    assert res.integral.log_terms == []


def test_rejects_non_squarefree():
    with pytest.raises(ValueError):
        lrt_symbolic(Poly((1,)), X**2)


@settings(max_examples=25)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=6), st.lists(st.integers(-9, 9), min_size=1, max_size=5))
def test_degree_identities(hc, gc):
    hc[-1] = hc[-1] or 1
    H = Poly(hc)
    G = Poly(gc[: H.degree])
    assume(H.degree >= 1 and is_squarefree(H) and not G.is_zero())
    sym = lrt_symbolic(G, H)
    assert sym.resultant.degree == H.degree
    assert sum(i * U.degree for U, i, _ in sym.pairs) == H.degree
    for U, i, S in sym.pairs:
        assert S.deg_x == i


def test_numeric_examples():
    I = integrate(2 * X, X**2 + 3, EPS, "lrt").integral
    assert I.log_terms == [(Fraction(1), X**2 + 3)]
    I = integrate(Poly((1,)), X**2 - 2, EPS, "lrt").integral
    assert sorted(float(v) for v, _ in I.log_terms) == pytest.approx([-0.35355339059327, 0.35355339059327])
    for _, V in I.log_terms:
        assert V.degree == 1 and abs(abs(float(V[0])) - 2**0.5) < 1e-10
    res = integrate(X**2 - 1, X**4 + 5 * X**2 + 7, EPS, "lrt")
    assert len(res.lrt.terms) == 4 and not any(t.is_real for t in res.lrt.terms)
    assert res.integral.atan_terms
    # residues have nonzero real part, so logs of positive definite quadratics appear
    for _, V in res.integral.log_terms:
        assert V.degree == 2 and V[1] ** 2 < 4 * V[0] * V[2]


def _reduce_c(p: BiPoly, U: Poly) -> BiPoly:
    return BiPoly(poly_divmod(c, U)[1] for c in p.coeffs)


def _sum_over_roots(U: Poly, S: BiPoly) -> RationalFunction:
    """sum of c * S_x(c, x)/S(c, x) over the roots of U (deg U <= 2), exactly."""
    if U.degree == 1:
        c = -U[0] / U[1]
        return RationalFunction(S.diff_x().eval_c(c) * c, S.eval_c(c))
    # the other root is e1 - c; symmetric expressions reduce to constants mod U
    e1 = -U[1] / U[2]
    flip = Poly((e1, -1))
    S2 = BiPoly(c.compose(flip) for c in S.coeffs)
    C1 = BiPoly.from_c(Poly((0, 1)))
    C2 = BiPoly.from_c(flip)
    num = _reduce_c(C1 * S.diff_x() * S2 + C2 * S2.diff_x() * S, U)
    den = _reduce_c(S * S2, U)
    assert all(c.degree <= 0 for c in num.coeffs + den.coeffs)
    return RationalFunction(Poly(c[0] for c in num.coeffs), Poly(c[0] for c in den.coeffs))


@settings(max_examples=25)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=4), st.lists(st.integers(-9, 9), min_size=1, max_size=3))
def test_symbolic_part_is_exact(hc, gc):
    hc[-1] = hc[-1] or 1
    H = Poly(hc)
    G = Poly(gc[: H.degree])
    assume(H.degree >= 1 and is_squarefree(H) and not G.is_zero())
    sym = lrt_symbolic(G, H)
    assume(all(U.degree <= 2 for U, _, _ in sym.pairs))
    total = RationalFunction(Poly())
    for U, _, S in sym.pairs:
        total = total + _sum_over_roots(U, S)
    assert total == RationalFunction(G, H)

from fractions import Fraction
import random

import pytest
from hypothesis import given, strategies as st

from hybridint.exactarith import GaussianRational
from hybridint.integrate import integrate
from hybridint.pfd import cluster_residues, compute_residues, pfd_roots, residues_linked
from hybridint.polynomial import Poly

X = Poly((0, 1))
EPS = Fraction(1, 2**40)


def test_residue_of_imaginary_pole():
    H = X**2 + 2
    roots = pfd_roots(H, EPS)
    res = compute_residues(Poly((1,)), H, roots)
    for r, u in zip(roots, res):
        assert abs(float(u.re)) < 1e-12
        assert float(u.im) == pytest.approx(-0.35355339059327 if r.im > 0 else 0.35355339059327, rel=1e-9)


def test_logarithmic_derivative_has_unit_residues():
    H = X**3 - 2 * X + 5
    roots = pfd_roots(H, EPS)
    for u in compute_residues(H.derivative(), H, roots):
        assert abs(complex(float(u.re), float(u.im)) - 1) < 1e-10
    (u,) = compute_residues(Poly((1,)), X, pfd_roots(X, EPS))
    assert u == GaussianRational(1)


def g(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def test_clustering_examples():
    eps = Fraction(1, 2**10)
    s = cluster_residues([g(1), g(2), g(1 + eps / 2)], eps)
    assert sorted(c.members for c in s.clusters) == [(0, 2), (1,)]
    # chaining: each neighbour is linked, so all three join
    s = cluster_residues([g(1), g(1 + eps / 2), g(1 + eps)], eps / 2 * Fraction(1025, 1024))
    assert s.cluster_sizes() == [3]
    s = cluster_residues([g(0, 1), g(0, -1), g(0, 1)], eps)
    assert s.cluster_sizes() == [1, 2]


def brute_components(res, eps):
    n = len(res)
    comp = list(range(n))
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if residues_linked(res[i], res[j], eps) and comp[i] != comp[j]:
                    m = min(comp[i], comp[j])
                    comp[i] = comp[j] = m
                    changed = True
    groups = {}
    for i, c in enumerate(comp):
        groups.setdefault(c, []).append(i)
    return sorted(tuple(v) for v in groups.values())


@given(st.lists(st.tuples(st.integers(-40, 40), st.integers(-3, 3)), min_size=1, max_size=12))
def test_clusters_match_brute_force(pts):
    eps = Fraction(1, 16)
    res = [g(Fraction(a, 32), Fraction(b, 32)) for a, b in pts]
    s = cluster_residues(res, eps)
    assert sorted(c.members for c in s.clusters) == brute_components(res, eps)


def test_arctangent_weight_and_argument():
    I = integrate(Poly((1,)), X**2 + 2, EPS, "pfd").integral
    ((w, W),) = I.atan_terms
    assert float(w) == pytest.approx(0.70710678118654752, rel=1e-10)
    (P,) = W
    assert P.degree == 1 and float(P[1]) == pytest.approx(0.70710678118654752, rel=1e-10)
    assert abs(float(P[0])) < 1e-10


def test_single_log_of_quadratic():
    I = integrate(2 * X, X**2 + 3, EPS, "pfd").integral
    ((v, V),) = I.log_terms
    # the roots +-i sqrt(3) are approximate, so the constant is 3 to within eps
    assert v == 1 and V.degree == 2 and V[1] == 0 and V[2] == 1
    assert abs(V[0] - 3) <= 3 * EPS
    assert I.atan_terms == []


def test_two_logs_for_irrational_real_poles():
    I = integrate(Poly((1,)), X**2 - 2, EPS, "pfd").integral
    assert len(I.log_terms) == 2
    coeffs = sorted(float(v) for v, _ in I.log_terms)
    assert coeffs == pytest.approx([-0.35355339059327, 0.35355339059327], rel=1e-10)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4), st.integers(0, 10**6))
def test_equal_residues_combine(groups, seed):
    # sum of r_k * F_k'/F_k with distinct integer residues: one log per residue
    rng = random.Random(seed)
    G, H = Poly(), Poly((1,))
    used = set()
    residues = []
    for _ in groups:
        r = rng.randint(-5, 5)
        if r == 0 or r in used:
            continue
        used.add(r)
        residues.append(r)
    if not residues:
        return
    nodes = rng.sample(range(-20, 21), len(residues) * 2)
    for k, r in enumerate(residues):
        F = (X - nodes[2 * k]) * (X - nodes[2 * k + 1])
        G = G * F + H * F.derivative() * r
        H = H * F
    I = integrate(G, H, EPS, "pfd").integral
    assert sorted(v for v, _ in I.log_terms) == sorted(Fraction(r) for r in residues)
    assert all(V.degree == 2 for _, V in I.log_terms)


def test_close_residues_merge_and_distinct_stay_apart():
    eps = Fraction(1, 2**20)
    s = cluster_residues([g(Fraction(1, 2) + Fraction(1, 2**50)), g(Fraction(1, 2) - Fraction(1, 2**50))], eps)
    assert s.cluster_sizes() == [2]
    assert s.clusters[0].representative in (g(Fraction(1, 2) + Fraction(1, 2**50)),
                                            g(Fraction(1, 2) - Fraction(1, 2**50)))
    assert cluster_residues([g(1), g(2)], eps).cluster_sizes() == [1, 1]


def test_output_coefficients_are_real_rationals():
    I = integrate(X**3 + 1, X**5 - 3 * X + 7, EPS, "pfd").integral
    for v, V in I.log_terms:
        assert isinstance(v, Fraction) and all(isinstance(c, Fraction) for c in V.coeffs)
    for w, W in I.atan_terms:
        assert isinstance(w, Fraction) and all(isinstance(c, Fraction) for P in W for c in P.coeffs)

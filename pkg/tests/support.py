"""Helpers shared by the error-analysis and acceptance tests.

``perturbed_result`` replaces the computed roots by accurate roots moved by
a controlled amount, so the exact backward error can be compared with the
linear estimate as the perturbation shrinks.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hybridint.exactarith import GaussianRational
from hybridint.integrate import IntegrationResult, reduce_rational
from hybridint.lrt import LrtIntegralTerms, LrtTerm, lrt_symbolic
from hybridint.pfd import cluster_residues, compute_residues
from hybridint.rootfinder import ApproxRoot, find_roots

ACCURATE = Fraction(1, 2**120)
TINY = Fraction(1, 2**200)


def _nudge(x: Fraction, delta: Fraction, bits: int = 200) -> Fraction:
    # dyadic value near x + delta, so exact arithmetic stays cheap
    v = x + delta
    return Fraction(round(v * 2**bits), 2**bits)


def perturb_roots(roots, delta: Fraction, rng: random.Random) -> list[ApproxRoot]:
    """Move every root by about ``delta * max(1, |r|)``, keeping conjugate pairs mirrored."""
    out: list[ApproxRoot | None] = [None] * len(roots)
    for k, r in enumerate(roots):
        if out[k] is not None:
            continue
        scale = delta * max(1, abs(complex(r)))
        dre = scale * rng.choice((-1, 1)) * Fraction(rng.randint(4, 8), 8)
        if r.im == 0:
            out[k] = ApproxRoot(_nudge(r.re, dre), Fraction(0), 2 * scale, None)
            continue
        dim = scale * rng.choice((-1, 1)) * Fraction(rng.randint(4, 8), 8)
        re, im = _nudge(r.re, dre), _nudge(r.im, dim)
        p = r.partner
        out[k] = ApproxRoot(re, im, 2 * scale, p)
        if p is not None:
            out[p] = ApproxRoot(re, -im, 2 * scale, k)
    return out


def perturbed_result(G, H, method: str, delta: Fraction, seed: int = 0) -> IntegrationResult:
    """Integration data for ``G/H`` with accurate roots perturbed by ``delta``."""
    rng = random.Random(seed)
    hermite = reduce_rational(G, H)
    if method == "pfd":
        roots = perturb_roots(find_roots(H, ACCURATE), delta, rng)
        residues = compute_residues(G, H, roots)
        structure = cluster_residues(residues, TINY, roots, H)
        return IntegrationResult(G, H, hermite, None, "pfd", delta, pfd=structure)
    sym = lrt_symbolic(G, H)
    terms = []
    for U, i, S in sym.pairs:
        roots = perturb_roots(find_roots(U, ACCURATE), delta, rng)
        for k, r in enumerate(roots):
            terms.append(LrtTerm(r, k, i, U, S, S.eval_c_gaussian(r.value)))
    lt = LrtIntegralTerms(sym, delta, tuple(terms))
    return IntegrationResult(G, H, hermite, None, "lrt", delta, lrt=lt)


def exact_delta(result: IntegrationResult, x: Fraction) -> Fraction:
    """``G/H(x)`` minus the perturbed logarithmic derivative, exactly (real part)."""
    G, H = result.G, result.H
    total = GaussianRational(G.eval_rational(x) / H.eval_rational(x))
    X = GaussianRational(x)
    if result.method == "pfd":
        st = result.pfd
        for cl in st.clusters:
            for k in cl.members:
                total = total - cl.representative / (X - st.roots[k].value)
    else:
        for t in result.lrt.terms:
            arg = t.argument
            num = arg.derivative()(X)
            total = total - t.root.value * num / arg(X)
    assert total.im == 0 or abs(total.im) <= abs(total.re) * Fraction(1, 2**100)
    return total.re


def away_nodes(H, lo=-10, hi=10, count=41, gap=Fraction(1, 20)) -> list[Fraction]:
    """Rational nodes in ``[lo, hi]`` at distance ``>= gap*max(1,|r|)`` from real roots of ``H``."""
    real = [r.re for r in find_roots(H, Fraction(1, 2**60)) if r.im == 0]
    nodes = []
    for j in range(count):
        x = Fraction(lo) + Fraction(hi - lo) * Fraction(j, count - 1) + Fraction(1, 997)
        if all(abs(x - r) >= gap * max(1, abs(r)) for r in real):
            nodes.append(x)
    return nodes

"""End-to-end integration driver for both logarithmic-part routes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hermite import HermiteResult, RationalFunction, canonicalize, hermite_reduce
from .lrt import LrtIntegralTerms, lrt_numeric, lrt_symbolic
from .pfd import PfdStructure, cluster_product, cluster_residues, compute_residues, pfd_roots
from .polynomial import Poly
from .postprocess import ComplexLogPair, SymbolicIntegral, finalize

__all__ = ["IntegrationResult", "integrate", "DEFAULT_EPSILON", "METHODS"]

DEFAULT_EPSILON = Fraction(1, 2**53)
METHODS = ("pfd", "lrt")


@dataclass
class IntegrationResult:
    """An antiderivative together with the data its error analysis needs."""

    A: Poly
    B: Poly
    hermite: HermiteResult
    integral: SymbolicIntegral
    method: str
    epsilon: Fraction
    lrt: LrtIntegralTerms | None = None
    pfd: PfdStructure | None = None

    @property
    def G(self) -> Poly:
        return self.hermite.remaining.num

    @property
    def H(self) -> Poly:
        return self.hermite.remaining.den


def reduce_rational(A: Poly, B: Poly) -> HermiteResult:
    P, f = canonicalize(A, B)
    return hermite_reduce(f, P)


def integrate(A: Poly, B: Poly, epsilon=DEFAULT_EPSILON, method: str = "pfd",
              hermite: HermiteResult | None = None) -> IntegrationResult:
    """Antiderivative of ``A/B`` with the logarithmic part computed by ``method``.

    ``hermite`` may be passed to reuse an earlier exact reduction of the
    same integrand.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("tolerance must be positive")
    if hermite is None:
        hermite = reduce_rational(A, B)
    G, H = hermite.remaining.num, hermite.remaining.den
    poly = hermite.poly_antiderivative
    real_logs: list[tuple[Fraction, Poly]] = []
    pairs: list[ComplexLogPair] = []
    lrt_terms = None
    structure = None
    if not G.is_zero():
        if method == "lrt":
            lrt_terms = lrt_numeric(lrt_symbolic(G, H), epsilon)
            for t in lrt_terms.terms:
                if t.root.is_real:
                    real_logs.append((t.root.re, t.argument.re))
                elif t.root.im > 0:
                    pairs.append(ComplexLogPair(t.root.re, t.root.im, t.argument.re, t.argument.im))
        else:
            roots = pfd_roots(H, epsilon)
            residues = compute_residues(G, H, roots)
            structure = cluster_residues(residues, epsilon, roots, H)
            for k, cl in enumerate(structure.clusters):
                if cl.self_conjugate:
                    prod = cluster_product(structure, cl, reversed_sign=False)
                    real_logs.append((cl.representative.re, prod.re))
                elif k < cl.conjugate:
                    prod = cluster_product(structure, cl, reversed_sign=True)
                    c = cl.representative
                    pairs.append(ComplexLogPair(c.re, c.im, prod.re, prod.im))
    integral = finalize(hermite.rational_part, poly, real_logs, pairs, method, epsilon)
    return IntegrationResult(A, B, hermite, integral, method, epsilon, lrt_terms, structure)

"""Logarithmic part through the Rothstein-Trager resultant and its subresultants.

The symbolic half is exact: ``R(c) = res_x(H, G - c H')`` is split
squarefree as ``prod U_i^i`` and each ``U_i`` is paired with a polynomial
``S_i(c, x)`` from the subresultant chain, so that

    integral(G/H) = sum_i sum_{U_i(c) = 0} c log S_i(c, x).

The numeric half only finds roots of the ``U_i`` and substitutes them into
``S_i`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import BiPoly, ComplexPoly, Poly, is_squarefree, squarefree_factor, subresultant_chain
from .rootfinder import ApproxRoot, find_roots

__all__ = ["LrtSymbolicPart", "LrtTerm", "LrtIntegralTerms", "lrt_symbolic", "lrt_numeric"]

C = Poly((0, 1))


@dataclass(frozen=True)
class LrtSymbolicPart:
    """Exact LRT data: ``pairs[k] = (U_i, i, S_i)``."""

    G: Poly
    H: Poly
    resultant: Poly
    pairs: tuple[tuple[Poly, int, BiPoly], ...]


@dataclass(frozen=True)
class LrtTerm:
    root: ApproxRoot
    root_index: int
    factor_index: int
    U: Poly
    S: BiPoly
    argument: ComplexPoly

    @property
    def is_real(self) -> bool:
        return self.root.is_real


@dataclass(frozen=True)
class LrtIntegralTerms:
    symbolic: LrtSymbolicPart
    epsilon: Fraction
    terms: tuple[LrtTerm, ...]


def lrt_symbolic(G: Poly, H: Poly) -> LrtSymbolicPart:
    """Exact Rothstein-Trager data for ``integral(G/H)``."""
    if H.degree < 1:
        raise ValueError("denominator must have positive degree")
    if G.degree >= H.degree:
        raise ValueError("integrand must be proper")
    if not is_squarefree(H):
        raise ValueError("expected squarefree denominator")
    if G.is_zero():
        return LrtSymbolicPart(G, H, Poly(), ())
    Hb = BiPoly.from_x(H)
    Gb = BiPoly.from_x(G) - BiPoly.from_x(H.derivative()) * C
    chain = subresultant_chain(Hb, Gb)
    R = chain.resultant
    sqf = squarefree_factor(R)
    pairs = []
    for U, i in sqf.factors:
        if i == H.degree:
            S = Hb
        else:
            S = _chain_element(chain, i)
        pairs.append((U, i, S.primitive_part_x()))
    return LrtSymbolicPart(G, H, R, tuple(pairs))


def _chain_element(chain, i: int) -> BiPoly:
    # first element of x-degree i with a nonzero principal coefficient
    for elem, lead in zip(chain.chain, chain.principal):
        if elem.deg_x == i and not lead.is_zero():
            return elem
    raise ArithmeticError(f"subresultant chain has no element of degree {i}")


def lrt_numeric(sym: LrtSymbolicPart, epsilon) -> LrtIntegralTerms:
    """Root-find every ``U_i`` to tolerance ``epsilon`` and substitute into ``S_i``."""
    epsilon = Fraction(epsilon)
    terms = []
    for U, i, S in sym.pairs:
        if U.degree < 1:
            continue
        roots = find_roots(U, epsilon)
        for k, r in enumerate(roots):
            arg = S.eval_c_gaussian(r.value)
            terms.append(LrtTerm(r, k, i, U, S, arg))
    return LrtIntegralTerms(sym, epsilon, tuple(terms))

"""Assembly of the real output form

    C/D + poly + sum v_i log V_i + sum w_j sum_k arctan P_jk

from either logarithmic-part route.  Conjugate logarithms are turned into a
real logarithm plus a two-argument arctangent, and the arctangent of a
rational function is rewritten as a sum of arctangents of polynomials so the
antiderivative has no spurious jumps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .hermite import RationalFunction
from .polynomial import Poly, extended_gcd, poly_divmod

__all__ = [
    "SymbolicIntegral",
    "ComplexLogPair",
    "pair_to_real",
    "rioboo_atan",
    "combine_log_terms",
    "combine_atan_args",
    "combine_atan_terms",
    "finalize",
]


@dataclass
class SymbolicIntegral:
    """``rational_part + poly_part + sum v log V + sum w * sum(arctan P for P in W)``.

    ``poly_part`` is the antiderivative of the polynomial part of the integrand.
    """

    rational_part: RationalFunction
    poly_part: Poly
    log_terms: list[tuple[Fraction, Poly]] = field(default_factory=list)
    atan_terms: list[tuple[Fraction, list[Poly]]] = field(default_factory=list)
    method: str = "pfd"
    epsilon: Fraction = Fraction(1, 2**53)

    def __eq__(self, other):
        if not isinstance(other, SymbolicIntegral):
            return NotImplemented
        return (self.rational_part == other.rational_part and self.poly_part == other.poly_part
                and self.log_terms == other.log_terms and self.atan_terms == other.atan_terms
                and self.method == other.method and self.epsilon == other.epsilon)

    def is_transcendental_free(self) -> bool:
        return not self.log_terms and not self.atan_terms


@dataclass(frozen=True)
class ComplexLogPair:
    """``(a + ib) log(W1 + i W2)`` plus its conjugate."""

    a: Fraction
    b: Fraction
    W1: Poly
    W2: Poly


def pair_to_real(p: ComplexLogPair):
    """Real form ``a log(W1^2 + W2^2) + 2b arctan(W1/W2)``.

    Returns ``(log_term, atan_raw)`` where ``atan_raw = (2b, W1, W2)`` or ``None``
    when ``b = 0``; ``log_term`` is ``None`` when ``a = 0``.
    """
    if p.W1.is_zero() and p.W2.is_zero():
        raise ValueError("both parts of the logarithm argument vanish")
    log_term = (p.a, p.W1 * p.W1 + p.W2 * p.W2) if p.a != 0 else None
    atan_raw = (2 * p.b, p.W1, p.W2) if p.b != 0 else None
    return log_term, atan_raw


def rioboo_atan(X: Poly, Y: Poly) -> list[Poly]:
    """Polynomials ``P_k`` with ``d/dx arctan(X/Y) = sum d/dx arctan(P_k)``.

    Extended-Euclidean recursion: if ``Y`` divides ``X`` the answer is
    ``X/Y``; if ``deg X < deg Y`` use ``arctan(X/Y) = -arctan(Y/X)`` up to a
    constant; otherwise with ``Y*D - X*C = gcd(X, Y)`` the identity
    ``arctan(X/Y) = arctan((X*D + Y*C)/g) + arctan(D/C)`` holds up to a
    constant and ``deg(D, C)`` drop.  Constant arctangents are dropped.
    """
    out: list[Poly] = []
    while True:
        if X.is_zero() or Y.is_zero():
            break
        q, r = poly_divmod(X, Y)
        if r.is_zero():
            out.append(q)
            break
        if X.degree < Y.degree:
            X, Y = -Y, X
            continue
        g, s, t = extended_gcd(Y, -X)
        # s*Y - t*X = g, so D = s and C = t
        D, Cp = s, t
        out.append((X * D + Y * Cp).exact_div(g))
        X, Y = D, Cp
    return [p for p in out if p.degree > 0]


def _monic_log(v: Fraction, V: Poly) -> tuple[Fraction, Poly] | None:
    if v == 0 or V.degree < 1:
        return None
    return v, V.monic()


def combine_log_terms(terms: list[tuple[Fraction, Poly]]) -> list[tuple[Fraction, Poly]]:
    """Normalize arguments to monic and merge terms with equal coefficients."""
    merged: dict[Fraction, Poly] = {}
    order: list[Fraction] = []
    for v, V in terms:
        t = _monic_log(Fraction(v), V)
        if t is None:
            continue
        v, V = t
        if v in merged:
            merged[v] = merged[v] * V
        else:
            merged[v] = V
            order.append(v)
    return [(v, merged[v]) for v in order]


def combine_atan_args(X1: Poly, Y1: Poly, X2: Poly, Y2: Poly) -> tuple[Poly, Poly]:
    """Arguments of the two-argument arctangent equal (up to a constant) to the sum.

    ``(X1 + iY1)(X2 + iY2)``: for ``X2 = a - x``, ``Y2 = b`` this is
    ``X' = X1(a - x) - b*Y1``, ``Y' = Y1(a - x) + b*X1``.
    """
    return X1 * X2 - Y1 * Y2, X1 * Y2 + Y1 * X2


def combine_atan_terms(terms: list[tuple[Fraction, Poly, Poly]]) -> list[tuple[Fraction, Poly, Poly]]:
    """Merge raw two-argument arctangents that carry the same coefficient."""
    merged: dict[Fraction, tuple[Poly, Poly]] = {}
    order: list[Fraction] = []
    for w, X, Y in terms:
        w = Fraction(w)
        if w == 0:
            continue
        if w in merged:
            merged[w] = combine_atan_args(*merged[w], X, Y)
        else:
            merged[w] = (X, Y)
            order.append(w)
    return [(w, *merged[w]) for w in order]


def _normalize_atan(w: Fraction, W: list[Poly]) -> tuple[Fraction, list[Poly]] | None:
    W = [p for p in W if p.degree > 0]
    if not W or w == 0:
        return None
    if W[0].lc < 0:
        w = -w
        W = [-p for p in W]
    return w, W


def finalize(rational_part: RationalFunction, poly_part: Poly, real_logs: list[tuple[Fraction, Poly]],
             pairs: list[ComplexLogPair], method: str, epsilon: Fraction) -> SymbolicIntegral:
    """Build the output form from real log terms and conjugate log pairs."""
    logs = list(real_logs)
    raw_atans = []
    for p in pairs:
        lt, at = pair_to_real(p)
        if lt is not None:
            logs.append(lt)
        if at is not None:
            raw_atans.append(at)
    atans = []
    for w, X, Y in combine_atan_terms(raw_atans):
        t = _normalize_atan(w, rioboo_atan(X, Y))
        if t is not None:
            atans.append(t)
    return SymbolicIntegral(rational_part, poly_part, combine_log_terms(logs), atans,
                            method, Fraction(epsilon))

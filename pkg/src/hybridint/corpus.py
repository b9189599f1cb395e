"""Seeded generators of test integrands.

``random_integrand`` builds ``A/B`` with ``B`` a product of small integer
factors raised to multiplicities; ``repeated_residue_integrand`` builds a
squarefree ``G/H`` whose residues are equal on prescribed groups of roots,
together with the expected residue multiplicity pattern.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Poly, is_squarefree, poly_gcd

__all__ = ["random_integrand", "repeated_residue_integrand", "corpus", "RepeatedResidueInstance"]


def _random_factor(rng: random.Random, degree: int, bound: int = 4) -> Poly:
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(degree)] + [rng.randint(1, 2)]
        p = Poly(coeffs)
        if degree == 1 or p[0] != 0:
            _, p = p.primitive()
            if is_squarefree(p):
                return p


def _coprime_to_all(p: Poly, others: list[Poly]) -> bool:
    return all(poly_gcd(p, q).degree == 0 for q in others)


def random_integrand(rng: random.Random, max_degree: int = 16, max_multiplicity: int = 3,
                     height: int = 1000, repeated: bool = False) -> tuple[Poly, Poly]:
    """A proper ``A/B`` with ``deg B <= max_degree`` and coefficient height ``<= height``.

    With ``repeated=True`` at least one factor of ``B`` has multiplicity two
    or more.
    """
    while True:
        target = rng.randint(2, max_degree)
        factors: list[Poly] = []
        B = Poly((1,))
        mults = []
        while B.degree < target:
            f = _random_factor(rng, rng.choice((1, 1, 2, 2, 3)))
            m = rng.randint(1, max_multiplicity)
            if B.degree + m * f.degree > max_degree or not _coprime_to_all(f, factors):
                if B.degree >= 1 and rng.random() < 0.3:
                    break
                continue
            factors.append(f)
            mults.append(m)
            B = B * f ** m
        if repeated and max(mults) < 2:
            continue
        if B.height() > height:
            continue
        A = Poly([rng.randint(-height, height) for _ in range(rng.randint(1, B.degree))])
        if A.is_zero():
            continue
        return A, B


def corpus(n: int, seed: int = 0, **kw) -> list[tuple[Poly, Poly]]:
    rng = random.Random(seed)
    return [random_integrand(rng, **kw) for _ in range(n)]


@dataclass(frozen=True)
class RepeatedResidueInstance:
    """``G/H`` with ``pattern`` the sorted multiset of equal-residue root counts."""

    G: Poly
    H: Poly
    pattern: tuple[int, ...]


def repeated_residue_integrand(rng: random.Random, max_degree: int = 12) -> RepeatedResidueInstance:
    """Sum of ``r * F'/F`` over groups sharing a residue.

    Real groups use a rational residue ``r`` on all roots of a product of
    random factors.  Complex groups use quadratics ``(x - m)^2 + d`` with a
    common ``d``: the residue ``r + i s sqrt(d)`` is shared by the upper
    roots and its conjugate by the lower ones.
    """
    while True:
        G, H = Poly(), Poly((1,))
        factors: list[Poly] = []
        pattern: list[int] = []
        used: set = set()
        ok = True
        for _ in range(rng.randint(1, 3)):
            if rng.random() < 0.6:
                r = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                if r == 0 or r in used:
                    continue
                used.add(r)
                F = Poly((1,))
                for _ in range(rng.randint(1, 3)):
                    f = _random_factor(rng, rng.choice((1, 1, 2)))
                    if not _coprime_to_all(f, factors):
                        ok = False
                        break
                    factors.append(f)
                    F = F * f
                if not ok:
                    break
                G = G * F + H * F.derivative() * r
                H = H * F
                pattern.append(F.degree)
            else:
                r = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                s = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.randint(1, 3))
                d = rng.randint(1, 5)
                if (r, s * s * d) in used:
                    continue
                used.add((r, s * s * d))
                centres = rng.sample(range(-5, 6), rng.randint(1, 3))
                # (x - m)^2 + d contributes (2r(x - m) - 2 s d) / ((x - m)^2 + d)
                for m in centres:
                    q = Poly((m * m + d, -2 * m, 1))
                    if not _coprime_to_all(q, factors):
                        ok = False
                        break
                    factors.append(q)
                    G = G * q + H * Poly((-2 * r * m - 2 * s * d, 2 * r))
                    H = H * q
                if not ok:
                    break
                pattern += [len(centres), len(centres)]
        if not ok or H.degree < 1 or H.degree > max_degree or G.is_zero():
            continue
        if not is_squarefree(H) or poly_gcd(G, H).degree > 0:
            continue
        return RepeatedResidueInstance(G, H, tuple(sorted(pattern)))

"""Logarithmic part through the partial fraction decomposition over C.

Roots of ``H`` are found numerically, residues ``G(r)/H'(r)`` are evaluated
exactly at the (exact rational) root approximations, and residues that agree
within the tolerance are identified so that the output keeps the structure of
repeated residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactarith import GaussianRational
from .polynomial import ComplexPoly, Poly
from .rootfinder import ApproxRoot, find_roots

__all__ = [
    "ResidueCluster",
    "PfdStructure",
    "compute_residues",
    "cluster_residues",
    "pfd_roots",
    "cluster_product",
]


@dataclass(frozen=True)
class ResidueCluster:
    """Roots sharing one residue.

    ``representative`` is the residue used for every member; for a cluster
    that is its own conjugate it is real.  ``conjugate`` is the index of the
    mirror cluster, or ``None`` when the cluster is self-conjugate.
    """

    representative: GaussianRational
    members: tuple[int, ...]
    representative_root: int
    conjugate: int | None

    @property
    def self_conjugate(self) -> bool:
        return self.conjugate is None


@dataclass(frozen=True)
class PfdStructure:
    roots: tuple[ApproxRoot, ...]
    residues: tuple[GaussianRational, ...]
    clusters: tuple[ResidueCluster, ...]

    def cluster_of(self, root_index: int) -> int:
        for k, cl in enumerate(self.clusters):
            if root_index in cl.members:
                return k
        raise KeyError(root_index)

    def cluster_sizes(self) -> list[int]:
        return sorted(len(c.members) for c in self.clusters)


def pfd_roots(H: Poly, epsilon) -> list[ApproxRoot]:
    return find_roots(H, epsilon)


def compute_residues(G: Poly, H: Poly, roots: list[ApproxRoot]) -> list[GaussianRational]:
    """Exact residues ``G(r)/H'(r)`` at the exact values of the approximations."""
    dH = H.derivative()
    out = []
    for r in roots:
        z = r.value
        den = dH.eval_gaussian(z)
        if den.is_zero():
            raise ArithmeticError("derivative vanishes at a root approximation")
        out.append(G.eval_gaussian(z) / den)
    return out


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        a, b = self.find(i), self.find(j)
        if a != b:
            # keep the smaller index as root for determinism
            if b < a:
                a, b = b, a
            self.parent[b] = a


def residues_linked(u: GaussianRational, v: GaussianRational, epsilon: Fraction) -> bool:
    """``|u - v| <= eps * max(1, |u|, |v|)``, decided exactly."""
    d = u - v
    scale = max(Fraction(1), u.abs2(), v.abs2())
    return d.abs2() <= epsilon * epsilon * scale


def cluster_residues(residues: list[GaussianRational], epsilon, roots: list[ApproxRoot] | None = None,
                     H: Poly | None = None) -> PfdStructure:
    """Connected components of the linking relation, with representatives.

    The representative of a cluster is the member whose root has the smallest
    exact ``|H(root)|`` (lowest index on ties).  Since conjugate roots carry
    exactly conjugate residues, the components are closed under conjugation;
    the representative of a mirror cluster is the conjugate of its partner's.
    """
    epsilon = Fraction(epsilon)
    n = len(residues)
    uf = _UnionFind(n)
    for i in range(n):
        for j in range(i + 1, n):
            if uf.find(i) != uf.find(j) and residues_linked(residues[i], residues[j], epsilon):
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(uf.find(i), []).append(i)
    comps = sorted(groups.values(), key=lambda g: g[0])

    if roots is not None and H is not None:
        residual = [H.eval_gaussian(r.value).abs2() for r in roots]
    else:
        residual = [Fraction(0)] * n
    partner = [r.partner for r in roots] if roots is not None else _residue_partners(residues)

    comp_of = {}
    for k, g in enumerate(comps):
        for i in g:
            comp_of[i] = k
    conj_comp = []
    for g in comps:
        p = partner[g[0]]
        conj_comp.append(comp_of[p if p is not None else g[0]])

    reps: dict[int, int] = {}
    for k, g in enumerate(comps):
        m = conj_comp[k]
        if m != k and m in reps:
            reps[k] = partner[reps[m]]
            continue
        reps[k] = min(g, key=lambda i: (residual[i], i))

    clusters = []
    for k, g in enumerate(comps):
        rep = reps[k]
        value = residues[rep]
        if conj_comp[k] == k:
            value = GaussianRational(value.re, Fraction(0))
            conj = None
        else:
            conj = conj_comp[k]
        clusters.append(ResidueCluster(value, tuple(g), rep, conj))
    return PfdStructure(tuple(roots) if roots is not None else (), tuple(residues), tuple(clusters))


def _residue_partners(residues: list[GaussianRational]) -> list[int | None]:
    partner: list[int | None] = [None] * len(residues)
    for i, u in enumerate(residues):
        if u.im == 0 or partner[i] is not None:
            continue
        for j in range(i + 1, len(residues)):
            if partner[j] is None and residues[j] == u.conjugate():
                partner[i], partner[j] = j, i
                break
    return partner


def cluster_product(structure: PfdStructure, cluster: ResidueCluster, *, reversed_sign: bool) -> ComplexPoly:
    """Product over members of ``(root - x)`` (or ``(x - root)``) with exact coefficients.

    Multiplying the linear factors one at a time is the recursive
    two-argument arctangent combination: ``(X + iY)((a - x) + ib)`` has real part
    ``X(a - x) - bY`` and imaginary part ``Y(a - x) + bX``.
    """
    out = ComplexPoly(Poly((1,)), Poly())
    for i in cluster.members:
        z = structure.roots[i].value
        if reversed_sign:
            factor = ComplexPoly(Poly((z.re, -1)), Poly((z.im,)))
        else:
            factor = ComplexPoly.linear_root(z)
        out = out * factor
    return out

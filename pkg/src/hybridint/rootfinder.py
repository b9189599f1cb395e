"""Certified complex roots of squarefree rational polynomials.

Approximations come from Aberth-Ehrlich iteration, first in numpy double
precision, then in a private mpmath context whose precision doubles until the
result certifies.  Every returned root is quantized to a dyadic (or exactly
recovered rational) centre, and certification is done in exact integer
arithmetic: Weierstrass inclusion disks ``n * |p(z_i) / (lc * prod(z_i - z_j))|``
that are pairwise disjoint each hold exactly one root.

The quantization step keeps about ``log2(deg**2 / eps)`` bits, so the
actual error of the centres is proportional to the requested tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Sequence

import mpmath
import numpy as np

from .exactarith import GaussianRational
from .polynomial import Poly, gaussian_horner_int, poly_gcd

__all__ = ["ApproxRoot", "find_roots", "refine_root", "CertificationError"]

MAX_PRECISION = 1 << 15
_RADIUS_BITS = 32


class CertificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class ApproxRoot:
    """Root approximation with a certified absolute inclusion radius.

    ``re`` and ``im`` are exact rationals (dyadic, or the exact root when one
    was recovered, in which case ``radius == 0``).  ``partner`` is the index of
    the complex conjugate root in the list returned by :func:`find_roots`.
    """

    re: Fraction
    im: Fraction
    radius: Fraction
    partner: int | None = None

    @property
    def value(self) -> GaussianRational:
        return GaussianRational(self.re, self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_exact(self) -> bool:
        return self.radius == 0

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def relative_radius(self) -> float:
        a = self.abs2()
        if a == 0:
            return 0.0 if self.radius == 0 else math.inf
        return float(self.radius) / math.sqrt(float(a))


# -- numerical iteration -----------------------------------------------------


def _cauchy_radius(coeffs: Sequence[int]) -> float:
    lead = abs(coeffs[-1])
    m = max(abs(c) for c in coeffs[:-1])
    # Cauchy bound 1 + max|a_i/a_n|, computed with big integers to avoid overflow
    return 1.0 + float(Fraction(m, lead))


def _initial_points(n: int, radius: float) -> np.ndarray:
    k = np.arange(n)
    angles = 2 * np.pi * k / n + 0.7
    return radius * np.exp(1j * angles)


def _scaled_float_coeffs(coeffs: Sequence[int]) -> np.ndarray | None:
    """Descending float coefficients scaled to max magnitude about 1."""
    top = max(abs(c) for c in coeffs).bit_length()
    vals = [float(Fraction(c, 1 << top)) for c in coeffs]
    return np.array(vals[::-1], dtype=np.complex128)


def _aberth_float(coeffs: Sequence[int], z: np.ndarray, maxiter: int = 500) -> np.ndarray | None:
    c = _scaled_float_coeffs(coeffs)
    if c is None:
        return None
    dc = np.polyder(c)
    n = len(z)
    eye = np.eye(n, dtype=bool)
    with np.errstate(all="ignore"):
        for _ in range(maxiter):
            p = np.polyval(c, z)
            dp = np.polyval(dc, z)
            ratio = p / dp
            diff = z[:, None] - z[None, :]
            diff[eye] = 1.0
            inv = 1.0 / diff
            inv[eye] = 0.0
            s = inv.sum(axis=1)
            w = ratio / (1.0 - ratio * s)
            w[p == 0] = 0.0
            if not np.all(np.isfinite(w)):
                return None
            z = z - w
            if np.all(np.abs(w) <= 4e-16 * np.maximum(np.abs(z), 1e-300)):
                break
    if not np.all(np.isfinite(z)):
        return None
    return z


def _aberth_mp(ctx, coeffs: Sequence[int], z: list, maxiter: int = 200) -> list:
    """Gauss-Seidel Aberth iteration in the given mpmath context."""
    c = [ctx.mpf(v) for v in coeffs[::-1]]
    dc = [c[i] * (len(c) - 1 - i) for i in range(len(c) - 1)]
    n = len(z)
    tol = ctx.ldexp(1, -ctx.prec + 8)
    for _ in range(maxiter):
        worst = 0
        for i in range(n):
            zi = z[i]
            p = ctx.polyval(c, zi)
            if p == 0:
                continue
            dp = ctx.polyval(dc, zi)
            ratio = p / dp
            s = ctx.fsum(1 / (zi - z[j]) for j in range(n) if j != i)
            w = ratio / (1 - ratio * s)
            z[i] = zi - w
            az = abs(z[i])
            rel = abs(w) / az if az else abs(w)
            if rel > worst:
                worst = rel
        if worst <= tol:
            break
    return z


# -- exact helpers -----------------------------------------------------------


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (float, np.floating)):
        return Fraction(float(v))
    sign, man, exp, _bc = v._mpf_
    man = -int(man) if sign else int(man)
    exp = int(exp)
    if man == 0:
        return Fraction(0)
    return Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)


def _quantize(x: Fraction, scale_exp: int, bits: int) -> Fraction:
    """Round ``x`` to the grid ``2**(scale_exp - bits)``."""
    shift = bits - scale_exp
    if shift >= 0:
        return Fraction(round(x * (1 << shift)), 1 << shift)
    return Fraction(round(x / (1 << -shift)) * (1 << -shift))


def _magnitude_exp(re: Fraction, im: Fraction) -> int:
    a = abs(re) + abs(im)
    if a == 0:
        return 0
    return a.numerator.bit_length() - a.denominator.bit_length()


def _upper_sqrt(q: Fraction) -> Fraction:
    """Dyadic upper bound on sqrt(q) with about 32 significant bits."""
    if q <= 0:
        return Fraction(0)
    e = (q.numerator.bit_length() - q.denominator.bit_length()) // 2
    s = _RADIUS_BITS - e
    if s >= 0:
        scaled = q * (1 << (2 * s))
    else:
        scaled = q / (1 << (-2 * s))
    n = -(-scaled.numerator // scaled.denominator)
    r = isqrt(n)
    if r * r < n:
        r += 1
    return Fraction(r, 1 << s) if s >= 0 else Fraction(r << -s)


def _try_exact(P: Sequence[int], re: Fraction, im: Fraction,
               rel_tol: Fraction) -> GaussianRational | None:
    """Recover a rational or Gaussian-rational root near ``re + i im``.

    ``lc * root`` is an algebraic integer, so an exact Gaussian-rational root
    has the form ``(a + ib)/lc`` with integers ``a, b``.  The candidate must
    lie within ``rel_tol * |z|`` of the approximation.
    """
    L = abs(P[-1])
    a = round(re * L)
    b = round(im * L)
    g = gcd(gcd(a, b), L)
    A, B, D = a // g, b // g, L // g
    dr, di = Fraction(A, D) - re, Fraction(B, D) - im
    if dr * dr + di * di > rel_tol * rel_tol * max(re * re + im * im, Fraction(1, 1 << 60)):
        return None
    hr, hi = gaussian_horner_int(P, A, B, D)
    if hr == 0 and hi == 0:
        return GaussianRational(Fraction(A, D), Fraction(B, D))
    return None


@dataclass
class _Candidate:
    re: Fraction
    im: Fraction
    exact: bool


def _certify(P: Sequence[int], cands: list[_Candidate], tau: Fraction) -> list[Fraction] | None:
    """Exact Weierstrass radii, or ``None`` if disks overlap or exceed ``tau|z|``."""
    n = len(P) - 1
    L = P[-1]
    D = lcm(*(c.re.denominator for c in cands), *(c.im.denominator for c in cands))
    ints = [(int(c.re * D), int(c.im * D)) for c in cands]
    if len(set(ints)) < len(ints):
        return None
    radii = []
    for i, (a, b) in enumerate(ints):
        if cands[i].exact:
            radii.append(Fraction(0))
            continue
        hr, hi = gaussian_horner_int(P, a, b, D)
        pr, pi = 1, 0
        for j, (c, d) in enumerate(ints):
            if j != i:
                u, v = a - c, b - d
                pr, pi = pr * u - pi * v, pr * v + pi * u
        # |w|^2 = |H|^2 / (D^2 L^2 |Pi|^2), radius = n |w|
        num = n * n * (hr * hr + hi * hi)
        den = D * D * L * L * (pr * pr + pi * pi)
        r = _upper_sqrt(Fraction(num, den))
        az2 = Fraction(a * a + b * b, D * D)
        if r * r > tau * tau * az2:
            return None
        radii.append(r)
    for i in range(len(cands)):
        for j in range(i + 1, len(cands)):
            dr = cands[i].re - cands[j].re
            di = cands[i].im - cands[j].im
            s = radii[i] + radii[j]
            if dr * dr + di * di <= s * s:
                return None
    return radii


def _pair_and_snap(P, approx: list[complex], prec: int, bits: int) -> list[_Candidate] | None:
    """Classify real/complex, pair conjugates and quantize; exact roots recovered."""
    n = len(approx)
    thresh = Fraction(1, 1 << max(prec // 2, 20))
    reals, uppers, lowers = [], [], []
    for z in approx:
        re, im = _to_fraction(z[0]), _to_fraction(z[1])
        mag2 = re * re + im * im
        if im * im <= thresh * thresh * mag2:
            reals.append(re)
        elif im > 0:
            uppers.append((re, im))
        else:
            lowers.append((re, -im))
    if len(uppers) != len(lowers):
        return None
    # pair every upper root with the nearest unused mirrored lower root
    paired = []
    free = list(lowers)
    for re, im in uppers:
        k = min(range(len(free)), key=lambda t: (free[t][0] - re) ** 2 + (free[t][1] - im) ** 2)
        lre, lim = free.pop(k)
        paired.append(((re + lre) / 2, (im + lim) / 2))
    out: list[_Candidate] = []
    for re in reals:
        ex = _try_exact(P, re, Fraction(0), thresh)
        if ex is not None:
            out.append(_Candidate(ex.re, Fraction(0), True))
        else:
            e = _magnitude_exp(re, Fraction(0))
            out.append(_Candidate(_quantize(re, e, bits), Fraction(0), False))
    for re, im in paired:
        ex = _try_exact(P, re, im, thresh)
        if ex is not None and ex.im != 0:
            cre, cim, exact = ex.re, abs(ex.im), True
        else:
            e = _magnitude_exp(re, im)
            cre, cim, exact = _quantize(re, e, bits), _quantize(im, e, bits), False
            if cim == 0:
                return None
        out.append(_Candidate(cre, cim, exact))
        out.append(_Candidate(cre, -cim, exact))
    if len(out) != n:
        return None
    return out


def _order(cands: list[_Candidate], radii: list[Fraction]) -> list[ApproxRoot]:
    """Deterministic order: real roots ascending, then conjugate pairs (upper first)."""
    reals = sorted((c.re, r) for c, r in zip(cands, radii) if c.im == 0)
    uppers = sorted((c.re, c.im, r) for c, r in zip(cands, radii) if c.im > 0)
    roots = [ApproxRoot(re, Fraction(0), r, None) for re, r in reals]
    for re, im, r in uppers:
        k = len(roots)
        roots.append(ApproxRoot(re, im, r, k + 1))
        roots.append(ApproxRoot(re, -im, r, k))
    return roots


def _bits_for(n: int, epsilon: Fraction) -> int:
    # relative grid spacing eps / n^2, with a few guard bits
    log_eps = math.log2(epsilon.numerator) - math.log2(epsilon.denominator)
    return max(8, math.ceil(2 * math.log2(n) - log_eps) + 3)


def find_roots(p: Poly, epsilon) -> list[ApproxRoot]:
    """All roots of the squarefree polynomial ``p`` with radius <= (eps/deg)|root|."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("tolerance must be positive")
    n = p.degree
    if n < 1:
        raise ValueError("polynomial must have degree >= 1")
    if poly_gcd(p, p.derivative()).degree > 0:
        raise ValueError("expected squarefree polynomial")
    P = list(p.integer_coeffs())
    if n == 1:
        return [ApproxRoot(Fraction(-P[0], P[1]), Fraction(0), Fraction(0), None)]
    tau = epsilon / n
    bits = _bits_for(n, epsilon)

    z0 = _initial_points(n, _cauchy_radius(P))
    zf = _aberth_float(P, z0)
    if zf is not None:
        approx = [(float(v.real), float(v.imag)) for v in zf]
        cands = _pair_and_snap(P, approx, 53, min(bits, 50))
        if cands is not None and bits <= 50:
            radii = _certify(P, cands, tau)
            if radii is not None:
                return _order(cands, radii)
    ctx = mpmath.MPContext()
    prec = 106
    if zf is not None:
        zs = [ctx.mpc(complex(v)) for v in zf]
    else:
        ctx.prec = prec
        zs = [ctx.mpc(complex(v)) for v in z0]
    while prec <= MAX_PRECISION:
        ctx.prec = prec
        zs = [ctx.mpc(v) for v in zs]
        zs = _aberth_mp(ctx, P, zs)
        approx = [(v.real, v.imag) for v in zs]
        cands = _pair_and_snap(P, approx, prec, min(bits, prec - 8))
        if cands is not None:
            radii = _certify(P, cands, tau)
            if radii is not None:
                return _order(cands, radii)
        prec *= 2
    raise CertificationError("root certification failed at maximum precision")


def refine_root(p: Poly, root: ApproxRoot, epsilon) -> ApproxRoot:
    """Shrink the disk of ``root`` to radius <= (eps/deg)|root| by Newton's method.

    The refined disk is checked to lie inside the old one, so it still
    isolates the same root.
    """
    epsilon = Fraction(epsilon)
    if root.is_exact:
        return root
    n = p.degree
    tau = epsilon / n
    if root.radius * root.radius <= tau * tau * root.abs2():
        return root
    lower = root.im < 0
    if lower:
        root = ApproxRoot(root.re, -root.im, root.radius, root.partner)
    P = list(p.integer_coeffs())
    dP = [k * P[k] for k in range(1, len(P))]
    bits = _bits_for(n, epsilon)
    ctx = mpmath.MPContext()
    prec = max(2 * bits, 64)
    real = root.is_real
    while prec <= MAX_PRECISION:
        ctx.prec = prec
        c = [ctx.mpf(v) for v in P[::-1]]
        dc = [ctx.mpf(v) for v in dP[::-1]]
        if real:
            z = ctx.mpf(root.re.numerator) / root.re.denominator
        else:
            z = ctx.mpc(ctx.mpf(root.re.numerator) / root.re.denominator,
                        ctx.mpf(root.im.numerator) / root.im.denominator)
        for _ in range(200):
            step = ctx.polyval(c, z) / ctx.polyval(dc, z)
            z = z - step
            if abs(step) <= ctx.ldexp(abs(z), -prec + 4):
                break
        re = _to_fraction(z.real if not real else z)
        im = Fraction(0) if real else _to_fraction(z.imag)
        e = _magnitude_exp(re, im)
        ex = _try_exact(P, re, im, Fraction(1, 1 << (prec // 2)))
        if ex is not None:
            cand = ex
            radius = Fraction(0)
        else:
            cand = GaussianRational(_quantize(re, e, bits), _quantize(im, e, bits))
            D = lcm(cand.re.denominator, cand.im.denominator)
            a, b = int(cand.re * D), int(cand.im * D)
            hr, hi = gaussian_horner_int(P, a, b, D)
            gr, gi = gaussian_horner_int(dP, a, b, D)
            if gr == 0 and gi == 0:
                prec *= 2
                continue
            # p(z) = H / D^n, p'(z) = G / D^(n-1): |p/p'|^2 = |H|^2 / (D^2 |G|^2)
            q = Fraction(n * n * (hr * hr + hi * hi), D * D * (gr * gr + gi * gi))
            radius = _upper_sqrt(q)
            if radius * radius > tau * tau * cand.abs2():
                prec *= 2
                continue
        dr, di = cand.re - root.re, cand.im - root.im
        if (radius + _upper_sqrt(dr * dr + di * di)) <= root.radius:
            im = -cand.im if lower else cand.im
            return ApproxRoot(cand.re, im, radius, root.partner)
        prec *= 2
    raise CertificationError("root refinement failed at maximum precision")

"""Linear backward and forward error estimates for a computed antiderivative.

With true roots ``gamma = gamma_hat + d_gamma`` (``d_gamma ~ -H/H'`` at the
approximation) and true residues ``c = c_hat + d_c``:

* backward, PFD:  ``delta(x) ~ Re sum_k d_c_k/(x - g_k) + c_k d_g_k/(x - g_k)^2``
* backward, LRT:  ``delta(x) ~ Re sum d_c * d/dc [c S_x/S]`` at ``c_hat``
* forward, PFD:   ``Re sum_k d_c_k log(g_k - x) + c_k d_g_k/(g_k - x)``
* forward, LRT:   ``Re sum d_c * (log S + c S_c/S)``

Sums run over every root, so conjugate contributions pair up and the
imaginary parts cancel.  Logarithms of complex arguments use a branch that
is continuous along the real line.

The backward error ``delta = f - d/dx F_hat`` itself is evaluated exactly at
rational points: the rational and polynomial parts cancel identically, so
only the logarithmic part of the integrand and the derivative of the
transcendental terms are involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .exactarith import GaussianRational
from .hermite import RationalFunction
from .integrate import IntegrationResult
from .polynomial import ComplexPoly, Poly
from .postprocess import SymbolicIntegral

__all__ = [
    "ErrorTermData",
    "ErrorReport",
    "Boundary",
    "differentiate_integral",
    "delta_function",
    "error_terms",
    "backward_xi",
    "forward_xi_theta",
    "sup_norm",
    "singularity_boundaries",
    "error_report",
    "measured_backward_sup",
    "pole_pattern",
]

CHEBYSHEV_NODES = 129


# -- exact derivative and delta ---------------------------------------------


def differentiate_integral(I: SymbolicIntegral) -> RationalFunction:
    """Exact derivative of an assembled antiderivative."""
    out = I.rational_part.derivative() + RationalFunction.from_poly(I.poly_part.derivative())
    for v, V in I.log_terms:
        out = out + RationalFunction(V.derivative() * v, V)
    one = Poly((1,))
    for w, W in I.atan_terms:
        for P in W:
            out = out + RationalFunction(P.derivative() * w, P * P + one)
    return out


class _DeltaEvaluator:
    """``delta(x) = G/H(x) - (transcendental part)'(x)`` evaluated exactly."""

    def __init__(self, G: Poly, H: Poly, I: SymbolicIntegral):
        self.G, self.H = G, H
        self.logs = [(v, V, V.derivative()) for v, V in I.log_terms]
        self.atans = [(w, P, P.derivative()) for w, W in I.atan_terms for P in W]

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        if self.G.is_zero():
            val = Fraction(0)
        else:
            val = self.G.eval_rational(x) / self.H.eval_rational(x)
        for v, V, dV in self.logs:
            val -= v * dV.eval_rational(x) / V.eval_rational(x)
        for w, P, dP in self.atans:
            p = P.eval_rational(x)
            val -= w * dP.eval_rational(x) / (1 + p * p)
        return val

    def abs_float(self, xs: np.ndarray) -> np.ndarray:
        out = np.empty(len(xs))
        for i, x in enumerate(xs):
            try:
                out[i] = abs(float(self(Fraction(float(x)))))
            except ZeroDivisionError:
                out[i] = np.nan
        return out


def delta_function(result: IntegrationResult) -> _DeltaEvaluator:
    return _DeltaEvaluator(result.G, result.H, result.integral)


# -- error term data --------------------------------------------------------


def _c(z: GaussianRational) -> complex:
    return complex(float(z.re), float(z.im))


def _cpoly(p: ComplexPoly) -> np.ndarray:
    """Descending complex128 coefficients."""
    n = max(len(p.re), len(p.im))
    re, im = p.re.float_coeffs(), p.im.float_coeffs()
    re += [0.0] * (n - len(re))
    im += [0.0] * (n - len(im))
    return (np.array(re) + 1j * np.array(im))[::-1]


@dataclass
class PfdRootData:
    root: complex
    real: bool
    d_root: complex
    residue: complex
    cluster_residue: complex
    d_residue: complex
    residual_zero: bool


@dataclass
class LrtRootData:
    c: complex
    real: bool
    d_c: complex
    S: np.ndarray
    S_x: np.ndarray
    S_c: np.ndarray
    S_xc: np.ndarray
    lead: complex
    zeros: np.ndarray
    residual_zero: bool


@dataclass
class ErrorTermData:
    """Per-root ingredients of the linear estimates, as floating point values."""

    method: str
    pfd: list[PfdRootData] = field(default_factory=list)
    lrt: list[LrtRootData] = field(default_factory=list)

    def is_exact(self) -> bool:
        items = self.pfd if self.method == "pfd" else self.lrt
        return all(d.residual_zero for d in items)


def error_terms(result: IntegrationResult) -> ErrorTermData:
    if result.method == "pfd":
        return _pfd_terms(result)
    return _lrt_terms(result)


def _pfd_terms(result: IntegrationResult) -> ErrorTermData:
    data = ErrorTermData("pfd")
    st = result.pfd
    if st is None:
        return data
    G, H = result.G, result.H
    dG, dH = G.derivative(), H.derivative()
    d2H = dH.derivative()
    for cl in st.clusters:
        rep = cl.representative
        for k in cl.members:
            z = st.roots[k].value
            h = H.eval_gaussian(z)
            hp = dH.eval_gaussian(z)
            d_root = -(h / hp)
            g = G.eval_gaussian(z)
            # c'(z) = G'/H' - G H''/H'^2
            dc = dG.eval_gaussian(z) / hp - g * d2H.eval_gaussian(z) / (hp * hp)
            res = st.residues[k]
            d_res = (res - rep) + dc * d_root
            data.pfd.append(PfdRootData(_c(z), st.roots[k].is_real, _c(d_root), _c(res), _c(rep),
                                        _c(d_res), h.is_zero()))
    return data


def _lrt_terms(result: IntegrationResult) -> ErrorTermData:
    data = ErrorTermData("lrt")
    lt = result.lrt
    if lt is None:
        return data
    for t in lt.terms:
        c = t.root.value
        u = t.U.eval_gaussian(c)
        du = t.U.derivative().eval_gaussian(c)
        d_c = -(u / du)
        S = t.argument
        Sc = t.S.diff_c().eval_c_gaussian(c)
        s_arr = _cpoly(S)
        zeros = np.roots(s_arr) if (not t.root.is_real and len(s_arr) > 1) else np.array([])
        data.lrt.append(LrtRootData(
            _c(c), t.root.is_real, _c(d_c), s_arr, _cpoly(S.derivative()), _cpoly(Sc),
            _cpoly(Sc.derivative()), complex(s_arr[0]) if len(s_arr) else 1.0, zeros, u.is_zero()))
    return data


# -- evaluators ---------------------------------------------------------------


def _as_array(x) -> tuple[np.ndarray, bool]:
    scalar = np.isscalar(x) or isinstance(x, Fraction)
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    return arr, scalar


def _finish(val: np.ndarray, scalar: bool):
    if scalar:
        v = float(val[0])
        if not math.isfinite(v):
            raise ValueError("inside singular boundary")
        return v
    return val


def backward_xi(data: ErrorTermData, x):
    """Linear backward error estimate at ``x`` (scalar or array)."""
    xs, scalar = _as_array(x)
    total = np.zeros(len(xs), dtype=complex)
    with np.errstate(all="ignore"):
        if data.method == "pfd":
            for d in data.pfd:
                if d.residual_zero and d.d_residue == 0:
                    continue
                t = 1.0 / (xs - d.root)
                total += d.d_residue * t + d.cluster_residue * d.d_root * t * t
        else:
            for d in data.lrt:
                if d.d_c == 0:
                    continue
                S = np.polyval(d.S, xs)
                Sx = np.polyval(d.S_x, xs)
                Sc = np.polyval(d.S_c, xs)
                Sxc = np.polyval(d.S_xc, xs)
                total += d.d_c * (Sx / S + d.c * (Sxc / S - Sx * Sc / (S * S)))
    return _finish(total.real, scalar)


def _continuous_log(d: LrtRootData, xs: np.ndarray, S: np.ndarray) -> np.ndarray:
    mag = np.log(np.abs(S))
    if d.real:
        return mag.astype(complex)
    arg = np.angle(d.lead) + np.sum(np.angle(xs[:, None] - d.zeros[None, :]), axis=1)
    return mag + 1j * arg


def forward_xi_theta(data: ErrorTermData, x):
    """Linear forward error estimate (modulo a constant) at ``x``."""
    xs, scalar = _as_array(x)
    total = np.zeros(len(xs), dtype=complex)
    with np.errstate(all="ignore"):
        if data.method == "pfd":
            for d in data.pfd:
                if d.residual_zero and d.d_residue == 0:
                    continue
                w = d.root - xs
                if d.real:
                    lg = np.log(np.abs(w)).astype(complex)
                else:
                    lg = np.log(w)
                total += d.d_residue * lg + d.cluster_residue * d.d_root / w
        else:
            for d in data.lrt:
                if d.d_c == 0:
                    continue
                S = np.polyval(d.S, xs)
                Sc = np.polyval(d.S_c, xs)
                total += d.d_c * (_continuous_log(d, xs, S) + d.c * Sc / S)
    return _finish(total.real, scalar)


def imaginary_residual(data: ErrorTermData, x) -> float:
    """Size of the imaginary part left in the backward sum (should vanish)."""
    xs, _ = _as_array(x)
    total = np.zeros(len(xs), dtype=complex)
    if data.method == "pfd":
        for d in data.pfd:
            t = 1.0 / (xs - d.root)
            total += d.d_residue * t + d.cluster_residue * d.d_root * t * t
    else:
        for d in data.lrt:
            S = np.polyval(d.S, xs)
            Sx = np.polyval(d.S_x, xs)
            Sc = np.polyval(d.S_c, xs)
            Sxc = np.polyval(d.S_xc, xs)
            total += d.d_c * (Sx / S + d.c * (Sxc / S - Sx * Sc / (S * S)))
    return float(np.max(np.abs(total.imag)))


# -- singularity boundaries -------------------------------------------------


@dataclass(frozen=True)
class Boundary:
    center: float
    radius: float
    direction: str  # "backward" or "forward"

    def contains(self, x) -> np.ndarray:
        return np.abs(np.asarray(x, dtype=float) - self.center) < self.radius


def _refine_radius(g: Callable[[float], float], rho0: float, eps: float, steps: int = 30) -> float:
    """Radius where ``g`` drops to ``eps``, bracketed around ``rho0`` and bisected."""
    if rho0 == 0 or not math.isfinite(rho0):
        return rho0
    lo = hi = rho0
    if g(rho0) > eps:
        for _ in range(steps):
            lo, hi = hi, hi * 2
            if g(hi) <= eps:
                break
        else:
            return rho0
    else:
        for _ in range(steps):
            hi, lo = lo, lo / 2
            if g(lo) > eps:
                break
        else:
            return rho0
    while hi / lo > 1.05:
        mid = math.sqrt(lo * hi)
        if g(mid) > eps:
            lo = mid
        else:
            hi = mid
    return hi


def _lrt_real_poles(d: LrtRootData) -> list[float]:
    if not d.real or len(d.S) < 2:
        return []
    coeffs = d.S.real
    zs = np.roots(coeffs)
    return [float(z.real) for z in zs if abs(z.imag) <= 1e-7 * max(abs(z), 1e-300)]


def singularity_boundaries(data: ErrorTermData, epsilon) -> list[Boundary]:
    """Exclusion radii around real poles where the estimates reach ``epsilon``.

    Backward: the dominant term is ``k/(x - r)^2``, so ``rho0 = sqrt(|k|/eps)``;
    forward: ``k/(x - r)`` plus a logarithm, so ``rho0 = |k|/eps``.  Both are
    refined by bisection (backward on the full estimate, forward on the pole's
    own term including its logarithm).
    """
    eps = float(epsilon)
    out = []
    poles: list[tuple[float, float, float]] = []  # (r, k, d_log)
    if data.method == "pfd":
        for d in data.pfd:
            if d.real:
                k = 0.0 if d.residual_zero else abs(d.cluster_residue * d.d_root)
                poles.append((d.root.real, k, d.d_residue.real))
    else:
        for d in data.lrt:
            for r in _lrt_real_poles(d):
                Sx = np.polyval(d.S_x, r)
                Sc = np.polyval(d.S_c, r)
                k = 0.0 if d.d_c == 0 else abs(d.c * d.d_c * Sc / Sx)
                poles.append((r, float(k), d.d_c.real))
    for r, k, dlog in poles:
        def gb(rho, r=r):
            vals = np.abs(backward_xi(data, np.array([r - rho, r + rho])))
            return float(np.max(vals))

        def gf(rho, k=k, dlog=dlog):
            base = dlog * math.log(rho)
            return max(abs(base + k / rho), abs(base - k / rho))

        rb = _refine_radius(gb, math.sqrt(k / eps), eps)
        rf = _refine_radius(gf, k / eps, eps)
        out.append(Boundary(r, rb, "backward"))
        out.append(Boundary(r, rf, "forward"))
    return out


# -- sup norm ------------------------------------------------------------------


def _chebyshev(n: int) -> np.ndarray:
    return np.cos(np.pi * (np.arange(n) + 0.5) / n)[::-1]


def sup_norm(func: Callable[[np.ndarray], np.ndarray], interval=None,
             exclusions: Sequence[Boundary] = (), nodes: int = CHEBYSHEV_NODES,
             return_argmax: bool = False):
    """Estimate ``max |func|`` over an interval (``None`` = whole real line).

    ``func`` maps an array of points to an array of values.  Chebyshev nodes
    and the edges of the exclusions are sampled, points inside the
    exclusions are dropped, and golden-section search around the three
    largest samples refines the maximum until two successive refinements
    agree to 1%.  The result is never below the largest sample.
    """
    t = _chebyshev(nodes)
    if interval is None:
        to_x = lambda s: s / (1 - s * s)  # noqa: E731
        to_t = lambda x: 2 * x / (1 + math.sqrt(1 + 4 * x * x))  # noqa: E731
    else:
        a, b = float(interval[0]), float(interval[1])
        to_x = lambda s: (a + b) / 2 + (b - a) / 2 * s  # noqa: E731
        to_t = lambda x: (2 * x - a - b) / (b - a)  # noqa: E731
        t = np.concatenate(([-1.0], t, [1.0]))
    # errors grow towards a pole, so the edges of the exclusions are sampled too
    edges = []
    for bd in exclusions:
        for x in (bd.center - bd.radius * (1 + 1e-9), bd.center + bd.radius * (1 + 1e-9)):
            if bd.radius > 0 and -1 < to_t(x) < 1:
                edges.append(to_t(x))
    t = np.unique(np.concatenate((t, edges)))
    keep = np.ones(len(t), dtype=bool)
    for bd in exclusions:
        keep &= ~bd.contains(to_x(t))
    tt = t[keep]
    if len(tt) == 0:
        return (0.0, None) if return_argmax else 0.0

    def excluded(s: float) -> bool:
        x = to_x(s)
        return any(abs(x - bd.center) < bd.radius for bd in exclusions)

    def g(s: float) -> float:
        v = float(np.abs(func(np.array([to_x(s)])))[0])
        return v if math.isfinite(v) else 0.0

    vals = np.abs(func(to_x(tt)))
    vals = np.where(np.isfinite(vals), vals, 0.0)
    best_i = int(np.argmax(vals))
    best, best_t = float(vals[best_i]), float(tt[best_i])
    if best == 0:
        return (0.0, to_x(best_t)) if return_argmax else 0.0
    top = np.argsort(-vals)[:3]
    golden = (math.sqrt(5) - 1) / 2
    for i in top:
        lo = float(tt[max(i - 1, 0)])
        hi = float(tt[min(i + 1, len(tt) - 1)])
        if interval is None:
            lo = max(lo, -1 + 1e-12)
            hi = min(hi, 1 - 1e-12)
        prev = float(vals[i])
        c = hi - golden * (hi - lo)
        d = lo + golden * (hi - lo)
        fc = g(c) if not excluded(c) else 0.0
        fd = g(d) if not excluded(d) else 0.0
        for _ in range(60):
            if fc >= fd:
                hi, d, fd = d, c, fc
                c = hi - golden * (hi - lo)
                fc = g(c) if not excluded(c) else 0.0
            else:
                lo, c, fc = c, d, fd
                d = lo + golden * (hi - lo)
                fd = g(d) if not excluded(d) else 0.0
            cur = max(fc, fd, prev)
            if abs(cur - prev) <= 0.01 * cur and hi - lo < 1e-3 * max(1.0, abs(hi)):
                prev = cur
                break
            prev = cur
        for s, f in ((c, fc), (d, fd)):
            if f > best:
                best, best_t = f, s
    if return_argmax:
        return best, to_x(best_t)
    return best


# -- report ----------------------------------------------------------------------


@dataclass
class ErrorReport:
    method: str
    epsilon: Fraction
    backward_sup: float
    forward_sup: float
    interval: tuple[Fraction, Fraction] | None
    boundaries: list[Boundary]
    forward_decays: bool = True
    measured_backward_sup: float | None = None

    def exclusions(self, direction: str = "backward") -> list[Boundary]:
        return [b for b in self.boundaries if b.direction == direction]


def forward_sup(data: ErrorTermData, interval=None, exclusions: Sequence[Boundary] = ()) -> float:
    """Sup of the forward estimate after removing the best constant.

    The antiderivative is only defined up to a constant, so the estimate is
    centred on the mid-range of its sampled values before taking the sup.
    """
    if data.is_exact():
        return 0.0
    if interval is None:
        xs = _chebyshev(CHEBYSHEV_NODES)
        xs = xs / (1 - xs * xs)
    else:
        a, b = float(interval[0]), float(interval[1])
        xs = (a + b) / 2 + (b - a) / 2 * _chebyshev(CHEBYSHEV_NODES)
    keep = np.ones(len(xs), dtype=bool)
    for bd in exclusions:
        keep &= ~bd.contains(xs)
    vals = forward_xi_theta(data, xs[keep]) if keep.any() else np.array([0.0])
    vals = vals[np.isfinite(vals)]
    mid = float((vals.max() + vals.min()) / 2) if len(vals) else 0.0
    return sup_norm(lambda t: forward_xi_theta(data, t) - mid, interval, exclusions)


def measured_backward_sup(result: IntegrationResult, interval=None,
                          exclusions: Sequence[Boundary] = ()) -> float:
    """Sup of the exact backward error ``delta`` (the differentiation oracle)."""
    ev = delta_function(result)
    return sup_norm(ev.abs_float, interval, exclusions)


def error_report(result: IntegrationResult, interval=None, measure: bool = False) -> ErrorReport:
    data = error_terms(result)
    bounds = singularity_boundaries(data, result.epsilon)
    back_ex = [b for b in bounds if b.direction == "backward"]
    fwd_ex = [b for b in bounds if b.direction == "forward"]
    bsup = sup_norm(lambda xs: backward_xi(data, xs), interval, back_ex)
    fsup = forward_sup(data, interval, fwd_ex)
    decays = True
    if interval is None and not data.is_exact():
        far = np.abs(forward_xi_theta(data, np.array([1e4, 1e8, -1e4, -1e8])))
        decays = bool(far[1] <= 1.01 * far[0] and far[3] <= 1.01 * far[2])
    measured = measured_backward_sup(result, interval, back_ex) if measure else None
    iv = (Fraction(interval[0]), Fraction(interval[1])) if interval is not None else None
    return ErrorReport(result.method, result.epsilon, bsup, fsup, iv, bounds, decays, measured)


# -- structure of the perturbed integrand -------------------------------------


def pole_pattern(den: Poly, tol=Fraction(1, 2**20), epsilon=Fraction(1, 2**30)) -> tuple[int, ...]:
    """Pole orders of ``1/den`` after merging poles closer than ``tol``.

    Roots of every squarefree factor ``F_i`` (order ``i``) are found to
    ``epsilon``; roots within ``tol * max(1, |z|)`` of each other form one
    pole cluster whose order is the largest order it contains.  The result
    is the sorted multiset of cluster orders.
    """
    from .polynomial import squarefree_factor
    from .rootfinder import find_roots

    pts: list[tuple[complex, int]] = []
    for F, i in squarefree_factor(den).factors:
        if F.degree >= 1:
            pts += [(complex(r), i) for r in find_roots(F, epsilon)]
    tol = float(tol)
    n = len(pts)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            zi, zj = pts[i][0], pts[j][0]
            if abs(zi - zj) <= tol * max(1.0, abs(zi), abs(zj)):
                parent[find(j)] = find(i)
    order: dict[int, int] = {}
    for i, (_, m) in enumerate(pts):
        k = find(i)
        order[k] = max(order.get(k, 0), m)
    return tuple(sorted(order.values()))

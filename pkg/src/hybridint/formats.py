"""Text, LaTeX and JSON renderings of an antiderivative.

Text and LaTeX print long rational coefficients as 17-digit decimals; JSON
keeps every coefficient exact as a ``"p/q"`` string (ascending degree) and
reads back to an equal ``SymbolicIntegral``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .erroranalysis import Boundary, ErrorReport
from .exactarith import format_rational
from .hermite import RationalFunction
from .polynomial import Poly
from .postprocess import SymbolicIntegral

__all__ = [
    "to_text",
    "to_latex",
    "to_json_dict",
    "to_json",
    "from_json_dict",
    "from_json",
    "report_to_text",
    "check_latex",
]

_EXACT_LIMIT = 16  # longest exact "p/q" printed in text/LaTeX


def _short(q: Fraction) -> bool:
    return len(format_rational(q)) <= _EXACT_LIMIT


def _coef_text(q: Fraction) -> str:
    return format_rational(q) if _short(q) else format(float(q), ".17g")


def _coef_latex(q: Fraction) -> str:
    if not _short(q):
        mant, _, exp = format(float(q), ".17g").partition("e")
        return rf"{mant} \cdot 10^{{{int(exp)}}}" if exp else mant
    if q.denominator == 1:
        return str(q.numerator)
    return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _terms(p: Poly, coef, mono, mul: str = "") -> list[tuple[str, str]]:
    """Signed terms of ``p`` from the highest degree down."""
    out = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if c == 0:
            continue
        a = abs(c)
        if i == 0:
            body = coef(a)
        elif a == 1:
            body = mono(i)
        else:
            body = f"{coef(a)}{mul}{mono(i)}"
        out.append(("-" if c < 0 else "+", body))
    return out


def _join(terms: list[tuple[str, str]]) -> str:
    if not terms:
        return "0"
    sign, body = terms[0]
    s = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


def _poly_text_terms(p: Poly):
    return _terms(p, _coef_text, lambda i: "x" if i == 1 else f"x^{i}", "*")


def _poly_latex_terms(p: Poly):
    return _terms(p, _coef_latex, lambda i: "x" if i == 1 else f"x^{{{i}}}")


def _scaled(v: Fraction, body: str, coef, mul: str) -> tuple[str, str]:
    sign = "-" if v < 0 else "+"
    a = abs(v)
    return sign, body if a == 1 else f"{coef(a)}{mul}{body}"


def _text_terms(I: SymbolicIntegral) -> list[tuple[str, str]]:
    terms = []
    rp = I.rational_part
    if not rp.is_zero():
        num_terms = _poly_text_terms(rp.num)
        den = _join(_poly_text_terms(rp.den))
        if len(_poly_text_terms(rp.den)) > 1:
            den = f"({den})"
        if len(num_terms) == 1:
            sign, body = num_terms[0]
            terms.append((sign, f"{body}/{den}"))
        else:
            terms.append(("+", f"({_join(num_terms)})/{den}"))
    terms += _poly_text_terms(I.poly_part)
    for v, V in I.log_terms:
        terms.append(_scaled(v, f"log({_join(_poly_text_terms(V))})", _coef_text, "*"))
    for w, W in I.atan_terms:
        parts = [f"atan({_join(_poly_text_terms(P))})" for P in W]
        body = parts[0] if len(parts) == 1 else "(" + " + ".join(parts) + ")"
        terms.append(_scaled(w, body, _coef_text, "*"))
    return terms


def to_text(I: SymbolicIntegral) -> str:
    return _join(_text_terms(I))


def to_latex(I: SymbolicIntegral) -> str:
    terms = []
    rp = I.rational_part
    if not rp.is_zero():
        num_terms = _poly_latex_terms(rp.num)
        den = _join(_poly_latex_terms(rp.den))
        if len(num_terms) == 1 and num_terms[0][0] == "-":
            terms.append(("-", rf"\frac{{{num_terms[0][1]}}}{{{den}}}"))
        else:
            terms.append(("+", rf"\frac{{{_join(num_terms)}}}{{{den}}}"))
    terms += _poly_latex_terms(I.poly_part)
    for v, V in I.log_terms:
        body = rf"\log\left({_join(_poly_latex_terms(V))}\right)"
        terms.append(_scaled(v, body, _coef_latex, " "))
    for w, W in I.atan_terms:
        parts = [rf"\arctan\left({_join(_poly_latex_terms(P))}\right)" for P in W]
        body = parts[0] if len(parts) == 1 else r"\left(" + " + ".join(parts) + r"\right)"
        terms.append(_scaled(w, body, _coef_latex, " "))
    return _join(terms)


_KNOWN_MACROS = {"frac", "log", "arctan", "left", "right", "cdot"}


def check_latex(s: str) -> bool:
    """Balanced braces and delimiters, and only the macros this module emits."""
    depth = 0
    for ch in s:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                return False
    if depth != 0:
        return False
    if any(m not in _KNOWN_MACROS for m in re.findall(r"\\([A-Za-z]+)", s)):
        return False
    return s.count(r"\left") == s.count(r"\right")


# -- JSON --------------------------------------------------------------------

def _poly_json(p: Poly) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


def _poly_from_json(a: list[str]) -> Poly:
    return Poly([Fraction(s) for s in a])


def _report_dict(rep: ErrorReport) -> dict:
    return {
        "backwardSup": rep.backward_sup,
        "forwardSup": rep.forward_sup,
        "interval": None if rep.interval is None else [format_rational(t) for t in rep.interval],
        "singularityBoundaries": [
            {"center": b.center, "radius": b.radius, "direction": b.direction} for b in rep.boundaries
        ],
        "forwardDecays": rep.forward_decays,
        "measuredBackwardSup": rep.measured_backward_sup,
    }


def _report_from_dict(d: dict, method: str, epsilon: Fraction) -> ErrorReport:
    iv = d.get("interval")
    return ErrorReport(
        method, epsilon, d["backwardSup"], d["forwardSup"],
        None if iv is None else (Fraction(iv[0]), Fraction(iv[1])),
        [Boundary(b["center"], b["radius"], b["direction"]) for b in d.get("singularityBoundaries", [])],
        d.get("forwardDecays", True), d.get("measuredBackwardSup"),
    )


def to_json_dict(I: SymbolicIntegral, report: ErrorReport | None = None) -> dict:
    return {
        "method": I.method,
        "epsilon": format_rational(I.epsilon),
        "rationalPart": {"num": _poly_json(I.rational_part.num), "den": _poly_json(I.rational_part.den)},
        "polyPart": _poly_json(I.poly_part),
        "logTerms": [{"v": format_rational(v), "V": _poly_json(V)} for v, V in I.log_terms],
        "atanTerms": [{"w": format_rational(w), "W": [_poly_json(P) for P in W]} for w, W in I.atan_terms],
        "errorReport": None if report is None else _report_dict(report),
    }


def to_json(I: SymbolicIntegral, report: ErrorReport | None = None, indent: int | None = 2) -> str:
    return json.dumps(to_json_dict(I, report), indent=indent)


def from_json_dict(d: dict) -> tuple[SymbolicIntegral, ErrorReport | None]:
    rp = d["rationalPart"]
    eps = Fraction(d["epsilon"])
    I = SymbolicIntegral(
        RationalFunction(_poly_from_json(rp["num"]), _poly_from_json(rp["den"]), reduced=True),
        _poly_from_json(d["polyPart"]),
        [(Fraction(t["v"]), _poly_from_json(t["V"])) for t in d["logTerms"]],
        [(Fraction(t["w"]), [_poly_from_json(P) for P in t["W"]]) for t in d["atanTerms"]],
        d["method"],
        eps,
    )
    rep = d.get("errorReport")
    return I, (None if rep is None else _report_from_dict(rep, d["method"], eps))


def from_json(s: str) -> tuple[SymbolicIntegral, ErrorReport | None]:
    return from_json_dict(json.loads(s))


def report_to_text(rep: ErrorReport) -> str:
    where = "whole real line" if rep.interval is None else (
        f"[{format_rational(rep.interval[0])}, {format_rational(rep.interval[1])}]")
    lines = [
        f"backward error estimate: {rep.backward_sup:.3e} on {where}",
        f"forward error estimate: {rep.forward_sup:.3e}",
    ]
    if not rep.forward_decays:
        lines.append("forward error estimate grows at infinity")
    if rep.measured_backward_sup is not None:
        lines.append(f"measured backward error: {rep.measured_backward_sup:.3e}")
    for b in rep.boundaries:
        lines.append(f"{b.direction} singular boundary: |x - {b.center:.17g}| < {b.radius:.3e}")
    return "\n".join(lines)

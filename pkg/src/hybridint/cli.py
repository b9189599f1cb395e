"""Command-line interface.

    hybridint "(x^2-1)/(x^4+5x^2+7)" --method both --eps 2^-40 --report-errors
    hybridint "1/(x^2-2)" --sweep 2^-20,2^-30,2^-40
    hybridint generate --count 10 --seed 3

Exit status: 0 on success, 1 for unusable input (syntax, zero denominator,
bad flags), 2 when an internal invariant fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction

from . import formats
from .corpus import random_integrand, repeated_residue_integrand
from .erroranalysis import error_report
from .exactarith import format_rational, parse_rational
from .integrate import DEFAULT_EPSILON, METHODS, integrate, reduce_rational
from .parser import ParseError, parse_rational_function

__all__ = ["main", "run", "sweep"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _number(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad number {text!r}") from exc


def _epsilon(text: str) -> Fraction:
    eps = _number(text)
    if eps <= 0:
        raise UsageError("tolerance must be positive")
    return eps


def _interval(pair) -> tuple[Fraction, Fraction] | None:
    if pair is None:
        return None
    a, b = (_number(t) for t in pair)
    if not a < b:
        raise UsageError("interval needs a < b")
    return a, b


def _methods(method: str) -> list[str]:
    return list(METHODS) if method == "both" else [method]


def run(text: str, method: str = "pfd", epsilon=DEFAULT_EPSILON, interval=None,
        fmt: str = "text", report_errors: bool = False) -> str:
    """Integrate ``text`` and render the result(s); raises ``ParseError`` on bad input."""
    A, B = parse_rational_function(text)
    hermite = reduce_rational(A, B)
    docs = []
    for m in _methods(method):
        res = integrate(A, B, epsilon, m, hermite=hermite)
        rep = error_report(res, interval) if report_errors else None
        docs.append((m, res.integral, rep))
    if fmt == "json":
        out = [formats.to_json_dict(I, rep) for _, I, rep in docs]
        return json.dumps(out[0] if len(out) == 1 else out, indent=2)
    render = formats.to_latex if fmt == "latex" else formats.to_text
    chunks = []
    for m, I, rep in docs:
        body = render(I)
        if rep is not None:
            body += "\n" + formats.report_to_text(rep)
        chunks.append(f"[{m}]\n{body}" if len(docs) > 1 else body)
    return "\n\n".join(chunks)


def sweep(text: str, epsilons, method: str = "both", interval=None) -> list[dict]:
    """Error estimates and wall time for each tolerance and method."""
    if len(epsilons) < 2:
        raise UsageError("a sweep needs at least two tolerances")
    A, B = parse_rational_function(text)
    hermite = reduce_rational(A, B)
    if hermite.remaining.is_zero():
        raise UsageError("integrand has no logarithmic part, nothing to sweep")
    rows = []
    for m in _methods(method):
        for eps in epsilons:
            t0 = time.perf_counter()
            res = integrate(A, B, eps, m, hermite=hermite)
            rep = error_report(res, interval)
            ms = (time.perf_counter() - t0) * 1000
            rows.append({"method": m, "epsilon": format_rational(eps), "backwardSup": rep.backward_sup,
                         "forwardSup": rep.forward_sup, "wallTimeMs": round(ms, 3)})
    return rows


def _generate(args, out) -> None:
    import random

    rng = random.Random(args.seed)
    for _ in range(args.count):
        if args.kind == "repeated-residues":
            inst = repeated_residue_integrand(rng, args.max_degree)
            A, B = inst.G, inst.H
        else:
            A, B = random_integrand(rng, args.max_degree, args.max_multiplicity,
                                    repeated=args.kind == "repeated-factors")
        out.write(f"({A.to_str()})/({B.to_str()})\n")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hybridint", description="Symbolic-numeric integration of rational functions in x.")
    p.add_argument("integrand", nargs="?", help="rational function of x; read from stdin when omitted")
    p.add_argument("--method", choices=("pfd", "lrt", "both"), default="pfd")
    p.add_argument("--eps", default="2^-53", help="tolerance, e.g. 2^-40, 1/1000 or 1e-12")
    p.add_argument("--interval", nargs=2, metavar=("A", "B"), help="error report interval (default whole line)")
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p.add_argument("--report-errors", action="store_true")
    p.add_argument("--sweep", metavar="EPS1,EPS2,...", help="CSV of error estimates over tolerances")
    return p


def _build_generate_parser() -> argparse.ArgumentParser:
    g = _Parser(prog="hybridint generate", description="Print seeded random integrands, one per line.")
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-degree", type=int, default=16)
    g.add_argument("--max-multiplicity", type=int, default=3)
    g.add_argument("--kind", choices=("corpus", "repeated-factors", "repeated-residues"), default="corpus")
    return g


def main(argv=None, stdout=None, stderr=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        if argv and argv[0] == "generate":
            _generate(_build_generate_parser().parse_args(argv[1:]), stdout)
            return 0
        args = _build_parser().parse_args(argv)
        text = args.integrand if args.integrand is not None else sys.stdin.read()
        interval = _interval(args.interval)
        if args.sweep:
            eps_list = [_epsilon(t) for t in args.sweep.split(",") if t.strip()]
            rows = sweep(text, eps_list, args.method, interval)
            w = csv.DictWriter(stdout, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
            return 0
        stdout.write(run(text, args.method, _epsilon(args.eps), interval, args.format, args.report_errors) + "\n")
        return 0
    except ParseError as exc:
        stderr.write(f"hybridint: parse error: {exc}\n")
        return 1
    except UsageError as exc:
        stderr.write(f"hybridint: {exc}\n")
        return 1
    except Exception as exc:  # anything else is a broken invariant
        stderr.write(f"hybridint: internal error: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Parser for rational functions of ``x`` with rational coefficients.

Grammar (whitespace is ignored)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/' | <juxtaposition>) unary)*
    unary   := ('+' | '-') unary | power
    power   := primary ('^' exponent)?
    primary := NUMBER | 'x' | '(' expr ')'
    exponent:= ['-'] INTEGER | '(' ['-'] INTEGER ')'

Juxtaposition (``2x``, ``x(x+1)``) is multiplication with the same
precedence as ``*`` and ``/``, applied left to right, so ``3/2x`` is
``(3/2)x`` and ``1/(2x)`` needs parentheses.  Numbers are integers or
terminating decimals; ``p/q`` is simply a division.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polynomial import Poly

__all__ = ["ParseError", "parse_rational_function"]


class ParseError(ValueError):
    """Syntax error, zero denominator or foreign variable; ``offset`` is a byte offset."""

    def __init__(self, message: str, offset: int | None = None):
        self.message = message
        self.offset = offset
        if offset is not None:
            message = f"{message} at byte {offset}"
        super().__init__(message)


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?|\.\d+)|([A-Za-z_]\w*)|(\S))")
_ONE = Poly((1,))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []  # (kind, value, char offset)
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:  # only trailing whitespace is left
                break
            num, name, op = m.groups()
            start = m.start(m.lastindex)
            if num is not None:
                self.tokens.append(("num", Fraction(num), start))
            elif name is not None:
                if name != "x":
                    raise ParseError(f"unknown variable {name!r}", self._bytes(start))
                self.tokens.append(("x", None, start))
            else:
                if op not in "+-*/^()":
                    raise ParseError(f"unexpected character {op!r}", self._bytes(start))
                self.tokens.append((op, None, start))
            pos = m.end()
        self.tokens.append(("end", None, len(text)))
        self.i = 0

    def _bytes(self, char_offset: int) -> int:
        return len(self.text[:char_offset].encode("utf-8"))

    @property
    def kind(self) -> str:
        return self.tokens[self.i][0]

    def error(self, message: str):
        raise ParseError(message, self._bytes(self.tokens[self.i][2]))

    def take(self, kind: str):
        if self.kind != kind:
            what = "end of input" if self.kind == "end" else repr(self.kind)
            self.error(f"expected {kind!r}, found {what}")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    # values are unreduced pairs (num, den)

    def expr(self):
        left = self.term()
        while self.kind in "+-":
            op = self.take(self.kind)[0]
            rn, rd = self.term()
            ln, ld = left
            if ld == rd:
                left = (ln + rn if op == "+" else ln - rn), ld
            else:
                left = (ln * rd + rn * ld if op == "+" else ln * rd - rn * ld), ld * rd
        return left

    def term(self):
        left = self.unary()
        while self.kind in ("*", "/", "num", "x", "("):
            if self.kind in ("*", "/"):
                op, _, at = self.take(self.kind)
            else:
                op, at = "*", self.tokens[self.i][2]
            rn, rd = self.unary()
            ln, ld = left
            if op == "*":
                left = ln * rn, ld * rd
            else:
                if rn.is_zero():
                    raise ParseError("zero denominator", self._bytes(at))
                left = ln * rd, ld * rn
        return left

    def unary(self):
        if self.kind == "+":
            self.take("+")
            return self.unary()
        if self.kind == "-":
            self.take("-")
            n, d = self.unary()
            return -n, d
        return self.power()

    def power(self):
        base = self.primary()
        if self.kind != "^":
            return base
        at = self.take("^")[2]
        e = self.exponent()
        n, d = base
        if e < 0:
            if n.is_zero():
                raise ParseError("zero denominator", self._bytes(at))
            n, d, e = d, n, -e
        return n ** e, d ** e

    def exponent(self) -> int:
        paren = self.kind == "("
        if paren:
            self.take("(")
        sign = 1
        if self.kind == "-":
            self.take("-")
            sign = -1
        if self.kind != "num":
            self.error("expected an integer exponent")
        value = self.tokens[self.i][1]
        if value.denominator != 1:
            self.error("exponent must be an integer")
        self.take("num")
        if paren:
            self.take(")")
        return sign * int(value)

    def primary(self):
        if self.kind == "num":
            return Poly((self.take("num")[1],)), _ONE
        if self.kind == "x":
            self.take("x")
            return Poly((0, 1)), _ONE
        if self.kind == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        if self.kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {self.kind!r}")


def parse_rational_function(text: str) -> tuple[Poly, Poly]:
    """Parse ``text`` into exact polynomials ``(A, B)`` with ``f = A/B``.

    No common factors are cancelled, but a constant denominator is folded
    into the numerator, so ``"3/2x + 1"`` gives ``(3/2 x + 1, 1)``.
    """
    p = _Parser(text)
    if p.kind == "end":
        p.error("empty expression")
    num, den = p.expr()
    if p.kind != "end":
        p.error(f"unexpected {p.kind!r}")
    if den.degree == 0:
        num, den = num / den.lc, _ONE
    return num, den

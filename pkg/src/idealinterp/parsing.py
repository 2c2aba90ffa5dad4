"""Parser and printer for polynomial expressions over named variables.

Grammar (ASCII):

    expr   := ['+'|'-'] term { ('+'|'-') term }
    term   := factor { '*' factor }
    factor := base [ '^' INT ]
    base   := INT [ '/' INT ] | IDENT | '(' expr ')'

Coefficients are integer or rational literals ("3", "3/4"); exponents are
nonnegative integers; juxtaposition is not multiplication (explicit '*' is
required).  `format_polynomial` is a right inverse of `parse_polynomial`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .polynomials import Monomial, MonomialOrder, Polynomial

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Strict 'p' or 'p/q' rational literal (no floats, no whitespace)."""
    if not _RATIONAL.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None or m.lastgroup is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        if not variables or len(set(variables)) != len(variables):
            raise ValueError("variables must be nonempty and distinct")
        self.tokens = _tokenize(text)
        self.index = {name: i for i, name in enumerate(variables)}
        self.nvars = len(variables)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, value, at = self.take()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", at)

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, value, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", at)
        return p

    def expr(self) -> Polynomial:
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        total = self.term() * sign
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                nxt = self.term()
                total = total + nxt if value == "+" else total - nxt
            else:
                return total

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        base = self.base()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.take()
            ekind, evalue, eat = self.take()
            if ekind != "int":
                raise ParseError("exponent must be a nonnegative integer", eat)
            return base ** int(evalue)
        return base

    def base(self) -> Polynomial:
        kind, value, at = self.take()
        if kind == "int":
            coeff = Fraction(int(value))
            nkind, nvalue, _ = self.peek()
            if nkind == "op" and nvalue == "/":
                self.take()
                dkind, dvalue, dat = self.take()
                if dkind != "int":
                    raise ParseError("expected integer denominator", dat)
                if int(dvalue) == 0:
                    raise ParseError("zero denominator", dat)
                coeff /= int(dvalue)
            return Polynomial.constant(self.nvars, coeff)
        if kind == "ident":
            idx = self.index.get(value)
            if idx is None:
                raise ParseError(f"unknown variable {value!r}", at)
            return Polynomial.variable(self.nvars, idx)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected {value!r}" if value else "unexpected end of input", at)


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse an expression string into a polynomial over the given variables."""
    return _Parser(text, variables).parse()


def format_monomial(mono: Monomial, variables: Sequence[str]) -> str:
    parts = []
    for name, e in zip(variables, mono.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial, variables: Sequence[str], order: MonomialOrder) -> str:
    """Render with terms in decreasing order; parses back to the same polynomial."""
    if p.is_zero():
        return "0"
    chunks = []
    for mono, coeff in p.sorted_terms(order, reverse=True):
        mag = -coeff if coeff < 0 else coeff
        if mono.is_one():
            body = str(mag)
        elif mag == 1:
            body = format_monomial(mono, variables)
        else:
            body = f"{mag}*{format_monomial(mono, variables)}"
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(chunks)

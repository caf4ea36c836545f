"""Recursive-descent parser for single-variable cubic equations.

Grammar::

    equation := poly "=" poly
    poly     := ["+" | "-"] term (("+" | "-") term)*
    term     := rational ["*"] var ["^" digit] | rational | var ["^" digit]
    rational := integer ["/" integer]

Whitespace is ignored and the variable is whatever single letter appears first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .cubic_core import GeneralCubic
from .errors import NotACubicError, ParseError


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "var", or the operator character itself
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("num", text[i:j], i))
            i = j
        elif c.isalpha() and c.isascii():
            tokens.append(Token("var", c, i))
            i += 1
        elif c in "+-*/^=":
            tokens.append(Token(c, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


@dataclass(frozen=True)
class ParsedEquation:
    lhs: Dict[int, Fraction]
    rhs: Dict[int, Fraction]
    var: str

    def to_cubic(self) -> GeneralCubic:
        coeff = [self.lhs.get(k, Fraction(0)) - self.rhs.get(k, Fraction(0)) for k in range(4)]
        if coeff[3] == 0:
            raise NotACubicError("not a cubic: the x^3 terms cancel or are missing")
        return GeneralCubic(coeff[3], coeff[2], coeff[1], coeff[0])


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0
        self.var: Optional[str] = None

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            want = "a number" if kind == "num" else repr(kind)
            got = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"expected {want}, got {got}", tok.pos)
        self.i += 1
        return tok

    def equation(self) -> ParsedEquation:
        lhs = self.poly()
        self.take("=")
        rhs = self.poly()
        self.take("end")
        return ParsedEquation(lhs, rhs, self.var or "x")

    def poly(self) -> Dict[int, Fraction]:
        terms: Dict[int, Fraction] = {}
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.take(self.tok.kind).kind == "-" else 1
        while True:
            coeff, degree = self.term()
            terms[degree] = terms.get(degree, Fraction(0)) + sign * coeff
            if self.tok.kind == "+":
                self.take("+")
                sign = 1
            elif self.tok.kind == "-":
                self.take("-")
                sign = -1
            else:
                return terms

    def term(self) -> Tuple[Fraction, int]:
        start = self.tok
        coeff = None
        if start.kind == "num":
            coeff = self.rational()
            if self.tok.kind == "*":
                self.take("*")
                if self.tok.kind != "var":
                    raise ParseError("expected the variable after '*'", self.tok.pos)
        if self.tok.kind == "var":
            self.variable()
            degree = 1
            if self.tok.kind == "^":
                self.take("^")
                tok = self.take("num")
                if len(tok.text) != 1 or tok.text > "3":
                    raise ParseError(f"exponent {tok.text} is not in 0..3", tok.pos)
                degree = int(tok.text)
            return (Fraction(1) if coeff is None else coeff), degree
        if coeff is None:
            got = "end of input" if start.kind == "end" else repr(start.text)
            raise ParseError(f"expected a term, got {got}", start.pos)
        return coeff, 0

    def rational(self) -> Fraction:
        num = int(self.take("num").text)
        if self.tok.kind == "/":
            self.take("/")
            tok = self.take("num")
            den = int(tok.text)
            if den == 0:
                raise ParseError("division by zero", tok.pos)
            return Fraction(num, den)
        return Fraction(num)

    def variable(self) -> None:
        tok = self.take("var")
        if self.var is None:
            self.var = tok.text
        elif tok.text != self.var:
            raise ParseError(f"unknown variable {tok.text!r} (equation uses {self.var!r})", tok.pos)


def parse_equation_full(text: str) -> ParsedEquation:
    return _Parser(text).equation()


def parse_equation(text: str) -> GeneralCubic:
    """``"x^3 + 4x = 75/8"`` -> ``GeneralCubic(1, 0, 4, -75/8)``"""
    return parse_equation_full(text).to_cubic()

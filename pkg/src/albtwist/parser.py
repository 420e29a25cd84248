"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := unary ('*' unary)*
    unary    := '-' unary | factor
    factor   := base ('^' natural)?
    base     := rational | 'zeta' | variable | '(' expr ')'
    rational := integer ('/' positive-integer)?

Multiplication must be written out; ``2x`` is a syntax error.  ``zeta`` is
the primitive n-th root of unity for the order passed in by the caller.
A leading minus is accepted on a factor so that printed output (``-x^2``)
parses back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra.cyclo import CycloNum
from .algebra.poly import MultiPoly


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", text[i:j], i))
            i = j
        elif "a" <= ch <= "z":
            j = i + 1
            while j < len(text) and (text[j].isdigit() or "a" <= text[j] <= "z" or text[j] == "_"):
                j += 1
            word = text[i:j]
            toks.append(_Tok("zeta" if word == "zeta" else "name", word, i))
            i = j
        elif ch in "+-*/^()":
            toks.append(_Tok(ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", text, i)
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, n: int | None):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.n = n
        self.order = n or 1

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str | None = None) -> _Tok:
        tok = self.toks[self.i]
        if kind is not None and tok.kind != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok.kind == "end" else repr(tok.text)
            raise ParseError(f"expected {want}, found {got}", self.text, tok.pos)
        self.i += 1
        return tok

    def expr(self) -> MultiPoly:
        acc = self.term()
        while self.peek().kind in "+-" and self.peek().kind != "end":
            op = self.take().kind
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> MultiPoly:
        acc = self.unary()
        while self.peek().kind == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def factor(self) -> MultiPoly:
        base = self.base()
        if self.peek().kind == "^":
            self.take()
            tok = self.peek()
            if tok.kind != "int":
                raise ParseError("exponent must be a natural number", self.text, tok.pos)
            self.take()
            base = base ** int(tok.text)
        return base

    def unary(self) -> MultiPoly:
        if self.peek().kind == "-":
            self.take()
            return -self.unary()
        return self.factor()

    def base(self) -> MultiPoly:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            value = Fraction(int(tok.text))
            if self.peek().kind == "/":
                self.take()
                den = self.peek()
                if den.kind != "int" or int(den.text) == 0:
                    raise ParseError("denominator must be a positive integer", self.text, den.pos)
                self.take()
                value = value / int(den.text)
            return MultiPoly.const(value, self.order)
        if tok.kind == "zeta":
            if self.n is None:
                raise ParseError("'zeta' needs a cyclotomic order (pass n)", self.text, tok.pos)
            self.take()
            return MultiPoly.const(CycloNum.zeta(self.n))
        if tok.kind == "name":
            self.take()
            return MultiPoly.var(tok.text, self.order)
        if tok.kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"unexpected {what}", self.text, tok.pos)


def parse_poly(text: str, n: int | None = None) -> MultiPoly:
    """Parse ``text`` into a MultiPoly over Q(zeta_n) (Q when n is None)."""
    p = _Parser(text, n)
    if p.peek().kind == "end":
        raise ParseError("empty expression", text, 0)
    out = p.expr()
    p.take("end")
    if n is not None and out.order != n:
        out = out.lift(n)
    return out

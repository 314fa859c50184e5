"""Parser for polynomial and rational-function input expressions.

The accepted language, used verbatim in CLI arguments and fixture files:

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := 'x' | 'y' | rational | '(' expr ')' | '-' factor

Rational literals are written "p/q" (the slash is part of the literal,
there is no division operator).  Implicit multiplication is rejected:
"2x" is a syntax error, write "2*x".
"""

from fractions import Fraction
from typing import NamedTuple

from .errors import ParseError
from .polycore import BiPoly


class _Token(NamedTuple):
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


_OPS = "+-*^()/"


def _tokenize(text: str) -> list:
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            out.append(_Token("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(_Token("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str, vars_pair):
        self.text = text
        self.vars = tuple(vars_pair)
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def next(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str) -> _Token:
        t = self.peek()
        if t.kind != "op" or t.text != op:
            raise ParseError(f"expected {op!r}", t.pos)
        return self.next()

    # expr := term (('+'|'-') term)*
    def expr(self) -> BiPoly:
        acc = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.next().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    # term := factor ('*' factor)*
    def term(self) -> BiPoly:
        acc = self.factor()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.next()
            acc = acc * self.factor()
        return acc

    # factor := base ('^' uint)?
    def factor(self) -> BiPoly:
        b = self.base()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.next()
            e = self.peek()
            if e.kind != "int":
                raise ParseError("expected a nonnegative integer exponent", e.pos)
            self.next()
            b = b ** int(e.text)
        return b

    # base := 'x' | 'y' | rational | '(' expr ')' | '-' factor
    def base(self) -> BiPoly:
        t = self.next()
        if t.kind == "name":
            if t.text not in self.vars:
                raise ParseError(f"unknown variable {t.text!r}", t.pos)
            return BiPoly.var(t.text, self.vars)
        if t.kind == "int":
            num = int(t.text)
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "/":
                self.next()
                d = self.peek()
                if d.kind != "int":
                    raise ParseError("expected an integer denominator", d.pos)
                self.next()
                if int(d.text) == 0:
                    raise ParseError("zero denominator in rational literal", d.pos)
                return BiPoly.const(Fraction(num, int(d.text)), self.vars)
            return BiPoly.const(Fraction(num), self.vars)
        if t.kind == "op" and t.text == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if t.kind == "op" and t.text == "-":
            return -self.factor()
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected {t.text!r}", t.pos)


def parse_poly(text: str, vars_pair=("x", "y")) -> BiPoly:
    """Parse an expression into an expanded BiPoly.

    Raises ParseError (with a character position) on malformed input,
    including implicit multiplication and unknown variable names.
    """
    p = _Parser(text, vars_pair)
    result = p.expr()
    t = p.peek()
    if t.kind != "end":
        raise ParseError(f"unexpected trailing input {t.text!r}", t.pos)
    return result


def parse_ratfunc(src_num: str, src_den: str, curve):
    """Parse numerator and denominator strings into a rational function on curve.

    The denominator must not vanish identically on any component of the
    curve; RatFuncOnCurve validates that and reduces the pair.
    """
    from .ratfunc import RatFuncOnCurve

    num = parse_poly(src_num, curve.f.vars)
    den = parse_poly(src_den, curve.f.vars)
    return RatFuncOnCurve(curve, num, den)

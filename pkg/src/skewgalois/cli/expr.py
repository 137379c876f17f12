"""Surface syntax for elements of H(t).

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" exponent)?
    exponent := ["-"] digits | "(" ["-"] digits ")"
    atom   := rational | symbol | "t" | "(" expr ")"

Rationals are ``3`` or ``3/4``; symbols are the algebra's basis names and
``e1`` .. ``ed``.  The unicode minus sign is accepted wherever "-" is.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotInvertible
from ..skewfrac import SkewRatElem, invert

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))")


class ExpressionError(ValueError):
    """Syntax or evaluation error with a 0-based character position."""

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(sorted(expected))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at position {position}{detail}")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def tokenize(text):
    text = text.replace("−", "-")
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ExpressionError(f"unexpected character {text[bad]!r}", bad,
                                  {"number", "symbol", "operator"})
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(Token(kind, m.group(kind), start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class Parser:
    """Recursive-descent evaluator producing SkewRatElem values."""

    ATOM_START = {"number", "symbol", "t", "(", "-"}

    def __init__(self, parent):
        self.parent = parent
        names = {}
        for i, name in enumerate(parent.H.names):
            if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                names[name] = i
        for i in range(parent.dim):
            names.setdefault(f"e{i + 1}", i)
        names.pop("t", None)
        self.symbols = names

    def parse(self, text):
        self.tokens = tokenize(text)
        self.i = 0
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExpressionError(f"unexpected {tok.text!r}", tok.pos, {"+", "-", "*", "^", "end"})
        return value

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op):
        tok = self.peek()
        if tok.kind == "op" and tok.text == op:
            self.i += 1
            return True
        return False

    def expr(self):
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while self.accept("*"):
            value = value * self.unary()
        return value

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if not self.accept("^"):
            return base
        e = self.exponent()
        try:
            return base ** e
        except (ZeroDivisionError, NotInvertible) as exc:
            raise ExpressionError(f"cannot invert: {exc}", tok.pos) from None

    def exponent(self):
        paren = self.accept("(")
        sign = -1 if self.accept("-") else 1
        tok = self.take()
        if tok.kind != "num" or "/" in tok.text:
            raise ExpressionError("exponent must be an integer", tok.pos, {"integer", "-"})
        if paren and not self.accept(")"):
            raise ExpressionError("missing ')'", self.peek().pos, {")"})
        return sign * int(tok.text)

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return self.parent.scalar(Fraction(tok.text))
        if tok.kind == "name":
            if tok.text == "t":
                return self.parent.t()
            if tok.text in self.symbols:
                return self.parent.basis(self.symbols[tok.text])
            raise ExpressionError(f"unknown symbol {tok.text!r}", tok.pos,
                                  set(self.symbols) | {"t"})
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            if not self.accept(")"):
                raise ExpressionError("missing ')'", self.peek().pos, {")", "+", "-", "*", "^"})
            return value
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExpressionError(f"unexpected {what}", tok.pos, self.ATOM_START)


def parse_expression(parent, text):
    """Evaluate ``text`` in H(t); ``parent`` is a SkewRationalField."""
    return Parser(parent).parse(text)


def basis_symbol(parent, i):
    name = parent.H.names[i]
    if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name) and name != "t":
        return name
    return f"e{i + 1}"


def format_element(x):
    """Re-parseable text for a SkewRatElem."""
    if not isinstance(x, SkewRatElem):
        raise TypeError("expected an element of H(t)")
    parts = []
    for i, c in enumerate(x.coords):
        if not c:
            continue
        sym = basis_symbol(x.parent, i)
        num = c.num.format("t")
        if c.den.degree == 0:
            parts.append(f"({num})*{sym}")
        else:
            parts.append(f"({num})*({c.den.format('t')})^-1*{sym}")
    return " + ".join(parts) if parts else "0"


__all__ = ["ExpressionError", "parse_expression", "format_element", "tokenize", "invert"]

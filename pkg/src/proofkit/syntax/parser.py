"""Concrete syntax for formulas.

Grammar (tightest first: prefix operators, ``/\\``, ``\\/``, then right-associative
``->``)::

    formula := imp
    imp     := or ("->" imp)?
    or      := and ("\\/" and)*
    and     := unary ("/\\" unary)*
    unary   := ("~" | "X" | "G" | "F") unary | "X^" power unary | atom
    atom    := IDENT | "(" formula ")"

``X^3`` and ``X^{j+1}`` are an extension used inside derivation files for
schematic prefixes; plain formulas never need them.
"""
from __future__ import annotations

import re

from .formula import And, F, Formula, G, Imp, Neg, Or, Var, X, shift
from .index import Index, parse_index

KEYWORDS = {"X", "G", "F"}


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position
        self.text = text


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<imp>->)
  | (?P<or>\\/)
  | (?P<and>/\\)
  | (?P<neg>~)
  | (?P<lp>\()
  | (?P<rp>\))
  | (?P<xpow>X\^(?:\{[^}]*\}|\d+|[A-Za-z_]\w*))
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "ident" and value in KEYWORDS:
                kind = value
            tokens.append((kind, value, pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            found = tok[1] or "end of input"
            raise FormulaSyntaxError(f"expected {kind}, found {found!r}", tok[2], self.text)
        self.i += 1
        return tok

    def formula(self) -> Formula:
        lhs = self.disjunction()
        if self.peek() == "imp":
            self.take()
            return Imp(lhs, self.formula())
        return lhs

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "or":
            self.take()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek() == "and":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, value, pos = self.tokens[self.i]
        if kind == "neg":
            self.take()
            return Neg(self.unary())
        if kind == "X":
            self.take()
            return shift(self.unary(), 1)
        if kind == "G":
            self.take()
            return G(self.unary())
        if kind == "F":
            self.take()
            return F(self.unary())
        if kind == "xpow":
            self.take()
            power = value[2:].strip("{}")
            try:
                steps = parse_index(power)
            except ValueError as exc:
                raise FormulaSyntaxError(str(exc), pos, self.text) from None
            return shift(self.unary(), steps)
        return self.atom()

    def atom(self) -> Formula:
        kind, value, pos = self.tokens[self.i]
        if kind == "ident":
            self.take()
            return Var(value)
        if kind == "lp":
            self.take()
            f = self.formula()
            self.take("rp")
            return f
        found = value or "end of input"
        raise FormulaSyntaxError(f"expected a formula, found {found!r}", pos, self.text)


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.take("eof")
    return f


_PREC = {Imp: 1, Or: 2, And: 3}
_OPS = {Imp: "->", Or: "\\/", And: "/\\"}


def _fmt(f: Formula, ctx: int) -> str:
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Neg):
        return "~" + _fmt(f.body, 4)
    if isinstance(f, G):
        return "G " + _fmt(f.body, 4)
    if isinstance(f, F):
        return "F " + _fmt(f.body, 4)
    if isinstance(f, X):
        body = _fmt(f.body, 4)
        if f.steps.is_const:
            return "X " * f.steps.const + body
        return f"X^{{{f.steps}}} {body}"
    prec = _PREC[type(f)]
    if isinstance(f, Imp):
        text = f"{_fmt(f.lhs, prec + 1)} -> {_fmt(f.rhs, prec)}"
    else:
        text = f"{_fmt(f.lhs, prec)} {_OPS[type(f)]} {_fmt(f.rhs, prec + 1)}"
    return f"({text})" if prec < ctx else text


def format_formula(f: Formula) -> str:
    return _fmt(f, 0)


def format_index(ix: Index) -> str:
    return str(ix)

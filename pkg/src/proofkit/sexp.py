"""A small s-expression reader and writer for the derivation file formats.

Atoms are bare symbols (:class:`Symbol`), double-quoted strings (``str``)
and integers.  ``;`` starts a comment.
"""
from __future__ import annotations

import re
from dataclasses import dataclass


class SexpError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        where = f" at position {position}" if position is not None else ""
        super().__init__(message + where)
        self.position = position


@dataclass(frozen=True)
class Symbol:
    name: str

    def __str__(self) -> str:
        return self.name


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|;[^\n]*)
  | (?P<lp>\()
  | (?P<rp>\))
  | (?P<str>"(?:[^"\\]|\\.)*")
  | (?P<int>-?\d+(?=[\s()]|$))
  | (?P<sym>[^\s()"]+)
    """,
    re.VERBOSE,
)


def _unescape(body: str) -> str:
    return re.sub(r"\\(.)", lambda m: m.group(1), body)


def loads(text: str) -> list:
    """Parse every top-level form in ``text``."""
    stack: list[list] = [[]]
    starts: list[int] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise SexpError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tok = m.group()
        if kind == "lp":
            stack.append([])
            starts.append(pos)
        elif kind == "rp":
            if len(stack) == 1:
                raise SexpError("unbalanced ')'", pos)
            done = stack.pop()
            starts.pop()
            stack[-1].append(done)
        elif kind == "str":
            stack[-1].append(_unescape(tok[1:-1]))
        elif kind == "int":
            stack[-1].append(int(tok))
        elif kind == "sym":
            stack[-1].append(Symbol(tok))
        pos = m.end()
    if len(stack) != 1:
        raise SexpError("unclosed '('", starts[-1])
    return stack[0]


def load_one(text: str):
    forms = loads(text)
    if len(forms) != 1:
        raise SexpError(f"expected exactly one form, found {len(forms)}")
    return forms[0]


def _atom(x) -> str:
    if isinstance(x, Symbol):
        return x.name
    if isinstance(x, bool):
        raise TypeError("booleans have no s-expression form")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, str):
        return '"' + x.replace("\\", "\\\\").replace('"', '\\"') + '"'
    raise TypeError(f"cannot write {x!r}")


def _flat(x) -> str:
    if isinstance(x, list):
        return "(" + " ".join(_flat(y) for y in x) + ")"
    return _atom(x)


def dumps(x, width: int = 88, indent: int = 0) -> str:
    """Pretty-print: a list that fits on the line stays flat, else one child per line."""
    flat = _flat(x)
    if not isinstance(x, list) or len(flat) + indent <= width or len(x) < 2:
        return flat
    pad = " " * (indent + 1)
    head = _flat(x[0])
    lines = ["(" + head]
    for child in x[1:]:
        lines.append(pad + dumps(child, width, indent + 1))
    return "\n".join(lines) + ")"


def sym(name: str) -> Symbol:
    return Symbol(name)


def is_sym(x, name: str | None = None) -> bool:
    return isinstance(x, Symbol) and (name is None or x.name == name)


def keyword_sections(items) -> dict:
    """Map ``(:key ...)`` sublists to their bodies; other items are an error."""
    out = {}
    for item in items:
        if not (isinstance(item, list) and item and is_sym(item[0]) and item[0].name.startswith(":")):
            raise SexpError(f"expected a (:keyword ...) section, found {_flat(item)}")
        key = item[0].name[1:]
        if key in out:
            raise SexpError(f"duplicate section :{key}")
        out[key] = item[1:]
    return out

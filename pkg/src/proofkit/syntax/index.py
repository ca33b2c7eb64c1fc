"""Affine index expressions over schema variables.

An :class:`Index` is ``c + a1*v1 + ... + an*vn`` with natural constant and
positive natural coefficients.  It is the exponent of an iterated next-time
prefix, e.g. the ``i+j`` in ``X^{i+j} p``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

IndexLike = Union["Index", int, str]


class UnboundVariable(KeyError):
    pass


@dataclass(frozen=True, order=True)
class Index:
    const: int = 0
    terms: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.const < 0:
            raise ValueError("index constant must be a natural number")
        if not self.terms:
            return
        names = [name for name, _ in self.terms]
        if names != sorted(set(names)) or any(c <= 0 for _, c in self.terms):
            raise ValueError(f"non-canonical index terms {self.terms!r}")

    @staticmethod
    def of(value: IndexLike) -> "Index":
        if isinstance(value, Index):
            return value
        if isinstance(value, int):
            return Index(value)
        if isinstance(value, str):
            return parse_index(value)
        raise TypeError(f"cannot make an index from {value!r}")

    @staticmethod
    def var(name: str, coeff: int = 1) -> "Index":
        return Index(0, ((name, coeff),))

    @staticmethod
    def build(const: int, coeffs: Mapping[str, int]) -> "Index":
        return Index(const, tuple(sorted((n, c) for n, c in coeffs.items() if c)))

    def __add__(self, other: IndexLike) -> "Index":
        other = Index.of(other)
        if not other.terms:
            if not other.const:
                return self
            if not self.terms:
                return Index(self.const + other.const)
        elif self.is_zero:
            return other
        coeffs = dict(self.terms)
        for name, c in other.terms:
            coeffs[name] = coeffs.get(name, 0) + c
        return Index.build(self.const + other.const, coeffs)

    __radd__ = __add__

    @property
    def is_const(self) -> bool:
        return not self.terms

    @property
    def is_zero(self) -> bool:
        return not self.terms and self.const == 0

    def free_vars(self) -> frozenset[str]:
        return frozenset(name for name, _ in self.terms)

    def eval(self, env: Mapping[str, int]) -> int:
        total = self.const
        for name, c in self.terms:
            if name not in env:
                raise UnboundVariable(name)
            total += c * env[name]
        return total

    def subst(self, var: str, value: IndexLike) -> "Index":
        coeffs = dict(self.terms)
        if var not in coeffs:
            return self
        c = coeffs.pop(var)
        value = Index.of(value)
        scaled = Index.build(value.const * c, {n: k * c for n, k in value.terms})
        return Index.build(self.const, coeffs) + scaled

    def rename(self, mapping: Mapping[str, str]) -> "Index":
        coeffs: dict[str, int] = {}
        for name, c in self.terms:
            new = mapping.get(name, name)
            coeffs[new] = coeffs.get(new, 0) + c
        return Index.build(self.const, coeffs)

    def __int__(self) -> int:
        if self.terms:
            raise ValueError(f"index {self} is schematic")
        return self.const

    def __str__(self) -> str:
        parts = [name if c == 1 else f"{c}{name}" for name, c in self.terms]
        if self.const or not parts:
            parts.append(str(self.const))
        return "+".join(parts)


ZERO = Index(0)
ONE = Index(1)

_TERM = re.compile(r"\s*(?:(\d+)\s*\*?\s*([A-Za-z_]\w*)|(\d+)|([A-Za-z_]\w*))\s*$")


def parse_index(text: str) -> Index:
    """Parse ``i``, ``i+2``, ``2j+k+1`` (``2*j`` also accepted)."""
    total = ZERO
    if not text.strip():
        raise ValueError("empty index expression")
    for raw in text.split("+"):
        m = _TERM.match(raw)
        if not m:
            raise ValueError(f"bad index term {raw!r} in {text!r}")
        coeff, name, const, bare = m.groups()
        if bare:
            total = total + Index.var(bare)
        elif const:
            total = total + Index(int(const))
        elif int(coeff):
            total = total + Index.var(name, int(coeff))
    return total


def index_add(a: IndexLike, b: IndexLike) -> Index:
    return Index.of(a) + Index.of(b)


def index_eval(a: IndexLike, env: Mapping[str, int]) -> int:
    return Index.of(a).eval(env)


def index_eq(a: IndexLike, b: IndexLike) -> bool:
    return Index.of(a) == Index.of(b)

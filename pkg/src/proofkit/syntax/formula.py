"""Formula AST for until-free propositional LTL.

Negation, G, F and X are primitive; there is no bottom constant.  Iterated
next-time operators are merged into a single :class:`X` node whose ``steps``
is an :class:`~proofkit.syntax.index.Index`, so ``X X p`` and ``X^2 p`` are the
same tree and ``X^0 a`` is just ``a``.  Schematic step counts such as
``X^{i+j} p`` only occur inside derivation schemas.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .index import ONE, ZERO, Index, IndexLike


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        from .parser import format_formula

        return format_formula(self)

    def children(self) -> tuple["Formula", ...]:
        return ()

    def free_vars(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for child in self.children():
            out |= child.free_vars()
        return out

    def atoms(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for child in self.children():
            out |= child.atoms()
        return out

    def subst(self, var: str, value: IndexLike) -> "Formula":
        return self._map(lambda f: f.subst(var, value), lambda ix: ix.subst(var, value))

    def rename_vars(self, mapping: Mapping[str, str]) -> "Formula":
        return self._map(lambda f: f.rename_vars(mapping), lambda ix: ix.rename(mapping))

    def _map(self, on_child, on_index) -> "Formula":
        raise NotImplementedError


def _hashed(cls):
    # Formulas live in frozensets that are compared constantly; cache the hash.
    generated = cls.__hash__

    def __hash__(self):
        try:
            return object.__getattribute__(self, "_hash")
        except AttributeError:
            h = generated(self)
            object.__setattr__(self, "_hash", h)
            return h

    cls.__hash__ = __hash__
    return cls


@_hashed
@dataclass(frozen=True)
class Var(Formula):
    name: str

    def __post_init__(self):
        if not self.name or not self.name.isascii():
            raise ValueError(f"bad propositional variable {self.name!r}")

    def atoms(self):
        return frozenset([self.name])

    def _map(self, on_child, on_index):
        return self


@dataclass(frozen=True)
class _Unary(Formula):
    body: Formula

    def children(self):
        return (self.body,)

    def _map(self, on_child, on_index):
        return type(self)(on_child(self.body))


@dataclass(frozen=True)
class _Binary(Formula):
    lhs: Formula
    rhs: Formula

    def children(self):
        return (self.lhs, self.rhs)

    def _map(self, on_child, on_index):
        return type(self)(on_child(self.lhs), on_child(self.rhs))


@_hashed
@dataclass(frozen=True)
class Neg(_Unary):
    pass


@_hashed
@dataclass(frozen=True)
class G(_Unary):
    pass


@_hashed
@dataclass(frozen=True)
class F(_Unary):
    pass


@_hashed
@dataclass(frozen=True)
class Imp(_Binary):
    pass


@_hashed
@dataclass(frozen=True)
class And(_Binary):
    pass


@_hashed
@dataclass(frozen=True)
class Or(_Binary):
    pass


@_hashed
@dataclass(frozen=True)
class X(Formula):
    """``steps`` nested next-time operators; never zero, never directly nested."""

    body: Formula
    steps: Index = field(default=ONE)

    def __post_init__(self):
        if not isinstance(self.steps, Index):
            object.__setattr__(self, "steps", Index.of(self.steps))
        if self.steps.is_zero:
            raise ValueError("X^0 is not a node; use the body itself")
        if isinstance(self.body, X):
            raise ValueError("nested X nodes must be merged; use shift()")

    def children(self):
        return (self.body,)

    def free_vars(self):
        return self.body.free_vars() | self.steps.free_vars()

    def _map(self, on_child, on_index):
        return shift(on_child(self.body), on_index(self.steps))


def shift(f: Formula, n: IndexLike = 1) -> Formula:
    """``X^n f`` in canonical form."""
    n = Index.of(n)
    if n.is_zero:
        return f
    if isinstance(f, X):
        return X(f.body, f.steps + n)
    return X(f, n)


def next_(f: Formula) -> Formula:
    return shift(f, ONE)


@dataclass(frozen=True)
class PrefixedFormula:
    """A formula viewed as ``X^prefix core`` with ``core`` not X-rooted."""

    prefix: Index
    core: Formula

    def __post_init__(self):
        if isinstance(self.core, X):
            raise ValueError("core of a prefixed formula must not be X-rooted")

    def formula(self) -> Formula:
        return shift(self.core, self.prefix)

    def __iter__(self):
        return iter((self.prefix, self.core))


def strip_x(f: Formula) -> PrefixedFormula:
    if isinstance(f, X):
        return PrefixedFormula(f.steps, f.body)
    return PrefixedFormula(ZERO, f)


def is_atomic(f: Formula) -> bool:
    """True for ``X^i p``."""
    return isinstance(strip_x(f).core, Var)


def grade(f: Formula) -> int:
    """Number of connectives and atoms, not counting next-time."""
    if isinstance(f, X):
        return grade(f.body)
    return 1 + sum(grade(c) for c in f.children())


def size(f: Formula) -> int:
    """Number of AST nodes, counting each unit of a constant X power."""
    if isinstance(f, X):
        n = f.steps.const if f.steps.is_const else 1
        return n + size(f.body)
    return 1 + sum(size(c) for c in f.children())


def contradiction(var: str = "p") -> Formula:
    """The designated formula ``~p /\\ p`` standing for an empty succedent."""
    return And(Neg(Var(var)), Var(var))


def sort_key(f: Formula) -> str:
    return str(f)

"""Ultimately periodic traces and the standard LTL semantics over them.

Used only as an independent soundness oracle: anything the calculi prove
must hold at position 0 of every lasso.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .formula import And, F, Formula, G, Imp, Neg, Or, Var, X

State = frozenset


@dataclass(frozen=True)
class LassoTrace:
    prefix: tuple[frozenset[str], ...]
    loop: tuple[frozenset[str], ...]

    def __post_init__(self):
        if not self.loop:
            raise ValueError("lasso loop must be nonempty")
        object.__setattr__(self, "prefix", tuple(frozenset(s) for s in self.prefix))
        object.__setattr__(self, "loop", tuple(frozenset(s) for s in self.loop))

    @property
    def length(self) -> int:
        return len(self.prefix) + len(self.loop)

    def state(self, pos: int) -> frozenset[str]:
        return (self.prefix + self.loop)[self.normalize(pos)]

    def normalize(self, pos: int) -> int:
        """Map any position of the infinite trace to one of the stored ones."""
        if pos < self.length:
            return pos
        start = len(self.prefix)
        return start + (pos - start) % len(self.loop)

    def unrolled(self) -> "LassoTrace":
        return LassoTrace(self.prefix + self.loop, self.loop)


def _satisfying(f: Formula, t: LassoTrace, memo: dict) -> frozenset[int]:
    if f in memo:
        return memo[f]
    n = t.length
    start = len(t.prefix)
    positions = range(n)
    if isinstance(f, Var):
        out = frozenset(p for p in positions if f.name in t.state(p))
    elif isinstance(f, Neg):
        out = frozenset(positions) - _satisfying(f.body, t, memo)
    elif isinstance(f, And):
        out = _satisfying(f.lhs, t, memo) & _satisfying(f.rhs, t, memo)
    elif isinstance(f, Or):
        out = _satisfying(f.lhs, t, memo) | _satisfying(f.rhs, t, memo)
    elif isinstance(f, Imp):
        out = (frozenset(positions) - _satisfying(f.lhs, t, memo)) | _satisfying(f.rhs, t, memo)
    elif isinstance(f, X):
        if not f.steps.is_const:
            raise ValueError(f"cannot evaluate schematic formula {f}")
        body = _satisfying(f.body, t, memo)
        out = frozenset(p for p in positions if t.normalize(p + f.steps.const) in body)
    elif isinstance(f, (G, F)):
        body = _satisfying(f.body, t, memo)
        # positions reachable from p are min(p, start) .. n-1
        test = all if isinstance(f, G) else any
        out = frozenset(p for p in positions if test(q in body for q in range(min(p, start), n)))
    else:
        raise TypeError(f"unknown formula node {f!r}")
    memo[f] = out
    return out


def eval_on_trace(f: Formula, t: LassoTrace, position: int = 0) -> bool:
    return t.normalize(position) in _satisfying(f, t, {})


def enumerate_lassos(atoms: Iterable[str], max_length: int = 6) -> Iterator[LassoTrace]:
    """All lassos with ``len(prefix) + len(loop) <= max_length`` over ``atoms``."""
    atoms = sorted(set(atoms))
    states = [
        frozenset(c)
        for r in range(len(atoms) + 1)
        for c in itertools.combinations(atoms, r)
    ]
    for total in range(1, max_length + 1):
        for word in itertools.product(states, repeat=total):
            for loop_len in range(1, total + 1):
                cut = total - loop_len
                yield LassoTrace(word[:cut], word[cut:])


def find_countermodel(f: Formula, max_length: int = 6, atoms: Iterable[str] | None = None):
    """First lasso falsifying ``f`` at position 0, or None if it holds on all of them."""
    for t in enumerate_lassos(f.atoms() if atoms is None else atoms, max_length):
        if not eval_on_trace(f, t, 0):
            return t
    return None


def valid_on_lassos(f: Formula, max_length: int = 6, atoms: Iterable[str] | None = None) -> bool:
    return find_countermodel(f, max_length, atoms) is None

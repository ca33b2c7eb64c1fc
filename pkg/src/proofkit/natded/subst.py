"""Substitution of derivations for assumptions, with label and variable hygiene."""
from __future__ import annotations

import itertools
from typing import Callable, Iterable

from ..calculi.tree import Family, fresh_var
from .check import open_labels, slot_premises
from .tree import Hyp, NdNode, labels


class LabelSource:
    """Hands out assumption labels not yet used in any of the given derivations."""

    def __init__(self, *derivations, start: int = 1):
        top = max((max(labels(d), default=0) for d in derivations), default=0)
        self._next = itertools.count(max(top + 1, start))

    def __call__(self) -> int:
        return next(self._next)


def _map_premises(node: NdNode, envs: list[dict], fn: Callable) -> tuple:
    out = []
    for k, p in enumerate(node.premises):
        if isinstance(p, Family):
            out.append(Family(p.var, tuple(fn(m, envs[k]) for m in p.explicit), fn(p.tail, envs[k])))
        else:
            out.append(fn(p, envs[k]))
    return tuple(out)


def freshen(d, fresh: LabelSource, which: Iterable[int] | None = None):
    """Rename the labels of discharging slots inside ``d`` (binding preserved).

    Only slots whose label is in ``which`` are renamed when it is given.
    Open assumptions keep their labels.
    """
    which = None if which is None else frozenset(which)

    def go(node, env):
        if isinstance(node, Hyp):
            return Hyp(node.formula, env[node.label]) if node.label in env else node
        slots = []
        envs = [dict(env) for _ in node.premises]
        for (label, f), ks in zip(node.discharged, slot_premises(node)):
            new = fresh() if which is None or label in which else label
            slots.append((new, f))
            for k in ks:
                envs[k][label] = new
        prems = _map_premises(node, envs, go)
        return NdNode(node.rule, node.conclusion, prems, tuple(slots), node.principal, node.witness)

    return go(d, {})


def substitute(d, label: int, replacement, fresh: LabelSource):
    """Replace the assumptions ``[A]^label`` of ``d`` by copies of ``replacement``.

    Each copy gets fresh internal labels.  Discharges inside ``d`` that would
    capture an open assumption of ``replacement`` are renamed first, and
    families of ``d`` whose variable occurs free in ``replacement`` are
    renamed apart.
    """
    clash = open_labels(replacement) & discharge_labels(d)
    if clash:
        d = freshen(d, fresh, clash)
    fv = replacement.free_vars()

    def go(node):
        if isinstance(node, Hyp):
            return freshen(replacement, fresh) if node.label == label else node
        prems = []
        for p in node.premises:
            if isinstance(p, Family):
                if p.var in fv:
                    p = p.rename_vars({p.var: fresh_var(fv | p.all_vars())})
                p = Family(p.var, tuple(go(m) for m in p.explicit), go(p.tail))
            else:
                p = go(p)
            prems.append(p)
        return node.with_premises(prems)

    return go(d)


def discharge_labels(d) -> set[int]:
    return {l for n in d.nodes() if isinstance(n, NdNode) for l, _ in n.discharged}

"""The reduction relation on natural deduction derivations and a normalization driver.

A redex is located by the path of the elimination node whose major premise
is a maximum formula.  Cases are numbered as in the source definition:

==  ========================================================================
1   imp-E over imp-I
2   any elimination over EXP
3   EXP over neg-I, general conclusion
4   EXP over neg-I whose conclusion is the minor formula
5   elimination over EXM (permute the consumer into both branches)
6   EXP over EXM whose conclusion is the minor formula
7   and-E over and-I
8   or-E over or-I
9   elimination over or-E
10  G-E over G-I
11  F-E over F-I
12  elimination over F-E
==  ========================================================================
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .calculi.tree import Family, fresh_var
from .natded.check import is_normal, neg_i_side, walk
from .natded.io import dump_nd
from .natded.subst import LabelSource, freshen, open_labels, substitute
from .natded.tree import (
    AND_E1,
    AND_E2,
    AND_I,
    ELIM_RULES,
    EXM,
    EXP,
    F_E,
    F_I,
    G_E,
    G_I,
    IMP_E,
    IMP_I,
    MAX_SOURCES,
    NEG_I,
    OR_E,
    OR_I1,
    OR_I2,
    Hyp,
    NdNode,
    child,
    replace_at,
)


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class Redex:
    path: tuple[str, ...]
    case_id: int

    def __str__(self) -> str:
        return f"case {self.case_id} at /{'/'.join(self.path)}"


@dataclass
class ReductionTrace:
    steps: list[tuple[Redex, object]] = field(default_factory=list)
    terminated_normal: bool = False

    def final(self, start):
        return self.steps[-1][1] if self.steps else start

    def to_json(self) -> str:
        return json.dumps(
            [
                {"step": n + 1, "case_id": r.case_id, "path": "/" + "/".join(r.path), "derivation": dump_nd(d)}
                for n, (r, d) in enumerate(self.steps)
            ],
            indent=2,
        )


def classify(node: NdNode) -> int | None:
    """Case number of the redex whose consumer is ``node``, or None."""
    if not (isinstance(node, NdNode) and node.rule in ELIM_RULES):
        return None
    major = node.premises[0]
    if not isinstance(major, NdNode):
        return None
    r, m = node.rule, major.rule
    if m == F_E:
        return 12
    if m not in MAX_SOURCES:
        return None
    if m == EXP:
        return 2
    if m == OR_E:
        return 9
    if m == EXM:
        if r == EXP and node.conclusion == node.premises[1].conclusion:
            return 6
        return 5
    table = {
        (IMP_E, IMP_I): 1,
        (AND_E1, AND_I): 7,
        (AND_E2, AND_I): 7,
        (OR_E, OR_I1): 8,
        (OR_E, OR_I2): 8,
        (G_E, G_I): 10,
        (F_E, F_I): 11,
    }
    if (r, m) == (EXP, NEG_I):
        return 4 if node.conclusion == node.premises[1].conclusion else 3
    if (r, m) in table:
        return table[(r, m)]
    raise ReductionError(f"unclassifiable maximum formula: {r} over {m}")


def find_redexes(d) -> list[Redex]:
    """One redex per maximum formula, leftmost-innermost first.

    F-E conclusions are not maximum formulas, so case 12 is never reported
    here; :func:`reduce_at` still accepts it when asked explicitly.
    """
    found = []
    for path, node in walk(d):
        case = classify(node)
        if case is not None and case != 12:
            found.append((path, Redex(path, case)))
    # post-order: deeper (longer-path) redexes inside a consumer come first
    order = {p: n for n, (p, _) in enumerate(_postorder(d))}
    found.sort(key=lambda pr: order[pr[0]])
    return [r for _, r in found]


def _postorder(d, path=()):
    for k, p in enumerate(d.premises):
        if isinstance(p, Family):
            for step, _, m in p.members():
                yield from _postorder(m, path + (str(k), step))
        else:
            yield from _postorder(p, path + (str(k),))
    yield path, d


def reduce_at(d, r: Redex):
    try:
        node = child(d, r.path)
    except (IndexError, ValueError, AttributeError):
        raise ReductionError(f"stale redex: no node at {r}") from None
    if classify(node) != r.case_id:
        raise ReductionError(f"stale redex: node at {r} is not a case {r.case_id} redex")
    fresh = LabelSource(d)
    return replace_at(d, r.path, _CASES[r.case_id](node, fresh))


def _case1(n, fresh):
    intro, e = n.premises
    (label, _), = intro.discharged
    return substitute(intro.premises[0], label, e, fresh)


def _case2(n, fresh):
    exp = n.premises[0]
    return NdNode(EXP, n.conclusion, exp.premises)


def _case3(n, fresh):
    neg, e = n.premises
    (label, _), = neg.discharged
    p0, p1 = neg.premises
    w = neg.principal if neg.principal is not None else neg_i_side([p0.conclusion, p1.conclusion])
    major, minor = (p0, p1) if p0.conclusion == w else (p1, p0)
    return NdNode(EXP, n.conclusion, (substitute(major, label, e, fresh), substitute(minor, label, e, fresh)))


def _case4(n, fresh):
    return n.premises[1]


_case6 = _case4


def _consumer_copies(n, branches, fresh):
    """``n`` with its major premise replaced by each branch; later copies re-labelled."""
    minors = n.premises[1:]
    out = []
    for k, b in enumerate(branches):
        copy = n.with_premises((b,) + tuple(minors))
        out.append(copy if k == 0 else _relabel_root(copy, fresh))
    return out


def _relabel_root(n, fresh):
    """Fresh labels for the slots of ``n`` and every discharge in its minor premises."""
    major = n.premises[0]
    hidden = Hyp(major.conclusion, -1)
    rest = freshen(n.with_premises((hidden,) + tuple(n.premises[1:])), fresh)
    return rest.with_premises((major,) + tuple(rest.premises[1:]))


def _rebind(m, fresh, minors):
    """Rename discharges of ``m`` that would capture an open label of ``minors``."""
    used: set[int] = set()
    for x in minors:
        for part in (x.explicit + (x.tail,)) if isinstance(x, Family) else (x,):
            used |= open_labels(part)
    clash = {l for n in m.nodes() if isinstance(n, NdNode) for l, _ in n.discharged} & used
    return freshen(m, fresh, clash) if clash else m


def _case5(n, fresh):
    exm = _rebind(n.premises[0], fresh, n.premises[1:])
    left, right = _consumer_copies(n, exm.premises, fresh)
    return NdNode(EXM, n.conclusion, (left, right), exm.discharged, exm.principal)


def _case7(n, fresh):
    conj = n.premises[0]
    return conj.premises[0 if n.rule == AND_E1 else 1]


def _case8(n, fresh):
    intro = n.premises[0]
    k = 0 if intro.rule == OR_I1 else 1
    label, _ = n.discharged[k]
    return substitute(n.premises[1 + k], label, intro.premises[0], fresh)


def _case9(n, fresh):
    ore = _rebind(n.premises[0], fresh, n.premises[1:])
    d1, d2, d3 = ore.premises
    left, right = _consumer_copies(n, (d2, d3), fresh)
    return NdNode(OR_E, n.conclusion, (d1, left, right), ore.discharged)


def _case10(n, fresh):
    return n.premises[0].premises[0].member(n.witness)


def _case11(n, fresh):
    intro, fam = n.premises
    label, _ = n.discharged[0]
    return substitute(fam.member(intro.witness), label, intro.premises[0], fresh)


def _case12(n, fresh):
    fe = _rebind(n.premises[0], fresh, n.premises[1:])
    major, fam = fe.premises
    minors = tuple(n.premises[1:])
    avoid = set()
    for x in minors:
        avoid |= x.free_vars()
    if fam.var in avoid:
        fam = fam.rename_vars({fam.var: fresh_var(avoid | fam.all_vars())})

    def push(_, member):
        return _relabel_root(n.with_premises((member,) + minors), fresh)

    return NdNode(F_E, n.conclusion, (major, fam.map(push)), fe.discharged)


_CASES = {
    1: _case1, 2: _case2, 3: _case3, 4: _case4, 5: _case5, 6: _case6,
    7: _case7, 8: _case8, 9: _case9, 10: _case10, 11: _case11, 12: _case12,
}


def reduce_to_normal(d, fuel: int = 1000, strategy: str = "leftmost-innermost") -> ReductionTrace:
    """Apply leftmost-innermost steps until normal or until ``fuel`` steps are spent."""
    if strategy != "leftmost-innermost":
        raise ValueError(f"unknown strategy {strategy!r}")
    trace = ReductionTrace()
    current = d
    for _ in range(fuel + 1):
        redexes = find_redexes(current)
        if not redexes:
            trace.terminated_normal = True
            return trace
        if len(trace.steps) == fuel:
            break
        current = reduce_at(current, redexes[0])
        trace.steps.append((redexes[0], current))
    trace.terminated_normal = is_normal(current)
    return trace

"""Natural deduction derivations with labelled assumptions.

A discharging node stores one ``(label, formula)`` pair per discharge slot:
imp-I, neg-I and F-E have one slot, EXM and or-E have two (one per
discharging premise).  An assumption leaf is discharged by the nearest node
below it whose slot for that premise carries its label.  A slot whose label
is never used is a vacuous discharge.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Union

from ..calculi.tree import Family
from ..syntax import Formula, Index, shift, strip_x

IMP_I = "imp-I"
IMP_E = "imp-E"
EXP = "EXP"
EXM = "EXM"
NEG_I = "neg-I"
AND_I = "and-I"
AND_E1 = "and-E1"
AND_E2 = "and-E2"
OR_I1 = "or-I1"
OR_I2 = "or-I2"
OR_E = "or-E"
G_I = "G-I"
G_E = "G-E"
F_I = "F-I"
F_E = "F-E"

INTRO_RULES = frozenset({IMP_I, AND_I, OR_I1, OR_I2, NEG_I, G_I, F_I, EXM})
ELIM_RULES = frozenset({IMP_E, AND_E1, AND_E2, OR_E, G_E, F_E, EXP})
ND_RULES = INTRO_RULES | ELIM_RULES
DISCHARGE_SLOTS = {IMP_I: 1, NEG_I: 1, EXM: 2, OR_E: 2, F_E: 1}
WITNESS_RULES = frozenset({G_E, F_I})
# conclusions of these rules are maximum formulas when they are a major premise
MAX_SOURCES = INTRO_RULES | {OR_E, EXP}


@dataclass(frozen=True)
class Hyp:
    formula: Formula
    label: int

    premises = ()
    rule = "hyp"

    @property
    def conclusion(self) -> Formula:
        return self.formula

    def with_premises(self, premises):
        return self

    def free_vars(self) -> frozenset[str]:
        return self.formula.free_vars()

    def bound_vars(self) -> frozenset[str]:
        return frozenset()

    def all_vars(self) -> frozenset[str]:
        return self.free_vars()

    def subst(self, var: str, value) -> "Hyp":
        return Hyp(self.formula.subst(var, value), self.label)

    def rename_vars(self, mapping: Mapping[str, str]) -> "Hyp":
        return Hyp(self.formula.rename_vars(mapping), self.label)

    def nodes(self):
        yield self

    def __str__(self) -> str:
        return f"[{self.formula}]^{self.label}"


def fe_assumption(major: Formula, var: str) -> Formula | None:
    """``X^{i+var} a`` for a major premise ``X^i F a``; None if not F-shaped."""
    from ..syntax import F

    i, core = strip_x(major)
    if not isinstance(core, F):
        return None
    return shift(core.body, i + Index.var(var))


@dataclass(frozen=True)
class NdNode:
    rule: str
    conclusion: Formula
    premises: tuple = ()
    discharged: tuple[tuple[int, Formula], ...] = ()
    principal: Formula | None = None
    witness: Index | None = None

    def __post_init__(self):
        if self.witness is not None and not isinstance(self.witness, Index):
            object.__setattr__(self, "witness", Index.of(self.witness))
        object.__setattr__(self, "discharged", tuple((int(l), f) for l, f in self.discharged))
        # F-E discharges X^{i+j} a where j is the family variable; keep the
        # stored formula in step with the binder when the family is renamed
        if self.rule == F_E and len(self.premises) == 2 and isinstance(self.premises[1], Family):
            if self.discharged and not isinstance(self.premises[0], Family):
                f = fe_assumption(self.premises[0].conclusion, self.premises[1].var)
                if f is not None:
                    object.__setattr__(self, "discharged", ((self.discharged[0][0], f),) + self.discharged[1:])

    def with_premises(self, premises) -> "NdNode":
        return replace(self, premises=tuple(premises))

    def free_vars(self) -> frozenset[str]:
        out = self.conclusion.free_vars()
        if self.principal is not None:
            out |= self.principal.free_vars()
        if self.witness is not None:
            out |= self.witness.free_vars()
        fam_vars = {p.var for p in self.premises if isinstance(p, Family)}
        for _, f in self.discharged:
            out |= f.free_vars() - (fam_vars if self.rule == F_E else set())
        for p in self.premises:
            out |= p.free_vars()
        return out

    def bound_vars(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for p in self.premises:
            out |= p.bound_vars()
        return out

    def all_vars(self) -> frozenset[str]:
        return self.free_vars() | self.bound_vars()

    def subst(self, var: str, value) -> "NdNode":
        prems = tuple(p.subst(var, value) for p in self.premises)
        return NdNode(
            self.rule,
            self.conclusion.subst(var, value),
            prems,
            tuple((l, f.subst(var, value)) for l, f in self.discharged),
            None if self.principal is None else self.principal.subst(var, value),
            None if self.witness is None else self.witness.subst(var, value),
        )

    def rename_vars(self, mapping: Mapping[str, str]) -> "NdNode":
        if not mapping:
            return self
        return NdNode(
            self.rule,
            self.conclusion.rename_vars(mapping),
            tuple(p.rename_vars(mapping) for p in self.premises),
            tuple((l, f.rename_vars(mapping)) for l, f in self.discharged),
            None if self.principal is None else self.principal.rename_vars(mapping),
            None if self.witness is None else self.witness.rename(mapping),
        )

    def subderivations(self):
        for n, p in enumerate(self.premises):
            if isinstance(p, Family):
                for step, _, m in p.members():
                    yield (str(n), step), m
            else:
                yield (str(n),), p

    def nodes(self):
        yield self
        for _, child in self.subderivations():
            yield from child.nodes()

    def __str__(self) -> str:
        return f"{self.rule}: {self.conclusion}"


NdDerivation = Union[Hyp, NdNode]


def end_formula(d) -> Formula:
    return d.conclusion


def node_count(d) -> int:
    return sum(1 for _ in d.nodes())


def labels(d) -> set[int]:
    out: set[int] = set()
    for n in d.nodes():
        if isinstance(n, Hyp):
            out.add(n.label)
        else:
            out.update(l for l, _ in n.discharged)
    return out


def child(d, step_path: tuple[str, ...]):
    """Follow a path of steps (``"0"``, ``"1"``, then ``"e<n>"``/``"t"`` in families)."""
    node = d
    steps = list(step_path)
    while steps:
        s = steps.pop(0)
        p = node.premises[int(s)]
        if isinstance(p, Family):
            sel = steps.pop(0)
            node = p.tail if sel == "t" else p.explicit[int(sel[1:])]
        else:
            node = p
    return node


def replace_at(d, step_path: tuple[str, ...], new):
    """Structural update of the subtree at ``step_path``."""
    if not step_path:
        return new
    s, rest = step_path[0], step_path[1:]
    idx = int(s)
    p = d.premises[idx]
    if isinstance(p, Family):
        sel, rest = rest[0], rest[1:]
        if sel == "t":
            p = Family(p.var, p.explicit, replace_at(p.tail, rest, new))
        else:
            k = int(sel[1:])
            ex = list(p.explicit)
            ex[k] = replace_at(ex[k], rest, new)
            p = Family(p.var, tuple(ex), p.tail)
    else:
        p = replace_at(p, rest, new)
    prems = list(d.premises)
    prems[idx] = p
    return d.with_premises(prems)

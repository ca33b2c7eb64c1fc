"""Premise schemas of the LT and SLT rules.

Given a rule, its principal formula, its witness and a choice of side
contexts, :func:`instance` returns the premise sequents the rule requires.
The checker and every construction that builds nodes go through it, so the
two can never disagree about what a rule looks like.
"""
from __future__ import annotations

from typing import Callable

from ..syntax import And, F, Formula, G, Imp, Index, Neg, Or, Var, shift, strip_x
from .tree import (
    AND_LEFT,
    AND_RIGHT,
    F_LEFT,
    F_RIGHT,
    G_LEFT,
    G_RIGHT,
    IMP_LEFT,
    IMP_RIGHT,
    NEG_LEFT,
    NEG_RIGHT,
    OR_LEFT,
    OR_RIGHT,
    OR_RIGHT1,
    OR_RIGHT2,
    SLT,
    Sequent,
)


class SchemaError(ValueError):
    """The principal formula does not have the shape the rule needs."""


# rule -> (required core type, side)
LOGICAL = {
    IMP_LEFT: (Imp, "left"),
    IMP_RIGHT: (Imp, "right"),
    NEG_LEFT: (Neg, "left"),
    NEG_RIGHT: (Neg, "right"),
    AND_LEFT: (And, "left"),
    AND_RIGHT: (And, "right"),
    OR_LEFT: (Or, "left"),
    OR_RIGHT: (Or, "right"),
    OR_RIGHT1: (Or, "right"),
    OR_RIGHT2: (Or, "right"),
    G_LEFT: (G, "left"),
    G_RIGHT: (G, "right"),
    F_LEFT: (F, "left"),
    F_RIGHT: (F, "right"),
}


def seq(ante, succ=()) -> Sequent:
    return Sequent(frozenset(ante), frozenset(succ))


def split(principal: Formula, rule: str):
    """``(i, core)`` of the principal, checked against the rule's connective."""
    i, core = strip_x(principal)
    expected, _ = LOGICAL[rule]
    if not isinstance(core, expected):
        raise SchemaError(f"{rule} needs a principal X^i({expected.__name__} ...), got {principal}")
    return i, core


def instance(
    calculus: str,
    rule: str,
    principal: Formula,
    witness: Index | None,
    ante: frozenset,
    succ: frozenset,
):
    """Required premises for a logical rule.

    ``ante`` is the left context Γ (without the principal for left rules) and
    ``succ`` the right context: Δ in LT, and in SLT the succedent γ of a left
    rule or the empty set for a right rule.  Returns a list of sequents, or
    for the omega-rules a function from an :class:`Index` to the member
    sequent.
    """
    i, core = split(principal, rule)
    at = lambda f, n=Index(0): shift(f, i + n)  # noqa: E731
    slt = calculus == SLT
    if rule in (G_LEFT, F_RIGHT):
        if witness is None:
            raise SchemaError(f"{rule} needs a witness k")
    if rule == IMP_LEFT:
        a, b = at(core.lhs), at(core.rhs)
        first = seq(ante, {a}) if slt else seq(ante, succ | {a})
        return [first, seq(ante | {b}, succ)]
    if rule == IMP_RIGHT:
        return [seq(ante | {at(core.lhs)}, succ | {at(core.rhs)})]
    if rule == NEG_LEFT:
        return [seq(ante, succ | {at(core.body)})]
    if rule == NEG_RIGHT:
        return [seq(ante | {at(core.body)}, succ)]
    if rule == AND_LEFT:
        return [seq(ante | {at(core.lhs), at(core.rhs)}, succ)]
    if rule == AND_RIGHT:
        return [seq(ante, succ | {at(core.lhs)}), seq(ante, succ | {at(core.rhs)})]
    if rule == OR_LEFT:
        return [seq(ante | {at(core.lhs)}, succ), seq(ante | {at(core.rhs)}, succ)]
    if rule == OR_RIGHT:
        return [seq(ante, succ | {at(core.lhs), at(core.rhs)})]
    if rule == OR_RIGHT1:
        return [seq(ante, succ | {at(core.lhs)})]
    if rule == OR_RIGHT2:
        return [seq(ante, succ | {at(core.rhs)})]
    if rule == G_LEFT:
        return [seq(ante | {at(core.body, witness)}, succ)]
    if rule == F_RIGHT:
        return [seq(ante, succ | {at(core.body, witness)})]
    if rule == G_RIGHT:
        return lambda n: seq(ante, succ | {at(core.body, n)})
    if rule == F_LEFT:
        return lambda n: seq(ante | {at(core.body, n)}, succ)
    raise SchemaError(f"{rule} is not a logical rule")


def side(rule: str) -> str:
    return LOGICAL[rule][1]


def contexts(calculus: str, rule: str, principal: Formula, conclusion: Sequent):
    """Candidate (Γ, Δ) pairs under which ``conclusion`` is a rule instance.

    With set semantics the principal formula may or may not also belong to
    the context, so left rules try Γ = ante - P and Γ = ante.
    """
    if side(rule) == "left":
        if principal not in conclusion.ante:
            return []
        if calculus == SLT and rule == NEG_LEFT and conclusion.succ:
            return []
        rest = conclusion.ante - {principal}
        return [(rest, conclusion.succ), (conclusion.ante, conclusion.succ)]
    if principal not in conclusion.succ:
        return []
    if calculus == SLT:
        if conclusion.succ != {principal}:
            return []
        return [(conclusion.ante, frozenset())]
    rest = conclusion.succ - {principal}
    return [(conclusion.ante, rest), (conclusion.ante, conclusion.succ)]


def conclusion_of(calculus: str, rule: str, principal: Formula, ante: frozenset, succ: frozenset) -> Sequent:
    """Conclusion of a logical rule for the given contexts."""
    if side(rule) == "left":
        return seq(ante | {principal}, succ)
    return seq(ante, succ | {principal})


def ex_middle_premises(principal: Formula, conclusion: Sequent) -> list[Sequent]:
    i, core = strip_x(principal)
    if not isinstance(core, Neg):
        raise SchemaError(f"ex-middle needs a principal X^i~a, got {principal}")
    return [
        seq(conclusion.ante | {principal}, conclusion.succ),
        seq(conclusion.ante | {shift(core.body, i)}, conclusion.succ),
    ]


def is_initial(f: Formula) -> bool:
    return isinstance(strip_x(f).core, Var)


SchemaFn = Callable[[Index], Sequent]

"""Cut elimination for LT, and for SLT by the detour through LT.

The LT procedure removes cuts top-down: the premises of a cut are made
cut-free first, then the cut is pushed upwards by :func:`_Eliminator.cut`.

* If the cut formula already sits in the left antecedent or the right
  succedent, one premise alone proves (a subset of) the conclusion.
* If the formula is not principal on one side, the cut is permuted into the
  premises of that side's last rule, which is then rebuilt over the
  combined context.
* If it is principal on both sides, weakenings are dropped and logical
  pairs are replaced by cuts on the immediate subformulas.

Every call returns a cut-free derivation whose conclusion is contained in
``Γ1, Γ2 - a => Δ1 - a, Δ2``; the caller weakens it to the exact end-sequent.
"""
from __future__ import annotations

import os

from ..calculi import rules
from ..calculi.constructions import neg_left_inverse, weaken_lt_to
from ..calculi.tree import (
    CUT,
    F_RIGHT,
    G_RIGHT,
    IMP_RIGHT,
    INIT,
    LEFT_RULES,
    LT,
    NEG_RIGHT,
    AND_RIGHT,
    OR_RIGHT,
    RIGHT_RULES,
    WE_LEFT,
    WE_RIGHT,
    Derivation,
    Family,
    canonical_vars,
    fresh_var,
)
from ..syntax import Formula, Neg, shift
from .lt_slt import lt_cutfree_to_slt_cutfree, slt_to_lt

DEFAULT_FUEL = 100_000


class FuelExhausted(RuntimeError):
    """The step budget ran out before all cuts were gone."""


def default_fuel() -> int:
    raw = os.environ.get("PROOFKIT_FUEL")
    return int(raw) if raw else DEFAULT_FUEL


def cut_eliminate_lt(d: Derivation, fuel: int | None = None) -> Derivation:
    """Cut-free LT derivation of the same end-sequent."""
    e = _Eliminator(default_fuel() if fuel is None else fuel)
    return canonical_vars(e.eliminate(d))


def cut_eliminate_slt(d: Derivation, fuel: int | None = None) -> Derivation:
    """Cut-free SLT derivation of the same end-sequent, by way of LT."""
    lt = cut_eliminate_lt(slt_to_lt(d), fuel)
    s = lt_cutfree_to_slt_cutfree(lt)
    goal = d.conclusion.goal
    if goal is None:
        return s
    return canonical_vars(neg_left_inverse(s, Neg(goal), d.conclusion.ante))


class _Eliminator:
    def __init__(self, fuel: int):
        self.fuel = fuel
        self.steps = 0

    def tick(self):
        self.steps += 1
        if self.steps > self.fuel:
            raise FuelExhausted(f"cut elimination used more than {self.fuel} steps")

    def eliminate(self, d: Derivation) -> Derivation:
        if not d.premises:
            return d
        prem = tuple(self._map(p, self.eliminate) for p in d.premises)
        if d.rule != CUT:
            return d.with_premises(prem)
        left, right = prem
        a = cut_formula(d)
        return weaken_lt_to(self.cut(left, right, a), d.conclusion)

    @staticmethod
    def _map(p, fn):
        if isinstance(p, Family):
            return Family(p.var, tuple(fn(m) for m in p.explicit), fn(p.tail))
        return fn(p)

    # -- one cut between cut-free premises

    def cut(self, left: Derivation, right: Derivation, a: Formula) -> Derivation:
        self.tick()
        lc, rc = left.conclusion, right.conclusion
        if a in lc.ante or a not in rc.ante:
            return right
        if a in rc.succ or a not in lc.succ:
            return left
        ante = lc.ante | (rc.ante - {a})
        succ = (lc.succ - {a}) | rc.succ
        avoid = left.free_vars() | right.free_vars() | a.free_vars()
        to_right = lambda m: self.cut(m, right, a)  # noqa: E731
        to_left = lambda m: self.cut(left, m, a)  # noqa: E731
        if not _introduces(left, a, RIGHT_RULES):
            return self.permute(left, ante, succ, to_right, avoid)
        if not _introduces(right, a, LEFT_RULES):
            return self.permute(right, ante, succ, to_left, avoid)
        if left.rule == WE_RIGHT:
            return to_right(left.premises[0])
        if right.rule == WE_LEFT:
            return to_left(right.premises[0])
        # both sides introduce a: clear a out of their premises, then reduce
        lstar = self.rebuild(left, ante, succ, to_right, avoid)
        rstar = self.rebuild(right, ante, succ, to_left, avoid)
        return self.principal(lstar, rstar, a)

    def permute(self, d, ante, succ, push, avoid) -> Derivation:
        if d.rule in (WE_LEFT, WE_RIGHT):
            return push(d.premises[0])
        if d.rule in (INIT, CUT):
            # init is caught by the shortcuts in cut(); premises are cut-free
            raise AssertionError(f"{d.rule} reached the permutation step")
        return self.rebuild(d, ante, succ, push, avoid)

    def rebuild(self, d, ante, succ, push, avoid) -> Derivation:
        """``d``'s last rule over the contexts ``(ante, succ)``, premises pushed."""
        r, p, w = d.rule, d.principal, d.witness
        required = rules.instance(LT, r, p, w, ante, succ)
        if callable(required):
            fam = d.premises[0]
            if fam.var in avoid:
                fam = fam.rename_vars({fam.var: fresh_var(avoid | fam.all_vars())})
            prem = (fam.map(lambda ix, m: weaken_lt_to(push(m), required(ix))),)
        else:
            prem = tuple(weaken_lt_to(push(m), want) for m, want in zip(d.premises, required))
        return Derivation(r, rules.conclusion_of(LT, r, p, ante, succ), prem, p, w)

    def principal(self, left, right, a) -> Derivation:
        """Both premises introduce ``a`` by logical rules over the same contexts."""
        i, core = rules.split(a, left.rule)
        at = lambda f, n=0: shift(f, i + n)  # noqa: E731
        r = left.rule
        if r == IMP_RIGHT:
            (l1,) = left.premises
            r1, r2 = right.premises
            return self.cut(r1, self.cut(l1, r2, at(core.rhs)), at(core.lhs))
        if r == NEG_RIGHT:
            (l1,) = left.premises
            (r1,) = right.premises
            return self.cut(r1, l1, at(core.body))
        if r == AND_RIGHT:
            l1, l2 = left.premises
            (r1,) = right.premises
            return self.cut(l1, self.cut(l2, r1, at(core.rhs)), at(core.lhs))
        if r == OR_RIGHT:
            (l1,) = left.premises
            r1, r2 = right.premises
            return self.cut(self.cut(l1, r1, at(core.lhs)), r2, at(core.rhs))
        if r == G_RIGHT:
            k = right.witness
            return self.cut(left.premises[0].member(k), right.premises[0], at(core.body, k))
        if r == F_RIGHT:
            k = left.witness
            return self.cut(left.premises[0], right.premises[0].member(k), at(core.body, k))
        raise AssertionError(f"no principal reduction for {r} against {right.rule}")


def cut_formula(d: Derivation) -> Formula:
    """The cut formula of a cut node, inferred when it is not stored."""
    if d.principal is not None:
        return d.principal
    left, right = (p.conclusion for p in d.premises)
    shared = sorted(left.succ & right.ante, key=str)
    if not shared:
        raise ValueError(f"no cut formula for {d.conclusion}")
    return shared[0]


def _introduces(d: Derivation, a: Formula, side) -> bool:
    return d.rule in side and d.principal == a

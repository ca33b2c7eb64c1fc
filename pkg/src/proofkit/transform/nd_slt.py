"""Translations between natural deduction and the single-succedent calculus.

``nlt_to_slt`` turns an ND derivation into an SLT derivation (with cuts) of
``oa(D) => end(D)``.  ``slt_cutfree_to_nd_normal`` turns a cut-free SLT
derivation of ``Γ => β`` into a normal ND derivation ending in ``β``, or in
the designated contradiction ``~p /\\ p`` when the succedent is empty.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..calculi import rules
from ..calculi.check import is_cut_free
from ..calculi.constructions import derive_identity, logical, weaken_to
from ..calculi.tree import (
    AND_LEFT,
    AND_RIGHT,
    CUT,
    EX_MIDDLE,
    F_LEFT,
    F_RIGHT,
    G_LEFT,
    G_RIGHT,
    IMP_LEFT,
    IMP_RIGHT,
    INIT,
    NEG_LEFT,
    NEG_RIGHT,
    OR_LEFT,
    OR_RIGHT1,
    OR_RIGHT2,
    SLT,
    WE_RIGHT,
    Derivation,
    Sequent,
    canonical_vars,
)
from ..natded import tree as nd
from ..natded.check import neg_i_side, open_assumptions
from ..natded.subst import LabelSource
from ..natded.tree import Hyp, NdNode
from ..syntax import Formula, Index, Neg, Var, contradiction, shift, strip_x
from .lt_slt import TranslationError


@dataclass(frozen=True)
class Contradiction:
    """The formula ``~v /\\ v`` standing for an empty succedent."""

    variable: str = "p"

    @property
    def formula(self) -> Formula:
        return contradiction(self.variable)


# ---------------------------------------------------------------- ND -> SLT


def slt_cut(left: Derivation, right: Derivation, a: Formula) -> Derivation:
    """SLT cut of ``left: Γ => a`` against ``right: a, Σ => γ``."""
    ante = left.conclusion.ante | (right.conclusion.ante - {a})
    return Derivation(CUT, Sequent(ante, right.conclusion.succ), (left, right), a)


def nlt_to_slt(d) -> Derivation:
    """SLT derivation of ``oa(d) => end(d)``; cuts appear at elimination rules."""
    avoid = d.all_vars()
    return canonical_vars(_nlt(d, avoid))


def _nlt(d, avoid) -> Derivation:
    gamma = open_assumptions(d)
    if isinstance(d, Hyp):
        return derive_identity(d.formula, 0, (), SLT, avoid)

    def ih(k, extra=()):
        return weaken_to(_nlt(d.premises[k], avoid), gamma | set(extra))

    def ident(f, extra=()):
        return derive_identity(f, 0, gamma | set(extra), SLT, avoid)

    r, c = d.rule, d.conclusion
    slots = [f for _, f in d.discharged]
    if r == nd.IMP_I:
        return logical(SLT, IMP_RIGHT, c, gamma, (), [ih(0, slots)])
    if r == nd.IMP_E:
        major = d.premises[0].conclusion
        left = logical(SLT, IMP_LEFT, major, gamma, {c}, [ih(1), ident(c)])
        return slt_cut(ih(0), left, major)
    if r == nd.EXP:
        neg = d.premises[0].conclusion
        pos = d.premises[1].conclusion
        nl = logical(SLT, NEG_LEFT, neg, gamma | {pos}, (), [ident(pos)])
        inner = slt_cut(ih(0), nl, neg)
        empty = slt_cut(ih(1), inner, pos)
        return Derivation(WE_RIGHT, empty.conclusion.add(succ=[c]), (empty,), c)
    if r == nd.EXM:
        return Derivation(EX_MIDDLE, Sequent(gamma, frozenset({c})), (ih(0, slots[:1]), ih(1, slots[1:])), d.principal)
    if r == nd.NEG_I:
        (a,) = slots
        concl = [p.conclusion for p in d.premises]
        w = d.principal if d.principal is not None else neg_i_side(concl)
        kn = 0 if concl[0] == w else 1
        nl = logical(SLT, NEG_LEFT, w, gamma | {a}, (), [ih(1 - kn, [a])])
        empty = slt_cut(ih(kn, [a]), nl, w)
        return logical(SLT, NEG_RIGHT, c, gamma, (), [empty])
    if r == nd.AND_I:
        return logical(SLT, AND_RIGHT, c, gamma, (), [ih(0), ih(1)])
    if r in (nd.AND_E1, nd.AND_E2):
        major = d.premises[0].conclusion
        i, core = strip_x(major)
        parts = [shift(core.lhs, i), shift(core.rhs, i)]
        left = logical(SLT, AND_LEFT, major, gamma, {c}, [ident(c, parts)])
        return slt_cut(ih(0), left, major)
    if r in (nd.OR_I1, nd.OR_I2):
        return logical(SLT, OR_RIGHT1 if r == nd.OR_I1 else OR_RIGHT2, c, gamma, (), [ih(0)])
    if r == nd.OR_E:
        major = d.premises[0].conclusion
        left = logical(SLT, OR_LEFT, major, gamma, {c}, [ih(1, slots[:1]), ih(2, slots[1:])])
        return slt_cut(ih(0), left, major)
    if r == nd.G_I:
        fam = d.premises[0]
        members = fam.map(lambda ix, m: weaken_to(_nlt(m, avoid), gamma))
        return logical(SLT, G_RIGHT, c, gamma, (), members)
    if r == nd.G_E:
        major = d.premises[0].conclusion
        left = logical(SLT, G_LEFT, major, gamma, {c}, [ident(c)], witness=d.witness)
        return slt_cut(ih(0), left, major)
    if r == nd.F_I:
        return logical(SLT, F_RIGHT, c, gamma, (), [ih(0)], witness=d.witness)
    if r == nd.F_E:
        major = d.premises[0].conclusion
        fam = d.premises[1]
        i, core = strip_x(major)

        def member(ix, m):
            return weaken_to(_nlt(m, avoid), gamma | {shift(core.body, i + ix)})

        left = logical(SLT, F_LEFT, major, gamma, {c}, fam.map(member))
        return slt_cut(ih(0), left, major)
    raise TranslationError(f"unknown natural deduction rule {r!r}")


# ---------------------------------------------------------------- SLT -> ND


def slt_cutfree_to_nd_normal(d: Derivation, variable: str = "p"):
    """Normal ND derivation with ``oa ⊆ Γ`` and end ``β`` (or ``~p /\\ p``)."""
    if not is_cut_free(d):
        raise TranslationError("slt_cutfree_to_nd_normal needs a cut-free derivation")
    t = _ToNd(Contradiction(variable))
    return canonical_vars(t.run(d, None, {}))


class _ToNd:
    """Translation state: a label source and fixed labels for open assumptions.

    ``env`` maps antecedent formulas to the ND derivation standing for them:
    an assumption leaf, or an elimination applied to one (for the left rules).
    """

    def __init__(self, bottom: Contradiction):
        self.bottom = bottom
        self.fresh = LabelSource(start=1)
        self.open: dict[Formula, int] = {}

    def leaf(self, f: Formula, env) -> object:
        if f in env:
            return env[f]
        if f not in self.open:
            self.open[f] = self.fresh()
        return Hyp(f, self.open[f])

    def run(self, d: Derivation, target: Formula | None, env: dict):
        c = d.conclusion
        goal = c.goal
        if goal is None:
            goal = target if target is not None else self.bottom.formula
        r, p = d.rule, d.principal
        if r == INIT:
            return self.leaf(goal, env)
        if r == WE_RIGHT:
            return self.run(d.premises[0], goal, env)
        if r == EX_MIDDLE:
            i, core = strip_x(p)
            pos = shift(core.body, i)
            l1, l2 = self.fresh(), self.fresh()
            e1 = self.run(d.premises[0], goal, {**env, p: Hyp(p, l1)})
            e2 = self.run(d.premises[1], goal, {**env, pos: Hyp(pos, l2)})
            return NdNode(nd.EXM, goal, (e1, e2), ((l1, p), (l2, pos)), principal=p)
        if r == CUT:
            raise TranslationError("cut in a derivation that should be cut-free")
        if p is None:
            p = self._infer_principal(d)
        i, core = rules.split(p, r)
        at = lambda f, n=Index(0): shift(f, i + n)  # noqa: E731
        if r == NEG_LEFT:
            minor = self.run(d.premises[0], None, env)
            return NdNode(nd.EXP, goal, (self.leaf(p, env), minor))
        if r == IMP_LEFT:
            b = at(core.rhs)
            minor = self.run(d.premises[0], None, env)
            use = NdNode(nd.IMP_E, b, (self.leaf(p, env), minor))
            return self.run(d.premises[1], goal, {**env, b: use})
        if r == AND_LEFT:
            a, b = at(core.lhs), at(core.rhs)
            major = self.leaf(p, env)
            extra = {a: NdNode(nd.AND_E1, a, (major,)), b: NdNode(nd.AND_E2, b, (major,))}
            if a == b:
                extra = {a: extra[a]}
            return self.run(d.premises[0], goal, {**env, **extra})
        if r == G_LEFT:
            a = at(core.body, d.witness)
            use = NdNode(nd.G_E, a, (self.leaf(p, env),), witness=d.witness)
            return self.run(d.premises[0], goal, {**env, a: use})
        if r == OR_LEFT:
            a, b = at(core.lhs), at(core.rhs)
            l1, l2 = self.fresh(), self.fresh()
            e1 = self.run(d.premises[0], goal, {**env, a: Hyp(a, l1)})
            e2 = self.run(d.premises[1], goal, {**env, b: Hyp(b, l2)})
            return NdNode(nd.OR_E, goal, (self.leaf(p, env), e1, e2), ((l1, a), (l2, b)))
        if r == F_LEFT:
            fam = d.premises[0]
            label = self.fresh()

            def member(ix, m):
                a = at(core.body, ix)
                return self.run(m, goal, {**env, a: Hyp(a, label)})

            minors = fam.map(member)
            return NdNode(nd.F_E, goal, (self.leaf(p, env), minors), ((label, at(core.body, Index.var(fam.var))),))
        if r == IMP_RIGHT:
            a = at(core.lhs)
            label = self.fresh()
            body = self.run(d.premises[0], None, {**env, a: Hyp(a, label)})
            return NdNode(nd.IMP_I, goal, (body,), ((label, a),))
        if r == NEG_RIGHT:
            a = at(core.body)
            label = self.fresh()
            inner = {**env, a: Hyp(a, label)}
            v = Var(self.bottom.variable)
            neg = self.run(d.premises[0], Neg(v), inner)
            pos = self.run(d.premises[0], v, inner)
            return NdNode(nd.NEG_I, goal, (neg, pos), ((label, a),), principal=Neg(v))
        if r == AND_RIGHT:
            return NdNode(nd.AND_I, goal, tuple(self.run(q, None, env) for q in d.premises))
        if r in (OR_RIGHT1, OR_RIGHT2):
            tag = nd.OR_I1 if r == OR_RIGHT1 else nd.OR_I2
            return NdNode(tag, goal, (self.run(d.premises[0], None, env),))
        if r == G_RIGHT:
            fam = d.premises[0]
            return NdNode(nd.G_I, goal, (fam.map(lambda ix, m: self.run(m, None, env)),))
        if r == F_RIGHT:
            return NdNode(nd.F_I, goal, (self.run(d.premises[0], None, env),), witness=d.witness)
        raise TranslationError(f"no ND image for SLT rule {r!r}")

    def _infer_principal(self, d: Derivation) -> Formula:
        pool = d.conclusion.ante if rules.side(d.rule) == "left" else d.conclusion.succ
        for f in sorted(pool, key=str):
            try:
                rules.split(f, d.rule)
            except rules.SchemaError:
                continue
            return f
        raise TranslationError(f"cannot find the principal formula of {d.rule} at {d.conclusion}")

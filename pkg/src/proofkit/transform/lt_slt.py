"""Translations between the multi-succedent and single-succedent calculi.

``slt_to_lt`` maps an SLT derivation to an LT derivation of the same
sequent; ex-middle becomes two cuts against a proof of ``=> X^i a, X^i ~a``.
``lt_cutfree_to_slt_cutfree`` maps a cut-free LT derivation of ``Γ => Δ`` to
a cut-free SLT derivation of ``~Δ, Γ =>``, where ``~Δ`` negates each
succedent formula outside its X prefix.
"""
from __future__ import annotations

from ..calculi import rules
from ..calculi.check import is_cut_free
from ..calculi.constructions import (
    ConstructionError,
    derive_identity,
    logical,
    neg_left_inverse,
    weaken_lt,
    weaken_lt_to,
    weaken_to,
)
from ..calculi.tree import (
    CUT,
    EX_MIDDLE,
    INIT,
    LT,
    NEG_LEFT,
    NEG_RIGHT,
    OR_RIGHT,
    OR_RIGHT1,
    OR_RIGHT2,
    SLT,
    WE_LEFT,
    WE_RIGHT,
    Derivation,
    Family,
    Sequent,
    canonical_vars,
)
from ..syntax import Formula, Neg, shift, strip_x


class TranslationError(ValueError):
    """A derivation has no image under the requested translation."""


def negate_all(fs) -> frozenset[Formula]:
    return frozenset(Neg(f) for f in fs)


def _fits(premises, required) -> bool:
    if callable(required):
        fam = premises[0]
        return all(m.conclusion.issubset(required(ix)) for _, ix, m in fam.members())
    return all(p.conclusion.issubset(r) for p, r in zip(premises, required))


def _weaken_premises(premises, required):
    if callable(required):
        fam = premises[0]
        return (fam.map(lambda ix, m: weaken_lt_to(m, required(ix))),)
    return tuple(weaken_lt_to(p, r) for p, r in zip(premises, required))


def lt_rule(rule, principal, witness, conclusion: Sequent, premises) -> Derivation:
    """LT node with the given conclusion over premises weakened as the rule needs.

    The smallest fitting context is preferred, so weakenings are only added
    where a premise is missing a context formula.
    """
    for ante, succ in _lt_contexts(rule, principal, conclusion):
        required = rules.instance(LT, rule, principal, witness, ante, succ)
        if _fits(premises, required):
            return Derivation(rule, conclusion, _weaken_premises(premises, required), principal, witness)
    raise TranslationError(f"no LT context for {rule} on {principal} fits {conclusion}")


def _lt_contexts(rule, principal, conclusion):
    out = rules.contexts(LT, rule, principal, conclusion)
    if not out:
        raise TranslationError(f"{principal} is not principal for {rule} in {conclusion}")
    return out


# ---------------------------------------------------------------- SLT -> LT


def slt_to_lt(d: Derivation) -> Derivation:
    return canonical_vars(_to_lt(d, d.all_vars()))


def _to_lt(d: Derivation, avoid) -> Derivation:
    c, r = d.conclusion, d.rule
    if r == INIT:
        base = Derivation(INIT, Sequent(c.succ, c.succ), (), c.goal)
        return weaken_lt(base, ante=c.ante)
    if r == CUT:
        left, right = (_to_lt(p, avoid) for p in d.premises)
        return Derivation(CUT, c, (left, right), d.principal)
    if r == WE_RIGHT:
        return Derivation(WE_RIGHT, c, (_to_lt(d.premises[0], avoid),), d.principal)
    if r == EX_MIDDLE:
        neg = d.principal
        i, core = strip_x(neg)
        pos = shift(core.body, i)
        ih1, ih2 = (_to_lt(p, avoid) for p in d.premises)
        ident = derive_identity(pos, 0, (), LT, avoid)
        both = logical(LT, NEG_RIGHT, neg, (), {pos}, [ident])
        first = Derivation(CUT, Sequent(c.ante, c.succ | {pos}), (both, ih1), neg)
        return Derivation(CUT, c, (first, ih2), pos)
    prem = d.premises
    mapped = (prem[0].map(lambda ix, m: _to_lt(m, avoid)),) if isinstance(prem[0], Family) else tuple(
        _to_lt(p, avoid) for p in prem
    )
    if r in (OR_RIGHT1, OR_RIGHT2):
        return lt_rule(OR_RIGHT, d.principal, None, c, mapped)
    return lt_rule(r, d.principal, d.witness, c, mapped)


# ---------------------------------------------------------------- LT -> SLT


def lt_cutfree_to_slt_cutfree(d: Derivation) -> Derivation:
    """Cut-free SLT derivation of ``~Δ, Γ =>`` from a cut-free LT one of ``Γ => Δ``."""
    if not is_cut_free(d):
        raise TranslationError("lt_cutfree_to_slt_cutfree needs a cut-free derivation")
    return canonical_vars(_to_slt(d, d.all_vars()))


def _target(s: Sequent) -> frozenset[Formula]:
    return negate_all(s.succ) | s.ante


def _to_slt(d: Derivation, avoid) -> Derivation:
    c, r = d.conclusion, d.rule
    ctx = _target(c)
    if r == INIT:
        (p,) = c.succ
        init = Derivation(INIT, Sequent(frozenset({p}), frozenset({p})), (), p)
        return logical(SLT, NEG_LEFT, Neg(p), {p}, (), [init])
    if r in (WE_LEFT, WE_RIGHT):
        return weaken_to(_to_slt(d.premises[0], avoid), ctx)
    if r == CUT:
        raise TranslationError("cut in a derivation that should be cut-free")
    p = d.principal
    if p is None:
        raise TranslationError(f"{r} node without a principal formula at {c}")
    prem = d.premises
    fam = isinstance(prem[0], Family)
    ih = (prem[0].map(lambda ix, m: _to_slt(m, avoid)),) if fam else tuple(_to_slt(q, avoid) for q in prem)
    if r == OR_RIGHT:
        return _or_right(p, ctx, ih[0])
    if rules.side(r) == "left":
        required = rules.instance(SLT, r, p, d.witness, ctx, frozenset())
        return Derivation(r, Sequent(ctx, frozenset()), _fill(ih, required), p, d.witness)
    required = rules.instance(SLT, r, p, d.witness, ctx, frozenset())
    body = Derivation(r, Sequent(ctx, frozenset({p})), _fill(ih, required), p, d.witness)
    return logical(SLT, NEG_LEFT, Neg(p), ctx, (), [body])


def _fill(ih, required):
    """Turn each ``~φ, Σ =>`` into the required ``Σ' => φ`` (or weaken if empty)."""
    if callable(required):
        return (ih[0].map(lambda ix, m: _as_premise(m, required(ix))),)
    return tuple(_as_premise(m, q) for m, q in zip(ih, required))


def _as_premise(d: Derivation, want: Sequent) -> Derivation:
    if not want.succ:
        return weaken_to(d, want.ante)
    (phi,) = want.succ
    try:
        return neg_left_inverse(d, Neg(phi), want.ante)
    except ConstructionError as exc:
        raise TranslationError(f"cannot move {phi} to the succedent: {exc}") from None


def _or_right(p: Formula, ctx: frozenset, ih: Derivation) -> Derivation:
    """SLT image of LT or-right, routed through both single-formula rules."""
    i, core = rules.split(p, OR_RIGHT)
    a, b = shift(core.lhs, i), shift(core.rhs, i)
    na, nb = Neg(a), Neg(b)
    start = weaken_to(ih, ctx | {na, nb})
    s1 = neg_left_inverse(start, na, ctx | {nb})
    s2 = logical(SLT, OR_RIGHT1, p, ctx | {nb}, (), [s1])
    s3 = logical(SLT, NEG_LEFT, Neg(p), ctx | {nb}, (), [s2])
    s4 = neg_left_inverse(s3, nb, ctx)
    s5 = logical(SLT, OR_RIGHT2, p, ctx, (), [s4])
    return logical(SLT, NEG_LEFT, Neg(p), ctx, (), [s5])

"""Derived and admissible rules as derivation builders.

``derive_identity`` proves ``X^i a, Γ => X^i a`` by induction on ``a``;
``weaken_left`` is height-preserving left weakening for cut-free SLT;
``neg_left_inverse`` turns ``X^i ~a, Γ =>`` into ``Γ => X^i a``.
"""
from __future__ import annotations

from typing import Iterable

from ..syntax import And, F, Formula, G, Imp, Index, Neg, Or, Var, shift, strip_x
from . import rules
from .tree import (
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
    LT,
    NEG_LEFT,
    NEG_RIGHT,
    OR_LEFT,
    OR_RIGHT,
    OR_RIGHT1,
    OR_RIGHT2,
    SLT,
    WE_LEFT,
    WE_RIGHT,
    Derivation,
    Family,
    Sequent,
    fresh_var,
    sorted_formulas,
)


class ConstructionError(ValueError):
    pass


def logical(calculus, rule, principal, ante, succ, premises, witness=None) -> Derivation:
    """A logical-rule node over context (Γ, Δ); ``premises`` may be a Family."""
    if witness is not None:
        witness = Index.of(witness)
    concl = rules.conclusion_of(calculus, rule, principal, frozenset(ante), frozenset(succ))
    prem = premises if isinstance(premises, tuple) else (premises,) if isinstance(premises, Family) else tuple(premises)
    return Derivation(rule, concl, prem, principal, witness)


def family(var: str, build) -> Family:
    """A family with no explicit members whose tail is ``build(Index.var(var))``."""
    return Family(var, (), build(Index.var(var)))


# -- identity


def derive_identity(
    alpha: Formula,
    i=0,
    context: Iterable[Formula] = (),
    calculus: str = SLT,
    avoid: Iterable[str] = (),
) -> Derivation:
    """Cut-free proof of ``X^i alpha, context => X^i alpha``."""
    target = shift(alpha, Index.of(i))
    context = frozenset(context)
    avoid = set(avoid) | target.free_vars()
    for f in context:
        avoid |= f.free_vars()
    if calculus == SLT:
        return _slt_identity(target, context | {target}, avoid)
    return weaken_lt(_lt_identity(target, avoid), ante=context)


def _slt_identity(a: Formula, ante: frozenset, avoid: set) -> Derivation:
    """``ante => a`` where ``a`` is in ``ante``."""
    i, core = strip_x(a)
    at = lambda f, n=Index(0): shift(f, i + n)  # noqa: E731

    def ident(f, extra=()):
        ctx = ante | set(extra) | {f}
        return _slt_identity(f, frozenset(ctx), avoid)

    if isinstance(core, Var):
        return Derivation(INIT, Sequent(ante, frozenset({a})), (), a)
    if isinstance(core, Imp):
        x, y = at(core.lhs), at(core.rhs)
        inner = ante | {x}
        left = logical(SLT, IMP_LEFT, a, inner, {y}, [ident(x, [x]), ident(y, [x, y])])
        return logical(SLT, IMP_RIGHT, a, ante, (), [left])
    if isinstance(core, Neg):
        x = at(core.body)
        inner = ante | {x}
        left = logical(SLT, NEG_LEFT, a, inner, (), [ident(x, [x])])
        return logical(SLT, NEG_RIGHT, a, ante, (), [left])
    if isinstance(core, And):
        x, y = at(core.lhs), at(core.rhs)
        both = [x, y]
        p1 = logical(SLT, AND_LEFT, a, ante, {x}, [ident(x, both)])
        p2 = logical(SLT, AND_LEFT, a, ante, {y}, [ident(y, both)])
        return logical(SLT, AND_RIGHT, a, ante, (), [p1, p2])
    if isinstance(core, Or):
        x, y = at(core.lhs), at(core.rhs)
        p1 = logical(SLT, OR_RIGHT1, a, ante | {x}, (), [ident(x, [x])])
        p2 = logical(SLT, OR_RIGHT2, a, ante | {y}, (), [ident(y, [y])])
        return logical(SLT, OR_LEFT, a, ante, {a}, [p1, p2])
    if isinstance(core, G):
        var = fresh_var(avoid)
        inner_avoid = avoid | {var}

        def member(n):
            x = at(core.body, n)
            sub = _slt_identity(x, frozenset(ante | {x}), inner_avoid)
            return logical(SLT, G_LEFT, a, ante, {x}, [sub], witness=n)

        return logical(SLT, G_RIGHT, a, ante, (), family(var, member))
    if isinstance(core, F):
        var = fresh_var(avoid)
        inner_avoid = avoid | {var}

        def member(n):
            x = at(core.body, n)
            inner = ante | {x}
            sub = _slt_identity(x, frozenset(inner), inner_avoid)
            return logical(SLT, F_RIGHT, a, inner, (), [sub], witness=n)

        return logical(SLT, F_LEFT, a, ante, {a}, family(var, member))
    raise TypeError(f"unexpected formula {a!r}")


def _lt_identity(a: Formula, avoid: set) -> Derivation:
    """``a => a`` in LT, weakening explicitly where the rules need it."""
    i, core = strip_x(a)
    at = lambda f, n=Index(0): shift(f, i + n)  # noqa: E731
    ident = lambda f: _lt_identity(f, avoid)  # noqa: E731
    none = frozenset()
    if isinstance(core, Var):
        return Derivation(INIT, Sequent(frozenset({a}), frozenset({a})), (), a)
    if isinstance(core, Imp):
        x, y = at(core.lhs), at(core.rhs)
        left = logical(LT, IMP_LEFT, a, {x}, {y}, [
            weaken_lt(ident(x), succ=[y]),
            weaken_lt(ident(y), ante=[x]),
        ])
        return logical(LT, IMP_RIGHT, a, {a}, none, [left])
    if isinstance(core, Neg):
        x = at(core.body)
        left = logical(LT, NEG_LEFT, a, {x}, none, [ident(x)])
        return logical(LT, NEG_RIGHT, a, {a}, none, [left])
    if isinstance(core, And):
        x, y = at(core.lhs), at(core.rhs)
        p1 = logical(LT, AND_LEFT, a, none, {x}, [weaken_lt(ident(x), ante=[y])])
        p2 = logical(LT, AND_LEFT, a, none, {y}, [weaken_lt(ident(y), ante=[x])])
        return logical(LT, AND_RIGHT, a, {a}, none, [p1, p2])
    if isinstance(core, Or):
        x, y = at(core.lhs), at(core.rhs)
        p1 = logical(LT, OR_RIGHT, a, {x}, none, [weaken_lt(ident(x), succ=[y])])
        p2 = logical(LT, OR_RIGHT, a, {y}, none, [weaken_lt(ident(y), succ=[x])])
        return logical(LT, OR_LEFT, a, none, {a}, [p1, p2])
    if isinstance(core, G):
        var = fresh_var(avoid)
        inner = avoid | {var}

        def member(n):
            x = at(core.body, n)
            return logical(LT, G_LEFT, a, none, {x}, [_lt_identity(x, inner)], witness=n)

        return logical(LT, G_RIGHT, a, {a}, none, family(var, member))
    if isinstance(core, F):
        var = fresh_var(avoid)
        inner = avoid | {var}

        def member(n):
            x = at(core.body, n)
            return logical(LT, F_RIGHT, a, {x}, none, [_lt_identity(x, inner)], witness=n)

        return logical(LT, F_LEFT, a, none, {a}, family(var, member))
    raise TypeError(f"unexpected formula {a!r}")


def weaken_lt(d: Derivation, ante: Iterable[Formula] = (), succ: Iterable[Formula] = ()) -> Derivation:
    """Add formulas to an LT conclusion with explicit we-left / we-right nodes."""
    for f in sorted_formulas(set(succ)):
        if f not in d.conclusion.succ:
            d = Derivation(WE_RIGHT, d.conclusion.add(succ=[f]), (d,), f)
    for f in sorted_formulas(set(ante)):
        if f not in d.conclusion.ante:
            d = Derivation(WE_LEFT, d.conclusion.add(ante=[f]), (d,), f)
    return d


def weaken_lt_to(d: Derivation, target: Sequent) -> Derivation:
    if not d.conclusion.issubset(target):
        raise ConstructionError(f"cannot weaken {d.conclusion} to {target}")
    return weaken_lt(d, target.ante - d.conclusion.ante, target.succ - d.conclusion.succ)


# -- left weakening in SLT


def weaken_left(d: Derivation, alpha: Formula) -> Derivation:
    """Add ``alpha`` to every antecedent of a cut-free SLT derivation.

    Keeps the shape of the tree, so heights are unchanged.
    """
    if any(n.rule == CUT for n in d.nodes()):
        raise ConstructionError("weaken_left is only admissible in cut-free SLT")
    return weaken_all(d, [alpha])


def weaken_all(d: Derivation, alphas: Iterable[Formula]) -> Derivation:
    """Add formulas to every antecedent; also valid across SLT cuts.

    The cut rule has a left context on both premises, so adding the same
    formulas to both keeps it an instance.  Family variables that clash with
    the new formulas are renamed apart.
    """
    alphas = frozenset(alphas)
    if alphas <= d.conclusion.ante:
        return d
    clash: frozenset[str] = frozenset()
    for f in alphas:
        clash |= f.free_vars()
    return _weaken(d, alphas, clash)


def _weaken(d: Derivation, alphas: frozenset, clash: frozenset) -> Derivation:
    prems = []
    for p in d.premises:
        if isinstance(p, Family):
            if p.var in clash:
                p = p.rename_vars({p.var: fresh_var(clash | p.all_vars())})
            p = Family(
                p.var,
                tuple(_weaken(m, alphas, clash) for m in p.explicit),
                _weaken(p.tail, alphas, clash),
            )
            prems.append(p)
        else:
            prems.append(_weaken(p, alphas, clash))
    return Derivation(d.rule, d.conclusion.add(ante=alphas), tuple(prems), d.principal, d.witness)


def weaken_to(d: Derivation, ante: Iterable[Formula]) -> Derivation:
    """SLT: weaken the antecedent up to exactly ``ante``."""
    ante = frozenset(ante)
    if not d.conclusion.ante <= ante:
        raise ConstructionError(f"cannot weaken {d.conclusion} to antecedent {sorted(map(str, ante))}")
    return weaken_all(d, ante - d.conclusion.ante)


# -- inverse of neg-left


def neg_left_inverse(
    d: Derivation,
    principal: Formula | None = None,
    context: Iterable[Formula] | None = None,
) -> Derivation:
    """From ``X^i ~a, Γ =>`` build ``Γ => X^i a`` by ex-middle on ``X^i a``."""
    c = d.conclusion
    if c.succ:
        raise ConstructionError(f"neg_left_inverse needs an empty succedent, got {c}")
    if principal is None:
        negs = [f for f in c.ante if isinstance(strip_x(f).core, Neg)]
        if len(negs) != 1:
            raise ConstructionError(f"cannot pick the negated formula of {c}; pass principal")
        principal = negs[0]
    if principal not in c.ante:
        raise ConstructionError(f"{principal} is not in the antecedent of {c}")
    i, core = strip_x(principal)
    if not isinstance(core, Neg):
        raise ConstructionError(f"{principal} is not of the form X^i ~a")
    goal = shift(core.body, i)
    gamma = c.ante - {principal} if context is None else frozenset(context)
    if not c.ante <= gamma | {principal}:
        raise ConstructionError("context must contain the rest of the antecedent")
    base = weaken_to(d, gamma | {principal})
    left = Derivation(WE_RIGHT, base.conclusion.add(succ=[goal]), (base,), goal)
    right = derive_identity(goal, 0, gamma, SLT, avoid=d.all_vars())
    return Derivation(EX_MIDDLE, Sequent(gamma, frozenset({goal})), (left, right), principal)


# -- schemas and heights


def instantiate_schema(d, var: str, n) -> Derivation:
    """Replace the free schema variable ``var`` by ``n`` throughout ``d``."""
    if var not in d.free_vars():
        raise KeyError(f"schema variable {var} does not occur free")
    return d.subst(var, Index.of(n))


class SchematicHeight(ValueError):
    pass


def height(d: Derivation, bound: int | None = None) -> int:
    """Number of nodes on a longest branch minus one.

    Families have infinitely many members, so ``bound`` must be given when
    ``d`` contains one: members ``j = 0..bound`` are instantiated and
    measured.
    """
    if d.free_vars():
        raise SchematicHeight(f"height of a schematic derivation (free {sorted(d.free_vars())})")
    best = -1
    for p in d.premises:
        if isinstance(p, Family):
            if bound is None:
                raise SchematicHeight("derivation has an omega-premise family; give a bound")
            for n in range(bound + 1):
                best = max(best, height(p.member(n), bound))
        else:
            best = max(best, height(p, bound))
    return best + 1


def cut_count(d: Derivation) -> int:
    return sum(n.rule == CUT for n in d.nodes())


def end_sequent(d: Derivation) -> Sequent:
    return d.conclusion


__all__ = [
    "ConstructionError",
    "SchematicHeight",
    "cut_count",
    "derive_identity",
    "end_sequent",
    "family",
    "height",
    "instantiate_schema",
    "logical",
    "neg_left_inverse",
    "weaken_all",
    "weaken_left",
    "weaken_lt",
    "weaken_lt_to",
    "weaken_to",
]

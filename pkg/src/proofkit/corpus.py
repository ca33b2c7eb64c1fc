"""Golden derivations, detour injection and random derivation generators.

Everything here is deterministic given a ``random.Random`` seed, so test
corpora are reproducible.
"""
from __future__ import annotations

import random
from typing import Iterator

from .calculi.constructions import cut_count, derive_identity, logical, weaken_lt, weaken_to
from .calculi.tree import EX_MIDDLE, OR_RIGHT1, OR_RIGHT2, SLT, Derivation, Family, Sequent, fresh_var
from .natded.tree import (
    AND_E1,
    AND_E2,
    AND_I,
    EXM,
    EXP,
    F_E,
    F_I,
    G_E,
    G_I,
    IMP_E,
    IMP_I,
    NEG_I,
    OR_E,
    OR_I1,
    OR_I2,
    Hyp,
    NdNode,
    child,
    replace_at,
)
from .natded.check import walk
from .natded.subst import LabelSource
from .transform.lt_slt import slt_to_lt
from .transform.nd_slt import nlt_to_slt, slt_cut
from .syntax import And, F, Formula, G, Imp, Index, Neg, Or, Var, parse_formula, shift, strip_x

# ---------------------------------------------------------------- golden ND


def imp_dneg(alpha: Formula | str = "p") -> NdNode:
    """``a -> ~~a`` by imp-I over neg-I over two EXP nodes."""
    a = _f(alpha)
    na = Neg(a)
    exp_neg = NdNode(EXP, na, (Hyp(na, 2), Hyp(a, 1)))
    exp_pos = NdNode(EXP, a, (Hyp(na, 2), Hyp(a, 1)))
    neg_i = NdNode(NEG_I, Neg(na), (exp_neg, exp_pos), ((2, na),), principal=na)
    return NdNode(IMP_I, Imp(a, Neg(na)), (neg_i,), ((1, a),))


def dneg_imp_self(alpha: Formula | str = "p") -> NdNode:
    """``~~(a -> a)``; EXP premises stored major first, neg-I premises as displayed."""
    a = _f(alpha)
    aa = Imp(a, a)
    naa = Neg(aa)
    left = NdNode(EXP, aa, (Hyp(naa, 1), NdNode(IMP_I, aa, (Hyp(a, 3),), ((3, a),))))
    right = NdNode(EXP, naa, (Hyp(naa, 1), NdNode(IMP_I, aa, (Hyp(a, 2),), ((2, a),))))
    return NdNode(NEG_I, Neg(naa), (left, right), ((1, naa),), principal=naa)


def excluded_middle(alpha: Formula | str = "p") -> NdNode:
    """``~a \\/ a`` by EXM over the two disjunction introductions."""
    a = _f(alpha)
    na = Neg(a)
    goal = Or(na, a)
    return NdNode(
        EXM, goal,
        (NdNode(OR_I1, goal, (Hyp(na, 1),)), NdNode(OR_I2, goal, (Hyp(a, 2),))),
        ((1, na), (2, a)), principal=na,
    )


def explosion(alpha: Formula | str = "p", gamma: Formula | str = "q") -> NdNode:
    """``(~a /\\ a) -> g``."""
    a, g = _f(alpha), _f(gamma)
    c = And(Neg(a), a)
    body = NdNode(EXP, g, (NdNode(AND_E1, Neg(a), (Hyp(c, 1),)), NdNode(AND_E2, a, (Hyp(c, 1),))))
    return NdNode(IMP_I, Imp(c, g), (body,), ((1, c),))


def always_next2(alpha: Formula | str = "p") -> NdNode:
    """``G a -> X X a``."""
    a = _f(alpha)
    ga = G(a)
    body = NdNode(G_E, shift(a, 2), (Hyp(ga, 1),), witness=2)
    return NdNode(IMP_I, Imp(ga, shift(a, 2)), (body,), ((1, ga),))


def next_eventually(alpha: Formula | str = "p") -> NdNode:
    """``X a -> F a``."""
    a = _f(alpha)
    xa = shift(a, 1)
    body = NdNode(F_I, F(a), (Hyp(xa, 1),), witness=1)
    return NdNode(IMP_I, Imp(xa, F(a)), (body,), ((1, xa),))


def always_and_left(alpha: Formula | str = "p", beta: Formula | str = "q") -> NdNode:
    """``G(a /\\ b) -> G a`` with the G-I family given by its tail alone."""
    a, b = _f(alpha), _f(beta)
    gab = G(And(a, b))
    j = Index.var("j")
    tail = NdNode(AND_E1, shift(a, j), (NdNode(G_E, shift(And(a, b), j), (Hyp(gab, 1),), witness=j),))
    body = NdNode(G_I, G(a), (Family("j", (), tail),))
    return NdNode(IMP_I, Imp(gab, G(a)), (body,), ((1, gab),))


GOLDEN_ND = {
    "imp_dneg": imp_dneg,
    "dneg_imp_self": dneg_imp_self,
    "excluded_middle": excluded_middle,
    "explosion": explosion,
    "always_next2": always_next2,
    "next_eventually": next_eventually,
    "always_and_left": always_and_left,
}


def golden_nd() -> dict[str, NdNode]:
    return {name: build() for name, build in GOLDEN_ND.items()}


GOLDEN_FORMULAS = ("~p \\/ p", "p -> ~~p", "~~(p -> p)", "(~p /\\ p) -> q", "G p -> X X p", "X p -> F p", "G (p /\\ q) -> G p")


def slt_excluded_middle(alpha: Formula | str = "p") -> Derivation:
    """``=> ~a \\/ a`` in SLT by ex-middle on ``~a``."""
    a = _f(alpha)
    na, goal = Neg(a), Or(Neg(a), a)
    left = logical(SLT, OR_RIGHT1, goal, {na}, (), [derive_identity(na, 0, (), SLT)])
    right = logical(SLT, OR_RIGHT2, goal, {a}, (), [derive_identity(a, 0, (), SLT)])
    return Derivation(EX_MIDDLE, Sequent(frozenset(), frozenset({goal})), (left, right), na)


def _f(x) -> Formula:
    return parse_formula(x) if isinstance(x, str) else x


# ---------------------------------------------------------------- detours

DETOUR_KINDS = ("imp", "and", "or", "G", "F")


def detour_sites(d, kind: str) -> list[tuple[str, ...]]:
    """Paths where a detour of ``kind`` can be injected."""
    out = []
    for path, node in walk(d):
        if kind in ("imp", "and", "or"):
            out.append(path)
        elif kind == "G" and isinstance(node, NdNode) and node.rule == G_E:
            out.append(path + ("0",))
        elif kind == "F" and isinstance(node, NdNode) and node.rule == F_I:
            out.append(path)
    return out


def inject_detour(d, kind: str, path: tuple[str, ...]):
    """Replace the subderivation ``E`` at ``path`` by a detour that reduces back to it."""
    e = child(d, path)
    a = e.conclusion
    fresh = LabelSource(d)
    if kind == "imp":
        l = fresh()
        intro = NdNode(IMP_I, Imp(a, a), (Hyp(a, l),), ((l, a),))
        new = NdNode(IMP_E, a, (intro, e))
    elif kind == "and":
        new = NdNode(AND_E1, a, (NdNode(AND_I, And(a, a), (e, e)),))
    elif kind == "or":
        l1, l2 = fresh(), fresh()
        new = NdNode(OR_E, a, (NdNode(OR_I1, Or(a, a), (e,)), Hyp(a, l1), Hyp(a, l2)), ((l1, a), (l2, a)))
    elif kind == "G":
        i, core = strip_x(a)
        if not isinstance(core, G):
            raise ValueError(f"G detour needs an X^i G a formula, found {a}")
        var = fresh_var(d.all_vars())
        ix = Index.var(var)
        tail = NdNode(G_E, shift(core.body, i + ix), (e,), witness=ix)
        new = NdNode(G_I, a, (Family(var, (), tail),))
    elif kind == "F":
        i, core = strip_x(a)
        if not isinstance(core, F):
            raise ValueError(f"F detour needs an X^i F a formula, found {a}")
        var = fresh_var(d.all_vars())
        ix = Index.var(var)
        l = fresh()
        hyp = Hyp(shift(core.body, i + ix), l)
        tail = NdNode(F_I, a, (hyp,), witness=ix)
        new = NdNode(F_E, a, (e, Family(var, (), tail)), ((l, hyp.formula),))
    else:
        raise ValueError(f"unknown detour kind {kind!r}")
    return replace_at(d, path, new)


def detour_corpus(seed: int = 0, per_proof: int = 6, max_detours: int = 3) -> list[tuple[str, object]]:
    """Golden proofs with 1 to ``max_detours`` injected detours each."""
    rng = random.Random(seed)
    out = []
    for name, d0 in golden_nd().items():
        for _ in range(per_proof):
            d = d0
            kinds = []
            for _ in range(rng.randint(1, max_detours)):
                options = [k for k in DETOUR_KINDS if detour_sites(d, k)]
                kind = rng.choice(options)
                d = inject_detour(d, kind, rng.choice(detour_sites(d, kind)))
                kinds.append(kind)
            out.append((f"{name}+{'+'.join(kinds)}", d))
    return out


# ---------------------------------------------------------------- random formulas

ATOMS = ("p", "q", "r")


def random_formula(rng: random.Random, size: int = 4, atoms=ATOMS, max_next: int = 1) -> Formula:
    """A random formula with about ``size`` connectives."""
    if size <= 0:
        f: Formula = Var(rng.choice(atoms))
        return shift(f, rng.randint(0, max_next)) if rng.random() < 0.3 else f
    kind = rng.choice(("imp", "and", "or", "neg", "G", "F", "X"))
    if kind in ("imp", "and", "or"):
        left = rng.randint(0, size - 1)
        a = random_formula(rng, left, atoms, max_next)
        b = random_formula(rng, size - 1 - left, atoms, max_next)
        return {"imp": Imp, "and": And, "or": Or}[kind](a, b)
    body = random_formula(rng, size - 1, atoms, max_next)
    if kind == "X":
        return shift(body, 1)
    return {"neg": Neg, "G": G, "F": F}[kind](body)


def formulas_up_to(max_size: int, atoms=("p", "q")) -> list[Formula]:
    """Every formula of :func:`~proofkit.syntax.size` at most ``max_size``, without repeats."""
    by_size: dict[int, list[Formula]] = {1: [Var(a) for a in atoms]}
    for n in range(2, max_size + 1):
        out = [op(f) for f in by_size[n - 1] for op in (Neg, G, F, shift)]
        for k in range(1, n - 1):
            out += [op(a, b) for a in by_size[k] for b in by_size[n - 1 - k] for op in (Imp, And, Or)]
        by_size[n] = out
    return list(dict.fromkeys(f for n in sorted(by_size) for f in by_size[n]))


def shift_derivation(d, n):
    """Prefix every formula of a sequent derivation with ``X^n``.

    All sequent rules are uniform in the exponent, so the result is again a
    derivation; witnesses and family variables are unchanged.
    """
    def sh(f):
        return shift(f, n)

    c = d.conclusion
    concl = Sequent(frozenset(map(sh, c.ante)), frozenset(map(sh, c.succ)))
    prem = []
    for p in d.premises:
        if isinstance(p, Family):
            prem.append(Family(p.var, tuple(shift_derivation(m, n) for m in p.explicit), shift_derivation(p.tail, n)))
        else:
            prem.append(shift_derivation(p, n))
    principal = None if d.principal is None else sh(d.principal)
    return Derivation(d.rule, concl, tuple(prem), principal, d.witness)


# ---------------------------------------------------------------- random SLT derivations

_SLT_OPS = (
    "imp-right", "neg-right", "neg-left", "we-right", "and-right", "or-right", "and-left",
    "or-left", "imp-left", "G-left", "F-right", "G-right", "F-left", "ex-middle", "shift",
)


class SltGenerator:
    """Random cut-free (or, with ``cuts``, cut-bearing) SLT derivations.

    Each step applies one rule to smaller generated derivations, weakening
    them to a common context first; anything that does not fit falls back to
    an identity derivation.  ``exm=False`` leaves out ex-middle (so the LT
    image under :func:`~proofkit.transform.slt_to_lt` stays cut-free).
    """

    def __init__(self, rng: random.Random, exm: bool = True, cuts: bool = False, formula_size: int = 2):
        self.rng = rng
        self.exm = exm
        self.cuts = cuts
        self.size = formula_size

    def formula(self) -> Formula:
        return random_formula(self.rng, self.rng.randint(0, self.size))

    def identity(self):
        ctx = [self.formula() for _ in range(self.rng.randint(0, 1))]
        return derive_identity(self.formula(), self.rng.randint(0, 1), ctx, "slt")

    def __call__(self, depth: int = 3):
        if depth <= 0 or self.rng.random() < 0.15:
            return self.identity()
        ops = [o for o in _SLT_OPS if self.exm or o != "ex-middle"]
        if self.cuts:
            ops += ["cut", "cut"]
        op = self.rng.choice(ops)
        out = getattr(self, "_" + op.replace("-", "_"))(depth - 1)
        return out if out is not None else self.identity()

    # each builder returns None when the random pieces do not fit

    def _pick(self, fs):
        fs = sorted(fs, key=str)
        return self.rng.choice(fs) if fs else None

    def _imp_right(self, depth):
        d = self(depth)
        c = d.conclusion
        if c.goal is None:
            return None
        a = self._pick(c.ante) if c.ante and self.rng.random() < 0.7 else self.formula()
        d = weaken_to(d, c.ante | {a})
        return logical("slt", "imp-right", Imp(a, c.goal), c.ante - {a}, (), [d])

    def _neg_right(self, depth):
        d = self._empty(depth)
        a = self._pick(d.conclusion.ante)
        if a is None:
            return None
        return logical("slt", "neg-right", Neg(a), d.conclusion.ante - {a}, (), [d])

    def _empty(self, depth):
        """A derivation with empty succedent, via neg-left when needed."""
        d = self(depth)
        if d.conclusion.goal is None:
            return d
        return logical("slt", "neg-left", Neg(d.conclusion.goal), d.conclusion.ante, (), [d])

    def _neg_left(self, depth):
        d = self(depth)
        if d.conclusion.goal is None:
            return None
        return logical("slt", "neg-left", Neg(d.conclusion.goal), d.conclusion.ante, (), [d])

    def _we_right(self, depth):
        d = self._empty(depth)
        g = self.formula()
        return Derivation("we-right", d.conclusion.add(succ=[g]), (d,), g)

    def _and_right(self, depth):
        d1, d2 = self(depth), self(depth)
        g1, g2 = d1.conclusion.goal, d2.conclusion.goal
        if g1 is None or g2 is None:
            return None
        ante = d1.conclusion.ante | d2.conclusion.ante
        return logical("slt", "and-right", And(g1, g2), ante, (), [weaken_to(d1, ante), weaken_to(d2, ante)])

    def _or_right(self, depth):
        d = self(depth)
        g = d.conclusion.goal
        if g is None:
            return None
        if self.rng.random() < 0.5:
            return logical("slt", "or-right1", Or(g, self.formula()), d.conclusion.ante, (), [d])
        return logical("slt", "or-right2", Or(self.formula(), g), d.conclusion.ante, (), [d])

    def _and_left(self, depth):
        d = self(depth)
        c = d.conclusion
        a = self._pick(c.ante)
        if a is None:
            return None
        b = self._pick(c.ante) if self.rng.random() < 0.5 else self.formula()
        d = weaken_to(d, c.ante | {b})
        return logical("slt", "and-left", And(a, b), c.ante - {a, b}, c.succ, [d])

    def _or_left(self, depth):
        d1 = self(depth)
        c = d1.conclusion
        a = self._pick(c.ante)
        if a is None:
            return None
        d2 = self(depth)
        if d2.conclusion.succ == c.succ and d2.conclusion.ante:
            b = self._pick(d2.conclusion.ante)
            ctx = (c.ante - {a}) | (d2.conclusion.ante - {b})
            second = weaken_to(d2, ctx | {b})
        elif c.goal is not None:
            b = self.formula()
            ctx = (c.ante - {a}) | {c.goal}
            second = derive_identity(c.goal, 0, ctx | {b}, "slt")
        else:
            return None
        return logical("slt", "or-left", Or(a, b), ctx, c.succ, [weaken_to(d1, ctx | {a}), second])

    def _imp_left(self, depth):
        d1 = self(depth)
        d2 = self(depth)
        a = d1.conclusion.goal
        b = self._pick(d2.conclusion.ante)
        if a is None or b is None:
            return None
        ctx = d1.conclusion.ante | (d2.conclusion.ante - {b})
        return logical("slt", "imp-left", Imp(a, b), ctx, d2.conclusion.succ, [weaken_to(d1, ctx), weaken_to(d2, ctx | {b})])

    def _split_witness(self, f):
        i, core = strip_x(f)
        if not i.is_const:
            return None
        k = self.rng.randint(0, i.const)
        return k, shift(core, i.const - k)

    def _G_left(self, depth):
        d = self(depth)
        c = d.conclusion
        f = self._pick(c.ante)
        if f is None:
            return None
        k, body = self._split_witness(f)
        keep = self.rng.random() < 0.3
        return logical("slt", "G-left", G(body), c.ante if keep else c.ante - {f}, c.succ, [d], witness=k)

    def _F_right(self, depth):
        d = self(depth)
        c = d.conclusion
        if c.goal is None:
            return None
        k, body = self._split_witness(c.goal)
        return logical("slt", "F-right", F(body), c.ante, (), [d], witness=k)

    def _boxed_tail(self, d, var, keep=None):
        """Shift ``d`` by ``X^var`` and turn each shifted antecedent (but ``keep``) into ``G`` of it."""

        j = Index.var(var)
        t = shift_derivation(d, j)
        for f in sorted(d.conclusion.ante - {keep}, key=str):
            ante = t.conclusion.ante - {shift(f, j)}
            t = logical("slt", "G-left", G(f), ante, t.conclusion.succ, [t], witness=j)
        return t

    def _G_right(self, depth):
        d = self(depth)
        g = d.conclusion.goal
        if g is None:
            return None
        var = fresh_var(d.all_vars())
        tail = self._boxed_tail(d, var)
        explicit = (tail.subst(var, Index(0)),) if self.rng.random() < 0.3 else ()
        fam = Family(var, explicit, tail)
        return logical("slt", "G-right", G(g), tail.conclusion.ante, (), fam)

    def _F_left(self, depth):
        d = self._empty(depth)
        a = self._pick(d.conclusion.ante)
        if a is None:
            return None
        var = fresh_var(d.all_vars())
        tail = self._boxed_tail(d, var, keep=a)
        ctx = tail.conclusion.ante - {shift(a, Index.var(var))}
        return logical("slt", "F-left", F(a), ctx, (), Family(var, (), tail))

    def _ex_middle(self, depth):
        d = self(depth)
        c = d.conclusion
        a = self._pick(c.ante) if c.ante and self.rng.random() < 0.5 else self.formula()
        na = Neg(a)
        other = self(depth)
        d2 = other if other.conclusion.succ == c.succ else d
        gamma = (c.ante - {na}) | (d2.conclusion.ante - {a})
        premises = (weaken_to(d, gamma | {na}), weaken_to(d2, gamma | {a}))
        return Derivation("ex-middle", Sequent(gamma, c.succ), premises, na)

    def _shift(self, depth):
        return shift_derivation(self(depth), 1)

    def _cut(self, depth):
        left = self(depth)
        a = left.conclusion.goal
        if a is None:
            return None
        mode = self.rng.choice(("identity", "weaken", "and", "left", "left"))
        if mode == "identity":
            right = derive_identity(a, 0, [self.formula()], "slt")
        elif mode == "weaken":
            r = self(depth)
            right = weaken_to(r, r.conclusion.ante | {a})
        elif mode == "and":
            r = self(depth)
            if r.conclusion.goal is None:
                return None
            ante = r.conclusion.ante | {a}
            right = logical("slt", "and-right", And(a, r.conclusion.goal), ante, (), [
                derive_identity(a, 0, ante, "slt"), weaken_to(r, ante)])
        else:
            right = self._consume(a, depth)
            if right is None:
                return None
        return slt_cut(left, right, a)

    def _consume(self, a, depth):
        """A derivation with ``a`` in the antecedent, introduced by a left rule."""

        i, core = strip_x(a)
        at = lambda f, n=0: shift(f, i + n)  # noqa: E731
        if isinstance(core, Neg):
            r = self(depth)
            x = at(core.body)
            body = derive_identity(x, 0, r.conclusion.ante, "slt")
            return logical("slt", "neg-left", a, body.conclusion.ante, (), [body])
        if isinstance(core, And):
            x, y = at(core.lhs), at(core.rhs)
            return logical("slt", "and-left", a, (), {x}, [derive_identity(x, 0, [y], "slt")])
        if isinstance(core, Imp):
            x, y = at(core.lhs), at(core.rhs)
            return logical("slt", "imp-left", a, {x}, {y}, [
                derive_identity(x, 0, (), "slt"), derive_identity(y, 0, [x], "slt")])
        if isinstance(core, Or):
            x, y = at(core.lhs), at(core.rhs)
            return logical("slt", "or-left", a, (), {a}, [
                logical("slt", "or-right1", a, {x}, (), [derive_identity(x, 0, (), "slt")]),
                logical("slt", "or-right2", a, {y}, (), [derive_identity(y, 0, (), "slt")]),
            ])
        if isinstance(core, G):
            k = self.rng.randint(0, 2)
            x = at(core.body, k)
            return logical("slt", "G-left", a, (), {x}, [derive_identity(x, 0, (), "slt")], witness=k)
        return derive_identity(a, 0, (), "slt")


# ---------------------------------------------------------------- random LT derivations


def lt_decorate(rng: random.Random, d, steps: int = 3):
    """Apply a few multi-succedent LT rules on top of an LT derivation."""
    for _ in range(steps):
        c = d.conclusion
        ante, succ = sorted(c.ante, key=str), sorted(c.succ, key=str)
        op = rng.choice(("we-left", "we-right", "neg-right", "neg-left", "or-right", "imp-right"))
        if op == "we-left":
            d = weaken_lt(d, ante=[random_formula(rng, 1)])
        elif op == "we-right":
            d = weaken_lt(d, succ=[random_formula(rng, 1)])
        elif op == "neg-right" and ante:
            a = rng.choice(ante)
            d = logical("lt", "neg-right", Neg(a), c.ante - {a}, c.succ, [d])
        elif op == "neg-left" and succ:
            b = rng.choice(succ)
            d = logical("lt", "neg-left", Neg(b), c.ante, c.succ - {b}, [d])
        elif op == "or-right" and len(succ) >= 2:
            b1, b2 = rng.sample(succ, 2)
            d = logical("lt", "or-right", Or(b1, b2), c.ante, c.succ - {b1, b2}, [d])
        elif op == "imp-right" and ante and succ:
            a, b = rng.choice(ante), rng.choice(succ)
            d = logical("lt", "imp-right", Imp(a, b), c.ante - {a}, c.succ - {b}, [d])
    return d


def slt_cutfree_corpus(n: int = 200, seed: int = 0, depth: int = 3) -> list:
    gen = SltGenerator(random.Random(seed))
    return [gen(depth) for _ in range(n)]


def lt_cutfree_corpus(n: int = 100, seed: int = 0, depth: int = 3) -> list:
    rng = random.Random(seed)
    gen = SltGenerator(rng, exm=False)
    return [lt_decorate(rng, slt_to_lt(gen(depth)), rng.randint(0, 3)) for _ in range(n)]


def slt_cut_corpus(n: int = 60, seed: int = 0, depth: int = 3, with_nd: bool = True) -> list:
    """SLT derivations for cut elimination, at least ``n`` of them with cuts.

    With ``with_nd`` the images of every golden ND proof come first (a few
    are cut-free), then those of the detour corpus.
    """
    out = []
    if with_nd:
        out += [nlt_to_slt(d) for d in golden_nd().values()]
        out += [nlt_to_slt(d) for _, d in detour_corpus(seed)]
    gen = SltGenerator(random.Random(seed), cuts=True)
    while sum(1 for d in out if cut_count(d)) < n:
        d = gen(depth)
        if cut_count(d):
            out.append(d)
    return out


def slt_corpus(n: int = 100, seed: int = 0, depth: int = 3) -> list:
    """SLT derivations, cuts allowed."""
    gen = SltGenerator(random.Random(seed), cuts=True)
    return [gen(depth) for _ in range(n)]


def lt_cut_corpus(n: int = 200, seed: int = 0, depth: int = 3) -> list:
    rng = random.Random(seed)
    gen = SltGenerator(rng, cuts=True)
    out = []
    while len(out) < n:
        d = lt_decorate(rng, slt_to_lt(gen(depth)), rng.randint(0, 2))
        if cut_count(d):
            out.append(d)
    return out


# ---------------------------------------------------------------- reduction oracles


def _small_nd(rng: random.Random, label: int):
    a = random_formula(rng, rng.randint(1, 4))
    return imp_dneg(a) if rng.random() < 0.5 else Hyp(a, label)


def case7_instances(n: int = 50, seed: int = 0) -> Iterator[tuple[NdNode, object]]:
    """``(and-E over and-I, the selected conjunct's derivation)`` pairs."""
    rng = random.Random(seed)
    for _ in range(n):
        d1, d2 = _small_nd(rng, 10), _small_nd(rng, 11)
        conj = NdNode(AND_I, And(d1.conclusion, d2.conclusion), (d1, d2))
        if rng.random() < 0.5:
            yield NdNode(AND_E1, d1.conclusion, (conj,)), d1
        else:
            yield NdNode(AND_E2, d2.conclusion, (conj,)), d2


def case10_instances(n: int = 50, seed: int = 0) -> Iterator[tuple[NdNode, object, int]]:
    """``(G-E at k over G-I with a tail-only family, the tail, k)`` triples."""
    rng = random.Random(seed)
    j = Index.var("j")
    for _ in range(n):
        a, b = random_formula(rng, rng.randint(1, 3)), random_formula(rng, rng.randint(1, 3))
        c = rng.randint(0, 2)
        inner = NdNode(G_E, shift(And(a, b), j + c), (Hyp(G(And(a, b)), 1),), witness=j + c)
        tail = NdNode(AND_E1, shift(a, j + c), (inner,))
        k = rng.randint(0, 6)
        intro = NdNode(G_I, G(shift(a, c)), (Family("j", (), tail),))
        yield NdNode(G_E, shift(a, c + k), (intro,), witness=k), tail, k

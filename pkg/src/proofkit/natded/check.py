"""Checker and structural predicates for natural deduction derivations."""
from __future__ import annotations

from ..calculi.tree import CheckReport, Family
from ..syntax import And, F, Formula, G, Imp, Index, Neg, Or, shift, strip_x
from .tree import (
    AND_E1,
    AND_E2,
    AND_I,
    DISCHARGE_SLOTS,
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
    ND_RULES,
    NEG_I,
    OR_E,
    OR_I1,
    OR_I2,
    WITNESS_RULES,
    Hyp,
    NdNode,
)

ARITY = {
    IMP_I: 1, IMP_E: 2, EXP: 2, EXM: 2, NEG_I: 2, AND_I: 2, AND_E1: 1, AND_E2: 1,
    OR_I1: 1, OR_I2: 1, OR_E: 3, G_I: 1, G_E: 1, F_I: 1, F_E: 2,
}
FAMILY_PREMISE = {G_I: 0, F_E: 1}


class RuleMismatch(ValueError):
    pass


def _shape(f: Formula, kind, what: str):
    i, core = strip_x(f)
    if not isinstance(core, kind):
        raise RuleMismatch(f"{what} must have the form X^i({kind.__name__} ...), got {f}")
    return i, core


def slot_premises(node: NdNode) -> list[list[int]]:
    """For each discharge slot, the premise indices it covers."""
    n = len(node.premises)
    r = node.rule
    if r in (IMP_I, NEG_I):
        cover = [list(range(n))]
    elif r == EXM:
        cover = [[0], [1]]
    elif r == OR_E:
        cover = [[1], [2]]
    elif r == F_E:
        cover = [[1]]
    else:
        cover = []
    return [[k for k in ks if k < n] for ks in cover[: len(node.discharged)]]


def premise_scopes(node: NdNode) -> list[list[tuple[int, Formula]]]:
    """Discharges in force in each premise (``(label, formula)`` pairs).

    For F-E the formula mentions the family variable; callers substitute it
    for explicit members.
    """
    out: list[list[tuple[int, Formula]]] = [[] for _ in node.premises]
    for entry, ks in zip(node.discharged, slot_premises(node)):
        for k in ks:
            out[k].append(entry)
    return out


def expected_discharges(node: NdNode) -> list[Formula]:
    """The assumption formulas the rule discharges, one per slot."""
    r, c, p = node.rule, node.conclusion, node.premises
    if r == IMP_I:
        i, core = _shape(c, Imp, "imp-I conclusion")
        return [shift(core.lhs, i)]
    if r == NEG_I:
        i, core = _shape(c, Neg, "neg-I conclusion")
        return [shift(core.body, i)]
    if r == EXM:
        if node.principal is None:
            raise RuleMismatch("EXM needs its principal X^i~a")
        i, core = _shape(node.principal, Neg, "EXM principal")
        return [node.principal, shift(core.body, i)]
    if r == OR_E:
        i, core = _shape(p[0].conclusion, Or, "or-E major premise")
        return [shift(core.lhs, i), shift(core.rhs, i)]
    if r == F_E:
        i, core = _shape(p[0].conclusion, F, "F-E major premise")
        return [shift(core.body, i + Index.var(p[1].var))]
    return []


def _local(node: NdNode) -> str | None:
    r, c = node.rule, node.conclusion
    prem = node.premises
    if r not in ND_RULES:
        return f"unknown natural deduction rule {r!r}"
    if len(prem) != ARITY[r]:
        return f"{r} takes {ARITY[r]} premise(s), found {len(prem)}"
    fam_at = FAMILY_PREMISE.get(r)
    for k, p in enumerate(prem):
        if isinstance(p, Family) != (k == fam_at):
            return f"{r} premise {k} must {'be' if k == fam_at else 'not be'} a premise family"
    if r in WITNESS_RULES and node.witness is None:
        return f"{r} needs a witness k"
    slots = DISCHARGE_SLOTS.get(r, 0)
    if len(node.discharged) != slots:
        return f"{r} has {slots} discharge slot(s), found {len(node.discharged)}"
    concl = [None if isinstance(p, Family) else p.conclusion for p in prem]
    want = expected_discharges(node)
    for (label, f), w in zip(node.discharged, want):
        if f != w:
            return f"{r} discharges [{w}], not [{f}] (label {label})"
    if r == IMP_I:
        i, core = _shape(c, Imp, "imp-I conclusion")
        return _eq(concl[0], shift(core.rhs, i), "imp-I premise")
    if r == IMP_E:
        i, core = _shape(concl[0], Imp, "imp-E major premise")
        return _eq(concl[1], shift(core.lhs, i), "imp-E minor premise") or _eq(c, shift(core.rhs, i), "imp-E conclusion")
    if r == EXP:
        i, core = _shape(concl[0], Neg, "EXP major premise")
        return _eq(concl[1], shift(core.body, i), "EXP minor premise")
    if r == EXM:
        return _eq(concl[0], c, "EXM left premise") or _eq(concl[1], c, "EXM right premise")
    if r == NEG_I:
        # the premises are neither major nor minor, so either order is accepted
        w = node.principal if node.principal is not None else neg_i_side(concl)
        j, core = _shape(w, Neg, "neg-I side formula")
        pair = {w, shift(core.body, j)}
        if set(concl) != pair or concl[0] == concl[1]:
            return f"neg-I premises must be {w} and {shift(core.body, j)}, found {concl[0]} and {concl[1]}"
        return None
    if r == AND_I:
        i, core = _shape(c, And, "and-I conclusion")
        return _eq(concl[0], shift(core.lhs, i), "and-I left premise") or _eq(concl[1], shift(core.rhs, i), "and-I right premise")
    if r in (AND_E1, AND_E2):
        i, core = _shape(concl[0], And, f"{r} premise")
        part = core.lhs if r == AND_E1 else core.rhs
        return _eq(c, shift(part, i), f"{r} conclusion")
    if r in (OR_I1, OR_I2):
        i, core = _shape(c, Or, f"{r} conclusion")
        part = core.lhs if r == OR_I1 else core.rhs
        return _eq(concl[0], shift(part, i), f"{r} premise")
    if r == OR_E:
        _shape(concl[0], Or, "or-E major premise")
        return _eq(concl[1], c, "or-E left minor premise") or _eq(concl[2], c, "or-E right minor premise")
    if r == G_I:
        i, core = _shape(c, G, "G-I conclusion")
        fam = prem[0]
        for step, ix, m in fam.members():
            bad = _eq(m.conclusion, shift(core.body, i + ix), f"G-I member {step}")
            if bad:
                return bad
        return None
    if r == G_E:
        i, core = _shape(concl[0], G, "G-E premise")
        return _eq(c, shift(core.body, i + node.witness), "G-E conclusion")
    if r == F_I:
        i, core = _shape(c, F, "F-I conclusion")
        return _eq(concl[0], shift(core.body, i + node.witness), "F-I premise")
    if r == F_E:
        _shape(concl[0], F, "F-E major premise")
        for step, _, m in prem[1].members():
            bad = _eq(m.conclusion, c, f"F-E member {step}")
            if bad:
                return bad
        return None
    return None


def neg_i_side(concl) -> Formula:
    """The ``X^j ~g`` premise of a neg-I node given its premise conclusions."""
    for a, b in (concl, concl[::-1]):
        j, core = strip_x(a)
        if isinstance(core, Neg) and b == shift(core.body, j):
            return a
    return concl[0]


def _eq(actual, expected, what):
    if actual != expected:
        return f"{what} must be {expected}, found {actual}"
    return None


class _Checker:
    def __init__(self):
        self.report = CheckReport()

    def walk(self, d, path, scope: dict, bound: frozenset):
        if isinstance(d, Hyp):
            if d.label in scope and scope[d.label] != d.formula:
                self.report.add(path, f"label {d.label} is discharged as [{scope[d.label]}] but used for [{d.formula}]")
            return
        if not isinstance(d, NdNode):
            self.report.add(path, f"expected a derivation, found {type(d).__name__}")
            return
        try:
            msg = _local(d)
        except (RuleMismatch, AttributeError, IndexError) as exc:
            msg = str(exc)
        if msg:
            self.report.add(path, msg)
            return
        for label, _ in d.discharged:
            if label in scope:
                self.report.add(path, f"label {label} is discharged twice on one path")
        scopes = premise_scopes(d)
        for k, p in enumerate(d.premises):
            here = path + (str(k),)
            if isinstance(p, Family):
                self.report.uses_omega = True
                self.family(d, p, here, scope, scopes[k], bound)
            else:
                self.walk(p, here, {**scope, **dict(scopes[k])}, bound)

    def family(self, node, fam, path, scope, extra, bound):
        if fam.var in bound:
            self.report.add(path, f"family variable {fam.var} is already bound by an enclosing family")
        elif fam.var in node.conclusion.free_vars() or any(
            fam.var in p.free_vars() for p in node.premises if not isinstance(p, Family)
        ):
            self.report.add(path, f"family variable {fam.var} occurs free outside its family")
        for step, ix, m in fam.members():
            inner = {**scope, **{l: f.subst(fam.var, ix) for l, f in extra}}
            self.walk(m, path + (step,), inner, bound | {fam.var} if step == "t" else bound)
        tail_scope = {**scope, **dict(extra)}
        for f, _ in _open(fam.tail, tail_scope):
            if fam.var in f.free_vars():
                self.report.add(path + ("t",), f"open assumption [{f}] depends on the family variable {fam.var}")


def check_nd(d) -> CheckReport:
    c = _Checker()
    c.walk(d, (), {}, frozenset())
    if c.report.ok:
        seen: dict[int, Formula] = {}
        for f, label in sorted(_open(d, {}), key=lambda fl: (fl[1], str(fl[0]))):
            if label in seen:
                c.report.add((), f"open label {label} stands for both [{seen[label]}] and [{f}]")
            seen.setdefault(label, f)
    return c.report


def _open(d, scope) -> set:
    """Open assumption leaves as ``(formula, label)`` pairs."""
    if isinstance(d, Hyp):
        return set() if scope.get(d.label) == d.formula else {(d.formula, d.label)}
    out: set = set()
    scopes = premise_scopes(d)
    for k, p in enumerate(d.premises):
        if isinstance(p, Family):
            for _, ix, m in p.members():
                inner = {**scope, **{l: f.subst(p.var, ix) for l, f in scopes[k]}}
                out |= _open(m, inner)
        else:
            out |= _open(p, {**scope, **dict(scopes[k])})
    return out


def open_assumptions(d) -> frozenset[Formula]:
    return frozenset(f for f, _ in _open(d, {}))


def open_labels(d) -> frozenset[int]:
    return frozenset(l for _, l in _open(d, {}))


def end_formula(d) -> Formula:
    return d.conclusion


def walk(d, path=()):
    """Pre-order ``(path, node)`` pairs; family members get an extra step."""
    yield path, d
    for k, p in enumerate(d.premises):
        if isinstance(p, Family):
            for step, _, m in p.members():
                yield from walk(m, path + (str(k), step))
        else:
            yield from walk(p, path + (str(k),))


def is_major(parent, k: int) -> bool:
    """Whether premise ``k`` of ``parent`` is its major premise."""
    return isinstance(parent, NdNode) and parent.rule in ELIM_RULES and k == 0


def maximum_formulas(d) -> list[tuple[str, ...]]:
    """Paths of nodes whose conclusion is a maximum formula."""
    out = []
    for path, node in walk(d):
        if isinstance(node, NdNode) and node.rule in ELIM_RULES:
            major = node.premises[0]
            if isinstance(major, NdNode) and major.rule in MAX_SOURCES:
                out.append(path + ("0",))
    return out


def is_normal(d) -> bool:
    return not maximum_formulas(d)

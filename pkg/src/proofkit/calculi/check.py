"""Rule-by-rule checkers for LT and SLT derivations.

Explicit family members are checked as they stand; a family's tail is checked
once with its variable treated as an opaque index, which makes it valid for
every instance.
"""
from __future__ import annotations

from ..syntax import strip_x
from . import rules
from .rules import SchemaError
from .tree import (
    CUT,
    EX_MIDDLE,
    INIT,
    LT,
    LT_RULES,
    OMEGA_RULES,
    SLT,
    SLT_RULES,
    WE_LEFT,
    WE_RIGHT,
    CheckReport,
    Derivation,
    Family,
    Sequent,
)


def check_lt(d: Derivation) -> CheckReport:
    return check(d, LT)


def check_slt(d: Derivation) -> CheckReport:
    return check(d, SLT)


def check(d: Derivation, calculus: str) -> CheckReport:
    report = CheckReport()
    _Checker(calculus, report).node(d, (), frozenset())
    return report


class _Checker:
    def __init__(self, calculus: str, report: CheckReport):
        self.calculus = calculus
        self.report = report
        self.allowed = LT_RULES if calculus == LT else SLT_RULES

    def fail(self, path, msg):
        self.report.add(path, msg)

    def node(self, d, path, bound):
        if not isinstance(d, Derivation):
            self.fail(path, f"expected a derivation, found {type(d).__name__}")
            return
        c = d.conclusion
        if self.calculus == SLT and len(c.succ) > 1:
            self.fail(path, f"SLT sequent with {len(c.succ)} succedent formulas: {c}")
            return
        if d.rule not in self.allowed:
            self.fail(path, f"rule {d.rule!r} is not a rule of {self.calculus.upper()}")
            return
        if d.rule == CUT:
            self.report.cut_count += 1
        families = [p for p in d.premises if isinstance(p, Family)]
        if d.rule in OMEGA_RULES:
            if len(d.premises) != 1 or not families:
                self.fail(path, f"{d.rule} takes exactly one premise family")
                return
            self.report.uses_omega = True
        elif families:
            self.fail(path, f"{d.rule} cannot take a premise family")
            return
        try:
            msg = self.local(d)
        except SchemaError as exc:
            msg = str(exc)
        if msg:
            self.fail(path, msg)
        for n, p in enumerate(d.premises):
            if isinstance(p, Family):
                self.family(d, p, path + (str(n),), bound)
            else:
                self.node(p, path + (str(n),), bound)

    def family(self, d, fam, path, bound):
        if fam.var in bound:
            self.fail(path, f"family variable {fam.var} is already bound by an enclosing family")
        elif fam.var in d.conclusion.free_vars() or (
            d.principal is not None and fam.var in d.principal.free_vars()
        ):
            self.fail(path, f"family variable {fam.var} occurs free in the conclusion")
        for step, _, member in fam.members():
            inner = bound | {fam.var} if step == "t" else bound
            self.node(member, path + (step,), inner)

    # -- local rule checks; return an error message or None

    def local(self, d: Derivation):
        rule = d.rule
        if rule == INIT:
            return self.init(d)
        if rule == CUT:
            return self.cut(d)
        if rule == WE_LEFT:
            return self.we_left(d)
        if rule == WE_RIGHT:
            return self.we_right(d)
        if rule == EX_MIDDLE:
            return self.ex_middle(d)
        return self.logical(d)

    def arity(self, d, n):
        if len(d.premises) != n:
            return f"{d.rule} takes {n} premise(s), found {len(d.premises)}"
        return None

    def init(self, d):
        if d.premises:
            return "initial sequents have no premises"
        c = d.conclusion
        if len(c.succ) != 1:
            return f"initial sequent needs one succedent formula: {c}"
        (p,) = c.succ
        if not rules.is_initial(p):
            return f"initial sequent on non-atomic formula {p}"
        if d.principal is not None and d.principal != p:
            return f"declared principal {d.principal} is not {p}"
        if self.calculus == LT:
            if c.ante != {p}:
                return f"LT initial sequent must be exactly X^i p => X^i p: {c}"
        elif p not in c.ante:
            return f"succedent {p} missing from antecedent: {c}"
        return None

    def cut(self, d):
        bad = self.arity(d, 2)
        if bad:
            return bad
        left, right = (p.conclusion for p in d.premises)
        c = d.conclusion
        candidates = [d.principal] if d.principal is not None else sorted(left.succ & right.ante, key=str)
        if not candidates:
            return "no cut formula shared by the left succedent and the right antecedent"
        for a in candidates:
            if self.cut_ok(a, left, right, c):
                return None
        return f"cut on {candidates[0]} does not produce {c}"

    def cut_ok(self, a, left: Sequent, right: Sequent, c: Sequent) -> bool:
        if a not in left.succ or a not in right.ante:
            return False
        if c.ante not in (left.ante | (right.ante - {a}), left.ante | right.ante):
            return False
        if self.calculus == SLT:
            return left.succ == {a} and c.succ == right.succ
        return c.succ in ((left.succ - {a}) | right.succ, left.succ | right.succ)

    def we_left(self, d):
        bad = self.arity(d, 1)
        if bad:
            return bad
        p, c = d.premises[0].conclusion, d.conclusion
        if p.succ != c.succ:
            return "we-left must not change the succedent"
        added = c.ante - p.ante
        if not p.ante <= c.ante or len(added) > 1:
            return f"we-left adds exactly one formula: {p} / {c}"
        if d.principal is not None and not (added <= {d.principal} and d.principal in c.ante):
            return f"we-left principal {d.principal} does not match {c}"
        return None

    def we_right(self, d):
        bad = self.arity(d, 1)
        if bad:
            return bad
        p, c = d.premises[0].conclusion, d.conclusion
        if p.ante != c.ante:
            return "we-right must not change the antecedent"
        if self.calculus == SLT:
            if p.succ:
                return "SLT we-right needs an empty succedent in its premise"
            if len(c.succ) != 1:
                return "SLT we-right introduces one succedent formula"
        added = c.succ - p.succ
        if not p.succ <= c.succ or len(added) > 1:
            return f"we-right adds exactly one formula: {p} / {c}"
        if d.principal is not None and not (added <= {d.principal} and d.principal in c.succ):
            return f"we-right principal {d.principal} does not match {c}"
        return None

    def ex_middle(self, d):
        bad = self.arity(d, 2)
        if bad:
            return bad
        if d.principal is None:
            return "ex-middle needs its principal X^i~a"
        expected = rules.ex_middle_premises(d.principal, d.conclusion)
        actual = [p.conclusion for p in d.premises]
        if actual != expected:
            return f"ex-middle premises must be {expected[0]} and {expected[1]}"
        return None

    def logical(self, d):
        rule = d.rule
        c = d.conclusion
        pool = c.ante if rules.side(rule) == "left" else c.succ
        if d.principal is not None:
            candidates = [d.principal]
        else:
            core = rules.LOGICAL[rule][0]
            candidates = [f for f in sorted(pool, key=str) if isinstance(strip_x(f).core, core)]
        if not candidates:
            return f"{rule}: no principal formula of the right shape in {c}"
        first_error = None
        for principal in candidates:
            rules.split(principal, rule)
            ctxs = rules.contexts(self.calculus, rule, principal, c)
            if not ctxs:
                first_error = first_error or self.context_error(rule, principal, c)
                continue
            for ante, succ in ctxs:
                required = rules.instance(self.calculus, rule, principal, d.witness, ante, succ)
                if self.premises_match(d, required):
                    return None
            first_error = first_error or f"{rule} on {principal}: premises do not match the rule schema"
        return first_error

    def context_error(self, rule, principal, c):
        if rules.side(rule) == "left" and principal in c.ante:
            return f"{rule} in SLT needs an empty succedent: {c}"
        if rules.side(rule) == "right" and self.calculus == SLT and principal in c.succ:
            return f"{rule} in SLT needs the principal as the only succedent formula: {c}"
        return f"{rule}: principal {principal} is not in the conclusion {c}"

    def premises_match(self, d, required) -> bool:
        if callable(required):
            fam = d.premises[0]
            for _, ix, member in fam.members():
                if not isinstance(member, Derivation) or member.conclusion != required(ix):
                    return False
            return True
        if len(d.premises) != len(required):
            return False
        return all(p.conclusion == r for p, r in zip(d.premises, required))


def is_cut_free(d: Derivation) -> bool:
    return all(n.rule != CUT for n in d.nodes())


"""Sequents, sequent-calculus derivation trees and omega-premise families."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Mapping, Union

from ..syntax import Formula, Index, sort_key

LT = "lt"
SLT = "slt"

INIT = "init"
CUT = "cut"
WE_LEFT = "we-left"
WE_RIGHT = "we-right"
IMP_LEFT = "imp-left"
IMP_RIGHT = "imp-right"
NEG_LEFT = "neg-left"
NEG_RIGHT = "neg-right"
AND_LEFT = "and-left"
AND_RIGHT = "and-right"
OR_LEFT = "or-left"
OR_RIGHT = "or-right"
OR_RIGHT1 = "or-right1"
OR_RIGHT2 = "or-right2"
G_LEFT = "G-left"
G_RIGHT = "G-right"
F_LEFT = "F-left"
F_RIGHT = "F-right"
EX_MIDDLE = "ex-middle"

LT_RULES = frozenset({
    INIT, CUT, WE_LEFT, WE_RIGHT, IMP_LEFT, IMP_RIGHT, NEG_LEFT, NEG_RIGHT,
    AND_LEFT, AND_RIGHT, OR_LEFT, OR_RIGHT, G_LEFT, G_RIGHT, F_LEFT, F_RIGHT,
})
SLT_RULES = frozenset({
    INIT, CUT, WE_RIGHT, IMP_LEFT, IMP_RIGHT, NEG_LEFT, NEG_RIGHT, EX_MIDDLE,
    AND_LEFT, AND_RIGHT, OR_LEFT, OR_RIGHT1, OR_RIGHT2, G_LEFT, G_RIGHT, F_LEFT, F_RIGHT,
})
LEFT_RULES = frozenset({WE_LEFT, IMP_LEFT, NEG_LEFT, AND_LEFT, OR_LEFT, G_LEFT, F_LEFT})
RIGHT_RULES = frozenset({
    WE_RIGHT, IMP_RIGHT, NEG_RIGHT, AND_RIGHT, OR_RIGHT, OR_RIGHT1, OR_RIGHT2, G_RIGHT, F_RIGHT,
})
OMEGA_RULES = frozenset({G_RIGHT, F_LEFT})
WITNESS_RULES = frozenset({G_LEFT, F_RIGHT})


@dataclass(frozen=True)
class Sequent:
    ante: frozenset[Formula] = frozenset()
    succ: frozenset[Formula] = frozenset()

    @staticmethod
    def of(ante: Iterable[Formula] = (), succ: Iterable[Formula] | Formula | None = ()) -> "Sequent":
        if succ is None:
            succ = ()
        elif isinstance(succ, Formula):
            succ = (succ,)
        return Sequent(frozenset(ante), frozenset(succ))

    @property
    def goal(self) -> Formula | None:
        """The single succedent formula of an SLT sequent, or None if empty."""
        if len(self.succ) > 1:
            raise ValueError(f"{self} has more than one succedent formula")
        return next(iter(self.succ), None)

    def add(self, ante: Iterable[Formula] = (), succ: Iterable[Formula] = ()) -> "Sequent":
        return Sequent(self.ante | frozenset(ante), self.succ | frozenset(succ))

    def issubset(self, other: "Sequent") -> bool:
        return self.ante <= other.ante and self.succ <= other.succ

    def free_vars(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for f in self.ante | self.succ:
            out |= f.free_vars()
        return out

    def subst(self, var: str, value) -> "Sequent":
        return Sequent(
            frozenset(f.subst(var, value) for f in self.ante),
            frozenset(f.subst(var, value) for f in self.succ),
        )

    def rename_vars(self, mapping: Mapping[str, str]) -> "Sequent":
        return Sequent(
            frozenset(f.rename_vars(mapping) for f in self.ante),
            frozenset(f.rename_vars(mapping) for f in self.succ),
        )

    def __str__(self) -> str:
        left = ", ".join(sorted(map(str, self.ante)))
        right = ", ".join(sorted(map(str, self.succ)))
        return f"{left} => {right}".strip()


def sorted_formulas(fs: Iterable[Formula]) -> list[Formula]:
    return sorted(fs, key=sort_key)


@dataclass(frozen=True)
class Family:
    """Finite presentation of ``{D_j}_{j in omega}``.

    ``explicit[n]`` is the member for ``j = n`` (``n < len(explicit)``); every
    later member is ``tail`` with ``var`` replaced by ``j``.
    """

    var: str
    explicit: tuple = ()
    tail: object = None

    def member(self, k) -> object:
        k = Index.of(k)
        if k.is_const and k.const < len(self.explicit):
            return self.explicit[k.const]
        return self.tail.subst(self.var, k)

    def members(self):
        """(step, index, derivation) for each stored member."""
        for n, d in enumerate(self.explicit):
            yield f"e{n}", Index(n), d
        yield "t", Index.var(self.var), self.tail

    def map(self, fn: Callable) -> "Family":
        """Apply ``fn(index, member)`` to every stored member."""
        return Family(
            self.var,
            tuple(fn(Index(n), d) for n, d in enumerate(self.explicit)),
            fn(Index.var(self.var), self.tail),
        )

    def free_vars(self) -> frozenset[str]:
        out = self.tail.free_vars() - {self.var}
        for d in self.explicit:
            out |= d.free_vars()
        return out

    def bound_vars(self) -> frozenset[str]:
        out = frozenset({self.var}) | self.tail.bound_vars()
        for d in self.explicit:
            out |= d.bound_vars()
        return out

    def subst(self, var: str, value) -> "Family":
        if var == self.var:
            return self
        fam = self
        if self.var in Index.of(value).free_vars():
            fam = self.rename_vars({self.var: fresh_var(self.tail.all_vars() | Index.of(value).free_vars())})
        return Family(
            fam.var,
            tuple(d.subst(var, value) for d in fam.explicit),
            fam.tail.subst(var, value),
        )

    def all_vars(self) -> frozenset[str]:
        return self.free_vars() | self.bound_vars()

    def rename_vars(self, mapping: Mapping[str, str]) -> "Family":
        # a rename of the bound variable itself renames the binder
        inner = {k: v for k, v in mapping.items() if k != self.var}
        new_var = mapping.get(self.var, self.var)
        tail_map = dict(inner)
        if new_var != self.var:
            tail_map[self.var] = new_var
        return Family(
            new_var,
            tuple(d.rename_vars(inner) for d in self.explicit),
            self.tail.rename_vars(tail_map),
        )


Premise = Union["Derivation", Family]


@dataclass(frozen=True)
class Derivation:
    """A node of an LT or SLT derivation.

    ``principal`` is the rule's principal formula (the cut formula for cut,
    the added formula for weakenings, ``X^i ~a`` for ex-middle); ``witness``
    is the ``k`` of G-left and F-right.
    """

    rule: str
    conclusion: Sequent
    premises: tuple = ()
    principal: Formula | None = None
    witness: Index | None = None

    def __post_init__(self):
        if self.witness is not None and not isinstance(self.witness, Index):
            object.__setattr__(self, "witness", Index.of(self.witness))

    def subderivations(self):
        """Yield (step, child) for direct children; families yield their members."""
        for n, p in enumerate(self.premises):
            if isinstance(p, Family):
                for step, _, d in p.members():
                    yield f"{n}{step}", d
            else:
                yield str(n), p

    def nodes(self):
        yield self
        for _, child in self.subderivations():
            yield from child.nodes()

    def free_vars(self) -> frozenset[str]:
        out = self.conclusion.free_vars()
        if self.principal is not None:
            out |= self.principal.free_vars()
        if self.witness is not None:
            out |= self.witness.free_vars()
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

    def subst(self, var: str, value) -> "Derivation":
        return Derivation(
            self.rule,
            self.conclusion.subst(var, value),
            tuple(p.subst(var, value) for p in self.premises),
            None if self.principal is None else self.principal.subst(var, value),
            None if self.witness is None else self.witness.subst(var, value),
        )

    def rename_vars(self, mapping: Mapping[str, str]) -> "Derivation":
        if not mapping:
            return self
        return Derivation(
            self.rule,
            self.conclusion.rename_vars(mapping),
            tuple(p.rename_vars(mapping) for p in self.premises),
            None if self.principal is None else self.principal.rename_vars(mapping),
            None if self.witness is None else self.witness.rename(mapping),
        )

    def with_premises(self, premises) -> "Derivation":
        return replace(self, premises=tuple(premises))

    def __str__(self) -> str:
        return f"{self.rule}: {self.conclusion}"


@dataclass
class CheckReport:
    ok: bool = True
    violations: list[tuple[str, str]] = field(default_factory=list)
    cut_count: int = 0
    uses_omega: bool = False

    def add(self, path: tuple[str, ...], message: str) -> None:
        self.ok = False
        self.violations.append(("/" + "/".join(path), message))

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        lines = [
            f"ok: {str(self.ok).lower()}",
            f"cuts: {self.cut_count}",
            f"omega: {str(self.uses_omega).lower()}",
        ]
        lines += [f"violation: {path}: {msg}" for path, msg in self.violations]
        return "\n".join(lines)


def fresh_var(avoid: Iterable[str], stem: str = "j") -> str:
    avoid = set(avoid)
    n = 0
    while f"{stem}{n}" in avoid:
        n += 1
    return f"{stem}{n}"


def canonical_vars(d, stem: str = "j"):
    """Rename every family variable to ``j0, j1, ...`` in pre-order.

    Works on any tree whose nodes expose ``premises`` and ``with_premises``.
    Free variables are left alone and never reused.
    """
    free = d.free_vars()
    counter = iter(range(10**9))

    def relabel(node, pick):
        if not node.premises:
            return node
        out = []
        for p in node.premises:
            if isinstance(p, Family):
                p = p.rename_vars({p.var: pick()})
                p = Family(p.var, tuple(relabel(m, pick) for m in p.explicit), relabel(p.tail, pick))
            else:
                p = relabel(p, pick)
            out.append(p)
        return node.with_premises(out)

    def temp():
        return f"_b{next(counter)}"

    d = relabel(d, temp)
    names = (f"{stem}{n}" for n in range(10**9))

    def final():
        for name in names:
            if name not in free:
                return name

    return relabel(d, final)

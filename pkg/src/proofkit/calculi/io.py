"""Text format for LT and SLT derivations.

::

    (rule <tag> (:params (:principal "<formula>") (:witness "<index>"))
                (:conclusion (seq ("<formula>" ...) => "<formula>" ...))
                (:premises <rule>* | (omega (:var j) (:explicit <rule>*) (:tail <rule>))))
"""
from __future__ import annotations

from ..sexp import SexpError, Symbol, dumps, is_sym, keyword_sections, load_one, loads, sym
from ..syntax import FormulaSyntaxError, Index, parse_formula, parse_index
from .tree import Derivation, Family, Sequent, canonical_vars, sorted_formulas


class FormatError(ValueError):
    pass


def _formula(x, where):
    if not isinstance(x, str):
        raise FormatError(f"{where}: expected a quoted formula, found {x!r}")
    try:
        return parse_formula(x)
    except FormulaSyntaxError as exc:
        raise FormatError(f"{where}: {exc}") from None


def _index(x, where):
    try:
        return parse_index(str(x))
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None


def sequent_to_sexp(s: Sequent) -> list:
    return [sym("seq"), [str(f) for f in sorted_formulas(s.ante)], sym("=>")] + [
        str(f) for f in sorted_formulas(s.succ)
    ]


def sequent_from_sexp(x, where="sequent") -> Sequent:
    if not (isinstance(x, list) and len(x) >= 3 and is_sym(x[0], "seq") and is_sym(x[2], "=>")):
        raise FormatError(f"{where}: expected (seq (<formula>*) => <formula>*)")
    if not isinstance(x[1], list):
        raise FormatError(f"{where}: antecedent must be a list")
    ante = [_formula(f, where) for f in x[1]]
    succ = [_formula(f, where) for f in x[3:]]
    return Sequent(frozenset(ante), frozenset(succ))


def params_to_sexp(principal, witness) -> list:
    out = [sym(":params")]
    if principal is not None:
        out.append([sym(":principal"), str(principal)])
    if witness is not None:
        out.append([sym(":witness"), str(witness)])
    return out


def params_from_sexp(items, where):
    sections = keyword_sections(items)
    unknown = set(sections) - {"principal", "witness"}
    if unknown:
        raise FormatError(f"{where}: unknown parameter(s) {sorted(unknown)}")
    principal = witness = None
    if "principal" in sections:
        principal = _formula(_single(sections["principal"], where), where)
    if "witness" in sections:
        witness = _index(_single(sections["witness"], where), where)
    return principal, witness


def _single(items, where):
    if len(items) != 1:
        raise FormatError(f"{where}: expected one value, found {len(items)}")
    return items[0]


def family_to_sexp(fam: Family, member) -> list:
    return [
        sym("omega"),
        [sym(":var"), sym(fam.var)],
        [sym(":explicit")] + [member(m) for m in fam.explicit],
        [sym(":tail"), member(fam.tail)],
    ]


def family_from_sexp(x, member, where) -> Family:
    sections = keyword_sections(x[1:])
    if set(sections) != {"var", "explicit", "tail"}:
        raise FormatError(f"{where}: omega needs :var, :explicit and :tail")
    var = _single(sections["var"], where)
    if not isinstance(var, Symbol):
        raise FormatError(f"{where}: family variable must be a bare name")
    explicit = tuple(member(m, f"{where}/e{n}") for n, m in enumerate(sections["explicit"]))
    tail = member(_single(sections["tail"], where), f"{where}/t")
    return Family(var.name, explicit, tail)


def to_sexp(d: Derivation) -> list:
    prems = []
    for p in d.premises:
        prems.append(family_to_sexp(p, to_sexp) if isinstance(p, Family) else to_sexp(p))
    return [
        sym("rule"),
        sym(d.rule),
        params_to_sexp(d.principal, d.witness),
        [sym(":conclusion"), sequent_to_sexp(d.conclusion)],
        [sym(":premises")] + prems,
    ]


def from_sexp(x, where: str = "") -> Derivation:
    where = where or "/"
    if not (isinstance(x, list) and len(x) >= 2 and is_sym(x[0], "rule") and is_sym(x[1])):
        raise FormatError(f"{where}: expected (rule <tag> ...)")
    try:
        sections = keyword_sections(x[2:])
    except SexpError as exc:
        raise FormatError(f"{where}: {exc}") from None
    if "conclusion" not in sections:
        raise FormatError(f"{where}: missing :conclusion")
    principal, witness = params_from_sexp(sections.get("params", []), where)
    conclusion = sequent_from_sexp(_single(sections["conclusion"], where), where)
    prems = []
    for n, p in enumerate(sections.get("premises", [])):
        sub = f"{where.rstrip('/')}/{n}"
        if isinstance(p, list) and p and is_sym(p[0], "omega"):
            prems.append(family_from_sexp(p, from_sexp, sub))
        else:
            prems.append(from_sexp(p, sub))
    return Derivation(x[1].name, conclusion, tuple(prems), principal, witness)


def dump_derivation(d: Derivation) -> str:
    return dumps(to_sexp(canonical_vars(d))) + "\n"


def load_derivation(text: str) -> Derivation:
    try:
        form = load_one(text)
    except SexpError as exc:
        raise FormatError(str(exc)) from None
    return from_sexp(form)


def load_derivations(text: str) -> list[Derivation]:
    try:
        forms = loads(text)
    except SexpError as exc:
        raise FormatError(str(exc)) from None
    return [from_sexp(f) for f in forms]


__all__ = [
    "FormatError",
    "dump_derivation",
    "from_sexp",
    "load_derivation",
    "load_derivations",
    "to_sexp",
    "Index",
]

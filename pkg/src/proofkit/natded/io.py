"""Text format for natural deduction derivations.

::

    (nd <tag> (:params (:principal "<formula>") (:witness "<index>"))
              (:conclusion "<formula>")
              (:discharge (<label> "<formula>")*)
              (:premises <nd>* | (omega ...)))
    (hyp <label> "<formula>")
"""
from __future__ import annotations

from ..calculi.io import FormatError, _formula, _single, family_from_sexp, family_to_sexp, params_from_sexp, params_to_sexp
from ..calculi.tree import Family, canonical_vars
from ..sexp import SexpError, dumps, is_sym, keyword_sections, load_one, loads, sym
from .tree import Hyp, NdNode


def to_sexp(d) -> list:
    if isinstance(d, Hyp):
        return [sym("hyp"), d.label, str(d.formula)]
    prems = [family_to_sexp(p, to_sexp) if isinstance(p, Family) else to_sexp(p) for p in d.premises]
    return [
        sym("nd"),
        sym(d.rule),
        params_to_sexp(d.principal, d.witness),
        [sym(":conclusion"), str(d.conclusion)],
        [sym(":discharge")] + [[label, str(f)] for label, f in d.discharged],
        [sym(":premises")] + prems,
    ]


def from_sexp(x, where: str = ""):
    where = where or "/"
    if isinstance(x, list) and len(x) == 3 and is_sym(x[0], "hyp"):
        if not isinstance(x[1], int) or x[1] < 0:
            raise FormatError(f"{where}: assumption label must be a natural number")
        return Hyp(_formula(x[2], where), x[1])
    if not (isinstance(x, list) and len(x) >= 2 and is_sym(x[0], "nd") and is_sym(x[1])):
        raise FormatError(f"{where}: expected (nd <tag> ...) or (hyp <label> <formula>)")
    try:
        sections = keyword_sections(x[2:])
    except SexpError as exc:
        raise FormatError(f"{where}: {exc}") from None
    if "conclusion" not in sections:
        raise FormatError(f"{where}: missing :conclusion")
    principal, witness = params_from_sexp(sections.get("params", []), where)
    conclusion = _formula(_single(sections["conclusion"], where), where)
    discharged = []
    for item in sections.get("discharge", []):
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], int) and item[0] >= 0):
            raise FormatError(f"{where}: discharge entries are (<label> <formula>)")
        discharged.append((item[0], _formula(item[1], where)))
    prems = []
    for n, p in enumerate(sections.get("premises", [])):
        sub = f"{where.rstrip('/')}/{n}"
        if isinstance(p, list) and p and is_sym(p[0], "omega"):
            prems.append(family_from_sexp(p, from_sexp, sub))
        else:
            prems.append(from_sexp(p, sub))
    return NdNode(x[1].name, conclusion, tuple(prems), tuple(discharged), principal, witness)


def dump_nd(d) -> str:
    return dumps(to_sexp(canonical_vars(d))) + "\n"


def load_nd(text: str):
    try:
        form = load_one(text)
    except SexpError as exc:
        raise FormatError(str(exc)) from None
    return from_sexp(form)


def load_nds(text: str) -> list:
    try:
        forms = loads(text)
    except SexpError as exc:
        raise FormatError(str(exc)) from None
    return [from_sexp(f) for f in forms]

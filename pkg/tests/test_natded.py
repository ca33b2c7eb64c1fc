import pytest

from proofkit.calculi.io import FormatError
from proofkit.calculi.tree import Family, canonical_vars
from proofkit.corpus import detour_corpus
from proofkit.natded import (
    AND_E1,
    AND_I,
    EXP,
    F_E,
    F_I,
    G_E,
    G_I,
    IMP_E,
    IMP_I,
    NEG_I,
    Hyp,
    LabelSource,
    NdNode,
    check_nd,
    dump_nd,
    freshen,
    is_normal,
    load_nd,
    load_nds,
    maximum_formulas,
    open_assumptions,
    substitute,
)
from proofkit.syntax import And, F, G, Imp, Index, Neg, Var, parse_formula, shift

p, q = Var("p"), Var("q")


def test_golden_proofs_check_and_are_normal(golden):
    for name, d in golden.items():
        report = check_nd(d)
        assert report.ok, (name, report.summary())
        assert is_normal(d), name
        assert open_assumptions(d) == frozenset(), name


def test_golden_end_formulas(golden):
    assert golden["imp_dneg"].conclusion == parse_formula("p -> ~~p")
    assert golden["dneg_imp_self"].conclusion == parse_formula("~~(p -> p)")
    assert golden["excluded_middle"].conclusion == parse_formula("~p \\/ p")


def test_golden_proofs_generalize():
    from proofkit.corpus import imp_dneg

    a = parse_formula("G (q -> X p)")
    d = imp_dneg(a)
    assert check_nd(d)
    assert d.conclusion == Imp(a, Neg(Neg(a)))


# -- assumptions and discharge


def test_open_assumption():
    d = NdNode(IMP_E, q, (Hyp(Imp(p, q), 1), Hyp(p, 2)))
    assert check_nd(d)
    assert open_assumptions(d) == {Imp(p, q), p}


def test_vacuous_discharge_allowed():
    d = NdNode(IMP_I, Imp(q, Imp(p, q)), (NdNode(IMP_I, Imp(p, q), (Hyp(q, 1),), ((2, p),)),), ((1, q),))
    assert check_nd(d)
    assert open_assumptions(d) == frozenset()


def test_discharge_formula_mismatch():
    d = NdNode(IMP_I, Imp(p, p), (Hyp(p, 1),), ((1, q),))
    assert not check_nd(d)


def test_label_reused_for_two_formulas_is_rejected():
    # one label standing for p and q at once
    d = NdNode(AND_I, And(p, q), (Hyp(p, 1), Hyp(q, 1)))
    assert not check_nd(d)


def test_wrong_conclusion():
    d = NdNode(AND_E1, q, (Hyp(And(p, q), 1),))
    report = check_nd(d)
    assert not report.ok and report.violations


def test_g_elim_witness():
    d = NdNode(G_E, shift(p, 3), (Hyp(G(p), 1),), witness=3)
    assert check_nd(d)
    assert not check_nd(NdNode(G_E, shift(p, 2), (Hyp(G(p), 1),), witness=3))


def test_g_intro_family_with_free_assumption_var_is_rejected():
    # the family variable may not occur in an open assumption
    j = Index.var("j")
    tail = Hyp(shift(p, j), 1)
    d = NdNode(G_I, G(p), (Family("j", (), tail),))
    assert not check_nd(d)


def test_f_elim():
    j = Index.var("j")
    tail = NdNode(F_I, F(q), (NdNode(IMP_E, shift(q, j + 1), (Hyp(G(Imp(p, shift(q, 1))), 9), Hyp(shift(p, j), 2))),), witness=j + 1)
    # G-E is needed to get X^j (p -> X q) from G(p -> X q); build it properly
    inner = NdNode(G_E, shift(Imp(p, shift(q, 1)), j), (Hyp(G(Imp(p, shift(q, 1))), 9),), witness=j)
    tail = NdNode(F_I, F(q), (NdNode(IMP_E, shift(q, j + 1), (inner, Hyp(shift(p, j), 2))),), witness=j + 1)
    d = NdNode(F_E, F(q), (Hyp(F(p), 1), Family("j", (), tail)), ((2, shift(p, j)),))
    report = check_nd(d)
    assert report.ok, report.summary()
    assert open_assumptions(d) == {F(p), G(Imp(p, shift(q, 1)))}
    assert report.uses_omega


# -- substitution and labels


def test_substitute_freshens_discharges():
    # replace assumption 1 (p) in  [p]^1 and (q -> q)  by an open derivation of p
    inner = NdNode(IMP_I, Imp(q, q), (Hyp(q, 2),), ((2, q),))
    d = NdNode(AND_I, And(p, Imp(q, q)), (Hyp(p, 1), inner))
    replacement = NdNode(AND_E1, p, (Hyp(And(p, q), 2),))
    out = substitute(d, 1, replacement, LabelSource(d, replacement))
    assert check_nd(out)
    assert open_assumptions(out) == {And(p, q)}


def test_freshen_preserves_checkability(golden):
    for d in golden.values():
        out = freshen(d, LabelSource(d))
        assert check_nd(out)
        assert out.conclusion == d.conclusion


# -- maximum formulas


def test_detours_are_not_normal():
    cases = detour_corpus(per_proof=2)
    assert cases
    for name, d in cases:
        assert check_nd(d), name
        assert not is_normal(d), name
        assert maximum_formulas(d)


def test_exp_conclusion_is_maximum_when_major():
    d = NdNode(AND_E1, p, (NdNode(EXP, And(p, q), (Hyp(Neg(q), 1), Hyp(q, 2))),))
    assert check_nd(d)
    assert not is_normal(d)


def test_neg_i_either_order():
    a, na = p, Neg(p)
    left = NdNode(EXP, na, (Hyp(na, 2), Hyp(a, 1)))
    right = NdNode(EXP, a, (Hyp(na, 2), Hyp(a, 1)))
    for prem in [(left, right), (right, left)]:
        d = NdNode(NEG_I, Neg(na), prem, ((2, na),), principal=na)
        assert check_nd(d)


# -- file format


def test_io_roundtrip(golden):
    for d in golden.values():
        assert load_nd(dump_nd(d)) == canonical_vars(d)
    cases = [d for _, d in detour_corpus(per_proof=1)]
    text = "".join(dump_nd(d) for d in cases)
    assert load_nds(text) == [canonical_vars(d) for d in cases]


@pytest.mark.parametrize("text", ["(nd", "(rule init)", "(hyp x \"p\")", '(nd imp-I (:params) (:conclusion "p") (:discharge (1)) (:premises))'])
def test_io_errors(text):
    with pytest.raises(FormatError):
        load_nd(text)

import pytest

from proofkit.calculi.constructions import instantiate_schema
from proofkit.calculi.tree import Family
from proofkit.corpus import case7_instances, case10_instances, detour_corpus
from proofkit.natded import (
    AND_E1,
    AND_E2,
    AND_I,
    EXM,
    EXP,
    F_E,
    F_I,
    G_E,
    IMP_E,
    IMP_I,
    NEG_I,
    OR_E,
    OR_I1,
    OR_I2,
    Hyp,
    NdNode,
    check_nd,
    is_normal,
    open_assumptions,
)
from proofkit.reduce import Redex, ReductionError, classify, find_redexes, reduce_at, reduce_to_normal
from proofkit.syntax import And, F, G, Imp, Index, Neg, Or, Var, shift

p, q, r, s = (Var(x) for x in "pqrs")


def step(d, case):
    """Reduce the unique redex of ``d`` (at the root) and check the result."""
    assert check_nd(d), check_nd(d).summary()
    assert classify(d) == case
    out = reduce_at(d, Redex((), case))
    assert check_nd(out), check_nd(out).summary()
    assert out.conclusion == d.conclusion
    assert open_assumptions(out) <= open_assumptions(d)
    return out


def test_case1_imp():
    intro = NdNode(IMP_I, Imp(p, And(p, p)), (NdNode(AND_I, And(p, p), (Hyp(p, 1), Hyp(p, 1))),), ((1, p),))
    d = NdNode(IMP_E, And(p, p), (intro, Hyp(p, 7)))
    assert step(d, 1) == NdNode(AND_I, And(p, p), (Hyp(p, 7), Hyp(p, 7)))


def test_case2_elim_over_exp():
    exp = NdNode(EXP, And(p, q), (Hyp(Neg(r), 1), Hyp(r, 2)))
    d = NdNode(AND_E1, p, (exp,))
    assert step(d, 2) == NdNode(EXP, p, (Hyp(Neg(r), 1), Hyp(r, 2)))


def _neg_i():
    """``~p`` from ``[p]^1`` with contradiction ``~q`` / ``q``; open ``~q`` and ``p -> q``."""
    hq = NdNode(IMP_E, q, (Hyp(Imp(p, q), 3), Hyp(p, 1)))
    return NdNode(NEG_I, Neg(p), (Hyp(Neg(q), 2), hq), ((1, p),), principal=Neg(q))


def test_case3_exp_over_neg_i():
    d = NdNode(EXP, r, (_neg_i(), Hyp(p, 4)))
    expected = NdNode(EXP, r, (Hyp(Neg(q), 2), NdNode(IMP_E, q, (Hyp(Imp(p, q), 3), Hyp(p, 4)))))
    assert step(d, 3) == expected


def test_case4_exp_over_neg_i_minor_conclusion():
    d = NdNode(EXP, p, (_neg_i(), Hyp(p, 4)))
    assert step(d, 4) == Hyp(p, 4)


def test_case5_elim_over_exm():
    exm = NdNode(EXM, And(p, q), (Hyp(And(p, q), 5), Hyp(And(p, q), 5)), ((1, Neg(r)), (2, r)), principal=Neg(r))
    d = NdNode(AND_E2, q, (exm,))
    out = step(d, 5)
    branch = NdNode(AND_E2, q, (Hyp(And(p, q), 5),))
    assert out == NdNode(EXM, q, (branch, branch), exm.discharged, Neg(r))


def test_case5_minor_with_discharge_is_relabelled():
    # or-E consumer: both branch copies discharge, the second copy gets fresh labels
    exm = NdNode(EXM, Or(p, q), (Hyp(Or(p, q), 5), Hyp(Or(p, q), 5)), ((1, Neg(r)), (2, r)), principal=Neg(r))
    d = NdNode(OR_E, Or(q, p), (exm, NdNode(OR_I2, Or(q, p), (Hyp(p, 3),)), NdNode(OR_I1, Or(q, p), (Hyp(q, 4),))), ((3, p), (4, q)))
    out = step(d, 5)
    left, right = out.premises
    assert left.discharged == ((3, p), (4, q))
    assert {l for l, _ in right.discharged}.isdisjoint({1, 2, 3, 4, 5})


def test_case6_exp_over_exm_minor_conclusion():
    exm = NdNode(EXM, Neg(p), (Hyp(Neg(p), 5), Hyp(Neg(p), 5)), ((1, Neg(r)), (2, r)), principal=Neg(r))
    d = NdNode(EXP, p, (exm, Hyp(p, 6)))
    assert step(d, 6) == Hyp(p, 6)


def test_exp_over_exm_general_conclusion_is_case5():
    exm = NdNode(EXM, Neg(p), (Hyp(Neg(p), 5), Hyp(Neg(p), 5)), ((1, Neg(r)), (2, r)), principal=Neg(r))
    d = NdNode(EXP, q, (exm, Hyp(p, 6)))
    out = step(d, 5)
    assert out.rule == EXM and all(b.rule == EXP for b in out.premises)


def test_case8_or():
    intro = NdNode(OR_I2, Or(p, q), (Hyp(q, 9),))
    d = NdNode(OR_E, q, (intro, NdNode(EXP, q, (Hyp(Neg(p), 4), Hyp(p, 1))), Hyp(q, 2)), ((1, p), (2, q)))
    assert step(d, 8) == Hyp(q, 9)


def test_case9_elim_over_or_e():
    ore = NdNode(OR_E, And(p, q), (Hyp(Or(r, s), 1), Hyp(And(p, q), 5), Hyp(And(p, q), 6)), ((2, r), (3, s)))
    d = NdNode(AND_E1, p, (ore,))
    out = step(d, 9)
    assert out == NdNode(
        OR_E, p,
        (Hyp(Or(r, s), 1), NdNode(AND_E1, p, (Hyp(And(p, q), 5),)), NdNode(AND_E1, p, (Hyp(And(p, q), 6),))),
        ((2, r), (3, s)),
    )


def test_case11_f():
    j = Index.var("j")
    intro = NdNode(F_I, F(p), (Hyp(shift(p, 2), 9),), witness=2)
    tail = NdNode(F_I, F(p), (Hyp(shift(p, j), 1),), witness=j)
    d = NdNode(F_E, F(p), (intro, Family("j", (), tail)), ((1, shift(p, j)),))
    assert step(d, 11) == NdNode(F_I, F(p), (Hyp(shift(p, 2), 9),), witness=2)


def _fe_major():
    """``F-E`` concluding ``p /\\ q`` from ``F r`` with open ``G(p /\\ q)``."""
    j = Index.var("j")
    tail = NdNode(G_E, And(p, q), (Hyp(G(And(p, q)), 3),), witness=0)
    return NdNode(F_E, And(p, q), (Hyp(F(r), 1), Family("j", (), tail)), ((2, shift(r, j)),))


def test_case12_elim_over_f_e():
    d = NdNode(AND_E1, p, (_fe_major(),))
    assert find_redexes(d) == []
    out = step(d, 12)
    assert out.rule == F_E
    assert out.premises[1].tail.rule == AND_E1


def test_stale_redex():
    d = NdNode(AND_E1, p, (NdNode(EXP, And(p, q), (Hyp(Neg(r), 1), Hyp(r, 2))),))
    with pytest.raises(ReductionError):
        reduce_at(d, Redex((), 7))
    with pytest.raises(ReductionError):
        reduce_at(d, Redex(("0", "0"), 2))


def test_leftmost_innermost_order():
    inner = NdNode(AND_E1, And(p, q), (NdNode(AND_I, And(And(p, q), r), (Hyp(And(p, q), 1), Hyp(r, 2))),))
    outer = NdNode(AND_E1, p, (NdNode(AND_I, And(p, p), (NdNode(AND_E1, p, (inner,)), Hyp(p, 3))),))
    assert check_nd(outer)
    paths = [x.path for x in find_redexes(outer)]
    assert paths == [("0", "0", "0"), ()]


# -- structural oracles for cases 7 and 10


def test_case7_oracle():
    for d, expected in case7_instances(50):
        assert check_nd(d)
        assert reduce_at(d, Redex((), 7)) == expected


def test_case10_oracle():
    for d, tail, k in case10_instances(50):
        assert check_nd(d)
        assert reduce_at(d, Redex((), 10)) == instantiate_schema(tail, "j", k)


# -- the driver


def test_reduce_to_normal_on_detours():
    for name, d in detour_corpus(per_proof=2):
        trace = reduce_to_normal(d, 1000)
        assert trace.terminated_normal, name
        final = trace.final(d)
        assert is_normal(final) and check_nd(final)
        assert final.conclusion == d.conclusion


def test_reduce_to_normal_fuel():
    _, d = detour_corpus(per_proof=1, max_detours=3)[0]
    need = len(reduce_to_normal(d, 1000).steps)
    short = reduce_to_normal(d, need - 1)
    assert len(short.steps) == need - 1 and not short.terminated_normal
    assert reduce_to_normal(d, 0).steps == []


def test_trace_json_counts():
    import json

    _, d = detour_corpus(per_proof=1)[0]
    trace = reduce_to_normal(d)
    data = json.loads(trace.to_json())
    assert len(data) == len(trace.steps)
    assert [e["case_id"] for e in data] == [r.case_id for r, _ in trace.steps]

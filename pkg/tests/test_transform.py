import random

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from proofkit.calculi import LT, SLT, check, cut_count, derive_identity, is_cut_free
from proofkit.calculi.tree import Sequent
from proofkit.corpus import (
    SltGenerator,
    detour_corpus,
    lt_cut_corpus,
    lt_cutfree_corpus,
    slt_corpus,
    slt_cut_corpus,
    slt_cutfree_corpus,
    slt_excluded_middle,
)
from proofkit.natded import check_nd, is_normal, open_assumptions
from proofkit.syntax import Neg, contradiction, parse_formula
from proofkit.transform import (
    DEFAULT_FUEL,
    FuelExhausted,
    TranslationError,
    cut_eliminate_lt,
    cut_eliminate_slt,
    default_fuel,
    lt_cutfree_to_slt_cutfree,
    negate_all,
    nlt_to_slt,
    normalize_indirect,
    slt_cutfree_to_nd_normal,
    slt_to_lt,
)


def ok(d, calculus):
    report = check(d, calculus)
    assert report.ok, report.summary()
    return report


# -- ND to SLT


def test_nlt_to_slt_golden(golden):
    for name, d in golden.items():
        s = nlt_to_slt(d)
        ok(s, SLT)
        assert s.conclusion == Sequent.of(open_assumptions(d), [d.conclusion]), name


def test_nlt_to_slt_detours_inserts_cuts():
    for name, d in detour_corpus(per_proof=2):
        s = nlt_to_slt(d)
        ok(s, SLT)
        assert s.conclusion.goal == d.conclusion
        assert cut_count(s) > 0, name


# -- SLT and LT


def test_slt_to_lt():
    for d in slt_corpus(30) + [slt_excluded_middle()]:
        lt = slt_to_lt(d)
        ok(lt, LT)
        assert lt.conclusion == d.conclusion


def test_lt_cutfree_to_slt_cutfree():
    for d in lt_cutfree_corpus(30):
        s = lt_cutfree_to_slt_cutfree(d)
        assert ok(s, SLT).cut_count == 0
        c = d.conclusion
        assert s.conclusion == Sequent(negate_all(c.succ) | c.ante, frozenset())


def test_negation_sits_outside_the_prefix():
    lt = slt_to_lt(derive_identity(parse_formula("G p"), 2, (), SLT))
    s = lt_cutfree_to_slt_cutfree(lt)
    assert Neg(parse_formula("X X G p")) in s.conclusion.ante


def test_lt_to_slt_rejects_cuts():
    d = next(x for x in lt_cut_corpus(10) if cut_count(x))
    with pytest.raises(TranslationError):
        lt_cutfree_to_slt_cutfree(d)


# -- SLT to ND


def test_slt_cutfree_to_nd_normal():
    for d in slt_cutfree_corpus(40):
        e = slt_cutfree_to_nd_normal(d)
        assert check_nd(e), check_nd(e).summary()
        assert is_normal(e)
        goal = d.conclusion.goal
        assert e.conclusion == (goal if goal is not None else contradiction("p"))
        assert open_assumptions(e) <= d.conclusion.ante


def test_bottom_variable_is_configurable():
    from proofkit.calculi.constructions import logical
    from proofkit.calculi.tree import INIT, NEG_LEFT, Derivation

    p = parse_formula("p")
    empty = logical(SLT, NEG_LEFT, Neg(p), {p}, (), [Derivation(INIT, Sequent.of([p, Neg(p)], [p]), (), p)])
    e = slt_cutfree_to_nd_normal(empty, variable="z")
    assert e.conclusion == contradiction("z")
    assert check_nd(e)


def test_slt_to_nd_rejects_cuts(golden):
    with pytest.raises(TranslationError):
        slt_cutfree_to_nd_normal(nlt_to_slt(golden["imp_dneg"]))


# -- cut elimination


def test_cut_eliminate_lt():
    corpus = lt_cut_corpus(40)
    assert sum(cut_count(d) > 0 for d in corpus) >= 20
    for d in corpus:
        out = cut_eliminate_lt(d)
        assert ok(out, LT).cut_count == 0
        assert out.conclusion == d.conclusion


def test_cut_eliminate_slt():
    for d in slt_cut_corpus(20):
        out = cut_eliminate_slt(d)
        assert ok(out, SLT).cut_count == 0
        assert out.conclusion == d.conclusion


def test_fuel_exhaustion():
    d = next(x for x in lt_cut_corpus(20) if cut_count(x) >= 2)
    with pytest.raises(FuelExhausted):
        cut_eliminate_lt(d, fuel=1)


def test_fuel_env(monkeypatch):
    assert DEFAULT_FUEL == 100_000
    monkeypatch.delenv("PROOFKIT_FUEL", raising=False)
    assert default_fuel() == DEFAULT_FUEL
    monkeypatch.setenv("PROOFKIT_FUEL", "7")
    assert default_fuel() == 7


def test_cut_free_input_is_untouched_by_lt_elimination():
    d = next(x for x in lt_cutfree_corpus(5))
    assert is_cut_free(d)
    assert cut_eliminate_lt(d).conclusion == d.conclusion


# -- the indirect pipeline


def test_normalize_indirect(golden):
    cases = list(golden.items()) + detour_corpus(per_proof=2)
    for name, d in cases:
        e = normalize_indirect(d)
        assert check_nd(e), name
        assert is_normal(e), name
        assert e.conclusion == d.conclusion
        assert open_assumptions(e) <= open_assumptions(d)


@given(st.integers(0, 10_000), st.booleans())
@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_round_trip_property(seed, exm):
    rng = random.Random(seed)
    d = SltGenerator(rng, exm=exm, cuts=True)(3)
    ok(d, SLT)
    free = cut_eliminate_slt(d)
    assert ok(free, SLT).cut_count == 0 and free.conclusion == d.conclusion
    e = slt_cutfree_to_nd_normal(free)
    assert check_nd(e) and is_normal(e)
    assert open_assumptions(e) <= d.conclusion.ante

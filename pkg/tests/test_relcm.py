from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from relcoh import (NEG_INF, DegenerateModule, HypothesisFailure, Ideal, ModulePresentation, MonomialIdeal,
                    NotInIdeal, Ring, SearchConfig, UnsupportedInput, WrongLength, ara_bounds, cd,
                    corollary34_check, dr_injectivity, find_rsop, grade, is_rcm, is_rsop, lemma26_check,
                    radical_equal, theorem32_check)
from relcoh.relcm import candidate_pool, determinant, grade_by_search, monomial_radical

XZ = Ring(["x", "z"])
XYZ = Ring(["x", "y", "z"])


def mp(ring, a, c=()):
    return ModulePresentation(Ideal(ring, [ring(g) for g in a]), Ideal(ring, [ring(g) for g in c]))


TRIANGLE = ["x*y", "x*z", "y*z"]


def test_cd_examples():
    assert cd(mp(XZ, ["x"])) == 1
    assert cd(mp(XYZ, ["x", "y", "z"])) == 3
    assert cd(mp(XZ, ["x"], ["x"])) == 0
    assert cd(mp(XZ, ["x"], ["x - 1"])) == NEG_INF


def test_cd_detects_monomial_radical():
    R = Ring(["x", "y"])
    I = Ideal(R, [R("x^2"), R("y^2 + x*y")])
    assert monomial_radical(I) == MonomialIdeal(2, [(1, 0), (0, 1)])
    assert cd(ModulePresentation(I)) == 2
    assert monomial_radical(Ideal(R, [R("x + y^2")])) is None
    with pytest.raises(UnsupportedInput):
        cd(ModulePresentation(Ideal(R, [R("x + y^2")])))


def test_grade_examples():
    assert grade(mp(Ring(["x", "y"]), ["x", "y"])) == 2
    assert grade(mp(XZ, ["x"], ["x*z"])) == 0
    assert grade(mp(XYZ, TRIANGLE)) == 2


def test_is_rsop_examples():
    assert is_rsop([XZ("x")], mp(XZ, ["x"])).verdict
    assert not is_rsop([XZ("z*x")], mp(XZ, ["x"])).verdict
    seq = [XYZ("y*(1-x)"), XYZ("z*(1-x)"), XYZ("x")]
    assert is_rsop(seq, mp(XYZ, ["x", "y", "z"])).verdict


def test_is_rsop_errors():
    with pytest.raises(WrongLength):
        is_rsop([XZ("x"), XZ("x^2")], mp(XZ, ["x"]))
    with pytest.raises(NotInIdeal):
        is_rsop([XZ("z")], mp(XZ, ["x"]))
    with pytest.raises(DegenerateModule):
        is_rsop([], mp(XZ, ["x"], ["x + 1"]))


def test_is_rsop_records_graded_conditions():
    r = is_rsop([XYZ("x*y"), XYZ("z*(x+y)")], mp(XYZ, TRIANGLE))
    assert r.verdict and r.condition_ii is None
    r = is_rsop([XYZ("x"), XYZ("y"), XYZ("z")], mp(XYZ, ["x", "y", "z"]))
    assert r.condition_iii == [2, 1, 0] and r.condition_ii == [True, True, True]


def test_ara_examples():
    assert (ara_bounds(mp(XZ, ["x"])).lower, ara_bounds(mp(XZ, ["x"])).upper) == (1, 1)
    tri = ara_bounds(mp(XYZ, TRIANGLE))
    assert (tri.lower, tri.upper) == (2, 2)
    assert radical_equal(Ideal(XYZ, tri.certificate), Ideal(XYZ, [XYZ(g) for g in TRIANGLE]))
    assert tri.exact
    full = ara_bounds(mp(XYZ, ["x", "y", "z"]))
    assert (full.lower, full.upper) == (3, 3)


def test_triangle_certificate_is_the_expected_pair():
    tri = ara_bounds(mp(XYZ, TRIANGLE))
    assert sorted(map(str, tri.certificate)) == sorted(["x*y", "x*z + y*z"])


def test_find_rsop_examples():
    assert find_rsop(mp(XZ, ["x"])) == [XZ("x")]
    found = find_rsop(mp(XYZ, TRIANGLE))
    assert is_rsop(found, mp(XYZ, TRIANGLE)).verdict
    assert find_rsop(mp(XZ, ["x"], ["x"])) == []


def test_candidate_pool_is_ordered_by_cost():
    pool = candidate_pool(Ideal(XYZ, [XYZ(g) for g in TRIANGLE]), SearchConfig())
    costs = [c for c, _ in pool]
    assert costs == sorted(costs)
    assert costs[:3] == [0, 0, 0]


def test_is_rcm_examples():
    tri = is_rcm(mp(XYZ, TRIANGLE))
    assert (tri.grade, tri.cd, tri.is_rcm, tri.rsop_regular) == (2, 2, True, True)
    assert not is_rcm(mp(XZ, ["x"], ["x*z"])).is_rcm
    assert is_rcm(mp(XZ, ["x"])).is_rcm


def test_theorem32_examples():
    seq = ["y*(1-x)", "z*(1-x)", "x"]
    rep = theorem32_check(mp(XYZ, ["x", "y", "z"]), candidates=[[XYZ(s) for s in seq]])
    assert rep.condition_ii is False and rep.consistent
    assert rep.counterexamples[0]["fails_at"] == 2 and rep.counterexamples[0]["kind"] == "expected"
    tri = theorem32_check(mp(XYZ, TRIANGLE))
    assert tri.condition_i and tri.condition_iii and tri.consistent
    bad = theorem32_check(mp(XZ, ["x"], ["x*z"]))
    assert bad.condition_i is False and bad.condition_iii is False


def test_theorem32_is_seed_reproducible():
    a = theorem32_check(mp(XYZ, TRIANGLE), samples=6, seed=4).as_dict()
    b = theorem32_check(mp(XYZ, TRIANGLE), samples=6, seed=4).as_dict()
    assert a == b


def test_corollary34_examples():
    R2 = Ring(["x", "y"])
    assert corollary34_check(mp(R2, ["x", "y"]), [R2("x"), R2("y")]).ok
    rep = corollary34_check(mp(XYZ, ["x", "y", "z"]), [XYZ("x"), XYZ("y"), XYZ("z")])
    assert rep.ok and [s.cd for s in rep.steps] == [2, 1, 0]
    rep = corollary34_check(mp(XZ, ["x*z"]), [XZ("x*z")])
    assert rep.ok and rep.steps[0].cd == 0
    with pytest.raises(HypothesisFailure):
        corollary34_check(mp(XZ, ["x"], ["x*z"]), [XZ("x")])


def test_lemma26_examples():
    r = lemma26_check(Ideal(XZ, [XZ("x")]), Ideal.zero(XZ), XZ("x"))
    assert r.hypothesis and r.h1_zero and r.radicals_equal
    r = lemma26_check(Ideal(XZ, [XZ("x")]), Ideal.zero(XZ), XZ("z*x"))
    assert r.h1_zero is False and r.radicals_equal is False and r.consistent
    r = lemma26_check(Ideal(XZ, [XZ("x")]), Ideal(XZ, [XZ("x")]), XZ("x"))
    assert not r.hypothesis


def test_dr_examples():
    x, z = XZ.gens()
    zero = Ideal.zero(XZ)
    assert dr_injectivity([x], [[z]], zero)
    assert dr_injectivity([x, z], [[1, 0], [0, 1]], zero)
    assert dr_injectivity([x], [[x]], zero)
    with pytest.raises(HypothesisFailure):
        dr_injectivity([x], [[0]], zero)
    assert determinant([[x, z], [z, x]]) == x * x - z * z


def test_grade_search_methods():
    s = grade_by_search(mp(XYZ, TRIANGLE))
    assert s.length == 2 and s.certified
    assert s.methods[0] == "prime-avoidance"


# -- invariants on seeded monomial instances

def _instances(seed, count):
    rng = random.Random(seed)
    names = "xyzw"
    out = []
    while len(out) < count:
        n = rng.randint(2, 4)
        R = Ring(list(names[:n]))
        a = [R.monomial([rng.randint(0, 1) for _ in range(n)]) for _ in range(rng.randint(1, 3))]
        c = [R.monomial([rng.randint(0, 2) for _ in range(n)]) for _ in range(rng.randint(0, 2))]
        a = [g for g in a if not g.is_constant()]
        c = [g for g in c if not g.is_constant()]
        if not a:
            continue
        m = ModulePresentation(Ideal(R, a), Ideal(R, c))
        if not m.is_degenerate():
            out.append(m)
    return out


@pytest.mark.parametrize("m", _instances(1, 20), ids=str)
def test_rcm_report_consistency(m):
    r = is_rcm(m)
    assert r.grade <= r.cd == r.ara_lower <= r.ara_upper
    assert r.is_rcm == (r.grade == r.cd)
    # Lemma 2.2: an Rs.o.p is found exactly when the bounds meet
    found = find_rsop(m)
    if r.ara_lower == r.ara_upper:
        assert found is not None
    if found is not None:
        assert is_rsop(found, m).verdict


@pytest.mark.parametrize("m", _instances(2, 12), ids=str)
def test_rsop_invariant_under_permutations_and_powers(m):
    found = find_rsop(m)
    if not found:
        return
    base = is_rsop(found, m).verdict
    for perm in itertools.permutations(found):
        assert is_rsop(list(perm), m).verdict == base
        powered = [f ** (k % 3 + 1) for k, f in enumerate(perm)]
        assert is_rsop(powered, m).verdict == base


@pytest.mark.parametrize("m", _instances(3, 12), ids=str)
def test_lemma25_tail_of_rsop(m):
    """The cd of each prefix quotient drops by one and the tail is an Rs.o.p of it."""
    found = find_rsop(m)
    if not found:
        return
    c = len(found)
    for i in range(1, c + 1):
        q = m.quotient(found[:i])
        assert cd(q) == c - i
        if i < c:
            assert is_rsop(found[i:], q).verdict


@settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(0, 10_000))
def test_grade_at_most_cd_random(seed):
    for m in _instances(seed, 2):
        assert grade(m) <= cd(m)

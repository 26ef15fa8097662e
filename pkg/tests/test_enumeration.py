from fractions import Fraction

import pytest

from drgfeas.core import parse_array
from drgfeas.enumeration import (
    Constraints,
    GenerationLimitExceeded,
    enumerate_arrays,
)
from drgfeas.feasibility import (
    CHECK_IDS,
    FAIL,
    INTEGRALITY,
    Evaluation,
    a1_pattern_index,
    is_near_polygon,
    run_check,
)
from drgfeas.spectral import eigenvalues, theta_min_at_most

from oracles import all_arrays


def naive(cons: Constraints):
    """Generate everything, then filter; no pruning at all."""
    out = []
    lo, hi = cons.k_range
    for k in range(lo, hi + 1):
        for arr in all_arrays(cons.D, k):
            if cons.a1 is not None and arr.ai(1) != cons.a1:
                continue
            if cons.c2_max is not None and arr.D >= 2 and arr.c[1] > cons.c2_max:
                continue
            if cons.require_cD_equals_k and arr.c[-1] != arr.k:
                continue
            if cons.require_nonbipartite and not any(arr.a):
                continue
            if cons.structural == "a1-structure" and (arr.ai(1) != 1 or a1_pattern_index(arr) is None):
                continue
            if cons.structural == "near-polygon" and not is_near_polygon(arr):
                continue
            if cons.theta_ratio is not None and not theta_min_at_most(arr, cons.theta_ratio):
                continue
            ev = Evaluation(arr)
            if any(run_check(c, ev).status == FAIL for c in cons.checks):
                continue
            out.append(arr)
    return sorted(out)


HALF = Fraction(1, 2)

CASES = {
    "plain D2": Constraints(D=2, k_range=(2, 12)),
    "plain D3 small": Constraints(D=3, k_range=(2, 7)),
    "a1=0 c2<=5 half": Constraints(D=3, k_range=(2, 12), a1=0, c2_max=5, theta_ratio=HALF, require_nonbipartite=True),
    "integrality D3": Constraints(D=3, k_range=(2, 12), checks=INTEGRALITY),
    "a1-structure D3": Constraints(D=3, k_range=(2, 12), a1=1, structural="a1-structure"),
    "near-polygon D3": Constraints(D=3, k_range=(2, 12), structural="near-polygon"),
    "cD=k D3 ratio": Constraints(D=3, k_range=(2, 12), require_cD_equals_k=True, theta_ratio=Fraction(1, 3)),
    "all checks D2": Constraints(D=2, k_range=(2, 12), checks=CHECK_IDS),
    "all checks D3 half": Constraints(D=3, k_range=(2, 12), theta_ratio=HALF, checks=CHECK_IDS),
    "D1": Constraints(D=1, k_range=(1, 6)),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_pruned_search_equals_naive_filter(name):
    cons = CASES[name]
    res = enumerate_arrays(cons, report_checks=())
    assert list(res.survivors) == naive(cons)


@pytest.mark.parametrize("name", sorted(CASES))
def test_counts_identity(name):
    res = enumerate_arrays(CASES[name], report_checks=())
    c = res.counts
    assert c.generated == c.surviving + sum(c.pruned.values())
    assert c.surviving == len(res.survivors)


def test_jobs_do_not_change_output():
    cons = CASES["a1=0 c2<=5 half"]
    one = enumerate_arrays(cons)
    many = enumerate_arrays(cons, jobs=3)
    assert one.survivors == many.survivors
    assert one.counts == many.counts
    assert [r.checks for r in one.reports] == [r.checks for r in many.reports]


def test_more_constraints_give_a_subset():
    base = set(enumerate_arrays(Constraints(D=3, k_range=(2, 10)), report_checks=()).survivors)
    tighter = [
        Constraints(D=3, k_range=(2, 10), a1=0),
        Constraints(D=3, k_range=(2, 10), c2_max=3),
        Constraints(D=3, k_range=(2, 10), theta_ratio=HALF),
        Constraints(D=3, k_range=(2, 10), checks=INTEGRALITY),
    ]
    for cons in tighter:
        sub = set(enumerate_arrays(cons, report_checks=()).survivors)
        assert sub <= base


def test_generation_limit():
    with pytest.raises(GenerationLimitExceeded) as exc:
        enumerate_arrays(Constraints(D=3, k_range=(2, 20), max_generated=500))
    assert exc.value.limit == 500 and exc.value.generated > 500


@pytest.mark.parametrize(
    "kw",
    [
        dict(D=0, k_range=(2, 3)),
        dict(D=2, k_range=(5, 3)),
        dict(D=2, k_range=(2, None)),
        dict(D=2, k_range=(2, 3), theta_ratio=Fraction(3, 2)),
        dict(D=2, k_range=(2, 3), structural="bogus"),
        dict(D=2, k_range=(2, 3), checks=("nope",)),
        dict(D=2, k_range=(2, 3), rules=("nope",)),
        dict(D=3, k_range=(2, 3), a1=0, structural="a1-structure"),
    ],
)
def test_bad_constraints(kw):
    with pytest.raises(ValueError):
        Constraints(**kw)


def test_srg_cap_of_22_is_enough():
    # every diameter-2 array with theta_min <= -k/2 passing all checks, besides
    # K_{t,t,t}, has k <= 10; 23..40 give nothing new
    wide = Constraints(D=2, k_range=(2, 40), theta_ratio=HALF, require_nonbipartite=True,
                       checks=CHECK_IDS, rules=("srg-second-eigenvalue",))
    res = enumerate_arrays(wide, report_checks=())
    big = [a for a in res.survivors if a.k > 10]
    t_family = [parse_array(f"{2 * t},{t - 1};1,{2 * t}") for t in range(6, 21)]
    assert big == t_family


def test_survivor_reports_use_requested_checks():
    cons = Constraints(D=2, k_range=(2, 6), theta_ratio=HALF)
    res = enumerate_arrays(cons, report_checks=INTEGRALITY)
    for rep in res.reports:
        assert tuple(c.id for c in rep.checks) == INTEGRALITY
    assert res.final == tuple(r.array for r in res.reports if not r.failed)


def test_leaf_rule_srg_second_eigenvalue_keeps_pentagon():
    wide = Constraints(D=2, k_range=(2, 4), theta_ratio=HALF, rules=("srg-second-eigenvalue",))
    res = enumerate_arrays(wide, report_checks=())
    assert parse_array("2,1;1,1") in res.survivors
    # 3x3 grid: theta_1 = 1 passes; the Petersen graph: theta_1 = 1 passes
    assert parse_array("4,2;1,2") in res.survivors
    assert eigenvalues(parse_array("3,2;1,1")).theta_1.exact == 1

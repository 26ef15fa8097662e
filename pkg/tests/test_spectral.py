from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from drgfeas.core import derive_parameters, parse_array
from drgfeas.interval import Interval
from drgfeas.spectral import (
    char_poly,
    count_above,
    eigenvalues,
    krein,
    multiplicity,
    standard_sequence,
    theta_min_at_most,
    trace_square,
)

from oracles import (
    all_arrays,
    intersection_array_of,
    krein_of,
    named_graphs,
    spectrum_of,
    theta_min_float,
)

GRAPHS = named_graphs()


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_spectrum_matches_adjacency_matrix(name):
    g = GRAPHS[name]
    arr = intersection_array_of(g)
    expected = spectrum_of(g)
    spec = eigenvalues(arr)
    assert len(spec.eigenvalues) == len(expected) == arr.D + 1
    for theta, m, (ev, em) in zip(spec.eigenvalues, spec.multiplicities, expected):
        assert theta.lo <= ev + 1e-9 and ev - 1e-9 <= theta.hi
        assert m.within(em - 1e-9, em + 1e-9)
    assert spec.n == len(g)


@pytest.mark.parametrize("name", ["petersen", "H(3,3)", "pentagon", "folded 5-cube", "GQ(2,2)", "heawood"])
def test_krein_matches_idempotent_products(name):
    g = GRAPHS[name]
    kr = krein(eigenvalues(intersection_array_of(g)))
    q = krein_of(g)
    d = kr.size
    for i in range(d):
        for j in range(d):
            for h in range(d):
                iv = kr[i, j, h]
                assert iv.lo - 1e-9 <= q[i, j, h] <= iv.hi + 1e-9, (i, j, h)


@pytest.mark.parametrize(
    "text, poly",
    [
        ("3,2;1,1", (6, -5, -2, 1)),  # (x-3)(x-1)(x+2)
        ("2;1", (-2, -1, 1)),
        ("2,1;1,1", (2, -3, -1, 1)),  # (x-2)(x^2+x-1)
    ],
)
def test_char_poly(text, poly):
    assert char_poly(parse_array(text)) == poly


@pytest.mark.parametrize(
    "text, thetas, mults",
    [
        ("3,2;1,1", (3, 1, -2), (1, 5, 4)),
        ("6,4,2;1,2,3", (6, 3, 0, -3), (1, 6, 12, 8)),
        ("4,2;1,2", (4, 1, -2), (1, 4, 4)),
    ],
)
def test_integral_spectra_are_exact(text, thetas, mults):
    spec = eigenvalues(parse_array(text))
    assert spec.all_exact
    assert tuple(t.exact for t in spec.eigenvalues) == thetas
    assert all(m.exact for m in spec.multiplicities)
    assert tuple(int(m.lo) for m in spec.multiplicities) == mults


def test_pentagon_irrational_eigenvalues():
    spec = eigenvalues(parse_array("2,1;1,1"))
    golden = (1 + 5**0.5) / 2
    assert not spec.eigenvalues[1].is_exact
    assert spec.eigenvalues[1].lo <= golden - 1 <= spec.eigenvalues[1].hi
    assert spec.theta_min.lo <= -golden <= spec.theta_min.hi
    for m, want in zip(spec.multiplicities, (1, 2, 2)):
        assert m.within(want - Fraction(1, 10**9), want + Fraction(1, 10**9))


def test_thm64_array_has_minus_five_with_multiplicity_seven():
    arr = parse_array("10,8,3;1,2,10")
    spec = eigenvalues(arr)
    assert spec.n == 63
    assert spec.theta_min.exact == -5
    assert spec.multiplicities[-1].exact and spec.multiplicities[-1].lo == 7


@pytest.mark.parametrize("prec", [Fraction(1, 10**6), Fraction(1, 10**12), Fraction(1, 10**30)])
def test_precision_bounds_interval_width(prec):
    spec = eigenvalues(parse_array("7,6,5;1,2,3"), prec)
    for t in spec.eigenvalues:
        assert t.hi - t.lo <= prec


def test_standard_sequence_examples():
    u = standard_sequence(parse_array("6,4,2;1,2,3"), -3)
    assert u == (Interval(1), Interval(Fraction(-1, 2)), Interval(Fraction(1, 4)), Interval(Fraction(-1, 8)))
    u = standard_sequence(parse_array("3,2;1,1"), -2)
    assert u == (Interval(1), Interval(Fraction(-2, 3)), Interval(Fraction(1, 6)))
    assert multiplicity(parse_array("3,2;1,1"), -2) == Interval(4)
    arr = parse_array("7,6,6;1,1,2")
    assert all(x == Interval(1) for x in standard_sequence(arr, arr.k))
    assert multiplicity(arr, arr.k) == Interval(1)


def test_krein_trivial_row():
    kr = krein(eigenvalues(parse_array("6,5,2;1,1,3")))
    for j in range(kr.size):
        for h in range(kr.size):
            assert kr[0, j, h] == Interval(1 if j == h else 0)
            assert kr[j, 0, h] == kr[0, j, h]


@pytest.mark.parametrize("text, value", [("3,2;1,1", 14), ("2;1", 5), ("6,4,2;1,2,3", 54)])
def test_trace_square(text, value):
    assert trace_square(parse_array(text)) == value


@pytest.mark.parametrize(
    "text, ratio, expected",
    [
        ("3,2;1,1", Fraction(1, 2), True),
        ("6,4,2;1,2,3", Fraction(1, 2), True),  # equality
        ("4,2;1,2", Fraction(2, 3), False),
        ("4,2;1,2", Fraction(1, 2), True),  # -2 = -4/2
        ("2,1;1,1", Fraction(1, 2), True),
    ],
)
def test_theta_min_at_most_examples(text, ratio, expected):
    assert theta_min_at_most(parse_array(text), ratio) is expected


def _small_arrays():
    return [a for D in (2, 3) for k in range(2, 7) for a in all_arrays(D, k)]


SMALL = _small_arrays()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.fractions(min_value=Fraction(1, 10), max_value=Fraction(3, 2), max_denominator=40))
def test_theta_min_at_most_agrees_with_float(arr, ratio):
    tmin = theta_min_float(arr)
    bound = -float(ratio) * arr.k
    if abs(tmin - bound) > 1e-7:
        assert theta_min_at_most(arr, ratio) is (tmin <= bound)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SMALL), st.integers(-30, 30), st.integers(1, 7))
def test_count_above_matches_float(arr, num, den):
    x = Fraction(num, den)
    D = arr.D
    L = np.zeros((D + 1, D + 1))
    for i in range(D + 1):
        L[i, i] = arr.ai(i)
        if i < D:
            L[i, i + 1] = arr.bi(i)
        if i > 0:
            L[i, i - 1] = arr.ci(i)
    vals = np.linalg.eigvals(L).real
    if all(abs(v - float(x)) > 1e-7 for v in vals):
        assert count_above(arr, x) == sum(1 for v in vals if v > float(x))


@pytest.mark.parametrize("arr", SMALL[::7], ids=str)
def test_multiplicities_sum_to_n(arr):
    spec = eigenvalues(arr)
    total = sum((m for m in spec.multiplicities), Interval(0))
    n = derive_parameters(arr).n
    assert total.lo - Fraction(1, 10**6) <= n <= total.hi + Fraction(1, 10**6)

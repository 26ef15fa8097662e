from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from drgfeas.core import (
    ArrayValidationError,
    IntersectionArray,
    derive_parameters,
    format_array,
    parse_array,
)


@pytest.mark.parametrize(
    "text, b, c",
    [
        ("3,2;1,1", (3, 2), (1, 1)),
        ("{6, 4, 2; 1, 2, 3}", (6, 4, 2), (1, 2, 3)),
        (" 2;1 ", (2,), (1,)),
    ],
)
def test_parse_accepts_braces_and_whitespace(text, b, c):
    arr = parse_array(text)
    assert (arr.b, arr.c) == (b, c)
    assert arr.D == len(b) and arr.k == b[0]


@pytest.mark.parametrize(
    "text, invariant",
    [
        ("3,2;", "syntax"),
        ("3,2;1", "syntax"),
        ("abc", "syntax"),
        ("3,0;1,1", "positive"),
        ("3,2;2,1", "c1"),
        ("4,2;1,3", None),  # valid
        ("4,2,1;1,3,2", "c-monotone"),
        ("4,2,3;1,1,2", "b-monotone"),
        ("3,3;1,1", "a-nonnegative"),
        ("3,2;1,4", "a-nonnegative"),
    ],
)
def test_parse_reports_the_violated_invariant(text, invariant):
    if invariant is None:
        parse_array(text)
        return
    with pytest.raises(ArrayValidationError) as exc:
        parse_array(text)
    assert exc.value.invariant == invariant


def test_intersection_numbers_with_boundary_conventions():
    arr = parse_array("6,4,2;1,2,3")
    assert arr.a == (0, 1, 2, 3)
    assert arr.bi(3) == 0 and arr.ci(0) == 0


def test_ordering_is_by_diameter_then_valency():
    arrs = [parse_array(s) for s in ["6,4,2;1,2,3", "3,2;1,1", "2,1;1,1", "2;1"]]
    assert [format_array(a) for a in sorted(arrs)] == ["2;1", "2,1;1,1", "3,2;1,1", "6,4,2;1,2,3"]


def test_petersen_parameters():
    # k_1 = 3, k_2 = 3*2/1
    p = derive_parameters(parse_array("3,2;1,1"))
    assert p.k_i == (1, 3, 6) and p.n == 10 and p.integral and not p.bipartite


def test_non_integral_valency_is_kept_exactly():
    p = derive_parameters(parse_array("4,2;1,3"))
    assert p.k_i[2] == Fraction(8, 3) and not p.integral


def test_bipartite_detection():
    assert derive_parameters(parse_array("3,2,2;1,1,3")).bipartite  # Heawood


@st.composite
def valid_arrays(draw, max_d=4, max_k=12):
    D = draw(st.integers(1, max_d))
    k = draw(st.integers(2, max_k))
    b, c = [k], [1]
    for i in range(1, D):
        ci = draw(st.integers(c[-1], k))
        bi_max = min(b[-1], k - c[-1]) if i == 1 else min(b[-1], k - c[-1])
        bi = draw(st.integers(1, max(1, min(b[-1], k - c[i - 1]))))
        b.append(bi)
        c.append(ci)
    try:
        return IntersectionArray(b, c)
    except ArrayValidationError:
        from hypothesis import assume

        assume(False)


@given(valid_arrays())
def test_format_parse_round_trip(arr):
    assert parse_array(format_array(arr)) == arr


@given(valid_arrays())
def test_valency_recurrence(arr):
    p = derive_parameters(arr)
    for i in range(arr.D):
        assert p.k_i[i + 1] * arr.c[i] == p.k_i[i] * arr.b[i]
    assert p.n == sum(p.k_i)
    # every a_i >= 0 and b_i + a_i + c_i = k
    assert all(a >= 0 for a in arr.a)
    assert all(arr.ai(i) + arr.bi(i) + arr.ci(i) == arr.k for i in range(arr.D + 1))

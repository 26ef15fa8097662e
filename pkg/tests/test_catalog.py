from importlib import resources

import pytest

from drgfeas.catalog import (
    STATUSES,
    Catalog,
    CatalogError,
    Family,
    default_catalog,
    parse_record,
)
from drgfeas.core import parse_array

from conftest import CLASSIFICATION, classification_arrays


def shipped_text():
    return resources.files("drgfeas").joinpath("data/catalog.txt").read_text("utf-8")


def test_round_trip_is_bit_exact():
    text = shipped_text()
    assert Catalog.loads(text).dumps() == text


def test_every_classified_array_is_catalogued():
    cat = default_catalog()
    for arr in classification_arrays(t_max=12):
        rec = cat.lookup(arr)
        assert rec is not None, arr
        assert rec.status != "nonexistent"


def test_list_counts_by_diameter():
    cat = default_catalog()
    # the D = 3 list adds the two nonexistent arrays met by the a1 = 0 search
    assert len(cat.list(D=3)) == len(CLASSIFICATION[3]) + 2
    assert len(cat.list(D=4)) == len(CLASSIFICATION[4])
    assert len(cat.list(D=2)) == len(CLASSIFICATION[2]) + 1  # plus the K_{t,t,t} family
    assert {r.status for r in cat.records} <= set(STATUSES)


def test_nonexistent_records_carry_sources():
    cat = default_catalog()
    bad = cat.list(status="nonexistent")
    assert {r.array_text for r in bad} == {"5,4,3;1,1,2", "13,12,10;1,3,4"}
    assert all(r.source for r in bad)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("3,2;1,1", "Petersen"),
        ("15,14,12;1,1,9", "Witt"),
        ("6,4,2;1,2,3", "H(3,3)"),
        ("10,8,8,8;1,1,1,5", "GO(2,4)"),
    ],
)
def test_lookup_by_name(text, fragment):
    assert fragment in default_catalog().lookup(parse_array(text)).name


def test_family_lookup_instantiates():
    rec = default_catalog().lookup(parse_array("8,3;1,8"))
    assert rec.name == "complete tripartite graph K_{4,4,4}"
    assert "t = 4" in rec.note
    assert default_catalog().lookup(parse_array("3,2;1,2")) is None


def test_possibly_nonunique_statuses():
    cat = default_catalog()
    for text in ("10,8,8,8;1,1,1,5", "8,6,1;1,3,8", "18,16,16;1,1,9"):
        assert cat.lookup(parse_array(text)).status == "exists-possibly-nonunique"


def test_family_parse_and_members():
    fam = Family.parse("2t,t-1;1,2t (t>=2)")
    assert [str(a) for a in fam.members(4)] == ["4,1;1,4", "6,2;1,6", "8,3;1,8"]
    assert fam.parameter_for(parse_array("10,4;1,10")) == 5
    assert fam.parameter_for(parse_array("3,2;1,1")) is None
    bounded = Family.parse("2t,t-1;1,2t (t>=2, t<=3)")
    assert len(bounded.members(10)) == 2


@pytest.mark.parametrize(
    "line",
    [
        "3,2;1,1 | exists",
        "3,2;1,1 | maybe | x | y",
        "5,4,3;1,1,2 | nonexistent | - | ",
        "2t,t-1;1,2t | exists | x | y",
        "3,2;1 | exists | x | y",
    ],
)
def test_bad_records(line):
    with pytest.raises((CatalogError, ValueError)):
        parse_record(line)


def test_duplicates_rejected():
    with pytest.raises(CatalogError):
        Catalog.loads("3,2;1,1 | exists | a | b\n3,2;1,1 | exists | c | d\n")
    with pytest.raises(CatalogError):
        Catalog.loads("2t,t-1;1,2t (t>=2) | exists | a | b\n6,2;1,6 | exists | c | d\n")


def test_arrays_instantiates_families():
    arrs = default_catalog().arrays(t_max=5, D=2)
    assert parse_array("10,4;1,10") in arrs
    assert parse_array("12,5;1,12") not in arrs
    assert arrs == sorted(arrs)

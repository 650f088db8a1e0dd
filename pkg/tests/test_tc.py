import pytest

from mccool.algebra import CapacityError
from mccool.tc import FORMULA, VERIFIED, GroupId, dimension, tc_lower, tc_report, tc_upper


def test_dimension():
    assert dimension(GroupId("full", 3)) == (2, 2)
    assert dimension(GroupId("plus_quotient", 4)) == (2, 2)
    assert dimension(GroupId("integers")) == (1, 1)
    assert dimension(GroupId("free", 5)) == (1, 1)


def test_group_validation():
    with pytest.raises(ValueError):
        GroupId("full", 1)
    with pytest.raises(ValueError):
        GroupId("torus")


def test_upper():
    assert tc_upper(GroupId("full", 4))[0] == 7
    v, trace = tc_upper(GroupId("plus", 4))
    assert v == 6 and any("product route" in s for s in trace)
    assert tc_upper(GroupId("plus", 2))[0] == 2
    assert tc_upper(GroupId("integers"))[0] == 2
    assert tc_upper(GroupId("free", 3))[0] == 3


def test_lower():
    low = tc_lower(GroupId("full", 3))
    assert (low.value, low.provenance) == (5, VERIFIED)
    assert tc_lower(GroupId("plus", 5)).value == 8
    assert tc_lower(GroupId("plus", 2)).value == 2


def test_lower_beyond_tier():
    with pytest.raises(CapacityError):
        tc_lower(GroupId("full", 6))
    low = tc_lower(GroupId("full", 6), allow_unverified=True)
    assert (low.value, low.provenance) == (11, FORMULA)
    rep = tc_report(GroupId("full", 6), allow_unverified=True)
    assert rep.tc_exact is None and rep.tc_upper == 11


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_full_exact(n):
    rep = tc_report(GroupId("full", n))
    assert rep.tc_exact == 2 * n - 1
    assert rep.passed


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_plus_exact(n):
    rep = tc_report(GroupId("plus", n))
    assert rep.tc_exact == 2 * n - 2
    assert rep.zcl_exact == 2 * n - 3
    assert rep.checks["top_degree_equals_cd"]


def test_small_groups():
    assert tc_report(GroupId("free", 2)).tc_exact == 3
    assert tc_report(GroupId("integers")).tc_exact == 2
    assert tc_report(GroupId("free", 1)).tc_exact == 2
    rep = tc_report(GroupId("plus_quotient", 4))
    assert rep.tc_upper == 5 and rep.tc_exact is None


def test_report_json_fields():
    d = tc_report(GroupId("plus", 4)).to_dict()
    assert d["convention"] == "unreduced"
    assert d["tc_exact"] == 6 and d["zcl_exact"] == 5
    assert d["certificates"][0]["certificate"] == "N"

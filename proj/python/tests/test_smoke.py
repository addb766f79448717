import pytest

import scrolls


def test_quadric_both_oracles():
    assert scrolls.degree(3, [1, 1, 1]) == 2
    assert scrolls.tableau_degree(3, [1, 1, 1]) == 2
    assert scrolls.genus(3, [1, 1, 1]) == 0


def test_elliptic_quintic():
    assert scrolls.degree(4, [2] * 5) == 5
    assert scrolls.genus(4, [2] * 5) == 1
    inv = scrolls.fundamental_invariants(4)
    assert (inv["degree"], inv["genus"], inv["directrix"]) == (5, 1, 3)


def test_fundamental_is_catalan():
    catalan = [2, 5, 14, 42, 132, 429, 1430, 4862]
    for n, expected in zip(range(3, 11), catalan):
        assert scrolls.fundamental_invariants(n)["degree"] == expected


def test_lines_meeting_four_lines():
    assert scrolls.intersection_number([1, 1, 1, 1], 3) == 2


def test_invalid_base_rejected():
    assert not scrolls.validate_base(3, [1, 1, 1, 1])["valid"]
    with pytest.raises(ValueError):
        scrolls.degree(3, [1, 1, 1, 1])


def test_catalog_and_oracle_agreement():
    bases = scrolls.catalog(5)
    assert len(bases) == 8
    for dims in bases:
        assert scrolls.degree(5, dims) == scrolls.tableau_degree(5, dims)


def test_standard_family_spots():
    inv = scrolls.standard_family_invariants(4, [1])
    assert (inv["degree"], inv["genus"]) == (3, 0)
    inv = scrolls.standard_family_invariants(5, [1])
    assert (inv["degree"], inv["genus"]) == (9, 3)


def test_partition_bijection():
    assert scrolls.count_e0_scrolls(10) == 30
    assert len(scrolls.partitions_of(9)) == 30
    base = scrolls.base_from_partition_e0(3, [1, 1])
    assert base["n"] == 7 and sorted(base["dims"]) == [3, 3, 3, 5, 5]


def test_family_formulas():
    res = scrolls.invariants_e0(5, [2, 1])
    assert (res["degree"], res["genus"]) == (16, 3)
    assert res["consistent"]
    assert scrolls.delta_e0(4, [2]) == 8
    assert scrolls.delta_enot0(3, [2, 2]) == 6
    assert scrolls.delta_ege1(4, 1, 1, [0, 1]) == 4


def test_classification():
    verdict = scrolls.classify_g01(g=1, e=-1, m=2)
    assert verdict["incidence"] and sorted(verdict["base"]["dims"]) == [2] * 5
    assert not scrolls.classify_g01(g=0, e=3, m=7)["incidence"]
    quadric = scrolls.decomposable_incidence_test(g=0, e=0, m=1, e_trivial=True)
    assert quadric["verdict"] == "incidence"
    assert sorted(quadric["base"]["dims"]) == [1, 1, 1]


def test_crosscheck_quick():
    report = scrolls.crosscheck("quick")
    assert report["pass"] and report["checks_run"] > 1000
    faulty = scrolls.crosscheck("quick", inject_fault=True)
    assert not faulty["pass"] and faulty["failures"]

import pytest

import heisgrad


def test_enumerate_twisted():
    rep = heisgrad.enumerate_fine(twisted="1,1,zeta(4),zeta(4)")
    assert rep["rejected_l"] == [8]
    assert len(rep["param_types"]) == 7
    groups = sorted(c["group"] for c in rep["classes"])
    assert "Z^5" in groups and "Z^2 x Z_4" in groups


def test_weyl_orders():
    rep = heisgrad.weyl(heisenberg=2)
    g = rep["gradings"][0]
    assert g["closure_order"] == 8 and g["formula_order"] == "8"
    assert heisgrad.weyl_order_heisenberg(4) == 384
    assert heisgrad.weyl_order_super(2, 4, 1) == 32
    assert heisgrad.weyl_order_super(2, 4, 0) == 192
    rep = heisgrad.weyl(twisted=["1", "1", "i", "i"], params="4,1,0;1;", bruteforce=True)
    g = rep["gradings"][0]
    assert g["closure_order"] == g["bruteforce_order"] == 8
    assert g["dihedral_pattern"]


def test_grading_round_trip():
    rep = heisgrad.enumerate_fine(super_km=(1, 3))
    for c in rep["classes"]:
        assert heisgrad.verify_grading(c["grading"])["ok"]
        assert heisgrad.universal_group(c["grading"]) == c["group"]


def test_corrupted_grading():
    g = heisgrad.enumerate_fine(heisenberg=2)["classes"][0]["grading"]
    for c in g["components"]:
        if c["names"] == ["e1"]:
            c["basis"] = [{"e1": "1", "eh2": "1"}]
    r = heisgrad.verify_grading(g)
    assert not r["ok"] and r["failure"] == "bracket"
    assert len(r["witness"]) == 3


def test_groups_and_snf():
    assert heisgrad.canonical_group("Z_2 x Z_3 x Z") == "Z x Z_6"
    U, D, V = heisgrad.smith_normal_form([[2, 4], [6, 8]])
    assert D == [[2, 0], [0, 4]]


def test_errors():
    code, _, err = heisgrad.cli("weyl", "--twisted", "1,zeta(")
    assert code == 2 and "parse" in err
    code, _, _ = heisgrad.cli("weyl", "--twisted", "1,1,i,i", "--params", "2,0,4;;1,1,i,i", "--bruteforce", "--cap", "5")
    assert code == 4
    with pytest.raises(heisgrad.CliError) as e:
        heisgrad.weyl(twisted="1,1,i,i", params="3,0,0")
    assert e.value.code == 3
    with pytest.raises(ValueError):
        heisgrad.canonical_group("Z_x")

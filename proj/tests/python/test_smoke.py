import pytest

import weylflow as wf


def test_central_charges():
    assert wf.central_charge("0") == "2"
    assert wf.central_charge("1/2") == "-1"
    assert wf.central_charge("-1/2") == "11"
    assert wf.central_charge("2") == "26"
    assert wf.central_charge("1/4+1/4i") == wf.central_charge("3/4-1/4i")


def test_classify():
    assert wf.classify("1/2")["tag"] == "OMEGA_VOA"
    assert wf.classify("2")["tag"] == "NOT_OMEGA_GENERATED"
    assert wf.classify("i")["subcase"] == "CASE3_EDGE_IMAG"
    assert wf.classify("0")["omega"] == "INFINITE_FAMILY"


def test_state_grammar_round_trip():
    canon = wf.canonical_state("2/3*a(-2)|0> + i*a(-2)|0>")
    assert wf.canonical_state(canon) == canon
    assert wf.canonical_state("|0>") == "|0>"
    with pytest.raises(ValueError):
        wf.canonical_state("a(0)|0>")  # not a creation word


def test_apply_modes():
    assert wf.apply_modes("a*(0)|0>", "a(0)") == "|0>"
    assert wf.apply_modes("|0>", "L(-2)", mu="0") == "a(-1)a*(-1)|0>"
    assert wf.apply_modes("a(-1)|0>", "L(0)", mu="1/2") == "1/2*a(-1)|0>"
    assert wf.apply_modes("a(-1)a(-1)|0>", "a*(1)") == "-2*a(-1)|0>"


def test_weight_and_basis():
    assert wf.state_weight("a(-1)|0>", "1/2") == "1/2"
    assert wf.state_weight("a(-2)a*(0)|0>", "1/4+1/4i") == "2"
    names = wf.basis("1/2", "1/2")
    assert names == ["|0>", "a*(0)|0>", "a(-1)|0>"]
    with pytest.raises(ValueError):
        wf.basis("2", "1")  # outside the strip


def test_flow_image():
    assert wf.flow_image("a(-1)|0>") == "a*(0)|0>"
    assert wf.flow_image("a*(0)|0>") == "-1*a(-1)|0>"


def test_omega_check():
    assert wf.omega_check("1/3", "|0>")["in_omega_up_to_truncation"]
    out = wf.omega_check("2", "|0>")
    assert not out["in_omega_up_to_truncation"]
    assert out["witness_u"] == "a(-1)|0>"
    assert out["witness_n"] == -1


def test_zhu_certificate():
    report = wf.zhu_certificate("1/3", degcap="3", reportcap="1")
    assert report["dimUpperBound"] == 1
    assert report["cQuotientDim"] == 1
    assert report["reprBasis"] == ["|0>"]
    with pytest.raises(ValueError):
        wf.zhu_certificate("2")  # refused outside the strip


def test_run_suite():
    report = wf.run_suite("flow", "1/3", degcap="2")
    assert report["passed"]
    assert any(line["name"].startswith("c_mu") for line in report["checks"])


def test_tensor_operations():
    assert wf.tensor_central_charge(["1/2", "1/2"]) == "-2"
    assert wf.tensor_classify(["1/3", "2"])["tag"] == "NOT_OMEGA_GENERATED"
    printed = wf.canonical_tensor_state("a(-1)|0> (x) a*(0)|0>", ["1/3", "1/2"])
    assert "(x)" in printed


def test_region_map_svg():
    svg = wf.region_map_svg(step="1/2")
    assert svg.startswith("<svg")
    for region in ("region-outside", "region-strip", "region-diamond"):
        assert region in svg

import sys

import pytest

sys.path.insert(0, __import__("os").environ.get("FACTORLAB_PY_SRC", "."))

import factorlab as fl


def test_parse_roundtrip():
    assert fl.parse("SAT(2)@zmod(6)") == "sat(2) @ zmod(6)"
    assert fl.ast("zmod(6)")["category"] == "ring"
    with pytest.raises(fl.FactorlabError):
        fl.parse("zmod(")


def test_describe_and_classify():
    ring = fl.describe_ring("zmod(6)")
    assert ring["size"] == 6 and ring["units"] == [1, 5]

    rep = fl.classify("zmod(6)", "sat(2)")["report"]
    assert rep["bfm"] is False and rep["presimplifiable"] is False

    field = fl.classify("gf(4)", "units")["report"]
    assert field["ufm"] is True


def test_factorizations_and_split():
    res = fl.factorizations("zmod(6)", "sat(2)", 4, mode="compact")
    assert res["status"] == "complete"
    assert len(res["items"]) >= 1

    verdict = fl.split_check("zmod(6)", "sat(2)")
    assert verdict["splits"] is True


def test_localize():
    loc = fl.localize("zmod(6)", "sat(2)")
    assert loc["size"] == 3
    assert loc["map_injective"] is False


def test_verify_and_hunt():
    summary = fl.verify(max_ring=5, max_module=5)
    assert summary["violations"] == 0
    assert summary["coverage_warnings"] == []

    res = fl.hunt("bfm & !presimplifiable", max_ring=5, max_module=5)
    assert res["exhausted"] and res["witnesses"] == []


def test_axb():
    splits = fl.axb_splits("gf(2)", "gf(4)", 3)
    assert splits["status"] == "holds"

    main = fl.axb_main("gf(2)", "gf(4)", 3)
    assert main["instance"]["unit_index"] == 3

    zq = fl.axb_zq()
    assert zq["status"] == "holds"

    w = fl.nonbfd_witness(5)
    assert w["valid"] and w["k"] == 5

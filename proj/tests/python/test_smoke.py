import json

import pytest

import sandwich_py as sw

SPEC = {
    "group": [2, 2],
    "coverF": {"base_genus": 0, "branch": [{"elem": [0, 1], "mult": 1}, {"elem": [1, 0], "mult": 1},
                                           {"elem": [1, 1], "mult": 3}]},
    "coverD": {"base_genus": 0, "branch": [{"elem": [0, 1], "mult": 8}, {"elem": [1, 0], "mult": 2}]},
}


def test_invariants_nodes():
    r = sw.invariants(SPEC)
    # genera from Riemann-Hurwitz, K^2 and chi from the node formulas
    g_f, g_d, order, t = 2, 7, 4, 32 + 8
    assert r["t_z"] == t
    assert r["K2"] == 2 * (2 * g_f - 2) * (2 * g_d - 2) // order
    assert r["chi"] * order == (g_f - 1) * (g_d - 1) + t // 4
    assert r["p_g"] == 3 and r["q"] == 0
    assert sw.invariants(json.dumps(SPEC)) == r


def test_invalid_spec_raises():
    bad = dict(SPEC, coverD={"base_genus": 0, "branch": [{"elem": [0, 1], "mult": 3}]})
    with pytest.raises(sw.SandwichError):
        sw.invariants(bad)
    with pytest.raises(sw.SandwichError):
        sw.invariants("{not json")


def test_covers_and_atlas():
    cs = sw.covers([3], 0, 2)
    assert len(cs) == 1
    rows = sw.atlas(2)
    assert rows and all(r["group"] for r in rows)


def test_classify_genus2_klein():
    fams = sw.classify(genus_f=2, groups=[[2, 2]], pg_lo=3, pg_hi=6)
    assert fams
    assert fams == sw.classify(genus_f=2, groups=[[2, 2]], pg_lo=3, pg_hi=6, workers=1)


def test_compare_tables():
    assert "zero" in sw.tables()
    assert sw.compare("genus3-elliptic") == []
    with pytest.raises(sw.SandwichError):
        sw.compare("no-such-table")

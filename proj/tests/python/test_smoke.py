import pytest

import nilschouten as ns


def test_catalog_ids():
    ids = ns.algebra_ids()
    assert len(ids) == 10
    assert "A5_4" in ids
    assert ns.verdict("A3_1+2A1") == "always"


def test_heisenberg_ricci():
    g = ns.Algebra.builtin("A3_1+2A1")
    assert g.dim == 5
    ric = g.ricci_tensor()
    assert ric[0][0] == "-1/2*alpha^2"
    assert ric[4][4] == "1/2*alpha^2"
    assert g.ricci_tensor(general=True) == ric


def test_check_on_and_off_family():
    g = ns.Algebra.builtin("A5_4")
    on = g.check({"alpha": "0", "beta": "1", "gamma": "1"})
    assert on["feasible"]
    assert on["mu_exact"] == "-2"
    off = g.check("alpha=1,beta=1,gamma=2")
    assert not off["feasible"]
    assert off["witness"] is None
    assert g.nilsoliton_check("alpha=0,beta=1,gamma=1")["feasible"]


def test_floating_mode_matches_exact():
    g = ns.Algebra.builtin("A5_1")
    exact = g.check("alpha=1,beta=0,gamma=1")
    approx = g.check("alpha=1,beta=0,gamma=1", floating=True)
    assert exact["feasible"] and approx["feasible"]
    assert exact["mu_exact"] == "-2"
    assert approx["mu"] == pytest.approx(exact["mu"])


def test_file_round_trip():
    g = ns.Algebra.builtin("A5_6")
    assert ns.Algebra.from_text(g.to_text()) == g


def test_errors_are_raised():
    with pytest.raises(ns.Error):
        ns.Algebra.builtin("A9_9")
    with pytest.raises(ns.Error):
        ns.Algebra.from_text("dim 3\nbracket e1 e2 = e3\nbracket e1 e2 = e3\n")
    with pytest.raises(ns.Error):
        ns.Algebra.builtin("A5_4").check({})


def test_verify_paper_quick():
    report = ns.verify_paper(seed=7, samples=5)
    assert report["passed"], report["problems"]
    assert report["summary"].startswith("10/10 classification entries verified")

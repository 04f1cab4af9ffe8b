"""Smoke tests for the python bindings."""

import pytest

import bgsys


@pytest.fixture(scope="module")
def rep():
    return bgsys.load_rep("sl2-adjoint")


def test_rep_metadata(rep):
    assert rep.name == "sl2-adjoint"
    assert rep.g_dim == 3
    assert rep.v_dim == 3
    assert rep.basis == ["e", "f", "h"]
    assert rep.weights() == [2, 0, -2]


def test_basic_ope(rep):
    a = bgsys.parse(rep, "beta(e,0)")
    b = bgsys.parse(rep, "gamma(e',0)")
    sing = bgsys.ope(a, b)
    assert list(sing) == [0]
    assert sing[0] == bgsys.vacuum(rep)
    assert bgsys.ope(a, bgsys.parse(rep, "beta(f,0)")) == {}


def test_state_arithmetic(rep):
    a = bgsys.parse(rep, "beta(e,0)")
    assert (a - a).is_zero()
    assert "2" * a == 2 * a
    assert bgsys.derivative(a) == bgsys.parse(rep, "beta(e,1)")
    assert a.weight() == 1


def test_wick_and_nth(rep):
    a = bgsys.parse(rep, "beta(e,0)")
    b = bgsys.parse(rep, "gamma(e',0)")
    assert bgsys.wick(a, b) == bgsys.parse(rep, ":beta(e,0)gamma(e',0):")
    assert bgsys.nth(a, 0, b) == bgsys.vacuum(rep)


def test_currents_and_triple(rep):
    cur = bgsys.currents(rep)
    assert set(cur) == {"e", "f", "h"}
    tr = bgsys.sl2_triple(rep)
    # v_h o_1 v_h = -3 |0>
    assert bgsys.nth(tr["h"], 1, tr["h"]) == "-3" * bgsys.vacuum(rep)
    # currents commute with the triple
    assert bgsys.nth(cur["e"], 0, tr["f"]).is_zero()


def test_conformal(rep):
    ls = bgsys.conformal(rep, "S")
    a = bgsys.parse(rep, "beta(e,0)")
    assert bgsys.nth(ls, 0, a) == bgsys.derivative(a)
    assert bgsys.nth(ls, 1, a) == a
    # the total element translates and grades the commutant triple
    total = bgsys.conformal(rep, "total")
    tr = bgsys.sl2_triple(rep)
    assert bgsys.nth(total, 0, tr["f"]) == bgsys.derivative(tr["f"])
    assert bgsys.nth(total, 1, tr["f"]) == 2 * tr["f"]


def test_hilbert_series():
    coeffs = bgsys.hilbert_series([2, 2, 0, 0, -2, -2], 8)
    assert coeffs == ["1", "0", "3", "0", "6", "0", "10", "0", "15"]
    assert bgsys.hilbert_series([], 3) == ["1", "0", "0", "0"]


def test_invariant_dimension(rep):
    assert bgsys.invariant_dimension(rep, "p0-full", 2) == 3
    assert bgsys.invariant_dimension(rep, "symv*", 2) == 1
    with pytest.raises(bgsys.EngineError):
        bgsys.invariant_dimension(rep, "bogus", 2)


def test_verify_report(rep):
    report = bgsys.verify(rep, "current-ope")
    assert report["suite"] == "current-ope"
    assert report["config"]["rep"] == "sl2-adjoint"
    assert len(report["checks"]) == 36
    assert all(c["status"] == "pass" for c in report["checks"])


def test_verify_all(rep):
    report = bgsys.verify(rep, "all")
    assert report["suite"] == "all"
    assert len(report["checks"]) >= 40
    assert all(c["status"] == "pass" for c in report["checks"])


def test_parse_errors(rep):
    with pytest.raises(bgsys.EngineError):
        bgsys.parse(rep, "beta(unknown,0)")


def test_load_rep_json():
    doc = """{
      "g_dim": 1, "v_dim": 1,
      "basis": ["u"], "structure": [],
      "rho": [[0]]
    }"""
    rep = bgsys.load_rep_json(doc)
    assert rep.g_dim == 1

import math
import pathlib

import pytest

import hspec

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_tensor_roundtrip_and_evaluation():
    t = hspec.SymmetricTensor.build(3, 2, [((0, 0, 1), 2.0), ((0, 1, 1), -1.0)])
    assert t.order == 3 and t.dim == 2
    assert t.entry([1, 0, 0]) == 2.0
    assert t.form([0.5, -2.0]) == pytest.approx(-9.0)
    assert hspec.parse_tensor(hspec.serialize_tensor(t)) == t


def test_errors_carry_codes():
    with pytest.raises(hspec.HspecError) as info:
        hspec.SymmetricTensor.build(3, 2, [((0, 1, 1), 1.0), ((1, 0, 1), 2.0)])
    assert info.value.code == "ConflictingOrbitValues"
    with pytest.raises(ValueError):
        hspec.parse_tensor("tensor 3 2\n1 1 3 1\n")


def test_eigenvalues():
    t = hspec.load_instance(str(DATA / "quartic_mixed.tensor"))
    p = hspec.extreme_h_eigen(t, "max")
    assert abs(p.value - 2.4043) <= 1e-3
    assert p.residual <= 1e-8
    c6 = hspec.hyper_rho(hspec.hypercycle3(3))
    assert c6.value == pytest.approx(4 ** (1 / 3), abs=1e-9)
    lo, hi = c6.bracket
    assert lo <= c6.value <= hi
    assert hspec.hyper_rho(hspec.fano_plane()).value == pytest.approx(3.0, abs=1e-9)


def test_oracle_agrees_with_solver():
    t = hspec.load_instance(str(DATA / "quartic_mixed.tensor"))
    o = hspec.enumerate_h_eigenpairs(t)
    assert o.certified
    assert o.max_value() == pytest.approx(hspec.extreme_h_eigen(t, "max").value, abs=1e-8)


def test_hypergraph_and_bounds():
    g = hspec.load_instance(str(DATA / "g4_three_edges.hg"))
    assert isinstance(g, hspec.Hypergraph)
    assert hspec.is_odd_bipartite(g)
    sub, kept = hspec.remove_vertices(g, [4, 5])
    assert kept == [0, 1, 2, 3]
    (r,) = hspec.run_bound("lmin-vertex-removal", g, remove=[4, 5])
    assert r.valid
    assert r.actual == pytest.approx(-1.0, abs=1e-8)
    assert r.details["upper2"] == pytest.approx(-0.9071, abs=5e-3)
    assert r.sandwich_holds(1e-6)


def test_regime_failure_is_reported():
    t = hspec.load_instance(str(DATA / "cubic_mixed.tensor"))
    (r,) = hspec.run_bound("subtensor-lmax", t, keep=[0, 1, 3])
    assert not r.valid
    assert r.reason == "regime_unsupported"
    assert r.lower == pytest.approx(0.6072, abs=5e-3)


def test_gamma_on_steiner_system():
    (r,) = hspec.run_bound("gamma", hspec.fano_plane())
    assert r.flags["steiner"]
    assert r.details["gamma"] == pytest.approx(r.details["rho"] - 1.0, abs=1e-6)


def test_fixture_table_shape():
    rows = hspec.run_fixtures(skip_properties=True)
    assert rows and {"id", "kind", "expected", "measured", "deviation", "tolerance", "pass"} <= set(rows[0])
    failing = {r["id"] for r in rows if not r["pass"]}
    assert failing <= {"5.ratio_monotone", "8.upper"}
    assert not any(math.isnan(r["measured"]) for r in rows if r["kind"] == "value")

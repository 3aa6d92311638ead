# Copyright (c) the holodyn developers
# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the python bindings: every exported operation runs, the
exact invariants survive the boundary, and dict payloads match the CLI JSON
schema."""

import pytest

import holodyn as hd


def test_series_basics():
    f = hd.Series.parse("z1^2*z2")
    assert f.truncation_degree == 3
    assert f.term_count == 1
    assert f.essential_dimension == 2
    assert f.coefficient({1: 2, 2: 1}) == 1.0
    assert f.evaluate([2 + 0j, 3 + 0j]) == 12 + 0j
    assert f.majorant(2.0) == 8.0

    g = hd.Series.variable(1) + hd.Series.constant(1)
    assert g.evaluate([1j]) == 1 + 1j
    assert (2 * g).coefficient({}) == 2.0

    d = f.to_dict()
    assert set(d) == {"truncation_degree", "terms"}
    assert hd.Series.from_json(d) == f


def test_derivative_and_restriction():
    f = hd.Series.parse("z1^2")
    assert f.partial_derivative(1) == hd.Series.parse("2*z1")

    g = hd.Series.parse("z1+z2")
    assert g.restrict_to(1).essential_dimension == 1
    assert g.embed(5) == g


def test_operator_apply_exactly():
    L = hd.Operator.parse("d1")
    f = hd.Series.parse("z1^2")
    g = L.apply(f)
    assert g.coefficient({1: 1}) == 2.0
    assert L.iterate(f, 2).coefficient({}) == 2.0
    assert L.order == 1 and L.variable_span == 1 and not L.is_trivial
    assert L.associated(3) == L
    assert L.symbol_value([5 + 0j]) == 5 + 0j
    assert hd.Operator.parse("2*id+d1").symbol_value([1 + 0j]) == 3 + 0j
    assert L.to_dict()["label"] == "d1"


def test_translation_group_law():
    f = hd.Series.parse("z1^2")
    shifted = hd.translate(f, [1 + 0j])
    assert shifted.coefficient({}) == 1.0  # (z1 - 1)^2 = z1^2 - 2 z1 + 1
    assert shifted.coefficient({1: 1}) == -2.0
    tau = hd.translation_operator([1 + 0j], 10)
    assert tau.apply(f) == shifted


def test_orbit_and_certificates():
    L = hd.Operator.parse("d1")
    f = hd.gap_series(hd.default_gap_blocks(), 1)
    trace = hd.orbit_trace(L, f, 8, [1.0, 2.0])
    assert trace["kind"] == "orbit_trace"
    assert len(trace["records"]) == 9
    assert trace["records"][0]["eval_at_zero"] == {"re": 0.0, "im": 0.0}

    conf = hd.confinement_certificate(L, f, 8)
    assert conf["kind"] == "confinement"
    assert conf["uniform"] and conf["symbol_operator"]

    cert = hd.non_cyclicity_certificate(L, f, 50)
    assert cert["kind"] == "non_cyclicity"
    assert cert["max_abs_functional_on_orbit"] == 0.0
    assert cert["functional_on_witness"] == {"re": 1.0, "im": 0.0}

    sub = hd.subspace_orbit_certificate(L, [hd.Series.parse("z1"), hd.Series.parse("z2^2")], 30)
    assert sub["kind"] == "subspace_confinement"
    assert sub["max_abs_functional_on_orbit"] == 0.0


def test_witness_lift_and_scrambled_family():
    w = hd.gap_witness()
    ok, why = w.invariants_hold()
    assert ok and why == ""
    assert w.big_ks == [1, 2, 4, 8, 16, 32, 64, 128]
    assert w.small_ks == [48, 96, 192]
    assert w.to_dict()["kind"] == "semi_irregularity_witness"

    lifted = hd.lift_witness(w, hd.Operator.parse("d1+d2"), 1)
    assert lifted.big_ks == w.big_ks

    pair = hd.li_yorke_pair(w, 3 + 0j, 1 + 0j)
    assert pair["kind"] == "li_yorke_pair"
    assert pair["scale"] == 2.0

    family = hd.scrambled_family(w, 4)
    assert family["kind"] == "scrambled_family"
    assert len(family["pairs"]) == 6

    with pytest.raises(hd.HolodynError):
        hd.li_yorke_pair(w, 1 + 0j, 1 + 0j)  # equal scalars


def test_proximal_and_detector():
    L = hd.Operator.parse("d1")
    f = hd.gap_series(hd.default_gap_blocks(), 1)
    zero = hd.Series.zero()
    prox = hd.proximal_asymptotic_check(L, f, zero, 200, [1.0, 2.0])
    assert prox["kind"] == "proximal_asymptotic"
    assert prox["proximal_observed"] and not prox["asymptotic_refuted"]

    verdict = hd.semi_irregularity_detector(L, f, 64, [1.0])
    assert verdict["kind"] == "detector_verdict"
    assert verdict["observed"]
    assert "not a proof" in verdict["diagnostics"]


def test_dichotomy_and_eigen_bound():
    result = hd.find_dichotomy_points(hd.Operator.parse("d1"))
    assert result["kind"] == "dichotomy"
    assert result["found"]
    assert result["small_value"] < 1.0 < result["big_value"]

    L = hd.Operator.parse("d1")
    b10 = L.eigen_consistency_bound([1 + 0j], 10, 1.0)
    b20 = L.eigen_consistency_bound([1 + 0j], 20, 1.0)
    assert b20 < b10 / 10

    with pytest.raises(hd.HolodynError):
        hd.find_dichotomy_points(hd.Operator.identity(0.5 + 0j))


def test_property_suites():
    results = hd.run_suites(seed=42, cases=25)
    assert [r["name"] for r in results] == [
        "restriction_identity",
        "associated_factorization",
        "power_factorization",
        "dimension_confinement",
        "cylinder_translation_identity",
        "translation_commutation",
        "triviality_restriction",
    ]
    assert all(r["passed"] == r["total"] == 25 for r in results)

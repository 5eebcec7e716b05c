"""Dual curves, class counts, branch transport and the formula suite."""

import pytest

from conftest import CONIC, CUSP, FERMAT, NODAL
from oracles import (conic_point, cuspidal_cubic_point,
                     dual_vanishes_on_tangents, nodal_cubic_point)
from plucker import (DUAL_CLASS_LIMIT, Rationals, Sampler,
                     UnsupportedFieldError, class_of, duality_report, genus,
                     multiple_tangents, plucker_suite, poly_to_string)

RAT = Rationals()

PINNED_DUALS = {
    CONIC: "U^2 + V^2 - W^2",
    CUSP: "U^3 + 27/4*V^2*W",
    NODAL: ("U^4 - U^3*W - 2*U^2*V^2 + 9*U*V^2*W + V^4"
            " - 27/4*V^2*W^2"),
}

SMOOTH_SAMPLES = {
    CONIC: [conic_point(t) for t in (0, 2, "1/2", -3, 5)],
    NODAL: [nodal_cubic_point(t) for t in (2, 3, "1/2", -4, "7/3")],
    CUSP: [cuspidal_cubic_point(t) for t in (1, 2, "1/3", -2, 7)],
}


def test_class_counts(suites, septic_gf5):
    assert suites[CONIC].m == 2
    assert suites[NODAL].m == 4
    assert suites[CUSP].m == 3
    assert suites[FERMAT].m == 6
    assert class_of(septic_gf5, sampler=Sampler()) == 7


def test_pinned_dual_forms(dreports):
    for text, expected in PINNED_DUALS.items():
        found = poly_to_string(
            dreports[text].dual.form.rename_vars(("U", "V", "W")))
        assert found == expected, text


def test_fermat_dual_degree(dreports):
    assert dreports[FERMAT].dual.degree == 6


def test_duals_vanish_on_tangent_envelopes(dreports):
    for text, points in SMOOTH_SAMPLES.items():
        dual_text = poly_to_string(
            dreports[text].dual.form.rename_vars(("U", "V", "W")))
        assert dual_vanishes_on_tangents(text, dual_text, points), text


def test_fermat_flex_tangents_lie_on_the_dual(fermat, dreports):
    dual = dreports[FERMAT].dual
    hits = 0
    for flex in fermat.flexes():
        if flex.branch.point.conj_degree != 1:
            continue
        tangent = flex.branch.tangent
        value = dual.form.evaluate(dict(zip(dual.form.vars, tangent)))
        assert value == RAT.zero
        hits += 1
    assert hits >= 3


def test_bidual_matches_original(dreports):
    for text in (CONIC, NODAL, CUSP, FERMAT):
        assert dreports[text].bidual is True, text


def test_cusp_branch_transport(dreports):
    recs = dreports[CUSP].transforms
    assert all(rec.ok for rec in recs)
    pairs = sorted((rec.expected, rec.found) for rec in recs)
    assert ((1, 2), (1, 2)) in pairs
    assert ((2, 1), (2, 1)) in pairs
    expected_of = {rec.branch.characters(): rec.expected for rec in recs}
    assert expected_of[(2, 1)] == (1, 2)
    assert expected_of[(1, 2)] == (2, 1)


def test_nodal_branch_transport(dreports):
    recs = dreports[NODAL].transforms
    assert recs and all(rec.ok for rec in recs)
    expected_of = {}
    for rec in recs:
        expected_of.setdefault(rec.branch.characters(), set()).add(
            rec.expected)
    assert expected_of[(1, 1)] == {(1, 1)}
    assert expected_of[(1, 2)] == {(2, 1)}


def test_corpus_curves_have_no_multiple_tangents(dreports):
    for text in (CONIC, NODAL, CUSP, FERMAT):
        assert not dreports[text].tangents, text


def test_tricuspidal_quartic_has_one_bitangent(nodal, dreports):
    tri = dreports[NODAL].dual
    found = multiple_tangents(tri, sampler=Sampler(), dual=nodal)
    assert len(found) == 1
    (tang,) = found
    assert tang.count == 2
    assert tang.json_dict()["line"] == ["0", "0", "1"]


def test_translation_audits(audits):
    for text, audit in audits.items():
        assert audit.ok, text
    assert audits[CONIC].class_count == 2
    assert audits[NODAL].class_count == 4
    assert audits[FERMAT].class_count == 6
    assert audits[NODAL].node_count == 2
    assert audits[FERMAT].infinity_count == 3


def test_septic_suite_suppresses_formulas(septic_gf5):
    verdict = plucker_suite(septic_gf5, sampler=Sampler())
    assert not verdict.normal
    assert verdict.m is None and verdict.i is None
    assert verdict.rho is None
    for check in verdict.checks:
        assert not check.applicable
        assert "normal" in check.reason


def test_sextic_with_infinitely_many_flexes_is_refused(sextic_gf5):
    with pytest.raises(UnsupportedFieldError):
        class_of(sextic_gf5, sampler=Sampler())
    with pytest.raises(UnsupportedFieldError):
        duality_report(sextic_gf5, sampler=Sampler())


def test_class_limit_skips_elimination(quartic):
    report = duality_report(quartic, sampler=Sampler())
    assert report.m == 12 > DUAL_CLASS_LIMIT
    assert report.dual is None
    assert "budget" in report.skip_reason


def test_formula_checks_pass_on_the_corpus(suites):
    for text, verdict in suites.items():
        assert verdict.all_pass, text
        names = {check.name for check in verdict.checks}
        assert len(names) == len(verdict.checks)


def test_genus_of_the_dual_matches(dreports, nodal):
    tri = dreports[NODAL].dual
    assert genus(tri, sampler=Sampler()) == genus(nodal, sampler=Sampler())

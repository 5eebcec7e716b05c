"""Curve-level classification: singular points, flexes, normality."""

import pytest

from plucker import (PlaneCurve, PrimeField, Rationals, UnsupportedFieldError,
                     ValidationError, parse_poly)

RAT = Rationals()


def test_rejects_reducible():
    with pytest.raises(ValidationError):
        PlaneCurve(parse_poly("X*Y", RAT))
    with pytest.raises(ValidationError):
        PlaneCurve(parse_poly("X^2*Z - X*Y^2", RAT))


def test_rejects_characteristic_two():
    with pytest.raises(UnsupportedFieldError):
        PrimeField(2)


def test_degree_and_contains(conic):
    assert conic.degree == 2
    from plucker import PointP2
    on = PointP2((RAT.coerce(3), RAT.coerce(4), RAT.coerce(5)), RAT)
    off = PointP2((RAT.one, RAT.one, RAT.one), RAT)
    assert conic.contains(on)
    assert not conic.contains(off)


def test_conic_is_smooth_with_no_flexes(conic):
    assert conic.singularities() == ()
    assert conic.flexes() == ()
    assert conic.is_normal()


def test_nodal_cubic_classification(nodal):
    reports = nodal.singularities()
    assert len(reports) == 1
    rep = reports[0]
    assert rep.kind == "node"
    assert rep.multiplicity == 2
    assert [br.characters() for br in rep.branches] == [(1, 1), (1, 1)]
    tangents = {tuple(br.tangent) for br in rep.branches}
    assert len(tangents) == 2


def test_nodal_cubic_flexes(nodal):
    recs = nodal.flexes()
    assert sum(rec.multiplicity() for rec in recs) == 3
    assert all(rec.beta == 2 for rec in recs)
    sizes = sorted(rec.multiplicity() for rec in recs)
    assert sizes == [1, 2]


def test_cuspidal_cubic_classification(cusp):
    reports = cusp.singularities()
    assert len(reports) == 1
    assert reports[0].kind == "cusp-like"
    assert reports[0].branches[0].characters() == (2, 1)
    recs = cusp.flexes()
    assert sum(rec.multiplicity() for rec in recs) == 1
    assert recs[0].beta == 2


def test_fermat_cubic_nine_ordinary_flexes(fermat):
    assert fermat.singularities() == ()
    recs = fermat.flexes()
    assert sum(rec.multiplicity() for rec in recs) == 9
    assert all(rec.beta == 2 for rec in recs)


def test_fermat_quartic_twelve_hyperflexes(quartic):
    assert quartic.singularities() == ()
    recs = quartic.flexes()
    assert sum(rec.multiplicity() for rec in recs) == 12
    assert all(rec.beta == 3 for rec in recs)
    assert sum(rec.weight * rec.multiplicity() for rec in recs) == 24


def test_septic_gf5_is_not_normal(septic_gf5):
    assert not septic_gf5.is_normal()
    recs = septic_gf5.flexes()
    chars = {rec.branch.characters() for rec in recs}
    assert (1, 4) in chars


def test_sextic_gf5_flex_locus_refusal(sextic_gf5):
    with pytest.raises(UnsupportedFieldError):
        sextic_gf5.flexes()
    assert not sextic_gf5.is_normal()

"""Branch computation at concrete singular and smooth points."""

from fractions import Fraction

import pytest

from plucker import (PlaneCurve, PointP2, PrimeField, Rationals, parse_poly)

RAT = Rationals()


def branch_at_origin(text, field=RAT, min_precision=None):
    curve = PlaneCurve(parse_poly(text, field))
    pt = PointP2((field.zero, field.zero, field.one), field)
    return curve, curve.branches_at(pt, min_precision=min_precision)


def test_cusp_parametrization_is_t2_t3():
    curve, brs = branch_at_origin("Y^2*Z - X^3")
    assert len(brs) == 1
    br = brs[0]
    assert br.characters() == (2, 1)
    assert br.multiplicity() == 1
    dx, dy = br.param.deviations()
    assert dx.coeff_at(2) == 1 and dx.coeff_at(3) == 0
    assert dy.coeff_at(3) == 1
    assert dy.coeff_at(2) == 0 and dy.coeff_at(4) == 0


def test_node_has_two_rational_branches_with_sqrt_series():
    curve, brs = branch_at_origin("Y^2*Z - X^3 - X^2*Z", min_precision=8)
    assert len(brs) == 2
    assert all(br.characters() == (1, 1) for br in brs)
    tails = set()
    for br in brs:
        dx, dy = br.param.deviations()
        assert dx.coeff_at(1) == 1 and dx.coeff_at(2) == 0
        tails.add((dy.coeff_at(1), dy.coeff_at(2), dy.coeff_at(3)))
    want = {(Fraction(1), Fraction(1, 2), Fraction(-1, 8)),
            (Fraction(-1), Fraction(-1, 2), Fraction(1, 8))}
    assert tails == want


def test_node_with_irrational_tangents_is_one_conjugate_pair():
    curve = PlaneCurve(parse_poly("Y^2*Z - 2*X^2*Z - X^3", RAT))
    reports = curve.singularities()
    assert len(reports) == 1
    rep = reports[0]
    assert rep.kind == "node"
    assert sum(br.multiplicity() for br in rep.branches) == 2
    br = rep.branches[0]
    assert br.multiplicity() == 2
    E = br.param.field
    assert getattr(E, "degree", 1) == 2
    g = E.gen
    assert g * g == E.coerce(2)


def test_tacnode_two_smooth_branches_sharing_a_tangent():
    curve, brs = branch_at_origin("Y^2*Z^3 - X^4*Z - X^5")
    assert len(brs) == 2
    assert all(br.characters() == (1, 1) for br in brs)
    t0 = tuple(brs[0].tangent)
    t1 = tuple(brs[1].tangent)
    assert t0 == t1
    rep = curve.singularities()[0]
    assert rep.kind == "other"


def test_branch_series_satisfy_the_curve_to_high_precision():
    from plucker import branch_series
    curve, brs = branch_at_origin("Y^2*Z - X^3 - X^2*Z", min_precision=25)
    for br in brs:
        val = branch_series(curve, br, curve.form)
        assert val.is_zero_to_precision()
        assert val.prec >= 25


def test_branches_over_prime_field():
    curve, brs = branch_at_origin("Y^2*Z - X^3", PrimeField(7))
    assert len(brs) == 1
    assert brs[0].characters() == (2, 1)


def test_smooth_point_single_branch():
    curve = PlaneCurve(parse_poly("X^2 + Y^2 - Z^2", RAT))
    pt = PointP2((RAT.coerce(1), RAT.zero, RAT.one), RAT)
    brs = curve.branches_at(pt)
    assert len(brs) == 1
    assert brs[0].characters() == (1, 1)


def test_infinity_point_uses_another_chart():
    curve = PlaneCurve(parse_poly("Y^2*Z - X^3 - X^2*Z", RAT))
    pt = PointP2((RAT.zero, RAT.one, RAT.zero), RAT)
    brs = curve.branches_at(pt)
    assert len(brs) == 1
    br = brs[0]
    assert br.param.chart != "Z"
    assert br.characters() == (1, 2)


def test_off_curve_point_is_rejected():
    from plucker import ValidationError
    curve = PlaneCurve(parse_poly("X^2 + Y^2 - Z^2", RAT))
    pt = PointP2((RAT.coerce(2), RAT.one, RAT.one), RAT)
    with pytest.raises(ValidationError):
        curve.branches_at(pt)

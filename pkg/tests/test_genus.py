"""Genus routes, pencil jacobians and the differential decomposition."""

import pytest

from conftest import CONIC, FERMAT, NODAL
from plucker import (Pencil, Rationals, Sampler, ValidationError,
                     branch_series, dhdx, genus, genus_from_nodes,
                     genus_from_singularities, is_rational,
                     linear_equiv_witness, parse_poly)

RAT = Rationals()


def test_genus_of_the_corpus_by_pencil(suites, quartic):
    assert suites[CONIC].rho == 0
    assert suites[NODAL].rho == 0
    assert suites[FERMAT].rho == 1
    assert genus(quartic, sampler=Sampler()) == 3


def test_genus_of_cuspidal_cubic(cusp):
    assert genus(cusp, sampler=Sampler()) == 0


def test_genus_from_singularities_agrees(conic, nodal, cusp, fermat,
                                         quartic, suites):
    assert genus_from_singularities(conic) == 0
    assert genus_from_singularities(nodal) == 0
    assert genus_from_singularities(cusp) == 0
    assert genus_from_singularities(fermat) == 1
    assert genus_from_singularities(quartic) == 3


def test_genus_from_nodes_bound():
    assert genus_from_nodes(3, 1) == 0
    assert genus_from_nodes(4, 0) == 3
    with pytest.raises(ValidationError):
        genus_from_nodes(3, 2)


def test_genus_from_singularities_refuses_other_kinds():
    from plucker import PlaneCurve
    tacnodal = PlaneCurve(parse_poly("Y^2*Z^3 - X^4*Z - X^5", RAT))
    with pytest.raises(ValidationError):
        genus_from_singularities(tacnodal)


def test_is_rational(nodal, fermat):
    assert is_rational(nodal, sampler=Sampler())
    assert not is_rational(fermat, sampler=Sampler())


def test_jacobian_is_pencil_independent(nodal):
    first = Pencil(nodal, parse_poly("X", RAT), parse_poly("Y - Z", RAT))
    second = Pencil(nodal, parse_poly("2*X - Z", RAT), parse_poly("Y", RAT))
    assert first.map_degree() == second.map_degree() == 3
    j1, j2 = first.jacobian(), second.jacobian()
    assert j1.order == j2.order == 4
    witness = linear_equiv_witness(nodal, first.phi, second.phi)
    assert witness.total == 0


def test_genus_is_birationally_invariant(dreports, cusp, conic):
    dual_cusp = dreports[__import__("conftest").CUSP].dual
    dual_conic = dreports[CONIC].dual
    assert genus(dual_cusp, sampler=Sampler()) == genus(cusp,
                                                        sampler=Sampler())
    assert genus(dual_conic, sampler=Sampler()) == 0


def test_dhdx_matches_the_series_derivative(nodal):
    from plucker import PointP2
    A = parse_poly("Y", RAT)
    B = parse_poly("Z", RAT)
    P, Q = dhdx(nodal, A, B)
    pt = PointP2((RAT.coerce(3), RAT.coerce(6), RAT.one), RAT)
    (br,) = nodal.branches_at(pt, min_precision=12)

    def fn(form):
        return branch_series(nodal, br, form)

    hs = fn(A) / fn(B)
    xs = fn(parse_poly("X", RAT)) / fn(parse_poly("Z", RAT))
    lhs = hs.derivative()
    rhs = (fn(P) / fn(Q)) * xs.derivative()
    assert (lhs - rhs).is_zero_to_precision()


def test_dhdx_of_x_is_one(nodal):
    P, Q = dhdx(nodal, parse_poly("X", RAT), parse_poly("Z", RAT))
    diff = P * Q - Q * P
    assert not diff
    ratio = linear_equiv_witness(nodal, P, Q)
    assert ratio.total == 0


def test_differential_decomposition_matches(decomps):
    nodal_rep = decomps[NODAL]
    conic_rep = decomps[CONIC]
    assert nodal_rep.matched and conic_rep.matched
    assert nodal_rep.zero_total == nodal_rep.pole_total == 10
    assert conic_rep.zero_total == conic_rep.pole_total == 6


def test_decomposition_weighted_sets_are_effective(decomps):
    for rep in decomps.values():
        assert all(w > 0 for _, w in rep.zeros)
        assert all(w > 0 for _, w in rep.poles)

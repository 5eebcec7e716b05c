"""Polynomials, the parser, resultants and coordinate changes."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from support import degree_monomials

from plucker import (MultiPoly, ParseError, Rationals, parse_poly,
                     poly_to_string)
from plucker.algebra.multipoly import (Homography, hessian, resultant)
from plucker.curve import PROJ_VARS

RAT = Rationals()

coeffs = st.integers(min_value=-30, max_value=30)


def poly_from_dict(d):
    terms = {e: RAT.coerce(c) for e, c in d.items() if c}
    return MultiPoly(RAT, PROJ_VARS, terms)


@st.composite
def forms(draw, max_degree=3):
    deg = draw(st.integers(min_value=1, max_value=max_degree))
    monos = degree_monomials(deg)
    cs = draw(st.lists(coeffs, min_size=len(monos), max_size=len(monos)))
    d = dict(zip(monos, cs))
    if not any(d.values()):
        d[monos[0]] = 1
    return poly_from_dict(d)


@given(p=forms())
@settings(max_examples=60, deadline=None)
def test_parser_round_trip(p):
    assert parse_poly(poly_to_string(p), RAT) == p


@given(p=forms(max_degree=2), q=forms(max_degree=2))
@settings(max_examples=30, deadline=None)
def test_product_matches_sympy(p, q):
    mine = poly_to_string(p * q)
    assert oracles.expand_equal(
        mine, "(%s) * (%s)" % (poly_to_string(p), poly_to_string(q)))


def test_parser_accepts_affine_and_homogenizes():
    p = parse_poly("y^2 - x^3 - x^2", RAT)
    q = parse_poly("Y^2*Z - X^3 - X^2*Z", RAT)
    assert p == q


def test_parser_rejects_garbage():
    for bad in ("Y^^2", "X + ", "2 *", "W^2 - X^2", "X**3", ""):
        with pytest.raises(ParseError):
            parse_poly(bad, RAT)


def test_parser_rejects_mixed_alphabets():
    with pytest.raises(ParseError):
        parse_poly("X^2 + y*Z", RAT)


def test_curve_rejects_inhomogeneous_form():
    from plucker import PlaneCurve, ValidationError
    with pytest.raises(ValidationError):
        PlaneCurve(parse_poly("X^2 + Y", RAT))


def test_resultant_matches_sympy():
    f = "X^3 + 2*X*Y*Z - Y^2*Z"
    g = "X^2 - Y*Z + 3*Z^2"
    for var in ("X", "Y", "Z"):
        mine = resultant(parse_poly(f, RAT), parse_poly(g, RAT), var)
        assert oracles.expand_equal(poly_to_string(mine),
                                    str(oracles.resultant_of(f, g, var)))


def test_hessian_matches_sympy():
    for text in ("X^3 + Y^3 + Z^3", "Y^2*Z - X^3 - X^2*Z",
                 "X^4 + Y^4 + Z^4"):
        mine = hessian(parse_poly(text, RAT))
        assert oracles.expand_equal(poly_to_string(mine),
                                    str(oracles.hessian_det(text)))


def test_fermat_cubic_hessian_is_monomial():
    H = hessian(parse_poly("X^3 + Y^3 + Z^3", RAT))
    assert poly_to_string(H) == "216*X*Y*Z"


def test_divides():
    f = parse_poly("X^2 - Y^2", RAT)
    g = parse_poly("X - Y", RAT)
    assert g.divides(f)
    assert not f.divides(g)


@given(p=forms(max_degree=2))
@settings(max_examples=20, deadline=None)
def test_homography_round_trip(p):
    H = Homography(RAT, [[1, 2, 0], [0, 1, 0], [3, 0, 1]])
    assert H.inverse().apply(H.apply(p)) == p


def test_homography_composition_order():
    A = Homography(RAT, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    B = Homography(RAT, [[1, 0, 0], [0, 2, 0], [0, 0, 1]])
    p = parse_poly("X^2 + Y*Z", RAT)
    assert A.compose(B).apply(p) == B.apply(A.apply(p))


def test_homography_rejects_singular_matrix():
    from plucker import ValidationError
    with pytest.raises(ValidationError):
        Homography(RAT, [[1, 0, 0], [2, 0, 0], [0, 0, 1]])

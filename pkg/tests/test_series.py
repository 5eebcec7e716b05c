"""Divisors, pencils and weighted sets on concrete curves."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from support import seeded_form_coprime

from plucker import (InvariantViolation, Pencil, Rationals, Sampler,
                     ValidationError, WeightedSet, divisor_of,
                     intersect_branchwise, linear_equiv_witness, parse_poly,
                     pencil_value_and_index, rational_divisor)

RAT = Rationals()


def test_weighted_set_algebra(nodal):
    div = divisor_of(nodal, parse_poly("X", RAT))
    assert div.total == 3
    double = div + div
    assert double.total == 6
    assert (double - div.scaled(2)).total == 0
    assert all(w == 2 * div.weight_of(br) for br, w in double)


@given(seed=st.integers(min_value=1, max_value=10 ** 6),
       degree=st.integers(min_value=1, max_value=2))
@settings(max_examples=12, deadline=None)
def test_branched_bezout_total(nodal, seed, degree):
    G = seeded_form_coprime(nodal, Sampler(seed=seed), degree)
    assert intersect_branchwise(nodal, G).total == 3 * degree


def test_divisor_of_rejects_a_multiple_of_the_curve(conic):
    with pytest.raises(ValidationError):
        divisor_of(conic, conic.form * parse_poly("X", RAT))


def test_rational_divisor_laws(nodal):
    smp = Sampler(seed=7)
    A = seeded_form_coprime(nodal, smp, 2)
    B = seeded_form_coprime(nodal, smp, 2)
    C = seeded_form_coprime(nodal, smp, 1)
    D = seeded_form_coprime(nodal, smp, 1)
    f = rational_divisor(nodal, A, B)
    g = rational_divisor(nodal, C, D)
    assert f.total == 0 and g.total == 0
    prod = rational_divisor(nodal, A * C, B * D)
    assert prod == f + g
    inv = rational_divisor(nodal, B, A)
    assert inv == f.scaled(-1)


def test_rational_divisor_needs_equal_degrees(conic):
    with pytest.raises(ValidationError):
        rational_divisor(conic, parse_poly("X", RAT),
                         parse_poly("X^2", RAT))


def test_linear_equivalence_witness(fermat):
    A = parse_poly("X + Y", RAT)
    B = parse_poly("Y - Z", RAT)
    diff = linear_equiv_witness(fermat, A, B)
    assert diff.total == 0


def test_pencil_rejects_degenerate_pairs(nodal):
    X = parse_poly("X", RAT)
    with pytest.raises(ValidationError):
        Pencil(nodal, X, X * RAT.coerce(5))
    with pytest.raises(ValidationError):
        Pencil(nodal, X, parse_poly("X^2", RAT))


def test_level_set_totals_are_level_independent(nodal):
    pen = Pencil(nodal, parse_poly("X", RAT), parse_poly("Z", RAT))
    deg = pen.map_degree()
    assert deg == 2
    for lam in (0, 1, -1, 2, 5, -7, 9, 13, -20, 31):
        fiber = pen.level_set(RAT.coerce(lam))
        assert fiber.total == deg
        assert all(w >= 0 for _, w in fiber)


def test_level_set_at_infinity(nodal):
    from plucker import INFINITY
    pen = Pencil(nodal, parse_poly("X", RAT), parse_poly("Z", RAT))
    fiber = pen.level_set(INFINITY)
    assert fiber.total == pen.map_degree()


def test_pencil_value_and_index_at_fixed_branch(nodal):
    from plucker import INFINITY
    phi, psi = parse_poly("X", RAT), parse_poly("Z", RAT)
    pen = Pencil(nodal, phi, psi)
    fixed, table = pen.fixed_and_mobile()
    assert fixed.total == 1
    (br, val, e) = table[0]
    assert val is INFINITY or val == INFINITY
    assert e == 2
    val2, e2 = pencil_value_and_index(nodal, phi, psi, br)
    assert (val2, e2) == (val, e)


def test_jacobian_of_vertical_pencil(nodal):
    pen = Pencil(nodal, parse_poly("X", RAT), parse_poly("Z", RAT))
    jac = pen.jacobian()
    assert jac.order == 4
    assert not jac.wild
    assert jac.fixed.total == 1


def test_fiber_weights_never_dip_below_fixed_part(cusp):
    pen = Pencil(cusp, parse_poly("Y", RAT), parse_poly("X", RAT))
    deg = pen.map_degree()
    for lam in (0, 1, 2, -3):
        assert pen.level_set(RAT.coerce(lam)).total == deg

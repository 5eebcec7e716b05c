"""Field arithmetic: rationals, prime fields, one simple extension."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plucker import (PrimeField, Rationals, SimpleExtension,
                     UnsupportedFieldError, ValidationError)

small_ints = st.integers(min_value=-40, max_value=40)


def test_rationals_basics():
    F = Rationals()
    assert F.characteristic == 0
    assert F.coerce(3) == Fraction(3)
    assert F.coerce(Fraction(2, 7)) * F.coerce(Fraction(7, 2)) == F.one
    assert F == Rationals()
    assert F.zero == 0 and not F.zero


def test_prime_field_rejects_composites_and_two():
    with pytest.raises(UnsupportedFieldError):
        PrimeField(4)
    with pytest.raises(UnsupportedFieldError):
        PrimeField(2)
    with pytest.raises(UnsupportedFieldError):
        PrimeField(1)


def test_fields_compare_by_value():
    assert PrimeField(5) == PrimeField(5)
    assert PrimeField(5) != PrimeField(7)
    E1 = SimpleExtension(Rationals(), [-2, 0, 1])
    E2 = SimpleExtension(Rationals(), [-2, 0, 1])
    assert E1 == E2
    assert E1 != SimpleExtension(Rationals(), [-3, 0, 1])


@given(a=small_ints, b=small_ints, c=small_ints)
@settings(max_examples=40, deadline=None)
def test_gf7_ring_axioms(a, b, c):
    F = PrimeField(7)
    x, y, z = F.coerce(a), F.coerce(b), F.coerce(c)
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * F.one == x and x + F.zero == x


@given(a=small_ints)
@settings(max_examples=40, deadline=None)
def test_gf11_inverses(a):
    F = PrimeField(11)
    x = F.coerce(a)
    if x:
        assert x * (F.one / x) == F.one


def test_fraction_coercion_mod_p():
    F = PrimeField(5)
    assert F.from_fraction(Fraction(1, 2)) == F.coerce(3)
    with pytest.raises((ValidationError, ZeroDivisionError)):
        F.from_fraction(Fraction(1, 5))


def test_extension_of_rationals_sqrt2():
    E = SimpleExtension(Rationals(), [-2, 0, 1])
    r = E.gen
    assert r * r == E.coerce(2)
    assert (E.one + r) * (E.one - r) == E.coerce(-1)
    inv = E.one / r
    assert inv * r == E.one
    assert E.characteristic == 0
    assert E.degree == 2


def test_extension_of_gf5():
    E = SimpleExtension(PrimeField(5), [3, 0, 1])
    r = E.gen
    assert r * r == E.coerce(-3)
    assert E.characteristic == 5
    assert (r + E.one) * (r + E.one) == r * r + r + r + E.one


def test_no_towers():
    E = SimpleExtension(Rationals(), [-2, 0, 1])
    with pytest.raises(UnsupportedFieldError):
        SimpleExtension(E, [E.coerce(-3), E.zero, E.one])


@given(a=small_ints, b=small_ints, c=small_ints, d=small_ints)
@settings(max_examples=30, deadline=None)
def test_extension_field_axioms(a, b, c, d):
    E = SimpleExtension(PrimeField(7), [1, 0, 1])
    x = E.coerce(a) + E.gen * E.coerce(b)
    y = E.coerce(c) + E.gen * E.coerce(d)
    assert x + y == y + x
    assert x * y == y * x
    if y:
        assert (x / y) * y == x

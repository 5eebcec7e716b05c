"""Seeded generators shared by the property and acceptance tests."""

from plucker import MultiPoly
from plucker.curve import PROJ_VARS


def degree_monomials(d):
    return [(i, j, d - i - j)
            for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def seeded_form(field, sampler, degree, height=6):
    """A random homogeneous form of the given degree, never zero."""
    while True:
        terms = {}
        for exps in degree_monomials(degree):
            c = sampler.scalar(field, height=height)
            if c:
                terms[exps] = c
        if terms:
            return MultiPoly(field, PROJ_VARS, terms)


def seeded_form_coprime(curve, sampler, degree, height=6):
    """Same, but never divisible by the curve form."""
    while True:
        G = seeded_form(curve.field, sampler, degree, height=height)
        if not curve.form.divides(G):
            return G


def seeded_line(field, sampler, height=9):
    """A random projective line, never the zero form."""
    while True:
        coeffs = tuple(sampler.scalar(field, height=height)
                       for _ in range(3))
        if any(coeffs):
            return coeffs

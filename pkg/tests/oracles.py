"""Independent cross-checks backing the test suite.

Everything here runs through sympy with its own parsing, so none of
the package's series, elimination or factorization code is involved.
Agreement between the two routes is then an actual check, not a
tautology.
"""

from fractions import Fraction

import sympy

X, Y, Z = sympy.symbols("X Y Z")
U, V, W = sympy.symbols("U V W")

_LOCALS = {"X": X, "Y": Y, "Z": Z, "U": U, "V": V, "W": W}


def to_sympy(text):
    return sympy.sympify(text.replace("^", "**"), locals=_LOCALS)


def _rat(c):
    if isinstance(c, Fraction):
        return sympy.Rational(c.numerator, c.denominator)
    return sympy.Rational(c)


def line_profile(curve_text, coeffs):
    """Intersection profile of a curve with a line, by resultant only.

    One variable with nonzero line coefficient is eliminated; the
    resultant is a binary form of degree n in the other two.  The
    profile is the sorted multiset of (factor degree, multiplicity)
    over its irreducible factors, the point at infinity of the
    dehomogenized chart included, so it lists the intersection places
    by conjugacy-class size and local multiplicity.
    """
    F = to_sympy(curve_text)
    n = sympy.Poly(F, X, Y, Z).total_degree()
    u, v, w = (_rat(c) for c in coeffs)
    L = u * X + v * Y + w * Z
    if v != 0:
        elim, s, t = Y, X, Z
    elif u != 0:
        elim, s, t = X, Y, Z
    else:
        elim, s, t = Z, X, Y
    R = sympy.resultant(F, L, elim)
    r1 = sympy.Poly(R.subs(t, 1), s)
    profile = []
    drop = n - r1.degree()
    if drop > 0:
        profile.append((1, drop))
    _, factors = sympy.factor_list(r1.as_expr(), s)
    for fac, mult in factors:
        deg = sympy.Poly(fac, s).degree()
        if deg > 0:
            profile.append((int(deg), int(mult)))
    return sorted(profile)


def gradient_at(curve_text, point):
    """The tangent line coefficients (the gradient) at a rational
    point, or None if the gradient vanishes there."""
    F = to_sympy(curve_text)
    sub = dict(zip((X, Y, Z), (_rat(c) for c in point)))
    if F.subs(sub) != 0:
        raise ValueError("point is not on the curve: %r" % (point,))
    grad = tuple(sympy.diff(F, var).subs(sub) for var in (X, Y, Z))
    if all(g == 0 for g in grad):
        return None
    return grad


def dual_vanishes_on_tangents(curve_text, dual_text, points):
    """True when the claimed dual equation kills the tangent line of
    the curve at every given smooth rational point."""
    D = to_sympy(dual_text)
    for pt in points:
        grad = gradient_at(curve_text, pt)
        if grad is None:
            raise ValueError("singular point in tangent oracle: %r" % (pt,))
        value = D.subs(dict(zip((U, V, W), grad)))
        if sympy.simplify(value) != 0:
            return False
    return True


def hessian_det(curve_text):
    F = to_sympy(curve_text)
    return sympy.expand(sympy.hessian(F, (X, Y, Z)).det())


def resultant_of(f_text, g_text, var_name):
    return sympy.expand(sympy.resultant(to_sympy(f_text),
                                        to_sympy(g_text), _LOCALS[var_name]))


def expand_equal(a_text, b_text):
    """Exact equality of two polynomial expressions after expansion."""
    return sympy.expand(to_sympy(a_text) - to_sympy(b_text)) == 0


# Rational parametrizations of the genus-zero corpus curves, used to
# mass-produce exact points for the tangent-line oracles.

def conic_point(t):
    t = _rat(t)
    return (1 - t ** 2, 2 * t, 1 + t ** 2)


def nodal_cubic_point(t):
    t = _rat(t)
    return (t ** 2 - 1, t * (t ** 2 - 1), sympy.Integer(1))


def cuspidal_cubic_point(t):
    t = _rat(t)
    return (t ** 2, t ** 3, sympy.Integer(1))

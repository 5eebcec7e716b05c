"""Squarefree and irreducibility verdicts for plane projective forms.

The squarefree test is resultant-based: after a shear that gives the
form full degree in one variable, Res(F, dF) vanishes exactly when F
has a repeated factor, as long as every factor stays separable in that
variable.  Characteristic zero has no separability trap, so a single
shear decides.  Over GF(p) a vanishing resultant may instead mean the
chosen direction was inseparable for some factor, so the test scans
shears; a clean nonzero resultant certifies squarefree on the spot,
while the all-zero outcome certifies a repeated factor only when the
field is large enough (p > 2n) for the counting argument to close.

Irreducibility over the rationals is delegated to sympy's multivariate
factorization.  Over GF(p), where sympy has no multivariate support,
structural certificates take over: a coordinate factor, a missing
variable (binary form), linearity in one variable with coprime
cofactors, and finally smoothness of the projective zero locus, each of
which decides geometric irreducibility outright.
"""

from .algebra import univar
from .algebra.factor import multivar_nonconstant_factor_count, univar_factor
from .algebra.fields import QQ
from .algebra.multipoly import Homography, MultiPoly, resultant
from .errors import UnsupportedFieldError, ValidationError

SQUAREFREE = "squarefree"
NON_SQUAREFREE = "non-squarefree"
IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"


def squarefree_and_irreducible(F):
    """Classify a homogeneous trivariate form: 'irreducible',
    'reducible', or 'non-squarefree' (which takes precedence)."""
    n = F.total_degree()
    if n <= 0:
        raise ValidationError("constant form has no curve")
    if not F.is_homogeneous():
        raise ValidationError("form must be homogeneous")
    if n == 1:
        return IRREDUCIBLE
    if not _is_squarefree(F):
        return NON_SQUAREFREE
    return IRREDUCIBLE if _is_irreducible_squarefree(F) else REDUCIBLE


def _full_degree_var(F):
    n = F.total_degree()
    for v in F.vars:
        if F.degree_in(v) == n:
            return v
    return None


def _shear(F, orient, c, e):
    """Coordinate shear mixing the other two variables into slot
    `orient`; afterwards the full-degree coefficient is F at the point
    with 1 in that slot and (c, e) in the others."""
    field = F.field
    c = field.coerce(c)
    e = field.coerce(e)
    one, zero = field.one, field.zero
    if orient == 0:
        m = [[one, zero, zero], [c, one, zero], [e, zero, one]]
    elif orient == 1:
        m = [[one, c, zero], [zero, one, zero], [zero, e, one]]
    else:
        m = [[one, zero, c], [zero, one, e], [zero, zero, one]]
    return Homography(field, m).apply(F)


def _char_zero_pairs():
    yield (0, 0)
    for k in range(1, 9):
        for c in range(-k, k + 1):
            for e in range(-k, k + 1):
                if max(abs(c), abs(e)) == k:
                    yield (c, e)


def _is_squarefree(F):
    field = F.field
    n = F.total_degree()
    p = field.characteristic
    v0 = _full_degree_var(F)
    if v0 is not None:
        d = _sqfree_resultant(F, v0)
        if d is True:
            return True
        if d is False and p == 0:
            return False
    if p == 0:
        for orient in range(3):
            for (c, e) in _char_zero_pairs():
                G = _shear(F, orient, c, e)
                v = F.vars[orient]
                if G.degree_in(v) != n:
                    continue
                d = _sqfree_resultant(G, v)
                if d is None:
                    continue
                return d
        raise ValidationError("no shear gives the form full degree")
    # GF(p): scan every shear; one nonzero resultant certifies
    # squarefree, a full sweep of zeros certifies a repeated factor
    # once p is past the counting bound
    saw_candidate = False
    for orient in range(3):
        for ci in range(p):
            for ei in range(p):
                G = _shear(F, orient, ci, ei)
                v = F.vars[orient]
                if G.degree_in(v) != n:
                    continue
                saw_candidate = True
                d = _sqfree_resultant(G, v)
                if d is True:
                    return True
    if not saw_candidate:
        raise UnsupportedFieldError(
            "squarefree test inconclusive over GF(%d): no full-degree shear" % p)
    if p > 2 * n:
        return False
    raise UnsupportedFieldError(
        "squarefree test inconclusive over GF(%d) at degree %d: "
        "field too small to certify a repeated factor" % (p, n))


def _sqfree_resultant(F, v):
    """True: certified squarefree.  False: Res(F, F_v) = 0, which in
    characteristic zero certifies a repeated factor.  None: derivative
    vanished, no information."""
    Fv = F.derivative(v)
    if not Fv.terms:
        return None
    D = resultant(F, Fv, v)
    return bool(D.terms)


def _is_irreducible_squarefree(F):
    field = F.field
    if field.characteristic == 0:
        count = multivar_nonconstant_factor_count(F)
        if count is None:
            raise UnsupportedFieldError(
                "factorization backend unavailable for this field")
        return count == 1
    return _fp_irreducible(F)


def _var_divides(F, v):
    i = F.vars.index(v)
    return all(e[i] > 0 for e in F.terms)


def _missing_var(F):
    for v in F.vars:
        if F.degree_in(v) <= 0:
            return v
    return None


def _binary_factor_count(F, absent):
    """Number of nonconstant factors of a binary form (the variable
    `absent` does not occur), counted without multiplicity."""
    names = [v for v in F.vars if v != absent]
    u, w = names
    iu, iw = F.vars.index(u), F.vars.index(w)
    coeffs = {}
    for e, c in F.terms.items():
        coeffs[e[iu]] = c
    n = F.total_degree()
    plist = univar.trim([coeffs.get(i, F.field.zero) for i in range(n + 1)])
    count = 1 if univar.degree(plist) < n else 0  # power of w splits off
    if univar.degree(plist) >= 1:
        count += len(univar_factor(plist, F.field))
    return count


def _fp_irreducible(F):
    field = F.field
    for v in F.vars:
        if _var_divides(F, v):
            return False  # degree >= 2 with a coordinate factor
    absent = _missing_var(F)
    if absent is not None:
        return _binary_factor_count(F, absent) == 1
    for v in F.vars:
        if F.degree_in(v) == 1:
            return _linear_in_var_irreducible(F, v)
    if _smooth_certificate(F):
        return True
    raise UnsupportedFieldError(
        "irreducibility undecided over GF(%d): no applicable certificate"
        % field.characteristic)


def _linear_in_var_irreducible(F, v):
    """F = A v + B with A, B binary forms in the other variables; F is
    irreducible exactly when A and B share no root (as forms)."""
    field = F.field
    names = [w for w in F.vars if w != v]
    iu = F.vars.index(names[0])
    iv = F.vars.index(v)
    A = {}
    B = {}
    for e, c in F.terms.items():
        (A if e[iv] == 1 else B)[e[iu]] = c
    if not B:
        return False  # F = A v, and deg >= 2 means A is nonconstant
    degA = F.total_degree() - 1
    degB = F.total_degree()
    a = univar.trim([A.get(i, field.zero) for i in range(degA + 1)])
    b = univar.trim([B.get(i, field.zero) for i in range(degB + 1)])
    shared_infinity = univar.degree(a) < degA and univar.degree(b) < degB
    if shared_infinity:
        return False
    g = univar.gcd(a, b)
    return univar.degree(g) == 0


def _smooth_certificate(F):
    """Empty singular locus certifies geometric irreducibility for a
    squarefree form.  Returns False when the locus is nonempty or the
    solver cannot close the question."""
    from .zeros import projective_common_zeros
    field = F.field
    system = [F]
    for v in F.vars:
        Fv = F.derivative(v)
        if Fv.terms:
            system.append(Fv)
    if len(system) == 1:
        return False
    try:
        return not projective_common_zeros(system, field)
    except (ValidationError, UnsupportedFieldError):
        return False

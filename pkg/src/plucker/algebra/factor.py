"""Factorization engine.

Univariate factorization over Q and GF(p) is delegated to sympy with
exact conversions both ways (Fractions and residues in, the same out).
Root extraction inside a simple extension of Q uses the norm/resultant
trick so no second extension is ever built; over GF(p) extensions the
field is small enough to probe directly.

Only validation and root finding go through here.  Nothing downstream
receives a sympy object.
"""

from fractions import Fraction

import sympy

from ..errors import UnsupportedFieldError, ValidationError
from . import univar
from .fields import ExtScalar, FpScalar, PrimeField, QQ, Rationals, SimpleExtension

_T = sympy.Symbol("_t")


def _to_sympy(coeffs, field):
    if isinstance(field, Rationals):
        expr = sum((sympy.Rational(c.numerator, c.denominator) * _T ** i
                    for i, c in enumerate(coeffs)), sympy.Integer(0))
        return sympy.Poly(expr, _T, domain="QQ")
    if isinstance(field, PrimeField):
        expr = sum((sympy.Integer(int(c.val)) * _T ** i
                    for i, c in enumerate(coeffs)), sympy.Integer(0))
        return sympy.Poly(expr, _T, modulus=field.p)
    raise UnsupportedFieldError("factorization over %r is unsupported" % (field,))


def _from_sympy(poly, field):
    cs = list(reversed(poly.all_coeffs()))
    if isinstance(field, Rationals):
        return [Fraction(int(c.p), int(c.q)) if hasattr(c, "p") else Fraction(int(c))
                for c in cs]
    return [FpScalar(int(c), field.p) for c in cs]


def _canon_key(coeffs):
    return (len(coeffs), tuple(str(c) for c in coeffs))


def univar_factor(coeffs, field):
    """Monic irreducible factors of a univariate polynomial over Q or
    GF(p), as (low-first coefficient list, multiplicity), canonically
    sorted.  The constant content is dropped."""
    coeffs = univar.trim([field.coerce(c) for c in coeffs])
    if univar.degree(coeffs) < 1:
        return []
    poly = _to_sympy(coeffs, field)
    _, factors = poly.factor_list()
    out = []
    for f, mult in factors:
        fc = univar.monic(_from_sympy(f, field))
        if univar.degree(fc) >= 1:
            out.append((fc, int(mult)))
    out.sort(key=lambda fm: _canon_key(fm[0]))
    return out


def univar_is_irreducible(coeffs, field):
    if isinstance(field, SimpleExtension):
        raise UnsupportedFieldError(
            "field tower exceeded: cannot certify irreducibility over an extension")
    factors = univar_factor(coeffs, field)
    return len(factors) == 1 and factors[0][1] == 1 and \
        univar.degree(factors[0][0]) == univar.degree(univar.trim(coeffs))


def univar_roots(coeffs, field):
    """Roots lying in the (base) field itself, as (root, multiplicity)."""
    out = []
    for f, mult in univar_factor(coeffs, field):
        if univar.degree(f) == 1:
            out.append((-f[0], mult))
    return out


def roots_and_residual(coeffs, field):
    """Split off all roots in `field`: returns (roots [(r, mult)],
    residual list of (irreducible factor of degree >= 2, multiplicity)).

    Works over Q, GF(p) and one simple extension of either."""
    if isinstance(field, (Rationals, PrimeField)):
        roots, residual = [], []
        for f, mult in univar_factor(coeffs, field):
            if univar.degree(f) == 1:
                roots.append((-f[0], mult))
            else:
                residual.append((f, mult))
        return roots, residual
    if isinstance(field, SimpleExtension):
        return _roots_in_extension(coeffs, field)
    raise UnsupportedFieldError("root finding over %r is unsupported" % (field,))


def _roots_in_extension(coeffs, ext):
    coeffs = univar.trim([ext.coerce(c) for c in coeffs])
    if univar.degree(coeffs) < 1:
        return [], []
    if isinstance(ext.base, PrimeField):
        size = ext.base.p ** ext.degree
        if size > 20000:
            raise UnsupportedFieldError(
                "root search in GF(%d^%d) too large" % (ext.base.p, ext.degree))
        roots = []
        rem = list(coeffs)
        from itertools import product
        for tup in product(range(ext.base.p), repeat=ext.degree):
            cand = ExtScalar([FpScalar(v, ext.base.p) for v in tup], ext)
            if not univar.evaluate(rem, cand):
                mult = 0
                while True:
                    q, r = univar.divmod_exact_field(rem, [-cand, ext.one])
                    if univar.trim(r):
                        break
                    rem = q
                    mult += 1
                roots.append((cand, mult))
        residual = [(rem, 1)] if univar.degree(rem) >= 1 else []
        return roots, residual
    return _roots_by_norm(coeffs, ext)


def _roots_by_norm(coeffs, ext):
    """Trager-style root extraction in Q(theta): resultant norm down to Q,
    factor there, lift linear pieces back by gcd.

    The norm of a polynomial with a repeated root is never squarefree,
    so the search runs on the squarefree part; multiplicities are
    recovered afterwards by trial division against the original."""
    from .multipoly import MultiPoly, resultant

    base = ext.base
    m = ext._minpoly_list
    work = univar.monic(coeffs)
    sq = univar.gcd(work, univar.derivative(work))
    if univar.degree(sq) >= 1:
        work, _ = univar.divmod_exact_field(work, sq)
        work = univar.monic(work)
    for s in range(0, 8):
        sshift = base.coerce(s)
        # Phi(c, z) = phi(c - s z) with theta -> z
        variables = ("c", "z")
        c_var = MultiPoly.variable(base, variables, "c")
        z_var = MultiPoly.variable(base, variables, "z")
        arg = c_var - z_var * sshift
        phi = MultiPoly.zero(base, variables)
        for i, coef in enumerate(work):
            piece = MultiPoly.zero(base, variables)
            for j, bj in enumerate(coef.coeffs):
                if bj:
                    piece = piece + z_var ** j * bj
            phi = phi + piece * arg ** i
        mz = MultiPoly.zero(base, variables)
        for j, bj in enumerate(m):
            if bj:
                mz = mz + z_var ** j * bj
        if phi.degree_in("z") < 1:
            # squarefree part is rational: factor downstairs directly
            rational = [coef.coeffs[0] for coef in work]
            roots = []
            rem = list(coeffs)
            for f, _ in univar_factor(rational, base):
                if univar.degree(f) != 1:
                    continue
                r = ext.embed(-f[0])
                mult = 0
                while True:
                    q, rr = univar.divmod_exact_field(rem, [-r, ext.one])
                    if univar.trim(rr):
                        break
                    rem = q
                    mult += 1
                if mult:
                    roots.append((r, mult))
            residual = [(rem, 1)] if univar.degree(rem) >= 1 else []
            roots.sort(key=lambda rm: _canon_key([rm[0]]))
            return roots, residual
        norm = resultant(mz, phi, "z")
        ncoeffs = [norm.coefficient_of("c", k).terms.get((0, 0), base.zero)
                   for k in range(norm.degree_in("c") + 1)]
        dn = univar.degree(ncoeffs)
        if dn < 1:
            continue
        der = univar.derivative(ncoeffs)
        if univar.degree(univar.gcd(ncoeffs, der)) == 0:
            break
    else:
        raise UnsupportedFieldError("norm stayed degenerate; root search failed")
    roots = []
    rem = list(coeffs)
    for f, _ in univar_factor(ncoeffs, base):
        # candidate factor upstairs: f(c + s*theta)
        fe = [ext.embed(c) for c in f]
        shift_arg = [ext.gen * sshift, ext.one]  # c + s*theta
        fup = []
        for i, c in enumerate(fe):
            term = univar.scale(_poly_pow(shift_arg, i, ext), c)
            fup = univar.add(fup, term)
        g = univar.gcd(rem, fup)
        if univar.degree(g) == 1:
            r = -g[0] / g[1]
            mult = 0
            while True:
                q, rr = univar.divmod_exact_field(rem, [-r, ext.one])
                if univar.trim(rr):
                    break
                rem = q
                mult += 1
            if mult:
                roots.append((r, mult))
    residual = [(rem, 1)] if univar.degree(rem) >= 1 else []
    roots.sort(key=lambda rm: _canon_key([rm[0]]))
    return roots, residual


def _poly_pow(p, e, field):
    out = [field.one]
    for _ in range(e):
        out = univar.mul(out, p)
    return out


def multivar_nonconstant_factor_count(mp):
    """Number of nonconstant irreducible factors counted with multiplicity,
    over Q or GF(p).  Used only by the input-form classifier."""
    field = mp.field
    syms = sympy.symbols(" ".join(mp.vars))
    if len(mp.vars) == 1:
        syms = (syms,)
    expr = sympy.Integer(0)
    for e, c in mp.terms.items():
        if isinstance(field, Rationals):
            co = sympy.Rational(c.numerator, c.denominator)
        elif isinstance(field, PrimeField):
            co = sympy.Integer(int(c.val))
        else:
            raise UnsupportedFieldError(
                "form classification over %r is unsupported" % (field,))
        mono = co
        for s, k in zip(syms, e):
            if k:
                mono = mono * s ** k
        expr = expr + mono
    try:
        if isinstance(field, PrimeField):
            _, factors = sympy.factor_list(expr, *syms, modulus=field.p)
        else:
            _, factors = sympy.factor_list(expr, *syms)
    except (sympy.polys.polyerrors.DomainError, NotImplementedError):
        return None
    count = 0
    for f, mult in factors:
        if sympy.Poly(f, *syms).total_degree() >= 1:
            count += int(mult)
    return count

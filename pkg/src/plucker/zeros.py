"""Common zeros of small systems of plane forms, kept exact.

The solver eliminates one variable through pairwise resultants, walks
the irreducible factors of the eliminant, and recovers the other
coordinate by univariate gcds over the factor's field.  A conjugate
cluster is returned once, over a single simple extension of the base
field; when a cluster would naively need an extension of an extension,
it is flattened through a primitive element x + lambda*y instead, and
only if no small lambda works does the solver give up on the tower.

Everything here is deterministic: factor lists arrive canonically
sorted, ladders of trial constants are fixed, and output points are
sorted by a total key.
"""

from fractions import Fraction

from .algebra import univar
from .algebra.factor import roots_and_residual, univar_factor
from .algebra.fields import SimpleExtension, base_field_of
from .algebra.multipoly import MultiPoly, resultant, univariate_coeffs
from .errors import UnsupportedFieldError, ValidationError

FLATTEN_LADDER = 24


class PointRecord:
    """A common zero, standing for its full conjugacy class.

    coords is an affine pair or a projective triple over `field`;
    conj_degree is the orbit size over the base field.
    """

    __slots__ = ("coords", "field", "conj_degree")

    def __init__(self, coords, field, conj_degree):
        self.coords = tuple(coords)
        self.field = field
        self.conj_degree = conj_degree

    def __repr__(self):
        return "PointRecord(%s, conj %d)" % (list(self.coords), self.conj_degree)


def scalar_sort_key(c):
    if isinstance(c, Fraction):
        return ("q", c.numerator, c.denominator)
    val = getattr(c, "val", None)
    if val is not None:
        return ("p", val)
    coeffs = getattr(c, "coeffs", None)
    if coeffs is not None:
        return ("e",) + tuple(scalar_sort_key(x) for x in coeffs)
    return ("o", str(c))


def point_sort_key(rec):
    ext = isinstance(rec.field, SimpleExtension)
    mod = tuple(scalar_sort_key(c) for c in rec.field.minpoly) if ext else ()
    return (rec.conj_degree, ext, mod,
            tuple(scalar_sort_key(c) for c in rec.coords))


def _is_const(g):
    return g.total_degree() <= 0


def _univar_in(g, name):
    """Coefficient list of g along `name`, demanding the other variable
    to be absent.  Low degree first."""
    other = [v for v in g.vars if v != name]
    coeffs = []
    for mp in univariate_coeffs(g, name):
        if any(mp.degree_in(o) > 0 for o in other):
            raise ValueError("not univariate in %s" % name)
        coeffs.append(mp.terms.get(tuple(0 for _ in mp.vars), g.field.zero))
    return univar.trim(coeffs)


def _swap_vars(g):
    xv, yv = g.vars
    return MultiPoly(g.field, (xv, yv),
                     {(j, i): c for (i, j), c in g.terms.items()})


def affine_common_zeros(gs, field):
    """All common zeros of the 2-variable polynomials gs, as PointRecords
    with affine (x0, y0) coordinates.

    Raises ValidationError when the solution set is not finite and
    UnsupportedFieldError when a cluster cannot be presented over one
    simple extension.
    """
    gs = [g for g in gs if g.terms]
    if not gs:
        raise ValidationError("empty system has a plane of zeros")
    for g in gs:
        if _is_const(g):
            return []
    try:
        return _affine_zeros_oriented(gs, field)
    except _NoEliminant:
        swapped = [_swap_vars(g) for g in gs]
        try:
            pts = _affine_zeros_oriented(swapped, field)
        except _NoEliminant:
            raise ValidationError(
                "system does not cut out finitely many points")
        return [PointRecord((p.coords[1], p.coords[0]), p.field, p.conj_degree)
                for p in pts]


class _NoEliminant(Exception):
    pass


def _affine_zeros_oriented(gs, field):
    xv, yv = gs[0].vars
    pure_x = [g for g in gs if g.degree_in(yv) == 0]
    mixed = [g for g in gs if g.degree_in(yv) > 0]
    xcons = []
    for g in pure_x:
        xcons.append(_univar_in(g, xv))
    for a in range(len(mixed)):
        for b in range(a + 1, len(mixed)):
            r = resultant(mixed[a], mixed[b], yv)
            if r.terms:
                xcons.append(_univar_in(r, xv))
    if not xcons and pure_x:
        raise AssertionError("unreachable: pure-x gives a constraint")
    if not xcons:
        raise _NoEliminant()
    elim = xcons[0]
    for c in xcons[1:]:
        elim = univar.gcd(elim, c)
    if univar.degree(elim) < 0:
        raise ValidationError(
            "system shares a curve component; zeros are not finite")
    if univar.degree(elim) == 0:
        return []
    out = []
    for (fac, _mult) in univar_factor(elim, field):
        d1 = univar.degree(fac)
        if d1 == 1:
            K1 = field
            x0 = -fac[0]
        else:
            if isinstance(field, SimpleExtension):
                raise UnsupportedFieldError(
                    "field tower exceeded: zero cluster over an extension base")
            K1 = SimpleExtension(field, fac, gen_name="b",
                                 check_irreducible=False)
            x0 = K1.gen
        out.extend(_points_above(fac, x0, K1, gs, field))
    out.sort(key=point_sort_key)
    return out


def _points_above(fac, x0, K1, gs, field):
    """Zeros of the system on the fiber x = x0 (a root of fac)."""
    xv, yv = gs[0].vars
    d1 = univar.degree(fac)
    dummy = {xv: x0, yv: K1.zero}
    hs = []
    for g in gs:
        h = [mp.evaluate(dummy) for mp in univariate_coeffs(g, yv)]
        h = univar.trim([K1.coerce(c) for c in h])
        hs.append(h)
    nonzero = [h for h in hs if univar.degree(h) >= 0]
    if not nonzero:
        raise ValidationError(
            "system shares a vertical line; zeros are not finite")
    if any(univar.degree(h) == 0 for h in nonzero):
        return []
    g0 = nonzero[0]
    for h in nonzero[1:]:
        g0 = univar.gcd(g0, h)
    if univar.degree(g0) == 0:
        return []
    out = []
    roots, residual = roots_and_residual(g0, K1)
    for (y0, _mult) in roots:
        out.append(PointRecord((x0, y0), K1, d1))
    for (s, _mult) in residual:
        d2 = univar.degree(s)
        if d2 < 2:
            continue
        if d1 == 1:
            if isinstance(field, SimpleExtension):
                raise UnsupportedFieldError(
                    "field tower exceeded: zero cluster over an extension base")
            K2 = SimpleExtension(field, [field.coerce(c) for c in s],
                                 gen_name="b", check_irreducible=False)
            out.append(PointRecord((K2.coerce(x0), K2.gen), K2, d2))
        else:
            out.extend(_flatten_cluster(fac, s, K1, gs, field))
    return out


def _flatten_cluster(fac, s, K1, gs, field):
    """Present the cluster {fac(x) = 0, s(y) = 0 over K1} over single
    extensions of the base via a primitive element w = x + lambda*y."""
    if isinstance(field, SimpleExtension):
        raise UnsupportedFieldError(
            "field tower exceeded: cluster needs an extension of an extension")
    xv, yv = gs[0].vars
    wv = "@w"
    vars3 = (wv, xv, yv)
    # lift s: its K1 coefficients are polynomials in the generator,
    # which is the x-root itself, so substitute x for the generator
    S_terms = {}
    for j, c in enumerate(s):
        for i, base_c in enumerate(c.coeffs):
            if base_c:
                key = (0, i, j)
                S_terms[key] = S_terms.get(key, field.zero) + base_c
    S = MultiPoly(field, vars3, S_terms)
    R = MultiPoly(field, vars3,
                  {(0, i, 0): c for i, c in enumerate(fac) if c})
    d1 = univar.degree(fac)
    d2 = univar.degree(s)
    for lam_i in range(1, FLATTEN_LADDER + 1):
        lam = field.coerce(lam_i)
        if not lam:
            continue
        lin = MultiPoly(field, vars3, {
            (1, 0, 0): field.one,
            (0, 1, 0): -field.one,
            (0, 0, 1): -lam,
        })
        inner = resultant(S, lin, yv)
        if not inner.terms:
            continue
        if inner.degree_in(xv) <= 0 or R.degree_in(xv) <= 0:
            continue
        M = resultant(R, inner, xv)
        mw = _univar_in(M, wv)
        if univar.degree(mw) != d1 * d2:
            continue
        factors = univar_factor(mw, field)
        recs = []
        ok = True
        for (mu, _mult) in factors:
            dmu = univar.degree(mu)
            if dmu == 1:
                E = field
                w0 = -mu[0]
            else:
                E = SimpleExtension(field, mu, gen_name="b",
                                    check_irreducible=False)
                w0 = E.gen
            # x-coordinate: common root of fac(x) and s-with-y=(w0-x)/lam
            lam_inv = E.one / E.coerce(lam)
            ylin = [E.coerce(w0) * lam_inv, -lam_inv]  # y = (w0 - x)/lam
            subbed = [E.zero]
            ypow = [E.one]
            for j, cK in enumerate(s):
                # cK in K1: rewrite its generator as x
                cpoly = [E.coerce(t) for t in cK.coeffs]
                term = univar.mul(cpoly, ypow)
                subbed = univar.add(subbed, term)
                ypow = univar.mul(ypow, ylin)
            facE = [E.coerce(c) for c in fac]
            gx = univar.gcd(facE, univar.trim(subbed))
            if univar.degree(gx) != 1:
                ok = False
                break
            x0 = -gx[0] / gx[1]
            y0 = (E.coerce(w0) - x0) * lam_inv
            if not _vanishes_all(gs, x0, y0, E):
                ok = False
                break
            recs.append(PointRecord((x0, y0), E, dmu))
        if ok and sum(r.conj_degree for r in recs) == d1 * d2:
            return recs
    raise UnsupportedFieldError(
        "field tower exceeded: no small primitive element flattens the cluster")


def _vanishes_all(gs, x0, y0, E):
    xv, yv = gs[0].vars
    for g in gs:
        v = g.evaluate({xv: x0, yv: y0})
        if v:
            return False
    return True


# ----------------------------------------------------------------------
# projective layer


def binary_roots(coeffs, field):
    """Projective roots of a binary form given as the coefficient list of
    form = sum coeffs[k] * U^k * V^(deg-k), low U-degree first.

    Returns PointRecords with (u0, v0) pairs, one per conjugacy class.
    Multiplicities are dropped.
    """
    coeffs = list(coeffs)
    n = len(coeffs) - 1
    out = []
    k = n
    while k >= 0 and not coeffs[k]:
        k -= 1
    if k < n:
        out.append(PointRecord((field.one, field.zero), field, 1))
    p = univar.trim(coeffs[:k + 1])
    if univar.degree(p) >= 1:
        roots, residual = roots_and_residual(p, field)
        for (u0, _mult) in roots:
            out.append(PointRecord((u0, field.one), field, 1))
        for (fac, _mult) in residual:
            d = univar.degree(fac)
            if d < 2:
                continue
            if isinstance(field, SimpleExtension):
                raise UnsupportedFieldError(
                    "field tower exceeded: binary form root over an extension base")
            E = SimpleExtension(field, fac, gen_name="b",
                                check_irreducible=False)
            out.append(PointRecord((E.gen, E.one), E, d))
    out.sort(key=point_sort_key)
    return out


def _binary_at_infinity(F):
    """The restriction F(X, Y, 0) as a pair (p, inf_root): p is the
    dehomogenized coefficient list in t = X/Y (low degree first,
    trimmed) and inf_root says whether (1 : 0) is a root, read off the
    degree defect.  None when F vanishes on the whole line Z = 0."""
    coeffs = {}
    for (i, j, k), c in F.terms.items():
        if k == 0:
            coeffs[i] = c
    if not coeffs:
        return None
    n = F.total_degree()
    p = univar.trim([coeffs.get(i, F.field.zero) for i in range(n + 1)])
    return p, univar.degree(p) < n


def projective_common_zeros(forms, field):
    """Common projective zeros of trivariate forms, as PointRecords with
    (X, Y, Z) triples normalized so the first nonzero coordinate is 1."""
    forms = [F for F in forms if F.terms]
    if not forms:
        raise ValidationError("empty system has a plane of zeros")
    if any(F.total_degree() == 0 for F in forms):
        return []
    names = forms[0].vars
    out = []
    # affine chart: last coordinate 1
    gs = []
    affine_empty = False
    for F in forms:
        g = _dehomogenize(F)
        if _is_const(g) and g.terms:
            affine_empty = True
            break
        gs.append(g)
    if not affine_empty:
        for rec in affine_common_zeros(gs, field):
            x0, y0 = rec.coords
            out.append(PointRecord(
                _normalize_proj((x0, y0, rec.field.one)), rec.field,
                rec.conj_degree))
    # line at infinity
    bins = []
    inf_root_everywhere = True
    for F in forms:
        b = _binary_at_infinity(F)
        if b is None:
            continue
        p, inf_root = b
        bins.append(p)
        inf_root_everywhere = inf_root_everywhere and inf_root
    if not bins:
        raise ValidationError(
            "every form vanishes on the line at infinity; zeros are not finite")
    if inf_root_everywhere:
        out.append(PointRecord(
            _normalize_proj((field.one, field.zero, field.zero)), field, 1))
    g0 = bins[0]
    for b in bins[1:]:
        g0 = univar.gcd(g0, b)
    if univar.degree(g0) >= 1:
        roots, residual = roots_and_residual(g0, field)
        for (t0, _mult) in roots:
            out.append(PointRecord(
                _normalize_proj((t0, field.one, field.zero)), field, 1))
        for (fac, _mult) in residual:
            d = univar.degree(fac)
            if d < 2:
                continue
            if isinstance(field, SimpleExtension):
                raise UnsupportedFieldError(
                    "field tower exceeded: infinity cluster over an extension base")
            E = SimpleExtension(field, fac, gen_name="b",
                                check_irreducible=False)
            out.append(PointRecord(
                _normalize_proj((E.gen, E.one, E.zero)), E, d))
    out.sort(key=point_sort_key)
    return out


def _dehomogenize(F):
    """F(x, y, 1) in the first two variable names."""
    xv, yv, zv = F.vars
    terms = {}
    for (i, j, k), c in F.terms.items():
        key = (i, j)
        terms[key] = terms.get(key, F.field.zero) + c
    return MultiPoly(F.field, (xv, yv), {k: v for k, v in terms.items() if v})


def _normalize_proj(coords):
    first = None
    for c in coords:
        if c:
            first = c
            break
    if first is None:
        raise ValidationError("projective point needs a nonzero coordinate")
    inv = (first / first) / first
    return tuple(c * inv for c in coords)

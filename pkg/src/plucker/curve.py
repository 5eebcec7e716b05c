"""Plane projective curves with exact local branch analysis.

A PlaneCurve wraps an irreducible squarefree homogeneous form over an
exact field.  All local questions (multiplicity, tangents, branch
characters, flexes) are answered through truncated parametrizations
computed on demand and cached per point.

A branch through a point P carries a pair of characters (alpha, beta):
alpha is the order of the branch (its intersection with a generic line
through P) and alpha + beta is the contact with its tangent line.  A
smooth point on a generic curve has a single branch with characters
(1, 1); a flex raises beta; a singular point raises alpha or splits
into several branches.
"""

from .algebra import (MultiPoly, hessian, parse_poly, partial_derivative,
                      poly_to_string, scalar_to_string)
from .classify import (IRREDUCIBLE, NON_SQUAREFREE, REDUCIBLE,
                       squarefree_and_irreducible)
from .errors import (InvariantViolation, PrecisionExhausted,
                     UnsupportedFieldError, ValidationError)
from .puiseux import (INF, TruncatedSeries, branches_of_germ,
                      default_precision, substitute_form)
from .zeros import projective_common_zeros, scalar_sort_key

PROJ_VARS = ("X", "Y", "Z")
CHART_VARS = ("x", "y")

# chart name -> index of the coordinate set to 1
_CHART_INDEX = {"X": 0, "Y": 1, "Z": 2}

# For each chart, the positions of the two affine coordinates within
# (X, Y, Z), in that order.
_CHART_SLOTS = {"Z": (0, 1), "Y": (0, 2), "X": (1, 2)}


def dehomogenize(F, chart):
    """Restrict a homogeneous form on (X, Y, Z) to an affine chart.

    Gives a polynomial in (x, y) where x and y are the two remaining
    coordinates in X, Y, Z order.
    """
    s0, s1 = _CHART_SLOTS[chart]
    terms = {}
    for exp, c in F.terms.items():
        key = (exp[s0], exp[s1])
        terms[key] = terms.get(key, F.field.zero) + c
    return MultiPoly(F.field, CHART_VARS, terms)


def chart_embed(chart, u1, u2, one):
    """Projective coordinates of the chart point (u1, u2)."""
    if chart == "Z":
        return (u1, u2, one)
    if chart == "Y":
        return (u1, one, u2)
    return (one, u1, u2)


def chart_line_to_projective(chart, u, v, w):
    """Lift the affine line u*x + v*y + w = 0 out of a chart."""
    if chart == "Z":
        return (u, v, w)
    if chart == "Y":
        return (u, w, v)
    return (w, u, v)


class PointP2:
    """A projective point, normalized so its first nonzero coordinate
    is 1.  conj_degree > 1 marks a full conjugacy class over the base
    field, represented by one member over a simple extension."""

    __slots__ = ("coords", "field", "conj_degree")

    def __init__(self, coords, field, conj_degree=1):
        coords = tuple(field.coerce(c) for c in coords)
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValidationError("(0, 0, 0) is not a projective point")
        coords = tuple(c / lead for c in coords)
        self.coords = coords
        self.field = field
        self.conj_degree = conj_degree

    @classmethod
    def from_record(cls, rec):
        return cls(rec.coords, rec.field, rec.conj_degree)

    def sort_key(self):
        ext = getattr(self.field, "minpoly", None)
        ext_key = (0,) if ext is None else (
            len(ext), tuple(scalar_sort_key(c) for c in ext))
        return (self.conj_degree, ext_key,
                tuple(scalar_sort_key(c) for c in self.coords))

    def chart(self):
        if self.coords[2]:
            return "Z"
        if self.coords[1]:
            return "Y"
        return "X"

    def chart_coords(self, chart):
        idx = _CHART_INDEX[chart]
        d = self.coords[idx]
        if not d:
            raise ValidationError("point lies outside chart %s" % chart)
        s0, s1 = _CHART_SLOTS[chart]
        return (self.coords[s0] / d, self.coords[s1] / d)

    def __eq__(self, other):
        return (isinstance(other, PointP2)
                and self.sort_key() == other.sort_key())

    def __hash__(self):
        return hash(self.sort_key())

    def __repr__(self):
        return "(%s)" % " : ".join(scalar_to_string(c) for c in self.coords)

    def json_dict(self):
        d = {"coords": [scalar_to_string(c) for c in self.coords],
             "conjugates": str(self.conj_degree)}
        ext = getattr(self.field, "minpoly", None)
        if ext is not None:
            d["field_extension"] = [scalar_to_string(c) for c in ext]
        return d


class Branch:
    """A local branch of a curve, with its characters and tangent.

    Wraps the raw parametrization together with the curve point it
    passes through.  beta is None only for a line, whose tangent
    contact is unbounded.
    """

    __slots__ = ("point", "param", "alpha", "beta", "tangent", "_key")

    def __init__(self, point, param, alpha, beta, tangent):
        self.point = point
        self.param = param
        self.alpha = alpha
        self.beta = beta
        self.tangent = tangent
        self._key = None

    @property
    def conj_degree(self):
        return self.param.conj_degree

    def multiplicity(self):
        """Number of base-field conjugates this branch stands for."""
        return self.point.conj_degree * self.param.conj_degree

    def characters(self):
        return (self.alpha, self.beta)

    def key(self):
        if self._key is None:
            dx, dy = self.param.deviations()
            depth = self.alpha + (self.beta or 1) + 2
            sig = []
            for k in range(1, depth + 1):
                cx = dx.coeff_at(k) if k < dx.prec else None
                cy = dy.coeff_at(k) if k < dy.prec else None
                sig.append((scalar_sort_key(cx) if cx is not None else (0,),
                            scalar_sort_key(cy) if cy is not None else (0,)))
            self._key = (self.param.chart,
                         tuple(scalar_sort_key(c) for c in self.param.center),
                         tuple(scalar_sort_key(c) for c in self.tangent),
                         tuple(sig))
        return self._key

    def tangent_is_rational(self):
        """Whether the tangent line is defined over the base field."""
        base = getattr(self.param.field, "base", None)
        if base is None:
            return True
        return all(_in_base(c) for c in self.tangent)

    def __eq__(self, other):
        return isinstance(other, Branch) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        b = "inf" if self.beta is None else str(self.beta)
        return "Branch(%r, chart %s, characters (%d, %s), conj %d)" % (
            self.point, self.param.chart, self.alpha, b, self.conj_degree)

    def json_dict(self):
        dx, dy = self.param.deviations()
        depth = self.alpha + (self.beta or 1) + 2
        return {
            "point": self.point.json_dict(),
            "chart": self.param.chart,
            "alpha": str(self.alpha),
            "beta": "inf" if self.beta is None else str(self.beta),
            "tangent": [scalar_to_string(c) for c in self.tangent],
            "conjugates": str(self.multiplicity()),
            "x_coefficients": _series_coeff_strings(dx, depth),
            "y_coefficients": _series_coeff_strings(dy, depth),
        }


def _series_coeff_strings(s, depth):
    out = []
    for k in range(1, depth + 1):
        if k < s.prec:
            out.append(scalar_to_string(s.coeff_at(k)))
        else:
            out.append("?")
    return out


def _in_base(c):
    coeffs = getattr(c, "coeffs", None)
    if coeffs is None:
        return True
    return not any(coeffs[1:])


NODE = "node"
CUSP_LIKE = "cusp-like"
OTHER = "other"


class SingularityReport:
    """What sits at one singular point: the branches, the local
    multiplicity, and a coarse kind."""

    __slots__ = ("point", "branches", "multiplicity", "kind")

    def __init__(self, point, branches, multiplicity, kind):
        self.point = point
        self.branches = branches
        self.multiplicity = multiplicity
        self.kind = kind

    def __repr__(self):
        return "SingularityReport(%r, mult %d, %s)" % (
            self.point, self.multiplicity, self.kind)

    def json_dict(self):
        return {
            "point": self.point.json_dict(),
            "multiplicity": str(self.multiplicity),
            "kind": self.kind,
            "branches": [b.json_dict() for b in self.branches],
        }


class FlexRecord:
    """A nonsingular point whose tangent contact exceeds 2."""

    __slots__ = ("point", "branch", "beta", "weight")

    def __init__(self, point, branch):
        self.point = point
        self.branch = branch
        self.beta = branch.beta
        self.weight = branch.beta - 1

    def multiplicity(self):
        return self.branch.multiplicity()

    def __repr__(self):
        return "FlexRecord(%r, beta %d)" % (self.point, self.beta)

    def json_dict(self):
        return {
            "point": self.point.json_dict(),
            "beta": str(self.beta),
            "weight": str(self.weight),
            "conjugates": str(self.multiplicity()),
        }


class PlaneCurve:
    """An irreducible squarefree plane projective curve."""

    def __init__(self, form, _checked=False):
        if tuple(form.vars) != PROJ_VARS:
            form = form.rename_vars(PROJ_VARS)
        if not form.is_homogeneous():
            raise ValidationError("curve form must be homogeneous")
        n = form.total_degree()
        if n < 1:
            raise ValidationError("constant form has no curve")
        if form.field.characteristic == 2:
            raise UnsupportedFieldError("characteristic 2 unsupported")
        if not _checked:
            verdict = squarefree_and_irreducible(form)
            if verdict == NON_SQUAREFREE:
                raise ValidationError(
                    "form has a repeated component: non-squarefree")
            if verdict == REDUCIBLE:
                raise ValidationError(
                    "form is reducible: an irreducible curve is required")
        self.form = form
        self.field = form.field
        self.degree = n
        self._gradient = None
        self._hessian = None
        self._singular = None
        self._branch_cache = {}
        self._flexes = None

    @classmethod
    def new_curve(cls, source, field=None):
        if isinstance(source, MultiPoly):
            return cls(source)
        if field is None:
            raise ValidationError("a field is required to parse a curve")
        return cls(parse_poly(source, field))

    def __repr__(self):
        return "PlaneCurve(%s)" % poly_to_string(self.form)

    def require_degree(self, n_min, what):
        if self.degree < n_min:
            raise ValidationError(
                "%s requires degree >= %d, curve has degree %d"
                % (what, n_min, self.degree))

    # ---------------- global data ----------------

    def gradient(self):
        if self._gradient is None:
            self._gradient = tuple(partial_derivative(self.form, v)
                                   for v in PROJ_VARS)
        return self._gradient

    def hessian_form(self):
        if self._hessian is None:
            self._hessian = hessian(self.form)
        return self._hessian

    def contains(self, point):
        F = self.form
        if point.field != self.field:
            F = F.lift_field(point.field)
        vals = dict(zip(PROJ_VARS, point.coords))
        return not F.evaluate(vals)

    def gradient_at(self, point):
        out = []
        for G in self.gradient():
            if point.field != self.field:
                G = G.lift_field(point.field)
            out.append(G.evaluate(dict(zip(PROJ_VARS, point.coords))))
        return tuple(out)

    def is_smooth_point(self, point):
        return any(self.gradient_at(point))

    def tangent_at_smooth(self, point):
        grad = self.gradient_at(point)
        lead = next((c for c in grad if c), None)
        if lead is None:
            raise ValidationError("point is singular: no single tangent")
        return tuple(c / lead for c in grad)

    def singular_points(self):
        if self._singular is None:
            system = [self.form]
            system.extend(G for G in self.gradient() if G)
            if len(system) == 1:
                raise InvariantViolation(
                    "all partials vanish identically on a squarefree form")
            recs = projective_common_zeros(system, self.field)
            pts = [PointP2.from_record(r) for r in recs]
            pts.sort(key=PointP2.sort_key)
            self._singular = tuple(pts)
        return self._singular

    def is_smooth(self):
        return not self.singular_points()

    # ---------------- local branches ----------------

    def branches_at(self, point, min_precision=None):
        """All branches of the curve through the point, sorted
        deterministically.  Results are cached once computed at
        sufficient precision."""
        ck = point.sort_key()
        hit = self._branch_cache.get(ck)
        if hit is not None and (min_precision is None
                                or hit[0] >= min_precision):
            return hit[1]
        prec = default_precision(self.degree)
        if min_precision is not None and min_precision > prec:
            prec = min_precision
        for _ in range(5):
            try:
                branches = self._branches_uncached(point, prec)
                break
            except PrecisionExhausted:
                prec *= 2
        else:
            raise PrecisionExhausted(
                "branch computation did not stabilize at %r" % (point,))
        self._branch_cache[ck] = (prec, branches)
        return branches

    def _branches_uncached(self, point, prec):
        E = point.field
        chart = point.chart()
        a, b = point.chart_coords(chart)
        F = self.form
        if E != self.field:
            F = F.lift_field(E)
        f = dehomogenize(F, chart)
        fx = f.subs_polys({"x": MultiPoly.variable(E, CHART_VARS, "x")
                           + MultiPoly.const(E, CHART_VARS, a),
                           "y": MultiPoly.variable(E, CHART_VARS, "y")
                           + MultiPoly.const(E, CHART_VARS, b)})
        c00 = fx.terms.get((0, 0))
        if c00:
            raise ValidationError("point does not lie on the curve")
        if self.degree == 1 and not fx.terms.get((0, 1)) \
                and not any(j for (_, j) in fx.terms):
            return (self._line_branch_vertical(point, chart, a, b),)
        f10 = fx.terms.get((1, 0), E.zero)
        f01 = fx.terms.get((0, 1), E.zero)
        swapped = bool(f10) and not f01
        germ = _swap_xy(fx) if swapped else fx
        center = (b, a) if swapped else (a, b)
        raw = branches_of_germ(germ, E, prec, center=center, chart=chart)
        branches = []
        for bp in raw:
            if swapped:
                bp = _swap_param(bp)
            branches.append(self._make_branch(point, bp))
        branches.sort(key=Branch.key)
        return tuple(branches)

    def _line_branch_vertical(self, point, chart, a, b):
        from .puiseux import BranchParam
        E = point.field
        xs = TruncatedSeries.const(E, a)
        ys = TruncatedSeries.const(E, b) + TruncatedSeries.t_power(E, 1)
        param = BranchParam(chart, (a, b), xs, ys, E, 1, 1)
        tangent = _normalize_line(
            chart_line_to_projective(chart, E.one, E.zero, -a))
        return Branch(point, param, 1, None, tangent)

    def _make_branch(self, point, bp):
        E = bp.field
        dx, dy = bp.deviations()
        ox, oy = dx.ord(), dy.ord()
        n = self.degree
        if ox is None and oy is None:
            raise PrecisionExhausted("branch parametrization is constant "
                                     "to precision")
        if ox is None or oy is None:
            # one coordinate is exactly the center: a coordinate line
            if n > 1:
                vanished = dx if ox is None else dy
                if vanished.prec > n:
                    raise InvariantViolation(
                        "coordinate line inside an irreducible curve of "
                        "degree %d" % n)
                raise PrecisionExhausted("tangent contact unresolved")
            a, b = bp.center
            if ox is None:
                u, v, w = E.one, E.zero, -a
                alpha = oy
            else:
                u, v, w = E.zero, E.one, -b
                alpha = ox
            tangent = _normalize_line(
                chart_line_to_projective(bp.chart, u, v, w))
            return Branch(point, bp, alpha, None, tangent)
        a, b = bp.center
        if ox < oy:
            alpha, contact = ox, oy
            u, v, w = E.zero, E.one, -b
        elif oy < ox:
            alpha, contact = oy, ox
            u, v, w = E.one, E.zero, -a
        else:
            alpha = ox
            slope = dy.leading() / dx.leading()
            resid = dy - dx * TruncatedSeries.const(E, slope)
            contact = resid.ord()
            if contact is None:
                if n == 1:
                    tangent = _normalize_line(chart_line_to_projective(
                        bp.chart, -slope, E.one, slope * a - b))
                    return Branch(point, bp, alpha, None, tangent)
                if resid.prec > n * alpha:
                    raise InvariantViolation(
                        "line inside an irreducible curve of degree %d" % n)
                raise PrecisionExhausted("tangent contact unresolved")
            u, v, w = -slope, E.one, slope * a - b
        beta = contact - alpha
        if beta < 1:
            raise InvariantViolation(
                "tangent contact %d does not exceed branch order %d"
                % (contact, alpha))
        tangent = _normalize_line(chart_line_to_projective(bp.chart, u, v, w))
        return Branch(point, bp, alpha, beta, tangent)

    def multiplicity_at(self, point):
        return sum(b.alpha * b.conj_degree for b in self.branches_at(point))

    def classify_singularity(self, point):
        branches = self.branches_at(point)
        mult = sum(b.alpha * b.conj_degree for b in branches)
        geom = sum(b.conj_degree for b in branches)
        kind = OTHER
        if mult == 1:
            raise ValidationError("point is nonsingular")
        if geom == 2 and all(b.alpha == 1 for b in branches):
            if len(branches) == 2:
                distinct = branches[0].tangent != branches[1].tangent
            else:
                distinct = not branches[0].tangent_is_rational()
            if distinct:
                kind = NODE
        elif geom == 1 and branches[0].alpha >= 2:
            kind = CUSP_LIKE
        return SingularityReport(point, branches, mult, kind)

    def singularities(self):
        return tuple(self.classify_singularity(p)
                     for p in self.singular_points())

    # ---------------- flexes ----------------

    def flexes(self):
        """Nonsingular points with tangent contact at least 3, with a
        Bezout cross-check against the degree of the Hessian."""
        if self._flexes is not None:
            return self._flexes
        self.require_degree(2, "flex search")
        n = self.degree
        H = self.hessian_form()
        if not H:
            raise UnsupportedFieldError(
                "hessian vanishes identically: flex locus is not finite")
        if H.is_constant():
            self._flexes = ()
            return self._flexes
        if self.form.divides(H):
            raise UnsupportedFieldError(
                "hessian vanishes on the curve: flex locus is not finite")
        recs = projective_common_zeros([self.form, H], self.field)
        out = []
        total = 0
        char0 = self.field.characteristic == 0
        for rec in recs:
            pt = PointP2.from_record(rec)
            smooth = self.is_smooth_point(pt)
            for br in self.branches_at(pt):
                w = self._hessian_order(br, H)
                total += w * br.multiplicity()
                if smooth:
                    if br.beta < 2:
                        raise InvariantViolation(
                            "hessian vanishes at a smooth point with "
                            "ordinary tangent contact")
                    if char0 and w != br.beta - 1:
                        raise InvariantViolation(
                            "hessian order %d disagrees with contact "
                            "excess %d" % (w, br.beta - 1))
                    out.append(FlexRecord(pt, br))
        if total != 3 * n * (n - 2):
            raise InvariantViolation(
                "hessian intersection total %d misses the expected "
                "%d" % (total, 3 * n * (n - 2)))
        out.sort(key=lambda r: r.point.sort_key())
        self._flexes = tuple(out)
        return self._flexes

    def _hessian_order(self, branch, H):
        bp = branch.param
        if bp.field != self.field:
            H = H.lift_field(bp.field)
        h = dehomogenize(H, bp.chart)
        bound = 3 * self.degree * (self.degree - 2) + 1
        for _ in range(5):
            try:
                return substitute_form(h, bp, bound=bound)
            except PrecisionExhausted:
                bp = self._refresh_param(branch)
        raise PrecisionExhausted("hessian order did not stabilize")

    def _refresh_param(self, branch, min_precision=None):
        pt = branch.point
        prev = self._branch_cache[pt.sort_key()][0]
        target = max(2 * prev, min_precision or 0)
        self._branch_cache.pop(pt.sort_key())
        fresh = self.branches_at(pt, min_precision=target)
        for b in fresh:
            if b.key() == branch.key():
                branch.param = b.param
                return b.param
        raise InvariantViolation("branch lost after precision increase")

    # ---------------- characteristic p diagnostics ----------------

    def is_normal(self):
        """In characteristic p, every tangency must be prime to p.

        Checks the contact order alpha + beta at each singular branch
        and each flex branch; an identically vanishing Hessian already
        means the flex locus is infinite and the curve is not normal.
        Characteristic zero curves are always normal.
        """
        if self.field.characteristic == 0:
            return True
        if self.degree == 1:
            return True
        p = self.field.characteristic
        if not self.hessian_form():
            return False
        suspects = []
        for pt in self.singular_points():
            suspects.extend(self.branches_at(pt))
        try:
            suspects.extend(f.branch for f in self.flexes())
        except UnsupportedFieldError as exc:
            if "hessian" in str(exc):
                return False
            raise
        for br in suspects:
            if br.beta is None:
                continue
            if (br.alpha + br.beta) % p == 0:
                return False
        return True


def _swap_xy(f):
    return MultiPoly(f.field, f.vars,
                     {(j, i): c for (i, j), c in f.terms.items()})


def _swap_param(bp):
    from .puiseux import BranchParam
    a, b = bp.center
    dy = bp.y_series - TruncatedSeries.const(bp.field, b)
    ram = dy.ord()
    if ram is None:
        ram = bp.ramification
    return BranchParam(bp.chart, (b, a), bp.y_series, bp.x_series, bp.field,
                       ram, bp.conj_degree)


def _normalize_line(coeffs):
    lead = next((c for c in coeffs if c), None)
    if lead is None:
        raise InvariantViolation("zero tangent line")
    return tuple(c / lead for c in coeffs)

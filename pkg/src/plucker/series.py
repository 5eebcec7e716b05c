"""Branchwise intersection theory: weighted sets, pencils, Jacobians.

The divisor a form cuts on a curve is computed branch by branch: find
the common points, expand every branch of the curve through them, and
read off the vanishing order of the form along each parametrization.
The grand total must equal the product of the degrees; that Bezout
check runs on every intersection and is not optional.

A pencil of forms induces a map from the curve to the projective line.
Its ramification (the Jacobian weighted set) is found by the same
mechanism: candidate branches come from one auxiliary determinant
form, and the local mapping index at each candidate is read off the
parametrization directly.
"""

from .algebra import MultiPoly, partial_derivative, poly_to_string
from .curve import PROJ_VARS, PointP2, dehomogenize
from .errors import (InvariantViolation, PrecisionExhausted,
                     UnsupportedFieldError, ValidationError)
from .puiseux import evaluate_on_branch
from .zeros import projective_common_zeros

INFINITY = "inf"

_RETRIES = 6


class WeightedSet:
    """Branches with integer weights, merged and deterministically
    ordered.  Negative weights are allowed so differences of divisors
    can be expressed; zero weights are dropped."""

    __slots__ = ("entries",)

    def __init__(self, pairs=()):
        merged = {}
        stash = {}
        for br, w in pairs:
            k = br.key()
            stash[k] = br
            merged[k] = merged.get(k, 0) + w
        self.entries = tuple(sorted(
            ((stash[k], w) for k, w in merged.items() if w),
            key=lambda e: e[0].key()))

    @property
    def total(self):
        return sum(w * br.multiplicity() for br, w in self.entries)

    def weight_of(self, branch):
        k = branch.key()
        for br, w in self.entries:
            if br.key() == k:
                return w
        return 0

    def support(self):
        return tuple(br for br, _ in self.entries)

    def scaled(self, c):
        return WeightedSet((br, c * w) for br, w in self.entries)

    def __add__(self, other):
        return WeightedSet(tuple(self.entries) + tuple(other.entries))

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __eq__(self, other):
        if not isinstance(other, WeightedSet):
            return NotImplemented
        mine = {br.key(): w for br, w in self.entries}
        its = {br.key(): w for br, w in other.entries}
        return mine == its

    def __bool__(self):
        return bool(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        bits = ", ".join("%d x %r" % (w, br) for br, w in self.entries)
        return "WeightedSet(%s; total %d)" % (bits, self.total)

    def json_list(self):
        out = []
        for br, w in self.entries:
            d = br.json_dict()
            d["weight"] = str(w)
            out.append(d)
        return out


def branch_series(curve, branch, G):
    """Truncated series of the form G along the branch."""
    bp = branch.param
    if G.field != bp.field:
        G = G.lift_field(bp.field)
    return evaluate_on_branch(dehomogenize(G, bp.chart), bp)


def form_order_on_branch(curve, branch, G, bound=None):
    """Vanishing order of G along the branch, retrying at higher
    precision until it resolves.  `bound` caps the order by Bezout: a
    series still vanishing past it means G contains the curve."""
    if bound is None:
        bound = curve.degree * G.total_degree() + 1
    for _ in range(_RETRIES):
        s = branch_series(curve, branch, G)
        o = s.ord()
        if o is not None:
            return o
        if s.prec > bound:
            if curve.form.divides(G):
                raise ValidationError(
                    "contains curve: form vanishes along a branch")
            raise InvariantViolation(
                "form order exceeds the Bezout cap %d on %r" % (bound,
                                                                branch))
        curve._refresh_param(branch)
    raise PrecisionExhausted("form order did not stabilize on %r" % (branch,))


def intersect_branchwise(curve, G):
    """The weighted set a form cuts on the curve.

    Every common point contributes each of its branches with the
    vanishing order of G along that branch.  Postcondition: the total
    equals deg(curve) * deg(G).
    """
    _check_form(curve, G)
    if curve.form.divides(G):
        raise ValidationError(
            "contains curve: form vanishes on the whole curve")
    recs = projective_common_zeros([curve.form, G], curve.field)
    entries = []
    for rec in recs:
        pt = PointP2.from_record(rec)
        for br in curve.branches_at(pt):
            w = form_order_on_branch(curve, br, G)
            if w <= 0:
                raise InvariantViolation(
                    "common point with a branch the form misses")
            entries.append((br, w))
    ws = WeightedSet(entries)
    expected = curve.degree * G.total_degree()
    if ws.total != expected:
        raise InvariantViolation(
            "branched intersection total %d differs from the Bezout "
            "product %d" % (ws.total, expected))
    return ws


def _check_form(curve, G):
    if not isinstance(G, MultiPoly) or tuple(G.vars) != PROJ_VARS:
        raise ValidationError("expected a form in X, Y, Z")
    if not G:
        raise ValidationError("zero form cuts no divisor")
    if not G.is_homogeneous():
        raise ValidationError("form must be homogeneous")
    if G.total_degree() < 1:
        raise ValidationError("constant form cuts no divisor")
    if G.field != curve.field:
        raise ValidationError("form and curve live over different fields")


def divisor_of(curve, G):
    """Alias with the classical name."""
    return intersect_branchwise(curve, G)


def rational_divisor(curve, A, B):
    """Signed divisor of the rational function A/B on the curve."""
    if A.total_degree() != B.total_degree():
        raise ValidationError(
            "multiplicity mismatch: numerator and denominator degrees "
            "differ")
    return intersect_branchwise(curve, A) - intersect_branchwise(curve, B)


def linear_equiv_witness(curve, A, B):
    """Certify that the divisors of two equal-degree forms are
    linearly equivalent by exhibiting the rational function between
    them.  Returns (difference, total) with total necessarily zero."""
    diff = rational_divisor(curve, A, B)
    if diff.total != 0:
        raise InvariantViolation(
            "difference of two form divisors has nonzero total %d"
            % diff.total)
    return diff


def pencil_value_and_index(curve, phi, psi, branch):
    """Value and local mapping index of phi/psi at a branch.

    Returns (value, e) where value is a scalar of the branch field, or
    the INFINITY marker when psi vanishes deeper than phi, and e is
    ord_t of (phi/psi - value) along the parametrization: the local
    degree of the induced map to the projective line.
    """
    bound = curve.degree * phi.total_degree() + 1
    for _ in range(_RETRIES):
        s_phi = branch_series(curve, branch, phi)
        s_psi = branch_series(curve, branch, psi)
        a, b = s_phi.ord(), s_psi.ord()
        if a is None and s_phi.prec <= bound:
            curve._refresh_param(branch)
            continue
        if b is None and s_psi.prec <= bound:
            curve._refresh_param(branch)
            continue
        if a is None or b is None:
            which = phi if a is None else psi
            if curve.form.divides(which):
                raise ValidationError("pencil member contains the curve")
            raise InvariantViolation(
                "pencil member vanishes past its Bezout cap")
        if a > b:
            return (branch.param.field.zero, a - b)
        if b > a:
            return (INFINITY, b - a)
        q = s_phi / s_psi
        val = q.coeff_at(0)
        resid = q - q.const(q.field, val)
        e = resid.ord()
        if e is not None:
            return (val, e)
        if resid.prec > bound:
            member = phi - psi * MultiPoly.const(
                curve.field, PROJ_VARS, _descend(val, curve.field))
            if curve.form.divides(member):
                raise ValidationError("pencil member contains the curve")
            raise InvariantViolation(
                "pencil level order exceeds its Bezout cap")
        curve._refresh_param(branch)
    raise PrecisionExhausted("pencil index did not stabilize on %r"
                             % (branch,))


def _descend(val, base):
    """Bring a scalar of a simple extension back to the base field
    when it actually lies there."""
    coeffs = getattr(val, "coeffs", None)
    if coeffs is None:
        return base.coerce(val)
    if any(coeffs[1:]):
        raise ValidationError("pencil level lies in a proper extension")
    return base.coerce(coeffs[0])


class JacobianData:
    """The Jacobian weighted set of a pencil.

    `weights` holds the full Jacobian: branches multiple in some
    member contribute their index minus one, and every fixed branch
    contributes twice its fixed weight on top.  `fixed` keeps the
    fixed part itself so callers can split the two contributions.
    """

    __slots__ = ("weights", "fixed", "pencil", "indices", "wild")

    def __init__(self, weights, fixed, pencil, indices, wild):
        self.weights = weights
        self.fixed = fixed
        self.pencil = pencil
        self.indices = indices
        self.wild = wild

    @property
    def order(self):
        return self.weights.total

    def json_dict(self):
        return {
            "order": str(self.order),
            "wild": self.wild,
            "branches": self.weights.json_list(),
            "fixed_part": self.fixed.json_list(),
        }


class Pencil:
    """Two independent forms of one degree, spanning a line of
    divisors on the curve."""

    def __init__(self, curve, phi, psi):
        _check_form(curve, phi)
        _check_form(curve, psi)
        if phi.total_degree() != psi.total_degree():
            raise ValidationError("pencil members must share one degree")
        if curve.form.divides(phi) or curve.form.divides(psi):
            raise ValidationError("pencil member contains the curve")
        if _proportional(phi, psi):
            raise ValidationError("pencil members are proportional")
        self.curve = curve
        self.phi = phi
        self.psi = psi
        self._div_phi = None
        self._div_psi = None
        self._fixed = None

    def member(self, lam):
        if lam is INFINITY or (isinstance(lam, str) and lam == INFINITY):
            return self.psi
        c = MultiPoly.const(self.curve.field, PROJ_VARS,
                            self.curve.field.coerce(lam))
        return self.phi - self.psi * c

    def div_phi(self):
        if self._div_phi is None:
            self._div_phi = intersect_branchwise(self.curve, self.phi)
        return self._div_phi

    def div_psi(self):
        if self._div_psi is None:
            self._div_psi = intersect_branchwise(self.curve, self.psi)
        return self._div_psi

    def fixed_part(self):
        """Branches every member passes through, with the weight all
        of them share."""
        if self._fixed is None:
            dphi, dpsi = self.div_phi(), self.div_psi()
            entries = []
            for br, w in dphi:
                w2 = dpsi.weight_of(br)
                if w2:
                    entries.append((br, min(w, w2)))
            self._fixed = WeightedSet(entries)
        return self._fixed

    def map_degree(self):
        """Degree of the induced map to the projective line."""
        return self.div_phi().total - self.fixed_part().total

    def level_set(self, lam):
        """The fiber of the induced map above a value (the mobile part
        of the member's divisor).  Total is map_degree, always."""
        member = self.member(lam)
        if not member:
            raise ValidationError("pencil member is the zero form")
        d = intersect_branchwise(self.curve, member) - self.fixed_part()
        for _, w in d:
            if w < 0:
                raise InvariantViolation("fiber weight below the fixed part")
        if d.total != self.map_degree():
            raise InvariantViolation(
                "fiber total %d is not the map degree %d"
                % (d.total, self.map_degree()))
        return d

    def fixed_and_mobile(self):
        """The fixed part plus, for each fixed branch, the level it
        sits on and its extra mobile weight there."""
        fixed = self.fixed_part()
        table = []
        for br, k in fixed:
            val, e = pencil_value_and_index(self.curve, self.phi, self.psi,
                                            br)
            table.append((br, val, e))
        return fixed, table

    def jacobian(self):
        """The Jacobian weighted set of the pencil.

        Candidate branches are cut out by the determinant of the
        gradients of the curve and both members (by the Euler relation
        this form vanishes at every base branch on the curve, so none
        is missed); the mobile index e at each candidate comes from
        the parametrization and contributes e - 1, and the fixed part
        is added twice on top.  wild flags indices divisible by the
        characteristic, where tame ramification bookkeeping does not
        apply.
        """
        J = _jacobian_form(self.curve.form, self.phi, self.psi)
        if not J or self.curve.form.divides(J):
            raise UnsupportedFieldError(
                "pencil jacobian vanishes on the curve: the induced map "
                "is degenerate")
        if J.is_constant():
            fixed = self.fixed_part()
            return JacobianData(fixed.scaled(2), fixed, self, [], False)
        recs = projective_common_zeros([self.curve.form, J],
                                       self.curve.field)
        p = self.curve.field.characteristic
        entries = []
        indices = []
        wild = False
        for rec in recs:
            pt = PointP2.from_record(rec)
            for br in self.curve.branches_at(pt):
                _, e = pencil_value_and_index(self.curve, self.phi,
                                              self.psi, br)
                indices.append((br, e))
                if e > 1:
                    entries.append((br, e - 1))
                    if p and e % p == 0:
                        wild = True
        fixed = self.fixed_part()
        return JacobianData(WeightedSet(entries) + fixed.scaled(2), fixed,
                            self, indices, wild)


def _proportional(phi, psi):
    m, c = phi.leading()
    d = psi.terms.get(m)
    if d is None:
        return False
    ratio = d / c
    return psi == phi * MultiPoly.const(phi.field, phi.vars, ratio)


def _jacobian_form(F, phi, psi):
    r = [[partial_derivative(G, v) for v in PROJ_VARS]
         for G in (F, phi, psi)]
    return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))


class LinearSystem:
    """A list of forms of one degree, considered modulo the curve."""

    def __init__(self, curve, forms):
        if not forms:
            raise ValidationError("empty linear system")
        degs = {g.total_degree() for g in forms}
        if len(degs) != 1:
            raise ValidationError("linear system mixes degrees")
        for g in forms:
            _check_form(curve, g)
        self.curve = curve
        self.forms = tuple(forms)
        self.degree = degs.pop()

    def dimension(self):
        """Projective dimension of the span modulo the curve."""
        from .algebra import linalg
        reduced = [g.reduce_mod(self.curve.form) for g in self.forms]
        monos = sorted({m for g in reduced for m in g.terms})
        idx = {m: i for i, m in enumerate(monos)}
        rows = []
        for g in reduced:
            row = [self.curve.field.zero] * len(monos)
            for m, c in g.terms.items():
                row[idx[m]] = c
            rows.append(row)
        return linalg.rank(rows, self.curve.field) - 1

    def amalgamate(self, other):
        """Products with one distinguished member of each system: the
        classical join of two series through fixed reference members
        (the first form on each side)."""
        if self.curve is not other.curve:
            raise ValidationError("linear systems live on different curves")
        phi0 = self.forms[0]
        psi0 = other.forms[0]
        forms = [phi0 * psi0]
        forms.extend(g * psi0 for g in self.forms[1:])
        forms.extend(phi0 * g for g in other.forms[1:])
        return LinearSystem(self.curve, forms)


def series_dim_from_forms(curve, degree, constraints, slack=4):
    """Projective dimension of the degree-d forms satisfying branch
    vanishing constraints, counted modulo multiples of the curve.

    `constraints` is a list of (branch, min_order) pairs.  Conjugate
    branches impose their conditions automatically since the unknown
    coefficients live in the base field.
    """
    field = curve.field
    monos = _degree_monomials(degree)
    need = max((w for _, w in constraints), default=1) + slack
    rows = []
    for br, w in constraints:
        bp = br.param
        if bp.precision() < need:
            bp = curve._refresh_param(br, min_precision=need)
        mono_series = []
        for (i, j, k) in monos:
            G = MultiPoly(field, PROJ_VARS, {(i, j, k): field.one})
            mono_series.append(branch_series(curve, br, G))
        ext = getattr(bp.field, "degree", 1)
        for order in range(w):
            raws = [s.coeff_at(order) if order < s.prec else None
                    for s in mono_series]
            if any(c is None for c in raws):
                raise PrecisionExhausted(
                    "constraint order %d outruns branch precision" % order)
            for slot in range(ext):
                rows.append([_component(c, slot, field) for c in raws])
    from .algebra import linalg
    rank = linalg.rank(rows, field) if rows else 0
    null = len(monos) - rank
    overcount = 0
    if degree >= curve.degree:
        overcount = len(_degree_monomials(degree - curve.degree))
    return null - overcount - 1


def _degree_monomials(d):
    return [(i, j, d - i - j)
            for i in range(d + 1) for j in range(d - i + 1)]


def _component(c, slot, base):
    coeffs = getattr(c, "coeffs", None)
    if coeffs is None:
        return c if slot == 0 else base.zero
    return coeffs[slot] if slot < len(coeffs) else base.zero

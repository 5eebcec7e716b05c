"""Dual curves, the class, and the classical formula suite.

The tangent lines of a plane curve trace a curve in the dual plane.
This module counts the tangent lines through a certified-generic point
(the class), computes the dual equation exactly, transports branch
characters through the duality, lists multiple tangents, audits the
first-order translation family, and evaluates the family of classical
degree/class/flex/genus identities with every quantity measured by its
own independent procedure.

The dual equation comes from linear algebra on a probe branch rather
than from iterated resultants: a smooth branch is expanded far enough
that any form of the certified class degree vanishing on its
tangent-line arc beyond the Bezout product must contain the whole dual
curve.  The kernel of that coefficient matrix is required to be one
dimensional, which pins the equation and cross-checks its degree
against the polar count.  Resultant elimination was rejected because
the intermediate forms carry extraneous factors of a total degree that
exact factorization cannot clear within the time budget.
"""

from .algebra import linalg, univar
from .algebra.factor import roots_and_residual
from .algebra.multipoly import Homography, MultiPoly
from .algebra.parser import poly_to_string, scalar_to_string
from .curve import NODE, PROJ_VARS, PlaneCurve, PointP2
from .errors import (GenericityError, InvariantViolation, PrecisionExhausted,
                     UnsupportedFieldError, ValidationError)
from .genus import genus
from .puiseux import TruncatedSeries
from .sampling import Sampler
from .series import (_component, _degree_monomials, branch_series,
                     form_order_on_branch, intersect_branchwise)
from .zeros import projective_common_zeros, scalar_sort_key

# Degree cap for computing the dual equation inside aggregate reports.
# The elimination itself has no such cap; the reports skip the dual
# form with a reason once the class exceeds this, because the matrix
# work grows with class * degree * (degree - 1).
DUAL_CLASS_LIMIT = 6


def _line_form(field, coeffs):
    terms = {}
    for slot, c in zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), coeffs):
        c = field.coerce(c)
        if c:
            terms[slot] = c
    return MultiPoly(field, PROJ_VARS, terms)


def _incident(field, line, q):
    """Whether the point with base coordinates q lies on the line."""
    s = field.zero
    for c, x in zip(line, q):
        s = s + c * field.coerce(x)
    return not s


def _special_tangents(curve):
    """Tangent lines of singular branches and of flexes, as (field,
    coefficients) pairs.  A generic point must avoid all of them."""
    out = []
    for rep in curve.singularities():
        for br in rep.branches:
            out.append((br.param.field, br.tangent))
    for rec in curve.flexes():
        br = rec.branch
        out.append((br.param.field, br.tangent))
    return out


def _pencil_slope(branch, q):
    """Key identifying the line joining q to the branch center.

    Returns (key, degree) where the key is comparable across branches
    living in different extensions (it is built from base-field data)
    and degree counts how many distinct lines the conjugates of the
    center span.  q is a base-field coordinate triple, either a finite
    point (last coordinate nonzero) or a direction (a : b : 0)."""
    E = branch.point.field
    x, y, z = branch.point.coords
    q0 = E.coerce(q[0])
    q1 = E.coerce(q[1])
    if q[2]:
        den = x - q0 * z
        if not den:
            return ("vertical",), 1
        lam = (y - q1 * z) / den
    else:
        # lines through a direction point are parallel; key by intercept
        if not z:
            # the joining line is Z = 0 itself, one shared key
            return ("zline",), 1
        lam = (q1 * x - q0 * y) / z
    if getattr(E, "base", None) is None:
        return ("scalar", scalar_sort_key(lam)), 1
    mp = linalg.minpoly_of_element(lam, E)
    deg = len(mp) - 1
    if deg == 1:
        return ("scalar", scalar_sort_key(-mp[0])), 1
    return ("minpoly", tuple(scalar_sort_key(c) for c in mp)), deg


def class_of(curve, sampler=None):
    """Number of tangent lines of the curve through a generic point.

    The point is certified rather than trusted: it must avoid the
    curve, every singular-branch tangent and every flex tangent, and
    the polar form through it must meet the curve simply at smooth
    points whose connecting lines are pairwise distinct.  Tangency
    points are then in bijection with the tangent lines counted.
    """
    curve.require_degree(2, "class")
    field = curve.field
    smp = sampler if sampler is not None else Sampler()
    fx, fy, fz = curve.gradient()
    avoid = _special_tangents(curve)
    for k in smp.attempts("a class-certifying point"):
        q = smp.point_candidate(field, k)
        if curve.contains(PointP2(q, field)):
            continue
        if any(_incident(E, line, q) for E, line in avoid):
            continue
        polar = fx * q[0] + fy * q[1] + fz * q[2]
        if not polar.terms:
            continue
        div = intersect_branchwise(curve, polar)
        count = 0
        seen = set()
        good = True
        for br, w in div:
            if not curve.is_smooth_point(br.point):
                continue
            if w != 1:
                good = False
                break
            key, deg = _pencil_slope(br, q)
            if deg != br.point.conj_degree or key in seen:
                good = False
                break
            seen.add(key)
            count += br.multiplicity()
        if good:
            return count
    raise GenericityError("class sampling fell through the attempt budget")


def _probe_branch(curve, precision):
    """A branch at a smooth point, preferring low-degree centers,
    expanded to at least the requested precision.  Section lines are
    tried in a fixed ladder so the probe is deterministic."""
    field = curve.field
    gens = {v: MultiPoly.variable(field, PROJ_VARS, v) for v in PROJ_VARS}
    p = field.characteristic
    span = range(min(p, 40)) if p else range(40)
    for a, b in (("X", "Z"), ("Y", "Z"), ("X", "Y")):
        for k in span:
            cut = gens[a] - gens[b] * field.coerce(k)
            recs = projective_common_zeros([curve.form, cut], field)
            pts = sorted((PointP2.from_record(r) for r in recs),
                         key=lambda pt: (pt.conj_degree, pt.sort_key()))
            for pt in pts:
                if curve.is_smooth_point(pt):
                    return curve.branches_at(pt, min_precision=precision)[0]
    raise GenericityError("no smooth section point found for the dual probe")


def _dual_form(curve, m):
    """The degree-m form vanishing on the tangent-line arc of a probe
    branch to an order past the Bezout product, normalized monic in
    graded-lex order.  Existence and uniqueness of the kernel vector
    double-check m against the polar count that produced it."""
    n = curve.degree
    field = curve.field
    target = m * n * (n - 1) + 1
    br = _probe_branch(curve, target + 4)
    arcs = None
    for _ in range(4):
        arcs = [branch_series(curve, br, G) for G in curve.gradient()]
        if min(s.prec for s in arcs) >= target:
            break
        curve._refresh_param(br, min_precision=2 * target)
    else:
        raise PrecisionExhausted(
            "tangent arc never reached the certificate order %d" % target)
    if any(s.is_zero_to_precision() for s in arcs):
        raise UnsupportedFieldError(
            "a partial derivative vanishes along the probe branch: "
            "the tangent map is degenerate")
    if min(s.ord() for s in arcs) != 0:
        raise InvariantViolation("tangent arc vanishes at a smooth center")
    E = arcs[0].field
    arcs = [s.truncate(target) for s in arcs]
    pows = []
    for s in arcs:
        col = [TruncatedSeries.const(E, 1, target)]
        for _ in range(m):
            col.append(col[-1] * s)
        pows.append(col)
    monos = _degree_monomials(m)
    cols = [pows[0][i] * pows[1][j] * pows[2][k] for (i, j, k) in monos]
    ext = getattr(E, "degree", 1)
    rows = []
    for k in range(target):
        raw = [s.coeff_at(k) for s in cols]
        for slot in range(ext):
            rows.append([_component(c, slot, field) for c in raw])
    basis = linalg.nullspace(rows, field, ncols=len(monos))
    if not basis:
        raise InvariantViolation(
            "no form of the certified class degree %d vanishes on the "
            "tangent arc" % m)
    if len(basis) > 1:
        raise InvariantViolation(
            "dual elimination found %d independent forms of degree %d"
            % (len(basis), m))
    terms = {mono: c for mono, c in zip(monos, basis[0]) if c}
    G = MultiPoly(field, PROJ_VARS, terms)
    lead = G.leading()[1]
    if lead != field.one:
        G = G * (field.one / lead)
    return G


def dual_curve(curve, sampler=None, certified_class=None):
    """The irreducible equation of the tangent-line image in the dual
    plane, as a curve in the same variable names.

    Over the rationals the certificate alone guarantees irreducibility,
    so classification is skipped.  Over a prime field the returned form
    is re-validated; a repeated factor there means the tangent map was
    inseparable and the construction refuses.
    """
    curve.require_degree(2, "dual curve")
    m = certified_class
    if m is None:
        m = class_of(curve, sampler=sampler)
    G = _dual_form(curve, m)
    if curve.field.characteristic:
        try:
            return PlaneCurve(G)
        except ValidationError as exc:
            raise UnsupportedFieldError(
                "dual elimination produced a degenerate form (%s): "
                "the tangent map is not separable" % exc)
    return PlaneCurve(G, _checked=True)


def _proportional_forms(F, G):
    if F.vars != G.vars or set(F.terms) != set(G.terms):
        return False
    e0, c0 = F.leading()
    d0 = G.terms[e0]
    return all(c * d0 == G.terms[e] * c0 for e, c in F.terms.items())


def bidual_check(curve, sampler=None, dual=None):
    """Whether dualizing twice returns the original equation up to a
    nonzero scalar."""
    curve.require_degree(2, "bidual")
    if curve.field.characteristic and not curve.is_normal():
        raise UnsupportedFieldError(
            "bidual identity is certified only for normal curves")
    smp = sampler if sampler is not None else Sampler()
    if dual is None:
        dual = dual_curve(curve, sampler=smp)
    again = dual_curve(dual, sampler=smp)
    return _proportional_forms(again.form, curve.form)


class BranchDualityRecord:
    """Characters of a branch next to those of its image branch on the
    dual curve.  The image is expected to swap the pair."""

    __slots__ = ("branch", "dual_point", "dual_branch", "expected", "found")

    def __init__(self, branch, dual_point, dual_branch, expected, found):
        self.branch = branch
        self.dual_point = dual_point
        self.dual_branch = dual_branch
        self.expected = expected
        self.found = found

    @property
    def ok(self):
        return self.expected == self.found

    def json_dict(self):
        return {
            "character": list(self.branch.characters()),
            "dual_point": [scalar_to_string(c) for c in self.dual_point.coords],
            "expected": list(self.expected),
            "found": list(self.found),
            "ok": self.ok,
        }

    def __repr__(self):
        return "BranchDualityRecord(%s -> %s, expected %s)" % (
            self.branch.characters(), self.found, self.expected)


def branch_transform_check(curve, branch, dual=None, sampler=None):
    """Locate the branch of the dual curve centred at the point dual to
    the branch tangent and compare characters: (alpha, beta) on the
    curve should appear as (beta, alpha) on the dual.

    Among the dual branches at that point, the matching one is the
    branch whose own tangent is the line dual to the original center.
    """
    curve.require_degree(2, "branch duality")
    alpha, beta = branch.characters()
    p = curve.field.characteristic
    if p and (alpha % p == 0 or (alpha + beta) % p == 0):
        raise UnsupportedFieldError(
            "branch character (%d, %d) shares a factor with the "
            "characteristic %d" % (alpha, beta, p))
    base = curve.field
    if branch.point.field != base or not branch.tangent_is_rational():
        raise UnsupportedFieldError(
            "branch duality matching needs a base-rational center and tangent")
    if dual is None:
        dual = dual_curve(curve, sampler=sampler)
    tangent_point = PointP2(
        tuple(_component(c, 0, base) for c in branch.tangent), base)
    if not dual.contains(tangent_point):
        raise InvariantViolation(
            "the tangent line of the branch does not lie on the dual curve")
    want = branch.point.coords
    hits = []
    for db in dual.branches_at(tangent_point):
        if not db.tangent_is_rational():
            continue
        got = tuple(_component(c, 0, base) for c in db.tangent)
        if got == want:
            hits.append(db)
    if len(hits) != 1:
        raise InvariantViolation(
            "dual branch matching is ambiguous: %d candidates whose tangent "
            "returns to the original center" % len(hits))
    found = hits[0].characters()
    return BranchDualityRecord(branch, tangent_point, hits[0],
                               (beta, alpha), found)


class MultipleTangent:
    """A line tangent to the curve along at least two branches, found
    as a singular point of the dual curve."""

    __slots__ = ("line", "point", "branches")

    def __init__(self, line, point, branches):
        self.line = line
        self.point = point
        self.branches = branches

    @property
    def count(self):
        return sum(br.multiplicity() for br, _ in self.branches)

    def json_dict(self):
        return {
            "line": [scalar_to_string(c) for c in self.line],
            "conj_degree": self.point.conj_degree,
            "tangency_branches": self.count,
        }

    def __repr__(self):
        return "MultipleTangent(%r, %d branches)" % (self.line, self.count)


def _line_restriction(form, p0, p1):
    """Coefficients, low degree first, of the form pulled back along
    the parametrized line s -> p1 + s * p0."""
    lines = [[b, a] for a, b in zip(p0, p1)]
    g = []
    for exps, c in form.terms.items():
        term = [c]
        for lin, e in zip(lines, exps):
            for _ in range(e):
                term = univar.mul(term, lin)
        g = univar.add(g, term)
    return univar.trim(g)


def _line_tangency_branches(host, coeffs):
    """Branches meeting the line with order at least two.

    Used where the general elimination behind intersect_branchwise is
    out of reach (the line already lives over an extension): the curve
    form restricts along the line to a univariate polynomial, and only
    its multiple roots are resolved into branches.  Simple roots are
    transversal crossings, so residual factors of multiplicity one may
    stay unresolved; a multiple residual factor would need a second
    extension and raises instead.
    """
    E = host.field
    u, v, w = (E.coerce(c) for c in coeffs)
    if u:
        p0 = (-v / u, E.one, E.zero)
        p1 = (-w / u, E.zero, E.one)
    elif v:
        p0 = (E.one, E.zero, E.zero)
        p1 = (E.zero, -w / v, E.one)
    else:
        p0 = (E.one, E.zero, E.zero)
        p1 = (E.zero, E.one, E.zero)
    G = _line_form(E, (u, v, w))
    g = _line_restriction(host.form, p0, p1)
    n = host.degree
    out = []

    def resolve(point):
        pt = PointP2(point, E)
        for br in host.branches_at(pt):
            k = form_order_on_branch(host, br, G)
            if k >= 2:
                out.append((br, k))

    if n - univar.degree(g) >= 2:
        resolve(p0)
    roots, residual = roots_and_residual(g, E)
    for r, k in roots:
        if k >= 2:
            resolve(tuple(b + r * a for a, b in zip(p0, p1)))
    for _f, k in residual:
        if k >= 2:
            raise UnsupportedFieldError(
                "a tangency point of the scanned line needs a second "
                "field extension")
    return tuple(out)


def multiple_tangents(curve, dual=None, sampler=None):
    """Lines tangent to the curve along two or more branches.

    Every such line is a singular point of the dual curve, so the dual
    singular locus (finite by construction) is scanned and each point
    is kept exactly when the corresponding line is tangent along at
    least two branches, counted with conjugates.  Tangency along a
    branch asks for contact above the branch multiplicity, so a line
    passing plainly through a singular center does not count, and a
    flex tangent touches a single branch and is filtered out.
    """
    curve.require_degree(2, "multiple tangents")
    if dual is None:
        dual = dual_curve(curve, sampler=sampler)
    base = curve.field
    out = []
    for pt in dual.singular_points():
        E = pt.field
        if E == base:
            div = intersect_branchwise(curve, _line_form(E, pt.coords))
        else:
            host = PlaneCurve(curve.form.lift_field(E), _checked=True)
            div = _line_tangency_branches(host, pt.coords)
        tang = tuple((br, w) for br, w in div if w > br.alpha)
        if sum(br.multiplicity() for br, _ in tang) >= 2:
            out.append(MultipleTangent(pt.coords, pt, tang))
    return tuple(out)


class TranslationAudit:
    """Branch-by-branch bookkeeping for the first-order member of the
    family translating the curve along a fixed direction.

    The derivative form has degree n, so its divisor totals n^2; the
    audit partitions it into simple tangency points (one per tangent
    line through the direction), simple crossings of the line at
    infinity (n of them), and the node branches (two per node)."""

    __slots__ = ("frame", "direction", "class_count", "infinity_count",
                 "node_count", "class_expected", "node_expected", "degree")

    def __init__(self, frame, direction, class_count, infinity_count,
                 node_count, class_expected, node_expected, degree):
        self.frame = frame
        self.direction = direction
        self.class_count = class_count
        self.infinity_count = infinity_count
        self.node_count = node_count
        self.class_expected = class_expected
        self.node_expected = node_expected
        self.degree = degree

    @property
    def total(self):
        return self.class_count + self.infinity_count + self.node_count

    @property
    def ok(self):
        return (self.class_count == self.class_expected
                and self.infinity_count == self.degree
                and self.node_count == self.node_expected
                and self.total == self.degree ** 2)

    def json_dict(self):
        return {
            "direction": [scalar_to_string(c) for c in self.direction],
            "class_points": self.class_count,
            "infinity_points": self.infinity_count,
            "node_weight": self.node_count,
            "total": self.total,
            "ok": self.ok,
        }

    def __repr__(self):
        return "TranslationAudit(%d + %d + %d = %d)" % (
            self.class_count, self.infinity_count, self.node_count,
            self.total)


def _transverse_frame(curve, sampler):
    """Coordinates in which the line Z = 0 meets the curve simply at
    smooth points.  Starts from the given frame and shears the last
    coordinate until the section divisor is reduced."""
    field = curve.field
    zform = MultiPoly.variable(field, PROJ_VARS, "Z")
    cand, hom = curve, Homography.identity(field)
    for k in sampler.attempts("a transverse line at infinity"):
        div = intersect_branchwise(cand, zform)
        if all(w == 1 and cand.is_smooth_point(br.point) for br, w in div):
            return cand, hom
        u, v = sampler.pair_candidate(field, k)
        one, zero = field.one, field.zero
        hom = Homography(field, [[one, zero, zero],
                                 [zero, one, zero],
                                 [u, v, one]])
        cand = PlaneCurve(hom.apply(curve.form), _checked=True)
    raise GenericityError("no shear made the line at infinity transverse")


def translation_pencil_audit(curve, sampler=None):
    """Audit the divisor of the derivative of the translation family.

    Translating along the affine direction (a, b) and differentiating
    at time zero gives the degree-n form Z (a F_X + b F_Y).  For a
    node-only curve, a transverse frame and a generic direction, its
    divisor must consist of weight-1 branches only: one at each of the
    class-many tangency points, one at each of the n points at
    infinity, and one on each of the two branches of every node.
    """
    curve.require_degree(2, "translation audit")
    smp = sampler if sampler is not None else Sampler()
    for rep in curve.singularities():
        if rep.kind != NODE:
            raise ValidationError(
                "translation audit covers node-only curves: found %s at %r"
                % (rep.kind, rep.point))
    field = curve.field
    n = curve.degree
    framed, frame = _transverse_frame(curve, smp)
    nodes = sum(rep.point.conj_degree for rep in framed.singularities())
    m = class_of(framed, sampler=smp)
    fx, fy, fz = framed.gradient()
    zform = MultiPoly.variable(field, PROJ_VARS, "Z")
    avoid = _special_tangents(framed)
    for k in smp.attempts("a translation direction"):
        a, b = smp.pair_candidate(field, k)
        if not (a or b):
            continue
        q = (a, b, field.zero)
        if framed.contains(PointP2(q, field)):
            continue
        if any(_incident(E, line, q) for E, line in avoid):
            continue
        deriv = (fx * a + fy * b) * zform
        div = intersect_branchwise(framed, deriv)
        inf_count = cls_count = node_count = 0
        seen = set()
        good = True
        for br, w in div:
            if w != 1:
                good = False
                break
            if not framed.is_smooth_point(br.point):
                node_count += br.multiplicity()
            elif not br.point.coords[2]:
                inf_count += br.multiplicity()
            else:
                key, deg = _pencil_slope(br, q)
                if deg != br.point.conj_degree or key in seen:
                    good = False
                    break
                seen.add(key)
                cls_count += br.multiplicity()
        if not good:
            continue
        audit = TranslationAudit(frame, (a, b), cls_count, inf_count,
                                 node_count, m, 2 * nodes, n)
        if not audit.ok:
            raise InvariantViolation(
                "translation audit split %d + %d + %d with class %d, "
                "degree %d and %d nodes: a proven identity failed"
                % (cls_count, inf_count, node_count, m, n, nodes))
        return audit
    raise GenericityError("translation direction sampling exhausted")


class FormulaCheck:
    """One classical identity, both sides evaluated independently."""

    __slots__ = ("name", "applicable", "reason", "lhs", "rhs")

    def __init__(self, name, applicable, reason, lhs=None, rhs=None):
        self.name = name
        self.applicable = applicable
        self.reason = None if applicable else reason
        self.lhs = lhs if applicable else None
        self.rhs = rhs if applicable else None

    @property
    def ok(self):
        if not self.applicable:
            return None
        return self.lhs == self.rhs

    def json_dict(self):
        return {
            "name": self.name,
            "applicable": self.applicable,
            "reason": self.reason,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ok": self.ok,
        }

    def __repr__(self):
        if not self.applicable:
            return "FormulaCheck(%s suppressed: %s)" % (self.name, self.reason)
        return "FormulaCheck(%s: %s == %s)" % (self.name, self.lhs, self.rhs)


class PluckerVerdict:
    """Invariants of a curve with every applicable classical identity
    evaluated both ways."""

    __slots__ = ("n", "m", "d", "i", "rho", "alpha_excess", "beta_excess",
                 "normal", "node_only", "ordinary_flexes", "checks")

    def __init__(self, n, m, d, i, rho, alpha_excess, beta_excess,
                 normal, node_only, ordinary_flexes, checks):
        self.n = n
        self.m = m
        self.d = d
        self.i = i
        self.rho = rho
        self.alpha_excess = alpha_excess
        self.beta_excess = beta_excess
        self.normal = normal
        self.node_only = node_only
        self.ordinary_flexes = ordinary_flexes
        self.checks = checks

    @property
    def all_pass(self):
        return all(c.ok for c in self.checks if c.applicable)

    def json_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "i": self.i,
            "rho": self.rho,
            "alpha_excess": self.alpha_excess,
            "beta_excess": self.beta_excess,
            "normal": self.normal,
            "node_only": self.node_only,
            "ordinary_flexes": self.ordinary_flexes,
            "checks": [c.json_dict() for c in self.checks],
        }


_FORMULA_NAMES = (
    "degree-class-node",
    "class-balance",
    "genus-from-class",
    "genus-from-degree",
    "class-flex-node",
    "genus-flex-node",
    "node-count-flex",
    "class-ordinary-flex",
    "genus-ordinary-flex",
    "node-count-ordinary-flex",
)


def plucker_suite(curve, sampler=None):
    """Measure n, d, m, i, rho and the character excesses by separate
    procedures, then evaluate every identity that applies.

    Node-only identities are suppressed on curves with other
    singularities, the unweighted flex identities are suppressed when a
    flex has contact above three, and a curve that fails the normality
    test suppresses everything, since the identities are only proven
    for normal curves.
    """
    curve.require_degree(2, "formula suite")
    smp = sampler if sampler is not None else Sampler()
    n = curve.degree
    reports = curve.singularities()
    node_only = all(rep.kind == NODE for rep in reports)
    d = sum(rep.point.conj_degree for rep in reports if rep.kind == NODE)
    alpha_excess = 0
    beta_sing = 0
    for rep in reports:
        for br in rep.branches:
            alpha_excess += (br.alpha - 1) * br.multiplicity()
            beta_sing += (br.beta - 1) * br.multiplicity()
    if not curve.is_normal():
        reason = ("the curve is not normal in characteristic %d: the "
                  "identities are not proven for it" % curve.field.characteristic)
        checks = tuple(FormulaCheck(name, False, reason)
                       for name in _FORMULA_NAMES)
        return PluckerVerdict(n, None, d, None, None, alpha_excess, None,
                              False, node_only, None, checks)
    flexrecs = curve.flexes()
    i = sum(rec.multiplicity() for rec in flexrecs)
    beta_excess = beta_sing + sum(rec.weight * rec.multiplicity()
                                  for rec in flexrecs)
    ordinary = all(rec.beta == 2 for rec in flexrecs)
    m = class_of(curve, sampler=smp)
    rho = genus(curve, sampler=smp)
    node_reason = "a singular branch is not a node"
    flex_reason = "a flex has tangent contact above three"
    both_reason = node_reason if not node_only else flex_reason
    checks = (
        FormulaCheck("degree-class-node", node_only, node_reason,
                     n + m + 2 * d, n * n),
        FormulaCheck("class-balance", True, None,
                     3 * m - 3 * n, beta_excess - alpha_excess),
        FormulaCheck("genus-from-class", True, None,
                     2 * rho, m + alpha_excess - 2 * n + 2),
        FormulaCheck("genus-from-degree", True, None,
                     2 * rho, n + beta_excess - 2 * m + 2),
        FormulaCheck("class-flex-node", node_only, node_reason,
                     3 * m - 3 * n, beta_excess),
        FormulaCheck("genus-flex-node", node_only, node_reason,
                     6 * rho + 3 * n - 6, beta_excess),
        FormulaCheck("node-count-flex", node_only, node_reason,
                     3 * n * (n - 2) - 6 * d, beta_excess),
        FormulaCheck("class-ordinary-flex", node_only and ordinary,
                     both_reason, 3 * m, 3 * n + i),
        FormulaCheck("genus-ordinary-flex", node_only and ordinary,
                     both_reason, 6 * rho, i - 3 * n + 6),
        FormulaCheck("node-count-ordinary-flex", node_only and ordinary,
                     both_reason, 6 * d, 3 * n * (n - 2) - i),
    )
    return PluckerVerdict(n, m, d, i, rho, alpha_excess, beta_excess,
                          True, node_only, ordinary, checks)


class DualityReport:
    """The dual equation and everything measured against it."""

    __slots__ = ("m", "dual", "skip_reason", "bidual", "transforms",
                 "tangents")

    def __init__(self, m, dual, skip_reason, bidual, transforms, tangents):
        self.m = m
        self.dual = dual
        self.skip_reason = skip_reason
        self.bidual = bidual
        self.transforms = transforms
        self.tangents = tangents

    def dual_form_string(self):
        if self.dual is None:
            return None
        shown = self.dual.form.rename_vars(("U", "V", "W"))
        return poly_to_string(shown)

    def json_dict(self):
        return {
            "class": self.m,
            "dual_form": self.dual_form_string(),
            "dual_skip_reason": self.skip_reason,
            "bidual_ok": self.bidual,
            "branch_transforms": [t.json_dict() for t in self.transforms],
            "multiple_tangents": [t.json_dict() for t in self.tangents],
        }


def duality_report(curve, sampler=None, class_limit=DUAL_CLASS_LIMIT,
                   check_bidual=True):
    """Aggregate duality data for one curve.

    The class is always computed.  The dual equation, bidual verdict,
    branch character transport and multiple tangent scan run only when
    the class stays within the elimination budget; otherwise the report
    carries the reason they were skipped.  Branches whose tangent data
    leaves the base field are skipped quietly in the transport table.
    """
    curve.require_degree(2, "duality report")
    smp = sampler if sampler is not None else Sampler()
    m = class_of(curve, sampler=smp)
    if m > class_limit:
        reason = ("class %d exceeds the dual elimination budget %d"
                  % (m, class_limit))
        return DualityReport(m, None, reason, None, (), ())
    dual = dual_curve(curve, sampler=smp, certified_class=m)
    bidual = None
    if check_bidual:
        try:
            bidual = bidual_check(curve, sampler=smp, dual=dual)
        except UnsupportedFieldError:
            bidual = None
    special = []
    for rep in curve.singularities():
        special.extend(rep.branches)
    special.extend(rec.branch for rec in curve.flexes())
    transforms = []
    for br in special:
        try:
            transforms.append(branch_transform_check(curve, br, dual=dual))
        except UnsupportedFieldError:
            continue
    tangents = multiple_tangents(curve, dual=dual)
    return DualityReport(m, dual, None, bidual, tuple(transforms), tangents)

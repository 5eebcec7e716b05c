"""Genus computations and the differential identity behind them.

Two independent routes to the genus are provided.  The primary one
runs a pencil of lines through a generic external point and applies
the ramification count of the induced degree-n map to the line: the
Jacobian order r satisfies 2g - 2 = r - 2n when all ramification is
tame.  The secondary route is the classical count for curves whose
only singularities are nodes and ordinary cusps.

The differential decomposition op verifies, on a concrete curve, that
the zeros and poles of dh/dx (h a Mobius function of y) assemble from
the two coordinate pencils: zeros from the y-Jacobian plus twice the
x-fiber at infinity, poles from the x-Jacobian plus twice the fiber of
h at its pole level.  Both sides are computed by unrelated routes and
compared branch by branch.
"""

from .algebra import Homography, MultiPoly, partial_derivative
from .curve import CUSP_LIKE, NODE, PROJ_VARS, PlaneCurve
from .errors import (GenericityError, InvariantViolation,
                     UnsupportedFieldError, ValidationError)
from .sampling import Sampler
from .series import INFINITY, Pencil, intersect_branchwise

_X, _Y, _Z = PROJ_VARS


def _line_pencil_through(curve, q):
    """Two independent linear forms vanishing at the point q."""
    field = curve.field
    q0, q1, q2 = q

    def form(coeffs):
        return MultiPoly(field, PROJ_VARS,
                         {(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1],
                          (0, 0, 1): coeffs[2]})

    if q2:
        a = form((q2, field.zero, -q0))
        b = form((field.zero, q2, -q1))
    elif q1:
        a = form((q1, -q0, field.zero))
        b = form((field.zero, field.zero, field.one))
    else:
        a = form((field.zero, field.one, field.zero))
        b = form((field.zero, field.zero, field.one))
    return Pencil(curve, a, b)


def genus(curve, sampler=None):
    """Genus via the ramification of a generic line projection.

    The projection point is sampled off the curve; tameness of every
    local index is verified, so the count is trusted in any odd
    characteristic or refused outright.
    """
    if curve.degree == 1:
        return 0
    sampler = sampler or Sampler()
    field = curve.field
    for k in sampler.attempts("projection point off the curve"):
        q = sampler.point_candidate(field, k)
        vals = dict(zip(PROJ_VARS, q))
        if curve.form.evaluate(vals):
            break
    pen = _line_pencil_through(curve, q)
    if pen.map_degree() != curve.degree:
        raise InvariantViolation(
            "line pencil through an external point has degree %d, not %d"
            % (pen.map_degree(), curve.degree))
    data = pen.jacobian()
    if data.wild:
        raise UnsupportedFieldError(
            "wild ramification: the projection count does not certify "
            "the genus in characteristic %d" % field.characteristic)
    r = data.order
    n = curve.degree
    two_g = r - 2 * n + 2
    if two_g % 2 or two_g < 0:
        raise InvariantViolation(
            "ramification order %d is incompatible with a genus" % r)
    return two_g // 2


def genus_from_nodes(n, d):
    """The count (n-1)(n-2)/2 - d for a degree-n curve with d nodes.

    The node count is capped by the arithmetic genus; more nodes than
    that cannot sit on an irreducible curve.
    """
    bound = (n - 1) * (n - 2) // 2
    if d > bound:
        raise ValidationError(
            "a degree-%d irreducible curve carries at most %d nodes, "
            "got %d" % (n, bound, d))
    return bound - d


def genus_from_singularities(curve):
    """Genus by the node-and-cusp count, when it applies.

    (n-1)(n-2)/2 minus one for every node and every ordinary cusp,
    conjugate families counted by their size.  Any other singularity
    is refused.
    """
    defect = 0
    for rep in curve.singularities():
        if rep.kind == NODE:
            pass
        elif rep.kind == CUSP_LIKE and rep.branches[0].characters() == (2, 1):
            pass
        else:
            raise ValidationError(
                "genus from nodes handles only nodes and ordinary cusps: "
                "found %s at %r" % (rep.kind, rep.point))
        defect += rep.point.conj_degree
    return genus_from_nodes(curve.degree, defect)


def is_rational(curve, sampler=None):
    return genus(curve, sampler) == 0


def dhdx(curve, A, B):
    """Derivative of h = A/B with respect to x = X/Z, on the curve.

    Returned as an equal-degree form pair (P, Q), the rational
    function

        P/Q = [(A_X B - A B_X) F_Y - (A_Y B - A B_Y) F_X] Z / (B^2 F_Y)

    obtained by implicit differentiation of F along the curve.  Along
    any branch parametrized with x-chart series this equals the
    t-derivative of h divided by the t-derivative of x; the test suite
    checks that expansion identity directly.
    """
    if A.total_degree() != B.total_degree():
        raise ValidationError(
            "numerator and denominator of h must share one degree")
    F = curve.form
    if F.divides(B):
        raise ValidationError("denominator of h vanishes on the curve")
    FX = partial_derivative(F, _X)
    FY = partial_derivative(F, _Y)
    if not FY or F.divides(FY):
        raise UnsupportedFieldError(
            "the y-derivative vanishes along the curve: x is not a "
            "separating coordinate")
    ax, ay = partial_derivative(A, _X), partial_derivative(A, _Y)
    bx, by = partial_derivative(B, _X), partial_derivative(B, _Y)
    num = ((ax * B - A * bx) * FY - (ay * B - A * by) * FX)
    P = num * _coord_form(curve.field, _Z)
    Q = B * B * FY
    return P, Q


class DecompositionReport:
    """Outcome of the differential decomposition audit."""

    __slots__ = ("curve", "frame", "lam1", "lam2", "zeros", "poles",
                 "zero_total", "pole_total", "matched")

    def __init__(self, curve, frame, lam1, lam2, zeros, poles, matched):
        self.curve = curve
        self.frame = frame
        self.lam1 = lam1
        self.lam2 = lam2
        self.zeros = zeros
        self.poles = poles
        self.zero_total = zeros.total
        self.pole_total = poles.total
        self.matched = matched

    def json_dict(self):
        from .algebra import scalar_to_string
        return {
            "lambda1": scalar_to_string(self.lam1),
            "lambda2": scalar_to_string(self.lam2),
            "zero_total": str(self.zero_total),
            "pole_total": str(self.pole_total),
            "matched": self.matched,
            "zeros": self.zeros.json_list(),
            "poles": self.poles.json_list(),
        }


def proper_frame(curve):
    """A coordinate frame with both projection vertices off the curve.

    Returns (curve2, homography); the homography maps new coordinates
    to old ones, and is the identity when the curve is already in
    position.
    """
    field = curve.field
    F = curve.form
    u = _avoiding(F, (1, 0, None))
    v = _avoiding(F, (0, 1, None))
    if not u and not v:
        return curve, Homography.identity(field)
    one, zero = field.one, field.zero
    M = Homography(field, [[one, zero, zero], [zero, one, zero],
                           [u, v, one]])
    moved = PlaneCurve(M.apply(F), _checked=True)
    return moved, M


def _avoiding(F, pattern):
    """Smallest scalar c with F nonzero at the pattern point, where the
    None slot is c."""
    field = F.field
    p = field.characteristic
    k = 0
    while True:
        c = field.coerce(k)
        point = tuple(field.coerce(s) if s is not None else c
                      for s in pattern)
        if F.evaluate(dict(zip(PROJ_VARS, point))):
            return c
        k += 1
        if p and k >= p:
            raise GenericityError(
                "no projection vertex available over GF(%d)" % p)
        if k > 4 * F.total_degree() + 4:
            raise GenericityError("no projection vertex found")


def differential_decomposition(curve, sampler=None):
    """Verify the zero/pole decomposition of dh/dx on the curve.

    h = (y - lam1)/(y - lam2) with lam2 sampled so its fiber is
    transverse through smooth points.  Route one computes the signed
    divisor of dh/dx from its closed form

        dh/dx = -(lam1 - lam2) * (F_X / F_Y) * Z^2 / (Y - lam2*Z)^2

    as four independent branchwise intersections.  Route two assembles
    zeros = y-Jacobian + 2 * (x-fiber at infinity) and poles =
    x-Jacobian + 2 * (fiber of h at infinity) from pencil ramification
    scans.  The two signed sets must agree branch for branch.
    """
    curve.require_degree(2, "differential decomposition")
    sampler = sampler or Sampler()
    work, frame = proper_frame(curve)
    field = work.field
    F = work.form
    x_pencil = Pencil(work, _coord_form(field, _X), _coord_form(field, _Z))
    y_pencil = Pencil(work, _coord_form(field, _Y), _coord_form(field, _Z))

    lam2 = None
    for _ in sampler.attempts("transverse pole fiber"):
        cand = sampler.scalar(field)
        member = y_pencil.member(cand)
        try:
            fiber = intersect_branchwise(work, member)
        except ValidationError:
            continue
        if all(w == 1 and br.alpha == 1 and br.beta == 1
               for br, w in fiber) and len(fiber) and \
                fiber.total == work.degree:
            lam2 = cand
            fiber_h = fiber
            break
    for _ in sampler.attempts("distinct numerator level"):
        lam1 = sampler.scalar(field)
        if lam1 != lam2:
            break

    jac_y = y_pencil.jacobian()
    jac_x = x_pencil.jacobian()
    if jac_y.wild or jac_x.wild:
        raise UnsupportedFieldError(
            "wild ramification: differential bookkeeping is not "
            "certified here")
    fiber_x_inf = x_pencil.level_set(INFINITY)
    zeros = jac_y.weights + fiber_x_inf.scaled(2)
    poles = jac_x.weights + fiber_h.scaled(2)

    FX = partial_derivative(F, _X)
    FY = partial_derivative(F, _Y)
    if not FX or not FY:
        raise UnsupportedFieldError(
            "a coordinate derivative vanishes identically: the function "
            "x is not separating")
    lam2c = MultiPoly.const(field, PROJ_VARS, lam2)
    pole_form = _coord_form(field, _Y) - _coord_form(field, _Z) * lam2c
    signed_direct = (intersect_branchwise(work, FX)
                     - intersect_branchwise(work, FY)
                     + intersect_branchwise(work,
                                            _coord_form(field, _Z)).scaled(2)
                     - intersect_branchwise(work, pole_form).scaled(2))
    matched = (zeros - poles) == signed_direct
    if not matched:
        raise InvariantViolation(
            "differential decomposition mismatch: pencil assembly "
            "disagrees with the closed form of dh/dx")
    if zeros.total != poles.total:
        raise InvariantViolation(
            "zero and pole totals differ: %d vs %d"
            % (zeros.total, poles.total))
    return DecompositionReport(work, frame, lam1, lam2, zeros, poles,
                               matched)


def _coord_form(field, v):
    exp = tuple(1 if w == v else 0 for w in PROJ_VARS)
    return MultiPoly(field, PROJ_VARS, {exp: field.one})

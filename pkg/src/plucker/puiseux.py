"""Truncated Laurent series and Newton-Puiseux branch expansions.

Series are exact objects with explicit truncation: coefficients from the
valuation up to (not including) `prec` are known, everything above is
O(t^prec).  A series that is zero to its precision has an unknown order;
`ord()` returns None for it and callers treat that as a retry signal.
A series with prec == INF is exact (a Laurent polynomial).

Branch expansions follow the Newton polygon with a Bezout-weighted
substitution, so a branch whose classical description needs the m
conjugate fractional series is produced once, over the field where the
polygon equation has its root, never over a gratuitous radical
extension.  Conjugate clusters over the base field stay merged and
carry their orbit size.
"""

from fractions import Fraction
from math import gcd

from .algebra import univar
from .algebra.factor import roots_and_residual
from .algebra.fields import SimpleExtension
from .algebra.multipoly import MultiPoly
from .errors import (PrecisionExhausted, UnsupportedFieldError,
                     ValidationError)

INF = 1 << 60

PRECISION_SLACK = 4


def default_precision(degree):
    """Starting truncation order for branch work on a degree-n curve."""
    return 2 * degree * degree + PRECISION_SLACK


class TruncatedSeries:
    """sum of c_i t^i for val <= i < prec, plus O(t^prec).

    The coefficient list starts at the valuation and its first entry is
    nonzero; a series with no known nonzero coefficient has an empty
    list and val == prec.
    """

    __slots__ = ("field", "val", "coeffs", "prec")

    def __init__(self, field, val, coeffs, prec):
        if prec is None:
            prec = INF
        coeffs = list(coeffs)
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
            val += 1
        if prec != INF and len(coeffs) > prec - val:
            coeffs = coeffs[:max(0, prec - val)]
            while coeffs and not coeffs[0]:
                coeffs.pop(0)
                val += 1
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            val = prec
        self.field = field
        self.val = val
        self.coeffs = coeffs
        self.prec = prec

    @classmethod
    def zero(cls, field, prec=INF):
        return cls(field, prec, [], prec)

    @classmethod
    def const(cls, field, c, prec=INF):
        return cls(field, 0, [field.coerce(c)], prec)

    @classmethod
    def t_power(cls, field, k, coeff=None, prec=INF):
        c = field.one if coeff is None else field.coerce(coeff)
        return cls(field, k, [c], prec)

    # -- inspection ----------------------------------------------------

    def ord(self):
        """Valuation, or None when the series is zero to precision."""
        return self.val if self.coeffs else None

    def is_zero_to_precision(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise PrecisionExhausted("series is zero to O(t^%d)" % self.prec)
        return self.coeffs[0]

    def coeff_at(self, k):
        if self.prec != INF and k >= self.prec:
            raise PrecisionExhausted(
                "coefficient of t^%d requested beyond O(t^%d)" % (k, self.prec))
        i = k - self.val
        if i < 0 or i >= len(self.coeffs):
            return self.field.zero
        return self.coeffs[i]

    # -- arithmetic ----------------------------------------------------

    def _as_series(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        try:
            return TruncatedSeries.const(self.field, other)
        except (TypeError, ValueError, UnsupportedFieldError):
            return None

    def _window(self, lo, hi):
        out = []
        for k in range(lo, hi):
            i = k - self.val
            out.append(self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero)
        return out

    def __add__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        prec = min(self.prec, other.prec)
        los = [s.val for s in (self, other) if s.coeffs]
        if not los:
            return TruncatedSeries.zero(self.field, prec)
        lo = min(los)
        hi = max(s.val + len(s.coeffs) for s in (self, other) if s.coeffs)
        if prec != INF:
            hi = min(hi, prec)
        a = self._window(lo, hi)
        b = other._window(lo, hi)
        return TruncatedSeries(self.field, lo,
                               [x + y for x, y in zip(a, b)], prec)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.field, self.val,
                               [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        other = self._as_series(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            sc = self._as_series(other)
            if sc is None:
                return NotImplemented
            c = sc.coeffs[0] if sc.coeffs else self.field.zero
            if not c:
                return TruncatedSeries.zero(self.field, self.prec)
            return TruncatedSeries(self.field, self.val,
                                   [c * x for x in self.coeffs], self.prec)
        other_s = other
        if self.prec == INF and other_s.prec == INF:
            prec = INF
        else:
            pa = self.prec + other_s.val if self.prec != INF else INF
            pb = other_s.prec + self.val if other_s.prec != INF else INF
            prec = min(pa, pb)
        if not self.coeffs or not other_s.coeffs:
            return TruncatedSeries.zero(self.field, prec)
        val = self.val + other_s.val
        n = len(self.coeffs) + len(other_s.coeffs) - 1
        if prec != INF:
            n = min(n, prec - val)
        out = [self.field.zero] * n
        for i, a in enumerate(self.coeffs):
            if not a or i >= n:
                continue
            stop = min(len(other_s.coeffs), n - i)
            for j in range(stop):
                b = other_s.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.field, val, out, prec)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise PrecisionExhausted(
                "cannot invert a series that is zero to O(t^%d)" % self.prec)
        if self.prec != INF:
            L = self.prec - self.val
        else:
            # 1/polynomial is an honest infinite series in general; keep
            # a finite truthful window
            L = len(self.coeffs) if len(self.coeffs) > 1 else 1
        c = self._window(self.val, self.val + L)
        inv0 = self.field.one / c[0]
        out = [inv0]
        for k in range(1, L):
            s = self.field.zero
            for i in range(1, k + 1):
                if c[i]:
                    s = s + c[i] * out[k - i]
            out.append(-(s * inv0))
        if self.prec != INF:
            prec = self.prec - 2 * self.val
        elif len(self.coeffs) == 1:
            prec = INF
        else:
            prec = -self.val + L
        return TruncatedSeries(self.field, -self.val, out, prec)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        c = self.field.coerce(other)
        return self * (self.field.one / c)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = TruncatedSeries.const(self.field, 1)
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def derivative(self):
        """d/dt; one order of known precision is spent."""
        out = [c * (self.val + i) for i, c in enumerate(self.coeffs)]
        prec = self.prec - 1 if self.prec != INF else INF
        return TruncatedSeries(self.field, self.val - 1, out, prec)

    def compose(self, g):
        """self(g(t)) for g with ord >= 1.

        A g that is zero to precision still composes; the result is then
        a constant plus O(t^g.prec).
        """
        if g.coeffs and g.val < 1:
            raise ValidationError(
                "series composition needs ord >= 1 in the inner series")
        if not g.coeffs and g.prec < 1:
            raise PrecisionExhausted("inner series has no known positive order")
        gv = g.val if g.coeffs else g.prec
        tail = gv * self.prec if self.prec != INF else INF
        hi = self.prec if self.prec != INF else self.val + len(self.coeffs)
        lo = min(self.val, 0)
        acc = TruncatedSeries.zero(self.field, tail)
        for k in range(hi - 1, lo - 1, -1):
            acc = acc * g + TruncatedSeries.const(self.field, self.coeff_at(k))
        if lo != 0:
            acc = acc * (g ** lo)
        if tail != INF and acc.prec > tail:
            acc = acc.truncate(tail)
        return acc

    def truncate(self, prec):
        if prec >= self.prec:
            return self
        return TruncatedSeries(self.field, self.val, self.coeffs, prec)

    def stretch(self, m):
        """Reparametrize t -> t^m for an integer m >= 1."""
        if m == 1:
            return self
        out = []
        for i, c in enumerate(self.coeffs):
            out.append(c)
            if i < len(self.coeffs) - 1:
                out.extend([self.field.zero] * (m - 1))
        prec = self.prec * m if self.prec != INF else INF
        return TruncatedSeries(self.field, self.val * m, out, prec)

    def scale_param(self, u):
        """Reparametrize t -> u t for a nonzero scalar u."""
        u = self.field.coerce(u)
        if not u:
            raise ValidationError("parameter scale must be nonzero")
        out = []
        if self.val >= 0:
            p = u ** self.val
        else:
            p = (self.field.one / u) ** (-self.val)
        for c in self.coeffs:
            out.append(c * p)
            p = p * u
        return TruncatedSeries(self.field, self.val, out, self.prec)

    def eval0(self):
        """Value at t = 0; requires valuation >= 0."""
        if self.coeffs and self.val < 0:
            raise ValidationError("series has a pole at t = 0")
        if self.prec != INF and self.prec <= 0:
            raise PrecisionExhausted("constant term unknown")
        return self.coeff_at(0)

    def lift_field(self, bigger):
        return TruncatedSeries(bigger, self.val,
                               [bigger.coerce(c) for c in self.coeffs],
                               self.prec)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.val, self.coeffs, self.prec) == \
            (other.val, other.coeffs, other.prec)

    def __hash__(self):
        return hash((self.val, tuple(self.coeffs), self.prec))

    def __str__(self):
        from .algebra.parser import scalar_to_string
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.val + i
            cs = scalar_to_string(c, wrap=True)
            if k == 0:
                parts.append(cs)
            elif k == 1:
                parts.append("t" if cs == "1" else "%s*t" % cs)
            else:
                parts.append("t^%d" % k if cs == "1" else "%s*t^%d" % (cs, k))
        if self.prec != INF:
            parts.append("O(t^%d)" % self.prec)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "TruncatedSeries(%s)" % self


def invert_series(s):
    """Functional inverse: r with s(r(t)) = t to the available precision.

    Only unramified series invert; anything with ord != 1 is rejected.
    """
    if s.ord() != 1:
        raise ValidationError(
            "not invertible: branch is ramified in this variable")
    field = s.field
    prec = s.prec if s.prec != INF else s.val + len(s.coeffs) + 1
    s1 = s.coeff_at(1)
    inv1 = field.one / s1
    coeffs = [inv1]
    for k in range(2, prec):
        r = TruncatedSeries(field, 1, coeffs + [field.zero], k + 1)
        err = s.compose(r) - TruncatedSeries.t_power(field, 1)
        if err.is_zero_to_precision() or err.val > k:
            coeffs.append(field.zero)
        else:
            coeffs.append(-(err.coeff_at(k) * inv1))
    return TruncatedSeries(field, 1, coeffs, prec)


def eval_poly_on_series(g, sx, sy):
    """g(sx, sy) for a polynomial g in two variables, by Horner in the
    second variable with cached powers of the first."""
    field = sx.field
    by_j = {}
    for (i, j), c in g.terms.items():
        by_j.setdefault(j, []).append((i, c))
    if not by_j:
        return TruncatedSeries.zero(field, INF)
    xpow = {0: TruncatedSeries.const(field, 1)}

    def xp(i):
        top = max(xpow)
        while top < i:
            xpow[top + 1] = xpow[top] * sx
            top += 1
        return xpow[i]

    acc = None
    prev = None
    for j in sorted(by_j, reverse=True):
        row = TruncatedSeries.zero(field, INF)
        for i, c in by_j[j]:
            row = row + xp(i) * c
        if acc is None:
            acc = row
        else:
            acc = acc * (sy ** (prev - j)) + row
        prev = j
    if prev:
        acc = acc * (sy ** prev)
    return acc


# ----------------------------------------------------------------------
# Newton-Puiseux proper


class BranchParam:
    """One local branch t -> (x(t), y(t)) of a plane curve germ.

    x(t) is exact: a constant plus one pure power of t, or a bare
    constant for a vertical-line branch.  y(t) is truncated.  One
    BranchParam stands for its whole conjugacy class over the curve's
    base field, of size conj_degree.
    """

    __slots__ = ("chart", "center", "x_series", "y_series", "field",
                 "ramification", "conj_degree")

    def __init__(self, chart, center, x_series, y_series, field,
                 ramification, conj_degree):
        self.chart = chart
        self.center = center
        self.x_series = x_series
        self.y_series = y_series
        self.field = field
        self.ramification = ramification
        self.conj_degree = conj_degree

    def deviations(self):
        a, b = self.center
        dx = self.x_series - TruncatedSeries.const(self.field, a)
        dy = self.y_series - TruncatedSeries.const(self.field, b)
        return dx, dy

    def order(self):
        dx, dy = self.deviations()
        cands = [o for o in (dx.ord(), dy.ord()) if o is not None]
        if not cands:
            raise PrecisionExhausted("branch deviations vanish to precision")
        return min(cands)

    def precision(self):
        return min(self.x_series.prec, self.y_series.prec)

    def __repr__(self):
        return "BranchParam(chart %s at %s; x = %s; y = %s; conj %d)" % (
            self.chart, self.center, self.x_series, self.y_series,
            self.conj_degree)


def _ord_in_y_at_x0(f):
    """Multiplicity of y in f(0, y), or None when f(0, y) is zero."""
    best = None
    for (i, j), c in f.terms.items():
        if i == 0 and (best is None or j < best):
            best = j
    return best


def _taylor_graph(f, field, prec):
    """The unique y(x) with f(x, y(x)) = 0, y(0) = 0, when f_y(0,0) != 0.
    Newton iteration with doubling precision."""
    yv = f.vars[1]
    fy = f.derivative(yv)
    x = TruncatedSeries.t_power(field, 1)
    y = TruncatedSeries.zero(field, 1)
    known = 1
    while known < prec:
        known = min(2 * known, prec)
        guess = TruncatedSeries(field, y.val if y.coeffs else known,
                                list(y.coeffs), known)
        num = eval_poly_on_series(f, x.truncate(known), guess)
        if num.is_zero_to_precision():
            y = guess
            continue
        den = eval_poly_on_series(fy, x.truncate(known), guess)
        y = (guess - num / den).truncate(known)
    return y


def _lower_edges(points):
    """Compact faces of the Newton polygon with inner normal (1, mu) for
    mu > 0: the edges carrying branches through the origin.

    Returns [((ihi, jhi), (ilo, jlo))] with jhi < jlo and ihi > ilo:
    each edge joins its low-j (high-i) endpoint to its high-j (low-i)
    endpoint.
    """
    best = {}
    for (i, j) in points:
        if j not in best or i < best[j]:
            best[j] = i
    chain = []
    for j in sorted(best):
        i = best[j]
        while len(chain) >= 2:
            (j1, i1), (j2, i2) = chain[-2], chain[-1]
            if (i2 - i1) * (j - j1) >= (i - i1) * (j2 - j1):
                chain.pop()
            else:
                break
        chain.append((j, i))
    edges = []
    for a in range(len(chain) - 1):
        (jlo, ihi_), (jhi, ilo_) = chain[a], chain[a + 1]
        if ilo_ < ihi_:
            edges.append(((ihi_, jlo), (ilo_, jhi)))
    return edges


def _bezout_weights(m, q):
    """Small nonnegative alpha, beta with alpha*m - beta*q = 1."""
    a0, a1, b0, b1 = 1, 0, 0, 1
    r0, r1 = m, q
    while r1:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        a0, a1 = a1, a0 - k * a1
        b0, b1 = b1, b0 - k * b1
    if r0 != 1:
        raise AssertionError("Newton polygon slope not in lowest terms")
    alpha, beta = a0, -b0
    while alpha < 0 or beta < 0:
        alpha += q
        beta += m
    return alpha, beta


def _binomials(n):
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


def _polygon_transform(f, field, cx, cy, m, q):
    """f(cx x^m, x^q (cy + y)) divided by the minimal power of x."""
    wmin = min(i * m + j * q for (i, j) in f.terms)
    out = {}
    for (i, j), c in f.terms.items():
        base = c * cx ** i
        binom = _binomials(j)
        w = i * m + j * q - wmin
        cyp = field.one
        for l in range(j, -1, -1):
            coef = base * (binom[l] * cyp)
            key = (w, l)
            prev = out.get(key)
            out[key] = coef if prev is None else prev + coef
            cyp = cyp * cy
    return MultiPoly(field, f.vars, {k: v for k, v in out.items() if v})


def newton_puiseux(f, field, prec, _conj=1, _depth=0):
    """All branches of f(x, y) = 0 through the chart origin.

    f must vanish at the origin; a germ divisible by either chart
    variable (a line component through the point) is rejected here and
    handled by callers that know the curve.  Returns a list of
    (x_series, y_series, field, conj_degree) with x exact.
    """
    if _depth > 64:
        raise PrecisionExhausted(
            "Newton polygon recursion exceeded its depth bound")
    if f.terms.get((0, 0)):
        return []
    if not f.terms:
        raise ValidationError("zero polynomial has no isolated branches")
    if _ord_in_y_at_x0(f) is None:
        raise ValidationError(
            "line factor: first chart variable divides the germ")
    jmin = min(j for (_, j) in f.terms)
    if jmin > 0:
        # the second chart variable divides the germ: an exact branch
        # y = 0, plus whatever the cofactor carries through the origin
        if jmin > 1:
            raise ValidationError("germ has a repeated line factor")
        g = MultiPoly(f.field, f.vars,
                      {(i, j - 1): c for (i, j), c in f.terms.items()})
        out = [(TruncatedSeries.t_power(field, 1),
                TruncatedSeries.zero(field, INF), field, _conj)]
        if not g.terms.get((0, 0)):
            out.extend(newton_puiseux(g, field, prec,
                                      _conj=_conj, _depth=_depth + 1))
        return out
    if f.terms.get((0, 1)):
        y = _taylor_graph(f, field, prec)
        return [(TruncatedSeries.t_power(field, 1), y, field, _conj)]
    out = []
    for (i_hi, j_lo), (i_lo, j_hi) in _lower_edges(set(f.terms)):
        dj = j_hi - j_lo
        di = i_hi - i_lo
        g = gcd(di, dj)
        m, q = dj // g, di // g
        # polygon equation in u = (leading y-coefficient)^m: lattice
        # points on this edge have j congruent to j_lo modulo m
        psi = {}
        for (i, j), c in f.terms.items():
            if not (j_lo <= j <= j_hi):
                continue
            if (i - i_hi) * m != (j_lo - j) * q:
                continue
            psi[(j - j_lo) // m] = c
        coeffs = [psi.get(k, field.zero) for k in range(max(psi) + 1)]
        roots, residual = roots_and_residual(coeffs, field)
        work = [(field, mu, _conj) for (mu, _mult) in roots if mu]
        for (fac, _mult) in residual:
            d = univar.degree(fac)
            if d < 2:
                continue
            if isinstance(field, SimpleExtension):
                raise UnsupportedFieldError(
                    "field tower exceeded: branch needs an extension of an extension")
            ext = SimpleExtension(field, fac, gen_name="a",
                                  check_irreducible=False)
            work.append((ext, ext.gen, _conj * d))
        alpha, beta = _bezout_weights(m, q)
        for (K, mu, conj) in work:
            fK = f.lift_field(K) if K != field else f
            cx = mu ** beta
            cy = mu ** alpha
            f1 = _polygon_transform(fK, K, cx, cy, m, q)
            for (x1s, y1s, Kb, conj_b) in newton_puiseux(
                    f1, K, prec, _conj=conj, _depth=_depth + 1):
                cxb = Kb.coerce(cx) if Kb is not K else cx
                cyb = Kb.coerce(cy) if Kb is not K else cy
                m1 = x1s.ord()
                c1 = x1s.leading()
                xs = TruncatedSeries.t_power(Kb, m1 * m, coeff=cxb * c1 ** m)
                ys = (x1s ** q) * (TruncatedSeries.const(Kb, cyb) + y1s)
                out.append((xs, ys, Kb, conj_b))
    if not out:
        raise PrecisionExhausted("Newton polygon yielded no branch (unexpected)")
    return out


def normalize_leading(xs, ys, field):
    """Scale the parameter so the lowest-order deviation has leading
    coefficient 1, when the field holds a suitable root."""
    cands = [s for s in (xs, ys) if s.coeffs]
    if not cands:
        return xs, ys
    s = min(cands, key=lambda t: t.val)
    d = s.val
    c = s.leading()
    if not c or d <= 0:
        return xs, ys
    u = _nth_root_in_field(field.one / c, d, field)
    if u is None:
        return xs, ys
    return xs.scale_param(u), ys.scale_param(u)


def _nth_root_in_field(c, d, field):
    """Some u with u^d = c, or None.  Rationals get an exact integer
    root check; small prime fields a direct scan; extensions are not
    searched."""
    if d == 1:
        return c
    if isinstance(c, Fraction):
        if c < 0:
            if d % 2 == 0:
                return None
            un = _int_nth_root(-c.numerator, d)
            ud = _int_nth_root(c.denominator, d)
            return -Fraction(un, ud) if un is not None and ud is not None else None
        un = _int_nth_root(c.numerator, d)
        ud = _int_nth_root(c.denominator, d)
        return Fraction(un, ud) if un is not None and ud is not None else None
    if isinstance(field, SimpleExtension):
        return None
    p = getattr(field, "p", None)
    if p is not None and p <= 1024:
        for r in range(1, p):
            u = field.coerce(r)
            if u ** d == c:
                return u
    return None


def _int_nth_root(n, d):
    if n < 0:
        return None
    if n in (0, 1):
        return n
    lo, hi = 1, 2
    while hi ** d < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** d < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** d == n else None


def branches_of_germ(f, field, prec, center=(None, None), chart="Z"):
    """BranchParam list for the germ of f at the chart origin, recentred
    at the stated chart point.

    The center coordinates are added back into the series, so the
    parametrizations live at the actual point rather than at zero.
    Output order is deterministic.
    """
    a, b = center
    a = field.zero if a is None else a
    b = field.zero if b is None else b
    out = []
    for (xs, ys, K, conj) in newton_puiseux(f, field, prec):
        xs, ys = normalize_leading(xs, ys, K)
        aK = K.coerce(a) if K is not field else a
        bK = K.coerce(b) if K is not field else b
        ram = xs.ord()
        x_full = TruncatedSeries.const(K, aK) + xs
        y_full = TruncatedSeries.const(K, bK) + ys
        out.append(BranchParam(chart, (aK, bK), x_full, y_full, K, ram, conj))
    out.sort(key=_branch_sort_key)
    return out


def _branch_sort_key(bp):
    dx, dy = bp.deviations()
    ox = dx.ord() if dx.ord() is not None else INF
    oy = dy.ord() if dy.ord() is not None else INF
    lead = min(ox, oy)
    sig = []
    k = 1
    while len(sig) < 10 and k < bp.precision():
        cx = dx.coeff_at(k) if k < dx.prec else None
        cy = dy.coeff_at(k) if k < dy.prec else None
        sig.append((_scalar_key(cx), _scalar_key(cy)))
        k += 1
    return (lead, bp.ramification or 0, tuple(sig))


def _scalar_key(c):
    """Total order on scalars of one field, for deterministic sorting."""
    if c is None:
        return ("?",)
    from .algebra.fields import ExtScalar, FpScalar
    if isinstance(c, Fraction):
        return ("q", c.numerator, c.denominator)
    if isinstance(c, FpScalar):
        return ("p", c.val)
    if isinstance(c, ExtScalar):
        return ("e",) + tuple(_scalar_key(x) for x in c.coeffs)
    return ("o", str(c))


def evaluate_on_branch(g, bp):
    """The truncated series g(x(t), y(t)) over the branch's field."""
    if g.field != bp.field:
        g = g.lift_field(bp.field)
    return eval_poly_on_series(g, bp.x_series, bp.y_series)


def substitute_form(g, bp, bound=None):
    """Order of g along the branch: ord_t of g(x(t), y(t)).

    When the composed series is zero to its precision, the order is not
    determined: that raises PrecisionExhausted so the caller can expand
    the branch further, unless the precision already exceeds `bound`
    (an intersection-theoretic cap), in which case the form vanishes on
    the whole branch and the call reports a contained curve instead.
    """
    s = evaluate_on_branch(g, bp)
    o = s.ord()
    if o is not None:
        return o
    if bound is not None and s.prec > bound:
        raise ValidationError("contains curve: form vanishes along a branch")
    raise PrecisionExhausted("form vanishes along branch to O(t^%d)" % s.prec)

"""Sparse multivariate polynomials and the elimination toolbox.

Terms live in a dict mapping exponent tuples to nonzero field scalars.
The monomial order everywhere (printing, leading terms, exact division)
is graded lex with the variable tuple's order deciding ties.

The resultant here is the package's only elimination engine: Sylvester
matrix with the first argument's coefficient rows on top, determinant by
fraction-free Bareiss elimination so entries stay polynomial.
"""

from fractions import Fraction

from ..errors import ValidationError
from .fields import QQ


class MultiPoly:

    __slots__ = ("field", "vars", "terms")

    def __init__(self, field, variables, terms):
        self.field = field
        self.vars = tuple(variables)
        clean = {}
        for exp, c in terms.items():
            if len(exp) != len(self.vars):
                raise ValidationError("exponent arity mismatch")
            if c:
                clean[tuple(exp)] = c
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, field, variables):
        return cls(field, variables, {})

    @classmethod
    def const(cls, field, variables, c):
        c = field.coerce(c)
        e = (0,) * len(variables)
        return cls(field, variables, {e: c} if c else {})

    @classmethod
    def variable(cls, field, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise ValidationError("unknown variable %r" % name)
        e = tuple(1 if v == name else 0 for v in variables)
        return cls(field, variables, {e: field.one})

    def _coerce_other(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValidationError("variable mismatch %r vs %r" % (other.vars, self.vars))
            if other.field != self.field:
                raise ValidationError("field mismatch")
            return other
        if isinstance(other, (int, Fraction)) or self.field.contains(other):
            return MultiPoly.const(self.field, self.vars, other)
        return None

    # ------------------------------------------------------------------
    # ring structure

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, self.field.zero) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return MultiPoly(self.field, self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.field, self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return MultiPoly(self.field, self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValidationError("negative polynomial power")
        out = MultiPoly.const(self.field, self.vars, 1)
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # ------------------------------------------------------------------
    # inspection

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    @staticmethod
    def _order_key(exp):
        return (sum(exp),) + tuple(exp)

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            return None
        e = max(self.terms, key=MultiPoly._order_key)
        return e, self.terms[e]

    def coefficient_of(self, name, k):
        """Coefficient of name**k, a polynomial with the same variable tuple
        (the eliminated variable simply no longer occurs)."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                out[e[:i] + (0,) + e[i + 1:]] = c
        return MultiPoly(self.field, self.vars, out)

    def lift_field(self, bigger):
        """Reinterpret coefficients inside an extension of the current field."""
        return MultiPoly(bigger, self.vars,
                         {e: bigger.coerce(c) for e, c in self.terms.items()})

    # ------------------------------------------------------------------
    # calculus and substitution

    def derivative(self, name):
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1:]
            d = c * e[i]
            if d:
                out[ne] = out.get(ne, self.field.zero) + d
        return MultiPoly(self.field, self.vars, {e: c for e, c in out.items() if c})

    def evaluate(self, values):
        """Full evaluation; `values` maps every variable name to a scalar.
        The scalars decide the result field (they must live in a common one)."""
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise ValidationError("evaluate: missing values for %r" % missing)
        acc = None
        for e, c in self.terms.items():
            term = c
            for i, name in enumerate(self.vars):
                if e[i]:
                    term = term * values[name] ** e[i]
            acc = term if acc is None else acc + term
        if acc is None:
            ref = next(iter(values.values()))
            return ref * 0
        return acc

    def subs_polys(self, mapping):
        """Substitute polynomials for variables.  `mapping` maps variable
        names to MultiPoly over the target variable tuple; unmapped
        variables must not occur."""
        target = None
        for img in mapping.values():
            target = img
            break
        if target is None:
            raise ValidationError("empty substitution")
        out = MultiPoly.zero(target.field, target.vars)
        pow_cache = {}
        for e, c in self.terms.items():
            term = MultiPoly.const(target.field, target.vars, c)
            for i, name in enumerate(self.vars):
                if not e[i]:
                    continue
                if name not in mapping:
                    raise ValidationError("substitution misses variable %r" % name)
                key = (name, e[i])
                if key not in pow_cache:
                    pow_cache[key] = mapping[name] ** e[i]
                term = term * pow_cache[key]
            out = out + term
        return out

    def rename_vars(self, new_vars):
        if len(new_vars) != len(self.vars):
            raise ValidationError("rename arity mismatch")
        return MultiPoly(self.field, tuple(new_vars), dict(self.terms))

    # ------------------------------------------------------------------
    # division

    def exact_divide(self, g):
        """Return q with self == q * g, or None when no such q exists."""
        if not g:
            raise ZeroDivisionError("division by zero polynomial")
        f = self
        qterms = {}
        lg, cg = g.leading()
        while f.terms:
            lf, cf = f.leading()
            diff = tuple(a - b for a, b in zip(lf, lg))
            if any(d < 0 for d in diff):
                return None
            c = cf / cg
            qterms[diff] = c
            f = f - MultiPoly(self.field, self.vars, {diff: c}) * g
        return MultiPoly(self.field, self.vars, qterms)

    def divides(self, other):
        return other.exact_divide(self) is not None

    def reduce_mod(self, g):
        """Remainder of division by the single polynomial g (graded lex)."""
        f = self
        lg, cg = g.leading()
        rem = MultiPoly.zero(self.field, self.vars)
        while f.terms:
            lf, cf = f.leading()
            diff = tuple(a - b for a, b in zip(lf, lg))
            if any(d < 0 for d in diff):
                mono = MultiPoly(self.field, self.vars, {lf: cf})
                rem = rem + mono
                f = f - mono
            else:
                f = f - MultiPoly(self.field, self.vars, {diff: cf / cg}) * g
        return rem

    # ------------------------------------------------------------------

    def __repr__(self):
        from .parser import poly_to_string
        return poly_to_string(self)


def partial_derivative(p, name):
    return p.derivative(name)


def univariate_coeffs(p, name):
    """Low-first coefficient list of p viewed in `name`; entries are
    polynomials in the remaining variables (same variable tuple)."""
    d = p.degree_in(name)
    if d < 0:
        return []
    return [p.coefficient_of(name, k) for k in range(d + 1)]


def sylvester_matrix(p, q, name):
    dp, dq = p.degree_in(name), q.degree_in(name)
    if dp <= 0 or dq <= 0:
        raise ValidationError(
            "resultant degenerate: argument constant in %s (degrees %d, %d)"
            % (name, dp, dq))
    a = univariate_coeffs(p, name)
    b = univariate_coeffs(q, name)
    n = dp + dq
    zero = MultiPoly.zero(p.field, p.vars)
    rows = []
    for k in range(dq):
        row = [zero] * n
        for i, c in enumerate(reversed(a)):
            row[k + i] = c
        rows.append(row)
    for k in range(dp):
        row = [zero] * n
        for i, c in enumerate(reversed(b)):
            row[k + i] = c
        rows.append(row)
    return rows


def det_bareiss(matrix):
    """Fraction-free determinant of a square matrix of MultiPoly entries."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        raise ValidationError("empty determinant")
    field, variables = m[0][0].field, m[0][0].vars
    one = MultiPoly.const(field, variables, 1)
    sign = 1
    prev = one
    for k in range(n - 1):
        piv = None
        for i in range(k, n):
            if m[i][k]:
                piv = i
                break
        if piv is None:
            return MultiPoly.zero(field, variables)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = num.exact_divide(prev)
                if q is None:
                    raise AssertionError("Bareiss division failed (bug)")
                m[i][j] = q
        for i in range(k + 1, n):
            m[i][k] = MultiPoly.zero(field, variables)
        prev = m[k][k]
    out = m[n - 1][n - 1]
    return -out if sign < 0 else out


def resultant(p, q, name):
    """Sylvester resultant eliminating `name`; p's coefficient rows on top."""
    return det_bareiss(sylvester_matrix(p, q, name))


def hessian(F):
    """Determinant of the matrix of second partials of a form in 3 variables."""
    if len(F.vars) != 3:
        raise ValidationError("hessian wants a form in three variables")
    if F.total_degree() < 2:
        raise ValidationError("hessian undefined for degree < 2")
    X, Y, Z = F.vars
    d = {}
    for a in (X, Y, Z):
        for b in (X, Y, Z):
            d[(a, b)] = F.derivative(a).derivative(b)
    return (d[(X, X)] * (d[(Y, Y)] * d[(Z, Z)] - d[(Y, Z)] * d[(Z, Y)])
            - d[(X, Y)] * (d[(Y, X)] * d[(Z, Z)] - d[(Y, Z)] * d[(Z, X)])
            + d[(X, Z)] * (d[(Y, X)] * d[(Z, Y)] - d[(Y, Y)] * d[(Z, X)]))


class Homography:
    """An invertible projective change of coordinates.

    `matrix` is a 3x3 list of rows of field scalars.  Acting on forms is
    substitution: (H @ F)(v) = F(M v).  Acting on points uses the inverse
    matrix so that incidence is preserved: if F(p) = 0 then
    (H @ F)(H.point(p)) = 0.
    """

    __slots__ = ("field", "matrix")

    def __init__(self, field, matrix):
        self.field = field
        self.matrix = tuple(tuple(field.coerce(c) for c in row) for row in matrix)
        if len(self.matrix) != 3 or any(len(r) != 3 for r in self.matrix):
            raise ValidationError("homography needs a 3x3 matrix")
        if not self._det():
            raise ValidationError("homography matrix is singular")

    def _det(self):
        ((a, b, c), (d, e, f), (g, h, i)) = self.matrix
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    @classmethod
    def identity(cls, field):
        o, z = field.one, field.zero
        return cls(field, [[o, z, z], [z, o, z], [z, z, o]])

    def apply(self, F):
        """F ∘ M on forms: substitute each variable by its image row."""
        if len(F.vars) != 3:
            raise ValidationError("homography acts on forms in three variables")
        imgs = {}
        gens = [MultiPoly.variable(F.field, F.vars, v) for v in F.vars]
        for i, name in enumerate(F.vars):
            row = self.matrix[i]
            acc = MultiPoly.zero(F.field, F.vars)
            for j in range(3):
                if row[j]:
                    acc = acc + gens[j] * F.field.coerce(row[j])
            imgs[name] = acc
        return F.subs_polys(imgs)

    def inverse(self):
        ((a, b, c), (d, e, f), (g, h, i)) = self.matrix
        det = self._det()
        adj = [
            [e * i - f * h, c * h - b * i, b * f - c * e],
            [f * g - d * i, a * i - c * g, c * d - a * f],
            [d * h - e * g, b * g - a * h, a * e - b * d],
        ]
        return Homography(self.field, [[x / det for x in row] for row in adj])

    def compose(self, other):
        """Combined change of coordinates, self acting on the form first:
        (self.compose(other)).apply(F) = other.apply(self.apply(F))."""
        m1, m2 = self.matrix, other.matrix
        prod = [[sum((m1[i][k] * m2[k][j] for k in range(3)), self.field.zero)
                 for j in range(3)] for i in range(3)]
        return Homography(self.field, prod)

    def map_vector(self, v):
        """Matrix action on a coordinate triple (used for point transport
        via the inverse matrix)."""
        return tuple(sum((self.matrix[i][j] * v[j] for j in range(3)),
                         v[0] * 0) for i in range(3))

    def __eq__(self, other):
        if not isinstance(other, Homography):
            return NotImplemented
        return self.field == other.field and self.matrix == other.matrix

    def __repr__(self):
        return "Homography(%r)" % (self.matrix,)


def apply_homography(p, h):
    return h.apply(p)

"""Coefficient fields: Q, prime fields GF(p), and one simple extension.

Scalars are plain objects with arithmetic dunders so polynomial and series
code never has to know which field it is working over.  Rational scalars
are stdlib Fractions; GF(p) and extension scalars are the small wrapper
classes below.  Every scalar is hashable and compares structurally, so
dictionaries of coefficients behave.

Towers are capped at one simple extension of Q or GF(p).  Asking for more
raises UnsupportedFieldError with a "field tower" message; nothing in the
package ever needs a second extension because conjugate data is kept in
one orbit over the first.
"""

from fractions import Fraction

from ..errors import UnsupportedFieldError, ValidationError
from . import univar


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Rationals:
    """The rational field.  Elements are fractions.Fraction."""

    characteristic = 0
    tower_height = 0

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise ValidationError("cannot coerce %r into Q" % (v,))

    def from_fraction(self, q):
        return Fraction(q)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def contains(self, v):
        return isinstance(v, (Fraction, int))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"

    def describe(self):
        return "Q"


QQ = Rationals()


class FpScalar:
    """An element of GF(p), stored as the canonical residue in [0, p)."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise ValidationError("mixed prime fields GF(%d), GF(%d)" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return FpScalar(other, self.p)
        if isinstance(other, Fraction):
            return FpScalar(other.numerator, self.p) / FpScalar(other.denominator, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.val + o.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.val - o.val, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpScalar(o.val - self.val, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpScalar(self.val * o.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.val == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return FpScalar(self.val * pow(o.val, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if e < 0:
            return (FpScalar(1, self.p) / self) ** (-e)
        return FpScalar(pow(self.val, e, self.p), self.p)

    def __neg__(self):
        return FpScalar(-self.val, self.p)

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(("Fp", self.p, self.val))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return str(self.val)


class PrimeField:
    """GF(p) for an odd prime p.  Characteristic 2 is rejected outright."""

    tower_height = 0

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise UnsupportedFieldError("field spec needs a prime, got %r" % (p,))
        if p == 2:
            raise UnsupportedFieldError("characteristic 2 unsupported")
        self.p = p
        self.characteristic = p

    def coerce(self, v):
        if isinstance(v, FpScalar):
            if v.p != self.p:
                raise ValidationError("mixed prime fields")
            return v
        if isinstance(v, int):
            return FpScalar(v, self.p)
        if isinstance(v, Fraction):
            return self.from_fraction(v)
        raise ValidationError("cannot coerce %r into GF(%d)" % (v, self.p))

    def from_fraction(self, q):
        if q.denominator % self.p == 0:
            raise ValidationError("denominator divisible by %d" % self.p)
        return FpScalar(q.numerator, self.p) / FpScalar(q.denominator, self.p)

    @property
    def zero(self):
        return FpScalar(0, self.p)

    @property
    def one(self):
        return FpScalar(1, self.p)

    def contains(self, v):
        return isinstance(v, int) or (isinstance(v, FpScalar) and v.p == self.p)

    def elements(self):
        return (FpScalar(i, self.p) for i in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p

    def describe(self):
        return "Fp:%d" % self.p


class ExtScalar:
    """An element of a simple extension, stored as a coefficient tuple in
    the power basis 1, a, ..., a^(d-1)."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field):
        d = field.degree
        coeffs = list(coeffs)
        if len(coeffs) < d:
            coeffs += [field.base.zero] * (d - len(coeffs))
        self.coeffs = tuple(coeffs[:d])
        self.field = field

    def _lift(self, other):
        if isinstance(other, ExtScalar):
            if other.field != self.field:
                raise ValidationError("mixed extension fields")
            return other
        if isinstance(other, (int, Fraction)) or self.field.base.contains(other):
            try:
                c = self.field.base.coerce(other)
            except ValidationError:
                return None
            return self.field.embed(c)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtScalar([a + b for a, b in zip(self.coeffs, o.coeffs)], self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtScalar([a - b for a, b in zip(self.coeffs, o.coeffs)], self.field)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        prod = univar.mul(list(self.coeffs), list(o.coeffs))
        _, rem = univar.divmod_exact_field(prod, self.field._minpoly_list)
        return ExtScalar(rem, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self):
        me = univar.trim(list(self.coeffs))
        if not me:
            raise ZeroDivisionError("division by zero in %r" % self.field)
        g, u, _ = univar.ext_gcd(me, self.field._minpoly_list)
        if univar.degree(g) != 0:
            raise ValidationError("minimal polynomial not irreducible: gcd %r" % g)
        return ExtScalar(univar.scale(u, self.field.base.one / g[0]), self.field)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one
        b = self
        while e:
            if e & 1:
                out = out * b
            b = b * b
            e >>= 1
        return out

    def __neg__(self):
        return ExtScalar([-a for a in self.coeffs], self.field)

    def __eq__(self, other):
        if isinstance(other, ExtScalar):
            return self.field == other.field and self.coeffs == other.coeffs
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("ext", self.field, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        name = self.field.gen_name
        parts = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s*%s" % (c, name) if c != 1 else name)
            else:
                parts.append("%s*%s^%d" % (c, name, i) if c != 1 else "%s^%d" % (name, i))
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


class SimpleExtension:
    """base[a] / (minpoly(a)) for a monic irreducible minpoly of degree >= 2.

    Parameters
    ----------
    base : Rationals or PrimeField
        Adjoining to an extension raises the tower error.
    minpoly : sequence of base scalars, low degree first, monic.
    gen_name : printable name of the generator.
    check_irreducible : skip the (factor-engine) irreducibility check when
        the caller already certified it, e.g. for factors of a squarefree
        resultant coming out of the factor engine itself.
    """

    def __init__(self, base, minpoly, gen_name="a", check_irreducible=True):
        if isinstance(base, SimpleExtension):
            raise UnsupportedFieldError(
                "field tower exceeded: extension of an extension is unsupported")
        if not isinstance(base, (Rationals, PrimeField)):
            raise UnsupportedFieldError("unsupported base field %r" % (base,))
        mp = [base.coerce(c) for c in minpoly]
        mp = univar.trim(mp)
        if univar.degree(mp) < 2:
            raise ValidationError("minimal polynomial must have degree >= 2")
        if mp[-1] != base.one:
            raise ValidationError("minimal polynomial must be monic")
        self.base = base
        self._minpoly_list = mp
        self.minpoly = tuple(mp)
        self.degree = len(mp) - 1
        self.gen_name = gen_name
        self.characteristic = base.characteristic
        self.tower_height = 1
        if check_irreducible:
            from . import factor
            if not factor.univar_is_irreducible(mp, base):
                raise ValidationError(
                    "minimal polynomial %r is reducible over %r" % (mp, base))

    def embed(self, c):
        return ExtScalar([self.base.coerce(c)] + [self.base.zero] * (self.degree - 1), self)

    def coerce(self, v):
        if isinstance(v, ExtScalar):
            if v.field != self:
                raise ValidationError("mixed extension fields")
            return v
        return self.embed(self.base.coerce(v))

    def from_fraction(self, q):
        return self.embed(self.base.from_fraction(q))

    @property
    def gen(self):
        return ExtScalar([self.base.zero, self.base.one] + [self.base.zero] * (self.degree - 2), self)

    @property
    def zero(self):
        return self.embed(self.base.zero)

    @property
    def one(self):
        return self.embed(self.base.one)

    def contains(self, v):
        if isinstance(v, ExtScalar):
            return v.field == self
        return self.base.contains(v)

    def __eq__(self, other):
        return (isinstance(other, SimpleExtension) and other.base == self.base
                and other.minpoly == self.minpoly)

    def __hash__(self):
        return hash(("extfield", self.base, self.minpoly))

    def __repr__(self):
        return "%r(%s)" % (self.base, self.gen_name)

    def describe(self):
        return "%s[%s]/(%s)" % (self.base.describe(), self.gen_name,
                                " ".join(str(c) for c in self.minpoly))


def base_field_of(field):
    return field.base if isinstance(field, SimpleExtension) else field


def parse_field(text):
    """CLI field spec: "Q" or "Fp:<p>"."""
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise UnsupportedFieldError("bad prime in field spec %r" % text)
        return PrimeField(p)
    raise UnsupportedFieldError("unknown field spec %r (expected Q or Fp:<p>)" % text)

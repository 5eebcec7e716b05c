"""Dense univariate polynomial helpers over an arbitrary field element type.

Polynomials are plain Python lists of field scalars, low degree first.  The
scalar type only has to support +, -, *, /, ==, bool (zero test).  These
helpers back the extension-field arithmetic and a handful of gcd
computations; they are deliberately free of any field bookkeeping so they
can be reused with Fraction, prime-field and extension scalars alike.
"""


def trim(c):
    """Drop trailing zero coefficients (in place is avoided; returns a copy)."""
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def degree(c):
    c = trim(c)
    return len(c) - 1 if c else -1


def add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(x + y)
    return trim(out)


def neg(a):
    return [-x for x in a]


def sub(a, b):
    return add(a, neg(b))


def scale(a, s):
    return trim([x * s for x in a])


def mul(a, b):
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [a[0] * b[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_exact_field(a, b):
    """Quotient and remainder of a by b; coefficients must live in a field."""
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("univariate division by zero polynomial")
    q = []
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1] / lb
        k = len(r) - 1 - db
        q.append((k, c))
        for i in range(len(b)):
            r[k + i] = r[k + i] - c * b[i]
        r = trim(r)
    out = [lb * 0] * (max((k for k, _ in q), default=-1) + 1)
    for k, c in q:
        out[k] = c
    return trim(out), r


def pseudo_rem(a, b):
    q, r = divmod_exact_field(a, b)
    return r


def monic(a):
    a = trim(a)
    if not a:
        return a
    lead = a[-1]
    return [x / lead for x in a]


def gcd(a, b):
    """Monic gcd via the Euclidean algorithm (field coefficients)."""
    a, b = trim(a), trim(b)
    while b:
        _, r = divmod_exact_field(a, b)
        a, b = b, r
    return monic(a)


def ext_gcd(a, b):
    """Return (g, u, v) with u*a + v*b = g, g monic."""
    a, b = trim(a), trim(b)
    r0, r1 = list(a), list(b)
    s0, s1 = [_one_like(a, b)], []
    t0, t1 = [], [_one_like(a, b)]
    while r1:
        q, r = divmod_exact_field(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    return monic(r0), [x / lead for x in s0], [x / lead for x in t0]


def _one_like(a, b):
    for c in list(a) + list(b):
        if c or c == 0:
            return c * 0 + 1 if not isinstance(c, int) else 1
    return 1


def evaluate(a, x):
    acc = x * 0
    for c in reversed(trim(a)):
        acc = acc * x + c
    return acc


def derivative(a):
    return trim([a[i] * i for i in range(1, len(a))])


def mod_pow(base, e, modulus):
    """base**e modulo the polynomial `modulus` (field coefficients)."""
    result = [_one_like(base, modulus)]
    b = divmod_exact_field(base, modulus)[1]
    while e:
        if e & 1:
            result = divmod_exact_field(mul(result, b), modulus)[1]
        b = divmod_exact_field(mul(b, b), modulus)[1]
        e >>= 1
    return result

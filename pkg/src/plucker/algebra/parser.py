"""Text form of polynomials.

Input grammar (whitespace insignificant)::

    expr   :=  ["-"] term (("+" | "-") term)*
    term   :=  factor (("*" | "/") factor)*
    factor :=  atom ["^" INT]
    atom   :=  INT | VAR | "(" expr ")" | "-" atom

Division is legal only between constants (so "3/2*X" parses and "X/2"
does not).  Projective input uses X, Y, Z; affine input uses x, y and is
homogenized with Z to its total degree.  Mixing the two alphabets is an
error.  Exponents are nonnegative integers.

Printing is canonical: graded-lex term order, explicit "*" between
factors, "^" for powers, so parse(print(p)) == p over the base fields.
"""

from ..errors import ParseError
from .multipoly import MultiPoly

PROJECTIVE_VARS = ("X", "Y", "Z")
AFFINE_VARS = ("x", "y")


class _Lexer:

    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.tokens = []
        self._scan()
        self.i = 0

    def _scan(self):
        t, n = self.text, len(self.text)
        i = 0
        while i < n:
            ch = t[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and t[j].isdigit():
                    j += 1
                self.tokens.append(("num", int(t[i:j]), i))
                i = j
                continue
            if ch.isalpha():
                j = i
                while j < n and t[j].isalpha():
                    j += 1
                self.tokens.append(("var", t[i:j], i))
                i = j
                continue
            if ch in "+-*/^()":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            raise ParseError("unexpected character %r at position %d" % (ch, i))

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("end", None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok


class _Parser:

    def __init__(self, text, field, variables):
        self.lex = _Lexer(text)
        self.field = field
        self.vars = variables
        self.seen = set()

    def parse(self):
        p = self.expr()
        tok = self.lex.peek()
        if tok[0] != "end":
            raise ParseError("unexpected %r at position %d" % (tok[1], tok[2]))
        return p

    def expr(self):
        neg = False
        if self.lex.peek()[0] == "-":
            self.lex.next()
            neg = True
        p = self.term()
        if neg:
            p = -p
        while self.lex.peek()[0] in ("+", "-"):
            op = self.lex.next()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.lex.peek()[0] in ("*", "/"):
            op, _, pos = self.lex.next()
            q = self.factor()
            if op == "*":
                p = p * q
            else:
                if not (p.is_constant() and q.is_constant()):
                    raise ParseError(
                        "division outside numeric coefficients at position %d" % pos)
                if not q:
                    raise ParseError("division by zero at position %d" % pos)
                c = p.terms.get((0,) * len(self.vars), self.field.zero)
                d = q.terms.get((0,) * len(self.vars))
                p = MultiPoly.const(self.field, self.vars, self.field.coerce(c) / d)
        return p

    def factor(self):
        p = self.atom()
        if self.lex.peek()[0] == "^":
            _, _, pos = self.lex.next()
            tok = self.lex.next()
            if tok[0] != "num":
                raise ParseError("exponent must be a nonnegative integer at position %d" % pos)
            p = p ** tok[1]
        return p

    def atom(self):
        kind, value, pos = self.lex.next()
        if kind == "num":
            return MultiPoly.const(self.field, self.vars, value)
        if kind == "var":
            if value not in self.vars:
                raise ParseError("unknown variable %r at position %d" % (value, pos))
            self.seen.add(value)
            return MultiPoly.variable(self.field, self.vars, value)
        if kind == "(":
            p = self.expr()
            tok = self.lex.next()
            if tok[0] != ")":
                raise ParseError("missing ')' at position %d" % tok[2])
            return p
        if kind == "-":
            return -self.atom()
        raise ParseError("unexpected %r at position %d" % (value, pos))


def _letters(text):
    out = set()
    i = 0
    while i < len(text):
        if text[i].isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            out.add(text[i:j])
            i = j
        else:
            i += 1
    return out


def parse_poly(text, field):
    """Parse projective (X, Y, Z) or affine (x, y) input into a form in
    X, Y, Z.  Affine input is homogenized with Z to its total degree."""
    if not text or not text.strip():
        raise ParseError("empty polynomial")
    names = _letters(text)
    upper = names & set(PROJECTIVE_VARS)
    lower = names & set(AFFINE_VARS)
    unknown = names - upper - lower
    if unknown:
        raise ParseError("unknown variable %r (expected X,Y,Z or x,y)" % sorted(unknown)[0])
    if upper and lower:
        raise ParseError("mixed projective and affine variables %r" % sorted(names))
    if lower:
        p = _Parser(text, field, AFFINE_VARS).parse()
        return homogenize_affine(p)
    return _Parser(text, field, PROJECTIVE_VARS).parse()


def parse_in_vars(text, field, variables):
    """Parse with an explicit variable tuple, no homogenization."""
    if not text or not text.strip():
        raise ParseError("empty polynomial")
    return _Parser(text, field, tuple(variables)).parse()


def homogenize_affine(p):
    """(x, y) polynomial -> form in (X, Y, Z) of its total degree."""
    d = max(p.total_degree(), 0)
    out = {}
    for (i, j), c in p.terms.items():
        out[(i, j, d - i - j)] = c
    return MultiPoly(p.field, PROJECTIVE_VARS, out)


def scalar_to_string(c, wrap=False):
    s = str(c)
    if wrap and any(op in s[1:] for op in ("+", "-", " ")):
        return "(%s)" % s
    return s


def poly_to_string(p):
    """Canonical printing: graded-lex descending, explicit '*'."""
    if not p.terms:
        return "0"
    exps = sorted(p.terms, key=MultiPoly._order_key, reverse=True)
    pieces = []
    for e in exps:
        c = p.terms[e]
        factors = []
        for name, k in zip(p.vars, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append("%s^%d" % (name, k))
        cs = scalar_to_string(c, wrap=True)
        negative = cs.startswith("-")
        if negative:
            cs = cs[1:]
        if not factors:
            body = cs
        elif cs == "1":
            body = "*".join(factors)
        else:
            body = "*".join([cs] + factors)
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)

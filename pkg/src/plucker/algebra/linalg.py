"""Exact linear algebra over any of the coefficient fields.

Matrices are lists of row lists of scalars.  Everything is plain Gaussian
elimination with exact division; sizes here are tiny (tens of rows), so no
pivoting strategy beyond "first nonzero" is needed.
"""

from . import univar


def _echelon(rows, field):
    """Row-reduce a copy of `rows`; returns (echelon rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, field):
    if not rows:
        return 0
    _, pivots = _echelon(rows, field)
    return len(pivots)


def nullspace(rows, field, ncols=None):
    """Basis of the right nullspace of the matrix, as coordinate vectors."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        rows = []
    ech, pivots = _echelon(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -ech[r][fc]
        basis.append(v)
    return basis


def solve(rows, rhs, field):
    """One solution of rows * x = rhs, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ech, pivots = _echelon(aug, field)
    n = len(rows[0]) if rows else 0
    for row in ech:
        if not any(row[:n]) and row[n]:
            return None
    x = [field.zero] * n
    for r, pc in enumerate(pivots):
        if pc == n:
            return None
        x[pc] = ech[r][n]
    # pivots columns hold the reduced identity, free vars stay zero; but the
    # reduced rows may still reference free columns, so substitute them out.
    for r, pc in enumerate(pivots):
        acc = ech[r][n]
        for c in range(n):
            if c != pc and ech[r][c]:
                acc = acc - ech[r][c] * x[c]
        x[pc] = acc
    return x


def minpoly_of_element(e, ext_field):
    """Minimal polynomial over the base field of an element of a simple
    extension, as a monic low-first coefficient list."""
    base = ext_field.base
    d = ext_field.degree
    powers = [ext_field.one]
    for _ in range(d):
        powers.append(powers[-1] * e)
    # find the first k with 1, e, ..., e^k linearly dependent over base
    for k in range(1, d + 1):
        rows = [[powers[j].coeffs[i] for j in range(k + 1)] for i in range(d)]
        ns = nullspace(rows, base, ncols=k + 1)
        ns = [v for v in ns if v[k]]
        if ns:
            v = ns[0]
            inv = base.one / v[k]
            return univar.trim([c * inv for c in v])
    raise AssertionError("element has no minimal polynomial (unreachable)")

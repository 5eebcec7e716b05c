"""Deterministic sampling for genericity searches.

Several operations need a point, line, or parameter in general
position.  Candidates are drawn from a seeded stream and each one is
checked against explicit certificates by the caller; a candidate that
fails is simply discarded.  With the same seed the stream is identical
run to run, so every "generic choice" in the toolkit is reproducible.
"""

import random
from fractions import Fraction

from .errors import GenericityError

RESAMPLE_BUDGET = 32


class Sampler:
    """Seeded source of field scalars and projective points."""

    def __init__(self, seed=0, budget=RESAMPLE_BUDGET):
        self.seed = seed
        self.budget = budget
        self._rng = random.Random(seed)

    def attempts(self, what):
        """Iterate attempt indices, failing loudly when the budget runs out.

        The loop body is expected to `return` (or `break`) on success;
        falling through all iterations raises GenericityError naming
        the search that failed.
        """
        for k in range(self.budget):
            yield k
        raise GenericityError(
            "genericity search exhausted after %d attempts: %s"
            % (self.budget, what))

    def rational(self, height=12):
        num = self._rng.randint(-height, height)
        den = self._rng.randint(1, height)
        return Fraction(num, den)

    def scalar(self, field, height=12, nonzero=False):
        p = field.characteristic
        for _ in range(8 * self.budget):
            if p:
                c = field.coerce(self._rng.randrange(p))
            else:
                c = field.coerce(self.rational(height))
            if c or not nonzero:
                return c
        raise GenericityError("could not draw a nonzero scalar")

    def point(self, field, height=12):
        """A projective point candidate with nonzero last coordinate."""
        return (self.scalar(field, height), self.scalar(field, height),
                field.one)

    def point_candidate(self, field, k):
        """Attempt-indexed point candidate: a fixed sparse list first,
        then seeded draws of growing height.

        The caller's certificates do all the rejecting; this only
        orders the queue so cheap candidates come first.  Points with
        zero coordinates keep the elimination polynomials downstream
        sparse, which is worth an order of magnitude on quartics.
        """
        if k < len(_SPARSE_POINTS):
            return tuple(field.coerce(c) for c in _SPARSE_POINTS[k])
        return self.point(field, height=min(k, 12))

    def pair_candidate(self, field, k):
        """Attempt-indexed scalar pair, sparse fixed values first."""
        if k < len(_SPARSE_PAIRS):
            a, b = _SPARSE_PAIRS[k]
            return field.coerce(a), field.coerce(b)
        h = min(k, 12)
        return self.scalar(field, height=h), self.scalar(field, height=h)

    def small_int(self, lo, hi):
        return self._rng.randint(lo, hi)


_SPARSE_POINTS = ((0, 0, 1), (1, 0, 0), (0, 1, 0), (0, 1, 1), (1, 0, 1),
                  (0, -2, 1), (2, 0, 1), (1, 1, 1), (-1, 2, 1))

_SPARSE_PAIRS = ((1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2))

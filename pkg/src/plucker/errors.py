"""Exception types shared across the package.

Each top-level CLI exit code has a corresponding exception class so the
command layer can map failures without string matching.
"""


class PluckerError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ParseError(PluckerError):
    """Bad input text: polynomial grammar violations, bad corpus lines."""

    exit_code = 2


class ValidationError(PluckerError):
    """Input violates a contract (reducible form, square factor, bad point)."""

    exit_code = 2


class UnsupportedFieldError(PluckerError):
    """Characteristic 2, malformed field spec, or a field tower too deep."""

    exit_code = 3


class GenericityError(PluckerError):
    """The seeded sampler ran out of retries while looking for a verified
    generic object (point, line, homography)."""

    exit_code = 4


class InvariantViolation(PluckerError):
    """A proven identity failed on concrete data.  Never caught internally."""

    exit_code = 5


class PrecisionExhausted(PluckerError):
    """Internal retry signal: a series computation hit its truncation order
    before the answer was determined.  Callers double precision and retry;
    after the retry budget this escalates to InvariantViolation or
    ValidationError depending on context."""

    exit_code = 5

"""Exception hierarchy shared across the package."""


class SincprodError(Exception):
    """Base class for all errors raised by this package."""


class RationalParseError(SincprodError, ValueError):
    """Input text is not a valid integer, fraction, or finite decimal."""


class ValidationError(SincprodError, ValueError):
    """A domain object failed construction-time validation."""


class ApplicabilityError(SincprodError):
    """A closed form was requested outside its hypothesis.

    The message names the inequality that failed, with both sides exact.
    """


class CapacityError(SincprodError):
    """Input exceeds the practical size guard of the enumeration kernel."""


class ToleranceError(SincprodError):
    """Requested quadrature tolerance is out of range or unreachable."""


class VerificationError(SincprodError):
    """A closed form disagreed with the enumeration engine."""


class NonPositiveResultWarning(UserWarning):
    """Diagnostic: a computed pi-coefficient was not strictly positive.

    Every case worked out so far has been positive, but positivity is not
    proven in general, so this is a warning rather than an invariant.
    """

"""Exception types raised across the library.

Decoding itself never raises on a plain failure to decode (that is a
legitimate, diagnosed outcome reported through DecodeOutcome); exceptions
are reserved for violated preconditions, malformed inputs and internal
invariant breaks.
"""


class RankCodeError(Exception):
    """Base class for all library-specific errors."""


class NotPrimePower(RankCodeError):
    """The requested field order is not a prime power."""


class ReducibleModulus(RankCodeError):
    """A supplied defining polynomial is not irreducible (or malformed)."""


class DependentPoints(RankCodeError):
    """Interpolation points are linearly dependent over the base field."""


class DivisionByZeroPoly(RankCodeError, ZeroDivisionError):
    """Euclidean division by the zero polynomial."""


class RankMismatch(RankCodeError):
    """The declared rank of a map does not match its actual rank."""


class DependentEvaluationPoints(RankCodeError):
    """Evaluation vector entries are linearly dependent over the base field."""


class DimensionTooLarge(RankCodeError):
    """Code dimension exceeds the code length."""


class DegreeTooLarge(RankCodeError):
    """Message polynomial degree is not below the code dimension."""


class RadiusTooLarge(RankCodeError):
    """Requested decoding radius exceeds what the decoder supports."""


class InternalInconsistency(RankCodeError):
    """A step that is guaranteed exact produced an inconsistent result."""


class WrongCount(RankCodeError):
    """Number of supplied message polynomials does not match the code."""


class InvalidRegime(RankCodeError):
    """Predicate evaluated outside its parameter domain."""


class RankInfeasible(RankCodeError):
    """No error of the requested rank profile exists (or sampling gave up)."""


class TooLarge(RankCodeError):
    """Brute-force enumeration would exceed the hard size cap."""


class NoneFound(RankCodeError):
    """Exhaustive search found no object that must exist."""


class NotUnique(RankCodeError):
    """Exhaustive search found several objects that must be unique."""

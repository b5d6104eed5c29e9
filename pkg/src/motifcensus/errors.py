"""Exception types shared across the package."""


class MotifCensusError(Exception):
    """Base class for every error this library raises on purpose."""


class ParseError(MotifCensusError):
    """Malformed input file; the message names the offending line."""


class ValidationError(MotifCensusError):
    """A value or structure violates a documented precondition."""


class ClassificationError(MotifCensusError):
    """An event sequence is not a classifiable motif candidate."""

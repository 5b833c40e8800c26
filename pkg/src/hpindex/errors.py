"""Exception hierarchy shared by the engine and the CLI."""


class HPIndexError(Exception):
    """Base class for all errors raised by hpindex."""


class ValidationError(HPIndexError, ValueError):
    """A record or dataset row violates a data invariant."""


class ParseError(ValidationError):
    """Input could not be decoded; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(HPIndexError, ValueError):
    """An argument lies outside the domain of an operation."""


class FitError(HPIndexError, ValueError):
    """A curve fit cannot be performed on the given points."""


class ConfigurationError(HPIndexError, ValueError):
    """Unknown metric names, bad synthetic specs and similar setup mistakes."""


class ComparisonError(HPIndexError, ValueError):
    """Two rankings cannot be compared (different researcher sets)."""

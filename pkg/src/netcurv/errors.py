"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: ``InputError`` -> 1, ``DomainError`` -> 2,
``InvariantError`` -> 3.
"""


class NetcurvError(Exception):
    """Base class for all errors raised by netcurv."""


class InputError(NetcurvError, ValueError):
    """Malformed or invalid input (bad rows, bad weights, unknown vertices...)."""


class ParseError(InputError):
    """A row of an edge list could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(NetcurvError, ValueError):
    """A curvature formula was evaluated outside its domain of validity."""


class InvariantError(NetcurvError, RuntimeError):
    """An internal consistency check failed."""

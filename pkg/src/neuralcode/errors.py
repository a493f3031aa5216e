"""Exception hierarchy.

Three families, matching the CLI exit codes: ``ParseError`` (bad input
files, exit 1), ``ContractError`` (violated preconditions or capacity
limits, exit 2) and ``InvariantFailure`` (a result that should be
impossible, exit 3).
"""


class NeuralCodeError(Exception):
    """Base class for every error raised by this package."""


class ParseError(NeuralCodeError):
    """Malformed code or cover file."""

    def __init__(self, message, lineno=None):
        self.message = message
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class MixedLength(ParseError):
    pass


class BadCharacter(ParseError):
    pass


class BadHeader(ParseError):
    pass


class BadPoint(ParseError):
    pass


class ContractError(NeuralCodeError):
    """An operation was called outside its domain."""


class EmptyCode(ParseError, ContractError):
    """No codewords: raised by the parser and by ideal computations."""


class CapacityExceeded(ContractError):
    pass


class LengthMismatch(ContractError):
    pass


class ZeroSets(ContractError):
    pass


class BadArc(ContractError):
    pass


class EmptyExtent(ContractError):
    pass


class BoxOutOfExtent(ContractError):
    pass


class Disconnected(ContractError):
    pass


class MissingVertex(ContractError):
    pass


class MissingBasepoint(MissingVertex):
    pass


class NoPath(ContractError):
    pass


class InvariantFailure(NeuralCodeError):
    """Internal consistency check failed; indicates a bug."""

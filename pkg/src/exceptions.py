"""
Error hierarchy for the m-closed graph toolkit.
Each family carries the CLI exit code it maps to.
"""

from typing import Optional


class MClosedError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code = 1


# Domain errors (exit 1): the input is valid data but outside an operation's domain

class DomainError(MClosedError):
    exit_code = 1


class OutOfRangeError(DomainError):
    pass


class LoopError(DomainError):
    pass


class DuplicateEdgeError(DomainError):
    pass


class NotBijectiveError(DomainError):
    pass


class NotAPathError(DomainError):
    pass


class DisconnectedError(DomainError):
    pass


class EmptyEdgeSetError(DomainError):
    pass


class NotATreeError(DomainError):
    pass


class IsAPathError(DomainError):
    pass


class NotCaterpillarError(DomainError):
    pass


class BadStartError(DomainError):
    pass


class BadEndpointsError(DomainError):
    pass


class BadJoinError(DomainError):
    pass


class TooSmallError(DomainError):
    pass


class PreconditionFailedError(DomainError):
    pass


# Guard errors (exit 2): exponential procedures refused above their size guard

class GuardError(MClosedError):
    exit_code = 2


class TooLargeError(GuardError):
    def __init__(self, what: str, n: int, guard: int):
        super().__init__(f"{what}: n={n} exceeds guard max_n={guard}")
        self.n = n
        self.guard = guard


class GuardExceededError(GuardError):
    pass


# Verification failure (exit 3): a proven property did not hold

class VerificationFailure(MClosedError):
    exit_code = 3


class GraphParseError(MClosedError):
    """Malformed graph input, with the location of the problem."""

    exit_code = 65

    def __init__(self, message: str, source: str = "<input>", line: Optional[int] = None):
        location = f"{source}:{line}" if line is not None else source
        super().__init__(f"{location}: {message}")
        self.source = source
        self.line = line

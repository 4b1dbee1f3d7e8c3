"""
Exception hierarchy for the markoff toolkit.

Input problems derive from ``ValueError`` so callers can treat them like any other bad argument.
Failed verifications carry enough context (clause, payload, path) to reproduce the counterexample.
"""

from typing import Any, Optional


class MarkoffError(Exception):
    """Base class of every error raised by the package."""


class InputError(MarkoffError, ValueError):
    """The arguments do not satisfy the operation's preconditions."""


class PreconditionViolation(InputError):
    pass


class NotMarkoff(InputError):
    pass


class NotCoprime(InputError):
    pass


class NotExtendable(InputError):
    pass


class NotIrrational(InputError):
    pass


class RangeError(InputError):
    pass


class InvalidSquareCF(InputError):
    pass


class DegenerateLE(InputError):
    pass


class NotRecognized(InputError):
    pass


class UnsupportedPath(InputError):
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class VerificationError(MarkoffError):
    """An identity or certificate did not hold."""


class IdentityViolation(VerificationError):
    """
    An identity check failed.

    Attributes:
        clause (str): Name of the failing clause.
        payload (Any): The input that produced the counterexample.
    """

    def __init__(self, clause: str, payload: Any = None) -> None:
        self.clause = clause
        self.payload = payload
        message = f"identity '{clause}' failed"
        if payload is not None:
            message += f" for {payload!r}"
        super().__init__(message)


class CertificateFailure(VerificationError):
    """A measure certificate failed at the node with the given path."""

    def __init__(self, path: str, detail: Optional[str] = None) -> None:
        self.path = path
        self.detail = detail
        message = f"certificate failed at node '{path or '(root)'}'"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class ResourceLimit(MarkoffError, RuntimeError):
    """A configured resource cap would be exceeded."""

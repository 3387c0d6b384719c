"""Exception hierarchy shared by every package in the project."""

from typing import Any, List, Optional


class OrigamiError(Exception):
    """Base class for all errors raised by the library."""


class ConfigError(OrigamiError):
    pass


class ParseError(OrigamiError):
    pass


class DegreeMismatch(OrigamiError):
    pass


class NotConnected(OrigamiError):
    pass


class ParityError(OrigamiError):
    pass


class NoInvolution(OrigamiError):
    pass


class AmbiguousInvolution(OrigamiError):
    """Several involutions realise -I and they disagree on the HLK invariant."""

    def __init__(self, message: str, invariants: Optional[List[Any]] = None):
        super().__init__(message)
        self.invariants = list(invariants or [])


class BadParams(OrigamiError):
    pass


class CapExceeded(OrigamiError):
    pass


class EmptyOrbit(OrigamiError):
    pass


class NotMinusISymmetric(OrigamiError):
    pass


class NonIntegralGenus(OrigamiError):
    pass


class StructureMismatch(OrigamiError):
    pass


class InvalidDiscriminant(OrigamiError):
    pass


class NonIntegral(OrigamiError):
    pass


class CacheError(OrigamiError):
    pass

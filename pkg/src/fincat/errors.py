"""Exception types shared across the package."""


class FincatError(Exception):
    """Base class for all errors raised by this package."""


class DomainMismatch(FincatError):
    """Objects or maps have incompatible shapes for the requested operation."""


class ShapeMismatch(FincatError):
    """Structure maps of an internal datum have the wrong domains/codomains."""


class NotMono(FincatError):
    """A map required to be injective has a repeated table entry."""


class NotEpi(FincatError):
    """A map required to be surjective misses part of its codomain."""


class NotFullMono(FincatError):
    """An internal functor required to be a full monomorphism is not one."""


class NotBiSieve(FincatError):
    """An internal functor required to be a strict bi-sieve is not one."""


class NotFFEpi(FincatError):
    """An internal functor required to be fully faithful and epi-on-objects is not."""


class NotInClass(FincatError):
    """A map fed to a factorisation-system operation is outside the stated class."""


class NonCommuting(FincatError):
    """A square or cell handed to a lifting operation does not commute."""


class NotInHomSet(FincatError):
    """A transpose was fed a morphism with the wrong endpoints."""


class SizeBound(FincatError):
    """An enumeration would exceed the configured size bound."""


class ParseError(FincatError):
    """Malformed input text; carries the offending field name when known."""

    def __init__(self, message, field=None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field


class ValidationError(FincatError):
    """Parsed data failed axiom validation; carries the validation report."""

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class FiberNotSingleton(FincatError):
    """Internal consistency error: a fiber guaranteed to be a singleton was not.

    Signals a precondition-validation bug in this package, not a user error.
    """

from typing import Any


class KloostermanError(Exception):
    """Base class for all errors raised by the library."""

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return self.message


# ============================================
# Field construction and arithmetic
# ============================================


class FieldBoundsError(KloostermanError):
    """Raised when a field parameter or element lies outside its allowed range."""

    def __init__(self, parameter: str, value: Any, hint: str | None = None) -> None:
        self.parameter = parameter
        self.value = value
        message = f"Invalid `{parameter}`: {value}. {hint}" if hint else f"Invalid `{parameter}`: {value}."
        super().__init__(message)


class ReducibleModulusError(KloostermanError):
    """Raised when a proposed modulus has a nontrivial factor over GF(2)."""

    def __init__(self, modulus: int, factor: int) -> None:
        self.modulus = modulus
        self.factor = factor
        super().__init__(f"Modulus {modulus:#x} is reducible over GF(2): divisible by {factor:#x}")


class FieldDivisionByZeroError(KloostermanError, ZeroDivisionError):
    def __init__(self, message: str = "Zero has no multiplicative inverse") -> None:
        super().__init__(message)


class TrivialCharacterError(KloostermanError):
    """Raised when an operation needs a nontrivial additive character but got c = 0."""

    def __init__(self, message: str = "The character x -> lambda(0 * x) is trivial; c must be nonzero") -> None:
        super().__init__(message)


class DomainError(KloostermanError):
    def __init__(self, parameter: str, value: Any, hint: str | None = None) -> None:
        self.parameter = parameter
        self.value = value
        message = f"`{parameter}` = {value} is outside the domain. {hint}" if hint else f"`{parameter}` = {value} is outside the domain."
        super().__init__(message)


class SizeGuardError(KloostermanError):
    """Raised when a computation would exceed one of the configured size guards."""

    def __init__(self, quantity: str, value: int, bound: int) -> None:
        self.quantity = quantity
        self.value = value
        self.bound = bound
        super().__init__(f"{quantity} = {value} exceeds the bound {bound}")


# ============================================
# Identity checks
# ============================================


class IdentityViolationError(KloostermanError):
    """Raised when two exact evaluations of the same identity disagree.

    Both sides are kept so that reports can show them.
    """

    def __init__(self, identity: str, lhs: Any, rhs: Any, context: str | None = None) -> None:
        self.identity = identity
        self.lhs = lhs
        self.rhs = rhs
        self.context = context
        where = f" ({context})" if context else ""
        super().__init__(f"{identity} violated{where}: {lhs} != {rhs}")


class InjectivityViolationError(IdentityViolationError):
    """Raised when two distinct field elements map to the same dual codeword."""


class InconsistentInputError(KloostermanError):
    """Raised when supplied data cannot come from a valid code or table."""


class InternalInconsistencyError(KloostermanError):
    """Raised when an intermediate result that must be integral or complete is not."""


# ============================================
# Configuration
# ============================================


class ConfigError(KloostermanError):
    """Raised when a run configuration is invalid."""

    def __init__(self, parameter: str, value: Any, hint: str | None = None) -> None:
        self.parameter = parameter
        self.value = value
        message = f"Invalid `{parameter}` parameter: {value}. {hint}" if hint else f"Invalid `{parameter}` parameter: {value}."
        super().__init__(message)

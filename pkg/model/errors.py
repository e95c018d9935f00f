""" exceptions raised by the computational modules """


class EmdError(ValueError):
    """Base class, the command line turns these into a Bad request payload."""


class DomainError(EmdError):
    """An argument lies outside the precondition of an operation."""


class PatternViolation(EmdError):
    """A moment polynomial has a monomial outside its expected exponent pattern."""


class DimensionMismatch(EmdError):
    pass


class MassMismatch(EmdError):
    pass


class RegionError(EmdError):
    """The integral operator is only defined for 0 <= t <= s."""


class DensityUnavailable(EmdError):
    pass


class IntegralityError(EmdError):
    pass


class IdentityViolation(EmdError):
    """A cross-check failed; `identity` names the failing suite."""

    def __init__(self, identity, detail):
        super().__init__(f"{identity}: {detail}")
        self.identity = identity
        self.detail = detail

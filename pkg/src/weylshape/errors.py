"""Exception hierarchy shared by every module."""


class WeylShapeError(Exception):
    """Base class for all library errors."""


class NonDivisible(WeylShapeError, ArithmeticError):
    """Raised by exact polynomial division when the remainder is nonzero."""


class UndefinedGcd(WeylShapeError, ArithmeticError):
    pass


class ZeroPolynomial(WeylShapeError, ValueError):
    pass


class NotDivisible(WeylShapeError, ValueError):
    """Raised when embedding into a level that is not a multiple of the source level."""


class ParseError(WeylShapeError, ValueError):
    def __init__(self, offset: int, message: str):
        super().__init__(f"at offset {offset}: {message}")
        self.offset = offset
        self.message = message


class ZeroElement(WeylShapeError, ValueError):
    pass


class ForbiddenDirection(WeylShapeError, ValueError):
    pass


class InvalidDirection(WeylShapeError, ValueError):
    pass


class DiagonalPoint(WeylShapeError, ValueError):
    pass


class NonPositiveRho(WeylShapeError, ValueError):
    pass


class IdentityViolation(WeylShapeError, AssertionError):
    """A polynomial identity that must hold did not. Always an implementation bug."""


class PreconditionViolated(WeylShapeError, ValueError):
    pass


class ZeroAtOrigin(WeylShapeError, ValueError):
    pass


class DirectionMismatch(WeylShapeError, ValueError):
    pass


class UnsupportedElement(WeylShapeError, ValueError):
    """The automorphism is not defined on an element with this support."""


class UnknownFormat(WeylShapeError, ValueError):
    pass

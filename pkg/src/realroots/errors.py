"""Exception hierarchy shared by every module of the package."""


class RealRootsError(Exception):
    """Base class for all library errors."""

    tag = "RealRootsError"


class DomainError(RealRootsError, ValueError):
    """An input lies outside the domain of the operation."""

    tag = "DomainError"


class PreconditionError(RealRootsError, ValueError):
    """A documented precondition of the operation does not hold."""

    tag = "PreconditionError"


class StructureError(RealRootsError, ValueError):
    """A sign sequence does not have the shape required for counting."""

    tag = "StructureError"


class EndpointRootError(PreconditionError):
    """An interval endpoint is a root of the polynomial being counted."""

    tag = "EndpointRootError"


class BaseMismatchError(RealRootsError, ValueError):
    """Extension-field elements live over different algebraic numbers."""

    tag = "BaseMismatchError"


class DivisionByZero(RealRootsError, ZeroDivisionError):
    """Inversion of the zero element of Q(alpha)."""

    tag = "DivisionByZero"


class CommonComponentError(RealRootsError, ValueError):
    """The two curves share a component, so the system has infinitely many solutions."""

    tag = "CommonComponentError"


class GenericPositionError(RealRootsError, ValueError):
    """Two solutions of a bivariate system share an x-coordinate."""

    tag = "GenericPositionError"


class ParseError(RealRootsError, ValueError):
    """Malformed polynomial text."""

    tag = "ParseError"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position

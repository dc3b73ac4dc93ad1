"""Exception types shared across the package."""


class NcsurfError(Exception):
    """Base class for all package errors."""


class ParseError(NcsurfError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)


class NotAUnit(NcsurfError, ArithmeticError):
    pass


class NonUnitInverse(NotAUnit):
    """A substitution needed the inverse of a multi-term image."""


class NotADiagonal(NcsurfError, ValueError):
    pass


class PreconditionViolation(NcsurfError, ValueError):
    pass


class EliminationStuck(NcsurfError, RuntimeError):
    pass


class NotATriangle(NcsurfError, ValueError):
    pass


class EdgeNotInTriangulation(NcsurfError, ValueError):
    pass


class WindowTooSmall(NcsurfError, ValueError):
    pass


class ConservationViolated(NcsurfError, AssertionError):
    def __init__(self, n, detail=""):
        self.n = n
        super().__init__(f"conservation identity fails at n={n}{': ' + detail if detail else ''}")


class IllegalSurface(NcsurfError, ValueError):
    pass


class SingularAtAssignment(NcsurfError, ArithmeticError):
    pass


class QuasiPluckerMismatch(NcsurfError, AssertionError):
    pass

"""Exception and warning types shared across the package."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class SingularMatrix(GeometryError, ValueError):
    pass


class DimensionMismatch(GeometryError, ValueError):
    pass


class NoConvergence(GeometryError, RuntimeError):
    """An iterative projection hit its iteration cap before meeting tol."""


class EmptyInterior(GeometryError, ValueError):
    pass


class EmptyBody(GeometryError, ValueError):
    pass


class Unbounded(GeometryError, ValueError):
    pass


class NotLocated(GeometryError, TypeError):
    """The body has no distance oracle (e.g. a sandwich set)."""


class ContractViolation(GeometryError, ValueError):
    pass


class PreconditionFailed(GeometryError, ValueError):
    """A witness operation found one of its hypotheses false.

    ``hypothesis`` names the failing hypothesis so callers can report it.
    """

    def __init__(self, hypothesis, message=""):
        self.hypothesis = hypothesis
        super().__init__(f"{hypothesis}: {message}" if message else hypothesis)


class OutOfBall(GeometryError, ValueError):
    pass


class GridTooLarge(GeometryError, ValueError):
    pass


class EmptyComplementSample(UserWarning):
    """No sampled point of the metric complement; double-complement answers are vacuous."""

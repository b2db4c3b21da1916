"""Exception types raised across the package."""


class PhasePointError(Exception):
    """Base class for all errors raised by :mod:`phasepoint`."""


class NotPrime(PhasePointError, ValueError):
    pass


class ZeroInverse(PhasePointError, ZeroDivisionError):
    pass


class ZeroArgument(PhasePointError, ValueError):
    pass


class NoWitness(PhasePointError, RuntimeError):
    """A witness guaranteed to exist was not found (indicates a bug)."""


class BadDeterminant(PhasePointError, ValueError):
    pass


class NotConjugable(PhasePointError, RuntimeError):
    """The constructive conjugation failed (indicates a bug)."""


class NotHermitian(PhasePointError, ValueError):
    pass


class NotAState(PhasePointError, ValueError):
    pass


class IncompletePlane(PhasePointError, ValueError):
    pass


class ToleranceCollision(PhasePointError, RuntimeError):
    """Two distinct spectral clusters lie closer than twice the tolerance."""

    def __init__(self, message, distance=None):
        super().__init__(message)
        self.distance = distance


class Infeasible(PhasePointError, ValueError):
    """Requested method is too expensive for the given dimension."""

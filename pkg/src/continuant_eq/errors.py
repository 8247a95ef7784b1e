"""Exception hierarchy shared by every module."""


class ContinuantError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidParameterError(ContinuantError, ValueError):
    pass


class InvalidInputError(ContinuantError, ValueError):
    pass


class UnsupportedCaseError(ContinuantError, ValueError):
    pass


class InadmissibleInstanceError(ContinuantError, ValueError):
    """The polynomial does not satisfy the admissibility condition for (t, n)."""


class InternalError(ContinuantError, AssertionError):
    """A division the theory guarantees to be exact was not.

    Seeing this means a bug in this package, not bad input.
    """

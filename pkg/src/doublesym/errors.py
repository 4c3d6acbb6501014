class DoubleSymError(Exception):
    """Base class for domain errors raised by the library."""


class NotDivisible(DoubleSymError):
    pass


class NotLinear(DoubleSymError):
    pass


class MissingIndex(DoubleSymError):
    pass


class NotSymmetric(DoubleSymError):
    pass


class ColumnBoundViolated(DoubleSymError):
    pass


class DegenerateSpec(DoubleSymError):
    pass


class TruncationTooSmall(DoubleSymError):
    pass


class WrongBasis(DoubleSymError):
    pass

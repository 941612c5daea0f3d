"""Exception types raised by steerscope domain validation."""


class SteerscopeError(Exception):
    """Base class for all steerscope domain errors."""


class NotHermitian(SteerscopeError):
    pass


class NotUnitTrace(SteerscopeError):
    pass


class NotPositive(SteerscopeError):
    pass


class OutOfRange(SteerscopeError):
    pass


class WrongBasis(SteerscopeError):
    pass


class DegenerateMeasurementPair(SteerscopeError):
    pass


class DegenerateAlicePair(SteerscopeError):
    pass


class BobPairNotOrthogonal(SteerscopeError):
    pass


class OverlappingPlanes(SteerscopeError):
    pass


class DiscretizationTooCoarse(SteerscopeError):
    pass


class DegenerateMu(SteerscopeError):
    pass


class TrivialEffect(SteerscopeError):
    pass

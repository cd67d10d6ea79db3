"""Exception types raised by braidsurgery."""


class BraidSurgeryError(ValueError):
    """Base class for invalid input to the library."""


class LetterOutOfRange(BraidSurgeryError):
    pass


class StrandMismatch(BraidSurgeryError):
    pass


class IndexOutOfRange(BraidSurgeryError):
    pass


class InsufficientTwists(BraidSurgeryError):
    pass


class ZeroZeroCoefficient(BraidSurgeryError):
    pass


class NotCertifiedUnknotted(BraidSurgeryError):
    pass


class NotInfinityFramed(BraidSurgeryError):
    pass


class OddCrossingParity(AssertionError):
    """Inter-component crossing sum came out odd. Always a bug, never bad input."""

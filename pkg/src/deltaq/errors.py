"""Exception types raised by deltaq."""


class DeltaqError(Exception):
    pass


class InexactDivisionError(DeltaqError, ArithmeticError):
    """A polynomial division that must be exact left a remainder."""


class DegreeOverflowError(DeltaqError, ValueError):
    """A q-reversal was requested at a degree below the polynomial's degree."""


class NegativityError(DeltaqError, ValueError):
    """A result that must lie in Z_{>=0}[q] has a negative exponent or coefficient."""


class SizeMismatchError(DeltaqError, ValueError):
    pass


class RangeError(DeltaqError, ValueError):
    pass


class VanishingDenominatorError(DeltaqError, ZeroDivisionError):
    pass

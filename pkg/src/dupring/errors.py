class DupRingError(Exception):
    """Base class for every error raised by this package."""


class ParseError(DupRingError, ValueError):
    pass


class NotPrime(DupRingError, ValueError):
    pass


class ZeroRing(DupRingError, ValueError):
    pass


class OwnerMismatch(DupRingError, TypeError):
    pass


class ModeMismatch(DupRingError, TypeError):
    pass


class NotEnumerable(DupRingError):
    pass


class UndecidableMembership(DupRingError):
    pass


class ImproperIdeal(DupRingError, ValueError):
    pass


class NotAnIdeal(DupRingError, ValueError):
    pass


class SquareNotZero(DupRingError):
    """I*I != 0, so the idealization comparison does not apply."""


class ZeroGenerator(DupRingError, ValueError):
    pass


class NotADomainHandle(DupRingError, TypeError):
    pass


class CapExceeded(DupRingError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class InvalidElement(DupRingError, ValueError):
    """A pair (r, s) with s - r outside the ideal."""

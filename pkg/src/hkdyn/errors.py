"""Exception hierarchy shared by all modules."""


class HkdynError(Exception):
    pass


class DimensionError(HkdynError, ValueError):
    """Operands have incompatible shapes."""


class InvalidPolynomialError(HkdynError, ValueError):
    pass


class DegenerateFormError(HkdynError, ValueError):
    """The Gram matrix is singular."""


class NotAnIsometryError(HkdynError, ValueError):
    """Raised when M^T G M != G.

    ``entry`` is the first (row, col) where the two sides differ, with
    ``got`` and ``expected`` the corresponding values.
    """

    def __init__(self, message, entry=None, got=None, expected=None):
        super().__init__(message)
        self.entry = entry
        self.got = got
        self.expected = expected


class KindError(HkdynError, ValueError):
    """Operation requested for the wrong classification kind."""


class CapacityError(HkdynError, ValueError):
    pass


class PreconditionError(HkdynError, ValueError):
    pass


class DomainError(HkdynError, ValueError):
    pass


class UnknownLatticeError(HkdynError, KeyError):
    pass

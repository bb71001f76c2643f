"""Exception hierarchy shared across the package."""


class EventologyError(Exception):
    """Base class for all domain errors."""


class DuplicateLabel(EventologyError):
    pass


class EmptySet(EventologyError):
    pass


class TooLarge(EventologyError):
    pass


class LengthMismatch(EventologyError):
    pass


class ProbabilityOutOfRange(EventologyError):
    def __init__(self, index, value):
        super().__init__(f"probability #{index} = {value} is outside [0, 1]")
        self.index = index
        self.value = value


class IndexOutOfRange(EventologyError):
    pass


class NotHalfRare(EventologyError):
    pass


class MarginalMismatch(EventologyError):
    pass


class DimensionMismatch(EventologyError):
    pass


class Infeasible(EventologyError):
    """The LP reported no feasible joint; impossible for valid marginals,
    so this always signals an implementation bug."""

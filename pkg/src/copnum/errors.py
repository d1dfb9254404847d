"""Exception hierarchy shared by every copnum module."""


class CopnumError(Exception):
    """Base class for all library errors."""


class ConstructionError(CopnumError, ValueError):
    """A graph or direction could not be built from the given input."""


class UnsupportedModeError(CopnumError):
    """Operation is not defined for this graph mode."""


class BudgetExceeded(CopnumError):
    """A state-space bound was hit before solving started.

    ``bound`` names the limit that tripped, ``required`` is the size asked for.
    """

    def __init__(self, bound: str, required: int, limit: int):
        self.bound = bound
        self.required = required
        self.limit = limit
        super().__init__(f"{bound}: need {required:,}, limit is {limit:,}")


class DomainError(CopnumError):
    """An oracle was queried outside the region where it is defined."""


class AdjudicationError(CopnumError):
    """A strategy returned an illegal move."""

    def __init__(self, strategy: str, message: str):
        self.strategy = strategy
        super().__init__(f"{strategy}: {message}")


class FitError(CopnumError, ValueError):
    """A region does not fit on the requested board."""

    def __init__(self, message: str, minimal_n: int):
        self.minimal_n = minimal_n
        super().__init__(f"{message} (needs n >= {minimal_n})")

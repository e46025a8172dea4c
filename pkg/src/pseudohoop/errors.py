"""Exception types shared across the package."""
from __future__ import annotations


class InputError(ValueError):
    """Malformed tables or files.

    ``field`` names the offending table or key and ``index`` the position
    inside it, when known.
    """

    def __init__(self, message: str, field: str | None = None, index: tuple | None = None):
        super().__init__(message)
        self.field = field
        self.index = index


class ContractError(ValueError):
    """An operation was called outside its precondition."""


class InapplicableError(ValueError):
    """The algebra does not meet a hypothesis the operation needs."""

    def __init__(self, message: str, hypothesis: str):
        super().__init__(message)
        self.hypothesis = hypothesis


class InconsistencyError(RuntimeError):
    """A computed result contradicts a theorem.

    This never signals a mathematical discovery. It means either the input
    was not a pseudo hoop or the implementation has a bug.
    """


class ResiduationError(ValueError):
    """A product table has no residual for some pair."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None, side: str | None = None):
        super().__init__(message)
        self.pair = pair
        self.side = side

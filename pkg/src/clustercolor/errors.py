"""Shared exception types."""


class InvalidDecomposition(ValueError):
    """A tree-decomposition failed validation where a valid one is required."""


class InvalidLayering(ValueError):
    """A layering failed validation where a valid one is required."""


class PaceParseError(ValueError):
    """Malformed PACE-style input file."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of budget before reaching a conclusion."""


class GroupBudgetError(ValueError):
    """An edge-group input violated its declared budget.

    ``budget`` names the violated field so callers can tell which
    precondition failed.
    """

    def __init__(self, budget: str, message: str):
        super().__init__(f"{budget}: {message}")
        self.budget = budget


class ClusteringBoundError(RuntimeError):
    """A coloring stage exceeded its guaranteed clustering bound.

    Raised after the fact by the verifying colorers; ``stage`` identifies
    which bound was violated.
    """

    def __init__(self, stage: str, measured: int, bound: int):
        super().__init__(
            f"{stage}: measured clustering {measured} exceeds bound {bound}"
        )
        self.stage = stage
        self.measured = measured
        self.bound = bound


class InternalInvariantError(RuntimeError):
    """A condition the construction guarantees was found violated."""

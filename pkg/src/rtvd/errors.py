"""Exception types shared across the package."""


class RtvdError(Exception):
    """Base class for package-specific errors."""


class GraphClassError(RtvdError):
    """An operation was called on a digraph outside its supported class."""


class CapExceededError(RtvdError):
    """An exact computation was requested beyond its configured size cap."""


class CycleError(RtvdError):
    """Raised when an acyclic ordering is required but a cycle exists.

    Carries a witness: ``cycle`` is a vertex sequence (v0, ..., vt) with
    an arc from each vertex to the next and from vt back to v0.
    """

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"digraph contains the directed cycle {self.cycle}")


class GeneratorBudgetError(RtvdError):
    """Rejection sampling exhausted its attempt budget."""


class InstanceParseError(RtvdError):
    """An instance file failed to parse; ``line_no`` is 1-based."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")

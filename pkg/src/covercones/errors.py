"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or degenerate input: loops, empty edges, zero vectors, ..."""


class CapExceededError(RuntimeError):
    """A configured size cap was exceeded.

    Exhaustive oracles and Hilbert basis computations refuse inputs above
    their caps instead of running unbounded searches.
    """


class DegenerateMinorError(InputError):
    """A clutter minor produced an empty edge (blocking clutter)."""


class NotPointedError(InputError):
    """The operation requires a pointed cone (trivial lineality space)."""


class NoGradingError(InputError):
    """No strictly positive grading functional exists for the generators."""


class InfeasibleError(InputError):
    """The polyhedron is empty where a feasible one is required."""

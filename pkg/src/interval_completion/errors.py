class ObstructionError(ValueError):
    """An obstruction routine was called on input violating its precondition."""


class NotReduced(ObstructionError):
    """The graph still contains a hole or a small asteroidal witness."""


class InvariantError(RuntimeError):
    """A search-state invariant failed; always a bug, never a user error."""

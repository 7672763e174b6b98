"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid user-supplied parameters, graph data, or spec strings."""


class CapacityError(RuntimeError):
    """A computation exceeded a configured resource bound."""

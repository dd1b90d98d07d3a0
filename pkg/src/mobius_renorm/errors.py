"""Exception types shared across the library."""


class MobiusError(Exception):
    """Base class for all library errors."""


class ParseError(MobiusError):
    """Malformed textual input; ``position`` is a character index or line number."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InsufficientPrecision(MobiusError):
    """A requested coefficient lies outside the guaranteed truncation window."""


class PolePresent(MobiusError):
    """Evaluation at the origin was attempted on a series with a pole."""


class CycleDetected(MobiusError):
    """Cover relations contain a cycle, so no partial order exists."""


class NotUnitOnGrouplike(MobiusError):
    """Inversion requires the map to send group-like keys to 1."""

    def __init__(self, key):
        super().__init__(f"map does not send group-like key {key!r} to 1")
        self.key = key


class NonCommutativeTarget(MobiusError):
    """Character convolution needs a commutative target algebra."""


class UnitNotInKerR(MobiusError):
    """Birkhoff decomposition requires R(1) = 0."""


class MissingAssignment(MobiusError):
    """A character assignment does not cover a required tree."""

    def __init__(self, tree):
        super().__init__(f"no value assigned to tree {tree!r}")
        self.tree = tree

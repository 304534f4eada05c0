"""Exception types shared across the package."""

from __future__ import annotations


class RandlistsError(Exception):
    """Base class for errors raised by this package."""


class GraphParseError(RandlistsError, ValueError):
    """Malformed graph input (edge-list or graph6)."""


class AssignmentParseError(RandlistsError, ValueError):
    """Malformed list-assignment input."""


class ComponentTooLargeError(RandlistsError, RuntimeError):
    """The exact solver was asked to handle a vertex set above its cap."""

    def __init__(self, order: int, cap: int):
        super().__init__(f"component too large: {order} vertices exceeds cap {cap}")
        self.order = order
        self.cap = cap


class CapExceededError(RandlistsError, RuntimeError):
    """An exhaustive computation (chromatic number, choosability) was asked
    to handle a graph above its configured vertex cap."""

    def __init__(self, n: int, cap: int, what: str):
        super().__init__(f"{what}: graph has {n} vertices, cap is {cap}")
        self.n = n
        self.cap = cap


class ColourableBaseError(RandlistsError, ValueError):
    """A gadget base graph turned out to be colourable from its planted lists.

    Carries the proof colouring so callers can see why the base was rejected.
    """

    def __init__(self, colouring: dict[int, int]):
        super().__init__(
            "base graph is colourable from the planted lists; "
            f"proof colouring: {colouring}"
        )
        self.colouring = colouring

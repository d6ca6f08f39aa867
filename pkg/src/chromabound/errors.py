"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph input or a construction precondition that does not hold."""


class ParseError(ValueError):
    """Malformed graph6 or edge-list input.

    ``offset`` is the byte offset of the offending character (0-based).
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class InapplicableError(ValueError):
    """A bound's hypotheses are not met for the given input."""

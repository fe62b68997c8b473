"""Exception hierarchy shared by perms, ranking, groups and the parser."""


class PermError(Exception):
    """Base class for every error raised by permkit."""


class MalformedCycle(PermError, ValueError):
    """A cycle repeats a point or contains a negative point."""


class NotABijection(PermError, ValueError):
    """An array or mapping does not describe a permutation."""


class SizeTooSmall(PermError, ValueError):
    """The requested size does not cover every moved point."""


class RankOutOfRange(PermError, ValueError):
    """A rank falls outside ``[0, size!)``."""


class ParseError(PermError, ValueError):
    """Cycle text does not match the grammar.

    ``position`` is the 0-based offset of the offending character.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GroupTooLarge(PermError, RuntimeError):
    """Closure exceeded the configured ``max_order``.

    ``order`` is the number of elements reached when the guard tripped.
    """

    def __init__(self, order, max_order):
        super().__init__(
            f"group order exceeds max_order={max_order} "
            f"(reached {order} elements before aborting)"
        )
        self.order = order
        self.max_order = max_order

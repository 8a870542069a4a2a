"""Exception types raised by graph construction, codecs and verifiers."""


class GraphError(ValueError):
    """Base class for every structured error raised by this package."""


class InvalidGraph(GraphError):
    pass


class NotCubic(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class DuplicateSlotTag(GraphError):
    pass


class HasDangles(GraphError):
    pass


class Malformed6(GraphError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GroupArityMismatch(GraphError):
    pass


class CapExceeded(GraphError):
    """Raised when an enumeration overflows its cap; ``partial`` holds what was found."""

    def __init__(self, cap: int, partial: list):
        self.cap = cap
        self.partial = partial
        super().__init__(f"more than {cap} items")


class NotAdjacent(GraphError):
    pass


class ShapeMismatch(GraphError):
    pass


class NotSimple(GraphError):
    pass


class TooFewCopies(GraphError):
    pass


class SeedNotSnark(GraphError):
    pass


class ClaimViolated(GraphError):
    def __init__(self, message: str, report=()):
        super().__init__(message)
        self.report = list(report)


class Acyclic(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NoCycle(GraphError):
    pass


class NotBridgeless(GraphError):
    pass

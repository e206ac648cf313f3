"""Exception hierarchy shared by every module."""


class BergeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertexError(BergeError, ValueError):
    pass


class InvalidParameterError(BergeError, ValueError):
    pass


class InvalidInputError(BergeError, ValueError):
    pass


class DuplicateEdgeError(InvalidInputError):
    pass


class ParseError(InvalidInputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class WrongRegimeError(InvalidParameterError):
    """Parameters fall outside the regime an operation is defined for."""


class DivisibilityError(WrongRegimeError):
    pass


class OutOfTheoremRangeError(InvalidParameterError):
    pass


class PreconditionError(BergeError, ValueError):
    pass


class ConvexityError(InvalidInputError):
    pass


class InvariantViolation(BergeError, AssertionError):
    """A checked mathematical invariant failed. Always a bug or a disproof."""


class BudgetExhausted(BergeError):
    """A search hit its node or wall-clock limit before finishing."""

    def __init__(self, nodes: int, elapsed_ms: float):
        self.nodes = nodes
        self.elapsed_ms = elapsed_ms
        super().__init__(f"budget exhausted after {nodes} nodes / {elapsed_ms:.0f} ms")

"""Exception types shared across the package."""


class PcFactorError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PcFactorError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class Infeasible(PcFactorError, ValueError):
    """Raised when f(v) exceeds the (colour) degree of v, so no gadget exists."""

    def __init__(self, vertex: str, f_value: int, degree: int):
        self.vertex = vertex
        self.f_value = f_value
        self.degree = degree
        super().__init__(
            f"f({vertex}) = {f_value} exceeds available degree {degree}")


class NotPerfect(PcFactorError, ValueError):
    pass


class NotAFactor(PcFactorError, ValueError):
    pass


class InvalidPalette(PcFactorError, ValueError):
    pass


class NotViolating(PcFactorError, ValueError):
    pass


class InvalidColouring(PcFactorError, ValueError):
    pass


class NotRegular(PcFactorError, ValueError):
    def __init__(self, expected: int, vertex: str, degree: int):
        self.expected = expected
        self.vertex = vertex
        self.degree = degree
        super().__init__(
            f"hypergraph is not {expected}-regular: {vertex} has degree {degree}")


class TooLarge(PcFactorError, ValueError):
    """Input exceeds the cap configured for an exhaustive search."""


class SearchCapExceeded(PcFactorError, RuntimeError):
    """An exhaustive search ran past its configured budget without an answer."""

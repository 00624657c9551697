"""Exception types shared across the package."""


class GermlabError(Exception):
    """Base class for all errors raised by germlab."""


class DimensionMismatchError(GermlabError, ValueError):
    """Operands live in different ambient variable counts."""


class ZeroPolynomialError(GermlabError, ValueError):
    """An operation that needs a nonzero polynomial received zero."""


class SingularMatrixError(GermlabError, ValueError):
    """A coordinate change matrix is not invertible."""


class UnitIdealError(GermlabError, ValueError):
    """The ideal contains a unit, so the germ-level operation is undefined."""


class NotFlatError(GermlabError, ValueError):
    """The map germ is not flat, so the requested bound does not exist."""


class ParseError(GermlabError, ValueError):
    """Malformed polynomial text or job file.

    Carries a 1-based line and column of the offending character.
    """

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.line = line
        self.column = column


class ResourceLimitError(GermlabError, RuntimeError):
    """A configured resource bound was exceeded; nothing was truncated."""

    def __init__(self, bound: str, limit: int):
        super().__init__(f"resource limit exceeded: {bound} > {limit}")
        self.bound = bound
        self.limit = limit

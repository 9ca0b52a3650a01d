"""Exception hierarchy shared by all twistparity modules."""


class TwistParityError(Exception):
    """Base class for all package errors."""


class InvalidInputError(TwistParityError, ValueError):
    """An argument violates a documented precondition."""


class BadPrimeError(InvalidInputError):
    """A prime of bad reduction was passed where a good prime is required."""


class UnknownFactorizationError(TwistParityError):
    """A rational factorization was requested but cannot be certified."""


class UnknownProfileError(TwistParityError):
    """A local h-table entry needed for the computation is missing.

    ``missing`` lists (place, label) pairs that would have been consumed.
    """

    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__(f"unknown local profile entries: {self.missing}")


class ResourceLimitError(TwistParityError):
    """An enumeration exceeded its configured size bound."""


class ParseError(InvalidInputError):
    """A curve or profile file failed to parse; carries a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)

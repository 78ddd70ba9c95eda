class RankingError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidInputError(RankingError, ValueError):
    """Malformed rankings, mismatched candidate sets or bad arguments."""


class InstanceFormatError(InvalidInputError):
    """
    Parse error in an instance file or ranking argument
    """

    def __init__(self, message: str, line: int = 0, column: int = 0):
        """
        :param message: Human readable diagnostic
        :param line: 1-based line number (0 when not tied to a line)
        :param column: 1-based column of the offending token (0 when unknown)
        """
        self.line = line
        self.column = column
        location = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{location}{message}")


class PreconditionError(RankingError, ValueError):
    """An operation was called on an input outside its precondition."""


class SearchBudgetExceeded(RankingError, RuntimeError):
    """The exhaustive search space is larger than the allowed budget."""

    def __init__(self, space: int, budget: int, what: str = "challenger rankings"):
        self.space = space
        self.budget = budget
        super().__init__(f"search over {space} {what} exceeds budget {budget}")


class InvariantViolation(RankingError, RuntimeError):
    """A constructed result failed its own verification."""

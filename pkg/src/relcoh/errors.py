class RelcohError(Exception):
    """Base class for library errors."""


class UnsupportedInput(RelcohError):
    """The requested invariant is not certifiably computable for this input."""


class DegenerateModule(RelcohError):
    """M = aM (including M = 0); cd is minus infinity and grade is undefined."""


class ContextMismatch(RelcohError):
    pass


class NotInIdeal(RelcohError):
    pass


class WrongLength(RelcohError):
    pass


class HypothesisFailure(RelcohError):
    """A precondition of a checked statement does not hold on this instance."""


class InternalInconsistency(RelcohError):
    """Two routes that must agree disagreed; indicates a bug."""


class ParseError(RelcohError):
    """Syntax or name error in a session file, with a 1-based location."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)

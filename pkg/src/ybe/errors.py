"""Exception hierarchy shared by all modules."""


class Error(Exception):
    """Base class for all errors raised by this package."""


class ParseError(Error):
    """Malformed text input. Carries the position of the offending token."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", col {col}"
        elif col is not None:
            where = f"col {col}"
        super().__init__(f"{message} ({where})" if where else message)


class ValidationError(Error):
    """An axiom check failed. `failures` lists (check, witness, detail) entries."""

    def __init__(self, message, failures=()):
        self.failures = tuple(failures)
        super().__init__(message)


class CycleSetError(ValidationError):
    """Candidate table is not a valid non-degenerate cycle set."""


class SolutionError(ValidationError):
    """Candidate map is not an involutive non-degenerate solution."""


class BraceError(ValidationError):
    """Candidate tables do not form a left brace."""


class PreconditionError(Error):
    """An operation was called outside its stated preconditions."""


class ConsistencyError(Error):
    """Two independent computations of the same fact disagree.

    This signals an implementation bug, never bad input; the CLI maps it
    to its own exit code so CI can tell the two apart.
    """

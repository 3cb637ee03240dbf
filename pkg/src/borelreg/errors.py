"""Exception hierarchy shared by the whole package.

Exit-code mapping used by the CLI: usage and parse problems are exit 2,
failed internal consistency checks are exit 3.  A predicate coming out
false (e.g. an ideal that is not of Borel type) is a normal result, not
an exception; the CLI reports it with exit 1.
"""


class BorelRegError(Exception):
    """Base class for all package errors."""


class UsageError(BorelRegError, ValueError):
    """Caller violated a documented precondition (bad input, mixed rings, ...)."""


class ContextMismatchError(UsageError):
    """Operands belong to different polynomial rings."""


class ParseError(UsageError):
    """Malformed ideal file or monomial text; carries line/column."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + where)


class NotBorelTypeError(UsageError):
    """An operation requiring a Borel-type ideal was given a witness-refuted input."""

    def __init__(self, message: str, evidence=None):
        self.evidence = evidence
        super().__init__(message)


class OracleInfeasibleError(UsageError):
    """The Betti oracle refused to run because the instance exceeds its budget."""


class InternalCheckError(BorelRegError):
    """A built-in cross-check failed; indicates a bug, never bad user input."""


class MethodDisagreementError(InternalCheckError):
    """Two regularity methods returned different values for the same ideal."""

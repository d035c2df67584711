"""Exception hierarchy shared by the package."""


class KnotsplitError(Exception):
    """Base class for all errors raised by knotsplit."""


class ParseError(KnotsplitError, ValueError):
    """Malformed presentation or word text.  Carries a 1-based position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class AlphabetError(KnotsplitError, ValueError):
    """A word uses a generator outside the declared alphabet."""


class PresentationError(KnotsplitError, ValueError):
    pass


class ColumnError(KnotsplitError, ValueError):
    """Requested Fox-matrix column has zero epimorphism value."""


class ZeroInvariantError(KnotsplitError, ArithmeticError):
    """Wada's invariant vanished, so no degree (and no bound) is available."""


class BudgetExceeded(KnotsplitError, ValueError):
    pass


class InvariantViolation(KnotsplitError, RuntimeError):
    """A structural check that must hold by theorem failed; indicates a bug."""

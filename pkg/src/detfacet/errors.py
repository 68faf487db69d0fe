"""Exception types shared across the package."""


class DetFacetError(Exception):
    """Base class for all errors raised by detfacet."""


class InvalidVariableError(DetFacetError, ValueError):
    pass


class ContextMismatchError(DetFacetError, ValueError):
    pass


class NoLeadingTermError(DetFacetError, ValueError):
    pass


class PreconditionError(DetFacetError, ValueError):
    """An operation was called on input violating its documented precondition."""


class BudgetExceededError(DetFacetError):
    """A bounded computation ran past its configured cap.

    ``partial`` carries whatever state had been built when the cap was hit.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ParseError(DetFacetError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line

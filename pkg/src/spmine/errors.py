"""Exception hierarchy. Every error raised on bad input derives from SpmineError."""


class SpmineError(Exception):
    pass


class ParseError(SpmineError, ValueError):
    """Malformed input text. ``line`` is 1-based when the error is tied to a line."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyDatabase(SpmineError, ValueError):
    pass


class EmptyItemset(SpmineError, ValueError):
    pass


class ArityError(SpmineError, ValueError):
    pass


class RangeError(SpmineError, ValueError):
    pass


class InvalidBounds(SpmineError, ValueError):
    pass


class UnknownItem(SpmineError, KeyError):
    pass


class CapacityError(SpmineError):
    pass

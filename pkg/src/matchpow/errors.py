"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """A precondition on an operation's input was violated."""


class ParseError(ValueError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message, offset=None, line=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if offset is not None:
            loc.append(f"byte {offset}")
        suffix = f" ({', '.join(loc)})" if loc else ""
        super().__init__(message + suffix)
        self.offset = offset
        self.line = line


class Unsupported(ValueError):
    """The input is valid but outside the supported size limits."""

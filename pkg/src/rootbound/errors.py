"""Exception hierarchy shared by all modules."""


class RootBoundError(Exception):
    """Base class for every error raised by the package."""


class InvalidInput(RootBoundError, ValueError):
    pass


class UnsupportedDimension(RootBoundError):
    pass


class NotPrimitive(RootBoundError):
    """A polynomial of the system has a non-constant content in Q[s]."""

    def __init__(self, index, content):
        self.index = index
        self.content = content
        super().__init__(f"f{index} is not primitive: content {content}")


class CommonComponent(RootBoundError):
    """The two polynomials share a factor of positive t-degree."""


class ExtensionFieldNeeded(RootBoundError):
    pass


class Inconclusive(RootBoundError):
    pass


class ParseError(RootBoundError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        super().__init__(where + message)

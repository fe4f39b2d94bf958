"""Exception hierarchy shared by every module of the package."""


class DivlinError(Exception):
    """Base class for all errors raised by divlin."""


class DomainMismatchError(DivlinError, TypeError):
    """Operands live over different scalar domains."""


class SpaceMismatchError(DivlinError, ValueError):
    """Operands live in incompatible vector spaces (dimension, chirality or domain)."""


class DependentInputError(DivlinError, ValueError):
    """A list required to be linearly independent is not."""


class DimensionError(DivlinError, ValueError):
    """A dimension hypothesis of a construction is violated."""


class ParseError(DivlinError, ValueError):
    """Malformed matrix file or scalar literal.

    ``line`` and ``column`` are 1-based; either may be ``None`` when unknown.
    ``path`` names the file, when there is one.
    """

    def __init__(self, message, line=None, column=None, path=None):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        where = f"{path}: " if path is not None else ""
        if line is not None:
            where += f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)

"""Exception hierarchy."""


class SemihopfError(Exception):
    """Base class for library errors."""


class ParameterError(SemihopfError, ValueError):
    pass


class UnsupportedError(SemihopfError):
    pass


class SemiringMismatch(SemihopfError, TypeError):
    pass


class BasisKindError(SemihopfError, TypeError):
    pass


class DomainError(SemihopfError, KeyError):
    """A structure map has no value on a needed basis element."""

    def __init__(self, basis, where: str = ""):
        self.basis = basis
        self.where = where
        super().__init__(f"{where or 'map'} undefined on basis element {basis!r}")

    def __str__(self) -> str:
        return self.args[0]


class SizeError(SemihopfError):
    def __init__(self, required: int, budget: int, what: str = "search"):
        self.required = required
        self.budget = budget
        super().__init__(f"{what} needs {required} candidates, budget is {budget}")


class ConfigurationError(SemihopfError):
    pass


class FormatError(SemihopfError, ValueError):
    """Malformed structure file; carries a line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)

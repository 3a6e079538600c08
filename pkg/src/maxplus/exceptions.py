class PreconditionError(ValueError):
    """An input violates the precondition of an operation.

    ``witness`` carries whatever certificate explains the violation
    (a word, a pair of states, a path), or ``None``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceeded(RuntimeError):
    """A construction grew past its configured size cap."""


class DocumentError(ValueError):
    """A serialized automaton document is malformed."""

    def __init__(self, message, field=None, line=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.field = field
        self.line = line

class DomainError(ValueError):
    """Input that parses but makes no mathematical sense (CLI exit code 3)."""


class NotAPosetError(DomainError):
    pass


class UnknownElementError(DomainError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class NotATopologyError(DomainError):
    pass


class DimensionMismatch(ValueError):
    pass


class FieldMismatch(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class ParseError(ValueError):
    """Malformed input document (CLI exit code 2)."""


class InconsistencyError(RuntimeError):
    """Two independent routes to the same number disagreed."""

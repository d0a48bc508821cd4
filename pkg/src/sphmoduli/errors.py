"""Exception hierarchy shared by the library and the command line."""


class ValidationError(ValueError):
    """Malformed input: bad group spec, wrong lengths, non-dominant weights."""


class SaturationError(ValueError):
    """The monoid is not saturated; ``witness`` is a missing Hilbert-basis element."""

    def __init__(self, message: str, witness: tuple):
        super().__init__(message)
        self.witness = witness


class InternalError(RuntimeError):
    """A post-hoc consistency check failed; this indicates a bug."""

"""Exception types shared across quiverlab."""


class QuiverlabError(Exception):
    """Base class for all quiverlab errors."""


class ValidationError(QuiverlabError, ValueError):
    """Input data violates a documented invariant or precondition."""


class CapacityError(QuiverlabError, RuntimeError):
    """A computation would exceed its configured state/term budget."""


class InadmissibleTypeError(ValidationError):
    """A representation type yields a negative loop or arrow count on the slice."""


class IntegrityError(QuiverlabError, AssertionError):
    """An internal consistency check failed; this indicates a bug, never bad input."""

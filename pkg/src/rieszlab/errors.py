"""Exception hierarchy shared by all modules."""


class RieszError(Exception):
    """Base class for errors raised by rieszlab."""


class SpaceMismatchError(RieszError, ValueError):
    """Operands do not belong to the same space."""


class PreconditionError(RieszError, ValueError):
    """An operation was called outside its precondition."""


class NotAUnitError(PreconditionError):
    """The element offered as a unit does not dominate the space."""


class VerificationError(RieszError):
    """An exact verification step failed; indicates an implementation bug."""

"""Exception hierarchy shared by every module."""


class OrdextError(Exception):
    """Base class; the CLI maps subclasses to exit codes."""


class ValidationError(OrdextError, ValueError):
    """Input violates a documented precondition."""


class NonFiniteType(ValidationError):
    pass


class UnknownName(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class GroupTooLarge(ValidationError):
    pass


class ModeMismatch(ValidationError):
    pass


class FieldMismatch(ValidationError):
    pass


class NotLCharacter(ValidationError):
    pass


class ValidityDomain(OrdextError):
    """A formula was requested outside the hypotheses under which it is a theorem."""

"""Exception types raised by the pure computation modules."""


class CorootError(ValueError):
    """Base class; tools and the CLI catch ValueError and report it."""


class ValidationError(CorootError):
    """Inadmissible group type, rank mismatch, negative coweight or malformed input."""


class ExpressionError(ValidationError):
    """A PBW expression could not be parsed or refers to an unknown generator."""


class NotACharacterError(CorootError):
    """The input is not the character of a finite-dimensional sl2-representation."""


class InconsistentClassError(CorootError):
    """A Grothendieck-group class could not be realized as an sl2-module."""


class StructureConstantError(CorootError):
    """Chevalley structure constants violate integrality or the |N| = p + 1 rule."""

"""Exception hierarchy shared by all primfield modules."""

#: Default bound on q**n (and on enumeration counts) for exhaustive scans.
DEFAULT_LIMIT = 2**20

#: Integer width used for element counts and gaussian binomials.
WIDTH_BITS = 64


class PrimfieldError(Exception):
    """Base class for every error raised by primfield."""


class InvalidPolynomial(PrimfieldError, ValueError):
    pass


class NotPrime(PrimfieldError, ValueError):
    pass


class SizeLimit(PrimfieldError, ValueError):
    pass


class NotADivisor(PrimfieldError, ValueError):
    pass


class FieldMismatch(PrimfieldError, ValueError):
    pass


class DimensionMismatch(PrimfieldError, ValueError):
    pass


class NoAvoidingVector(PrimfieldError):
    """The family of subspaces covers the ambient space."""


class EmptyFamily(PrimfieldError, ValueError):
    pass


class FamilyTooLarge(PrimfieldError, ValueError):
    """More than q subspaces over F_q: avoidance is no longer guaranteed."""


class TrivialExtension(PrimfieldError, ValueError):
    pass


class NoCoveringExists(PrimfieldError, ValueError):
    pass


class TiTooLarge(PrimfieldError, ValueError):
    pass


class NotAPartitionOfW(PrimfieldError, ValueError):
    pass


class NotPrimitive(PrimfieldError, ValueError):
    pass


class MapNotInjective(PrimfieldError, ValueError):
    pass


class InputError(PrimfieldError, ValueError):
    """Malformed input file or command-line parameters."""

"""Exception types shared across the package."""


class JPGeomError(Exception):
    """Base class for every library error."""


class InvalidField(JPGeomError, ValueError):
    pass


class DimensionMismatch(JPGeomError, ValueError):
    pass


class SingularMatrix(JPGeomError, ArithmeticError):
    pass


class InvalidLieAlgebra(JPGeomError, ValueError):
    pass


class NotTripotent(JPGeomError, ValueError):
    pass


class NotTransversal(JPGeomError, ValueError):
    pass


class NotHomogeneous(JPGeomError, ValueError):
    pass


class NotInChart(JPGeomError, ValueError):
    pass


class NotInOmega(JPGeomError, ValueError):
    pass


class CapExceeded(JPGeomError, RuntimeError):
    pass


class InfiniteField(JPGeomError, ValueError):
    pass


class NotSurjective(JPGeomError, ValueError):
    pass


class NotGraded(JPGeomError, ValueError):
    pass


class InvalidPair(JPGeomError, ValueError):
    pass


class NotQuasiInvertible(JPGeomError, ValueError):
    pass


class NotInvolution(JPGeomError, ValueError):
    pass


class InvalidJTS(JPGeomError, ValueError):
    pass


class Isotropic(JPGeomError, ValueError):
    pass


class NotInvertible(JPGeomError, ValueError):
    pass


class NotBitransversal(JPGeomError, ValueError):
    pass


class NotUnitCandidate(JPGeomError, ValueError):
    pass


class ZeroPartNotGenerated(JPGeomError, ValueError):
    """The degree-zero part is not KE + [g_1, g_-1]."""


class NotCentralExtension(JPGeomError, ValueError):
    pass


class NotSubmodule(JPGeomError, ValueError):
    pass


class NotComplementary(JPGeomError, ValueError):
    pass


class NotIdempotent(JPGeomError, ValueError):
    pass


class UnknownEntry(JPGeomError, KeyError):
    pass


class SchemaError(JPGeomError, ValueError):
    """Malformed JSON input."""

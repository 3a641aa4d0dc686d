"""Exception hierarchy shared by all polyext modules."""


class PolyextError(Exception):
    """Base class for every error raised by polyext."""


class InputError(PolyextError, ValueError):
    """Malformed or out-of-contract input."""


class EmptyInput(InputError):
    pass


class MixedDimensions(InputError):
    pass


class WrongDimension(InputError):
    pass


class DegenerateLine(InputError):
    pass


class BadCoordinateCount(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class BadParameters(InputError):
    pass


class BadDimension(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class CoordinateOutOfRange(InputError):
    pass


class PreconditionViolated(InputError):
    pass


class RepresentationMismatch(InputError):
    """A vertex violates one of the inequalities it was paired with."""


class Unbounded(PolyextError):
    """The inequality system has a recession direction."""


class EmptyPolytope(PolyextError):
    """The inequality system has no solution."""


class UnknownType(PolyextError):
    """A 6-facet 3-polytope matched none of the stored reference types."""


class NotAnExtension(PolyextError):
    pass


class NotAFace(PolyextError):
    pass


class EmptySlice(PolyextError):
    pass


class NotConvexHeptagon(InputError):
    pass


class NotGeneralPosition(PolyextError):
    pass


class NoValidLabeling(PolyextError):
    pass


class NonPositiveHeight(PolyextError):
    pass


class InternalExhaustionError(PolyextError, RuntimeError):
    """The refuter ran out of witnesses. Either a bug or a counterexample."""


class ConstructionError(PolyextError, RuntimeError):
    """A built object failed its own re-verification."""

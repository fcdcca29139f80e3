"""Exception hierarchy.

``InputError`` subclasses describe malformed data (CLI exit code 2);
``PreconditionFailed`` subclasses describe valid data outside an
operation's domain (CLI exit code 3).
"""


class SRError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SRError, ValueError):
    pass


class EmptyInput(InputError):
    pass


class UncoveredVertex(InputError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} lies in no facet")


class VertexOutOfRange(InputError):
    pass


class NotAFace(InputError):
    pass


class NotSquarefree(InputError):
    pass


class DegreeOneGenerator(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class ZeroIdeal(InputError):
    pass


class PreconditionFailed(SRError):
    pass


class WrongDimension(PreconditionFailed):
    pass


class NotCI(PreconditionFailed):
    pass


class InfiniteCohomology(PreconditionFailed):
    pass

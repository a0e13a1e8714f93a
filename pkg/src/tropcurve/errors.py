"""Exception hierarchy.

Structural failures raise; validation problems are collected in reports.
The CLI maps :class:`InputError` to exit code 1 and every other
:class:`TropicalError` to exit code 3.
"""


class TropicalError(Exception):
    """Base class for every error raised by the package."""


class InputError(TropicalError, ValueError):
    """Malformed user input (documents, rationals, command arguments)."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


class BadDimension(TropicalError, ValueError):
    pass


class ZeroVector(TropicalError, ValueError):
    pass


class NotParallel(TropicalError, ValueError):
    pass


class DegenerateEdge(TropicalError):
    pass


class UnboundedExtent(TropicalError):
    pass


class UnknownVertex(TropicalError, KeyError):
    pass


class PreconditionViolated(TropicalError):
    pass


class NotContained(PreconditionViolated):
    pass


class VertexOnBoundary(PreconditionViolated):
    pass


class NonTransversal(PreconditionViolated):
    pass


NonTransversalEdge = NonTransversal


class OverlappingEdges(TropicalError):
    pass


class NotSaturated(PreconditionViolated):
    pass


class DegenerateSlice(PreconditionViolated):
    pass


class StuckVertex(TropicalError):
    pass


class CollarFailure(TropicalError):
    pass


class SkeletonRay(TropicalError):
    pass


class DegenerateCurve(TropicalError):
    pass


class ApexOutside(TropicalError, ValueError):
    pass

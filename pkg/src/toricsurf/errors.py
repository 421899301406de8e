"""Exception hierarchy for toricsurf.

Everything raised on bad input derives from :class:`ToricSurfError`, so
callers (and the CLI) can distinguish data problems from genuine bugs.
"""


class ToricSurfError(Exception):
    """Base class for all toricsurf input and validation errors."""


class ZeroVectorError(ToricSurfError):
    """A lattice vector that must be nonzero was (0, 0)."""


class NotPrimitiveError(ToricSurfError):
    """A vector required to be primitive has coordinate gcd > 1."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class ShapeError(ToricSurfError):
    """Matrix dimensions incompatible with the requested operation."""


class SingularMatrixError(ToricSurfError):
    """Exact elimination found no nonzero pivot: the matrix is singular."""


class FanError(ToricSurfError):
    """Base class for complete-fan validation failures."""


class TooFewRaysError(FanError):
    """A complete two-dimensional fan needs at least three rays."""


class DuplicateRayError(FanError):
    def __init__(self, message: str, first: int, second: int):
        super().__init__(message)
        self.first = first
        self.second = second


class NotCounterclockwiseError(FanError):
    """Consecutive rays fail the strict counterclockwise condition."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class NotCompleteError(FanError):
    """The rays do not wind exactly once around the origin."""


class DegeneratePolygonError(ToricSurfError):
    """Polygon is not strictly convex counterclockwise (or has repeats)."""


class NotNormalizedError(ToricSurfError):
    """Operation requires the next-to-last ray to be (1, 0)."""


class SmoothVertexRequiredError(ToricSurfError):
    """Operation requires the last two rays to be (1, 0) and (0, 1)."""


class UnsupportedOrientationError(ToricSurfError):
    """The smoothing rescale would reverse orientation; refusing to guess."""


class GenerationFailedError(ToricSurfError):
    """Random fan generation exhausted its retry budget."""


class ParseError(ToricSurfError):
    """Input document is not valid (position carried when known)."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class AmbiguousDocumentError(ParseError):
    """Document contains both a ray list and a vertex list."""

"""Exception types shared across the package."""


class RibbonProxError(Exception):
    """Base class for every error raised by this package."""


# -- cell complex construction -------------------------------------------------

class InvalidComplexError(RibbonProxError):
    """Vertex/edge collections violate a structural invariant."""


class UnknownVertexError(RibbonProxError):
    """A referenced vertex id is not declared in the complex."""


class RepeatedVertexError(RibbonProxError):
    """A cycle lists the same vertex id twice."""


class MissingEdgeError(RibbonProxError):
    """Consecutive cycle vertices are not joined by a declared edge."""


class SelfIntersectingError(RibbonProxError):
    """The polygon traced by a cycle is not simple."""


class NotNestedError(RibbonProxError):
    """The inner cycle is not contained in the outer cycle."""


class BadBridgeError(RibbonProxError):
    """A bridge edge does not join an outer-cycle vertex to an inner-cycle vertex."""


class DuplicateBridgeError(RibbonProxError):
    """The same bridge edge is listed twice."""


# -- proximity -----------------------------------------------------------------

class UndeclaredSubsetError(RibbonProxError):
    """A holistic probe was queried on a subset outside its declared family."""


class HolisticProbeUnsupportedError(RibbonProxError):
    """The operation needs element-level descriptions; lift the probe first."""


# -- algebra -------------------------------------------------------------------

class NoGeneratorsError(RibbonProxError):
    """The ribbon has no intersection vertices and no bridges."""


class UnreachableVertexError(RibbonProxError):
    """No path connects any generator to the target vertex."""


# -- dynamics / conjugacy ------------------------------------------------------

class NotBijectiveError(RibbonProxError):
    """The vertex map is not a bijection between the two carriers."""


class NotAnIsomorphismError(RibbonProxError):
    """The candidate map or its inverse fails proximal continuity."""


class PreconditionViolatedError(RibbonProxError):
    """A theorem check was invoked on inputs outside its hypotheses."""


# -- harness -------------------------------------------------------------------

class GenerationExhaustedError(RibbonProxError):
    """The random generator failed to produce a valid instance within its attempt budget."""


class ParseError(RibbonProxError):
    """Malformed input text; carries 1-based line and column."""

    def __init__(self, message: str, line: int = 0, col: int = 1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col

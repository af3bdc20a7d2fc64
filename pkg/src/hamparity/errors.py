"""Exception types shared across the package."""


class HamparityError(Exception):
    """Base class for every error this package raises deliberately."""


class ParseError(HamparityError):
    """Graph file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotDirected(HamparityError):
    """An operation needed a directed pair but got a non-edge or undirected one."""


class LengthMismatch(HamparityError):
    """A vertex ordering does not have exactly one slot per vertex."""


class ScaleRefusal(HamparityError):
    """Input exceeds a configured enumeration or DP cap."""


class MalformedRequirement(HamparityError):
    """A required-pair set is inconsistent with the graph's pair kinds."""


class NotATournament(HamparityError):
    """Graph has a non-edge or undirected pair where a tournament was required."""


class NotComplete(HamparityError):
    """Graph has a non-edge where a complete mixed graph was required."""


class BadPartition(HamparityError):
    """A (T, W) split does not have the extension hypothesis shape."""


class EmptyPairSet(HamparityError):
    """The operation needs at least one non-edge or undirected pair."""


class MalformedExtension(HamparityError):
    """A W-extension description violates its construction rules."""


class DuplicateEndpointPair(HamparityError):
    """Two paths of a path system share the same endpoint pair."""


class SearchExhausted(HamparityError):
    """A witness search ran out of candidates (indicates an implementation bug)."""


class TooFewVertices(HamparityError):
    """Theorem verifiers require at least two vertices."""

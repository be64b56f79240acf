"""Exception hierarchy shared by every module of the toolkit."""

from __future__ import annotations


class SquaredPathLabError(Exception):
    """Base class for all toolkit errors."""


class GraphError(SquaredPathLabError, ValueError):
    pass


class OutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class EmptyQuery(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class GraphTooLarge(GraphError):
    """Graph order exceeds :data:`squared_path_lab.graph.MAX_VERTICES`."""


class FormatError(GraphError):
    """Malformed edge-list or adjacency-matrix text."""


class DomainError(SquaredPathLabError, ValueError):
    """Parameters outside the domain where a function is defined."""


class NotPrime(DomainError):
    pass


class TooSmall(DomainError):
    pass


class NotInTriangle(SquaredPathLabError, ValueError):
    pass


class NotConnected(SquaredPathLabError):
    pass


class HypothesisUnmet(SquaredPathLabError):
    """A lemma's hypothesis does not hold, so the check is not applicable."""


class Overlap(SquaredPathLabError, ValueError):
    pass


class PreconditionViolated(SquaredPathLabError, ValueError):
    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


class NotTriangleConnected(SquaredPathLabError, ValueError):
    pass


class TooLarge(SquaredPathLabError):
    """Instance exceeds the exact-search cap."""


class ConstructionStuck(SquaredPathLabError, RuntimeError):
    """A step the constructive proof guarantees could not be carried out."""


class SigmaConditionFails(SquaredPathLabError, ValueError):
    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class NotAPath(SquaredPathLabError, ValueError):
    pass


class NotAWalk(SquaredPathLabError, ValueError):
    pass


class BadOrientation(SquaredPathLabError, ValueError):
    pass


class NoTriangle(SquaredPathLabError):
    pass


class LengthUnreachable(SquaredPathLabError):
    pass


class Five(SquaredPathLabError, ValueError):
    """C^2_5 is K_5; the parity-correction route cannot produce it."""

"""Exception hierarchy for indforest."""
from typing import Any, Dict, Optional, Sequence, Tuple


class IndForestError(Exception):
    """Base error; carries a message and structured details for reports."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Serialize the error for a report."""
        return {"error": type(self).__name__, "message": self.message, **self.details}


class InvalidEdgeError(IndForestError):
    """A loop or an out-of-range endpoint."""

    def __init__(self, pair: Tuple[int, int], reason: str):
        super().__init__(f"invalid edge {pair}: {reason}", {"pair": list(pair)})
        self.pair = pair


class LoopWouldFormError(InvalidEdgeError):
    """Identification of a group that contains an edge."""

    def __init__(self, edge: Tuple[int, int]):
        super().__init__(edge, "identification would create a loop")
        self.edge = edge


class EmbeddingError(IndForestError):
    """A rotation system that is not a plane embedding of its graph."""


class NoChordNeededError(EmbeddingError):
    """The face is already a 4-face."""


class ChordUnavailableError(EmbeddingError):
    """No valid chord a_1a_4 exists in the face."""


class UnsupportedSurgeryError(EmbeddingError):
    """An edge addition whose endpoints do not share a face."""


class PreconditionError(IndForestError):
    """An operation was called outside its precondition."""


class BudgetExceededError(IndForestError):
    """The exact solver ran out of branch nodes."""

    def __init__(self, nodes: int, budget: int):
        super().__init__(
            f"node budget exceeded after {nodes} nodes (budget {budget})",
            {"nodes": nodes, "budget": budget},
        )
        self.nodes = nodes
        self.budget = budget


class LiftFailedError(IndForestError):
    """A lifted vertex set induces a cycle in the parent graph."""

    def __init__(self, message: str, cycle: Optional[Sequence[int]] = None):
        super().__init__(message, {"cycle": list(cycle) if cycle else None})
        self.cycle = list(cycle) if cycle else None


class ParseError(IndForestError):
    """Malformed graph6 or planar-code input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}", {"offset": offset})
        self.offset = offset

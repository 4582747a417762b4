"""Verdicts of the exhaustive inequality checks."""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple


@dataclass(frozen=True)
class Counterexample:
    """A parameter tuple whose conclusion falls short of the bound at n."""

    params: Dict[str, object]
    n: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class ExceptionReport:
    """
    Status of one excepted residue pattern.

    Attributes:
        pattern: Residues (4x+3) mod 7 of the counted parameters
        realized: True when some tuple with this pattern violates the conclusion
        witness: The first violating tuple, if realized
    """

    pattern: Tuple[int, ...]
    realized: bool
    witness: Optional[Counterexample] = None

    @property
    def status(self) -> str:
        return "realized" if self.realized else "vacuous"


@dataclass
class Verdict:
    """Outcome of one exhaustive check."""

    name: str
    ok: bool
    checked: int
    counterexample: Optional[Counterexample] = None
    exceptions: List[ExceptionReport] = field(default_factory=list)
    reduced: bool = True

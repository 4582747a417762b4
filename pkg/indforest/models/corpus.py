"""Corpus entries."""
from dataclasses import dataclass
from typing import Optional

from indforest.models.graph import Graph
from indforest.models.plane import PlaneGraph

SOURCES = ("file", "generator")


@dataclass(frozen=True)
class CorpusEntry:
    """
    One graph of a corpus.

    Attributes:
        id: Stable entry name
        source: "file" or "generator"
        graph: The graph
        plane: Its embedding, when known
        attested_planar: True for generator output and planar-code input
    """

    id: str
    source: str
    graph: Graph
    plane: Optional[PlaneGraph] = None
    attested_planar: bool = False

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"unknown corpus source {self.source}")
        if self.attested_planar and self.plane is None:
            raise ValueError("attested planar entries carry an embedding")

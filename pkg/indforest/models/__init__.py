"""Immutable domain values."""
from indforest.models.catalog import ConfigHit, VertexTypeLabel
from indforest.models.charges import ChargeLedger, FinalCharges, Transfer
from indforest.models.corpus import CorpusEntry
from indforest.models.forest import BoundReport, ForestCertificate
from indforest.models.graph import Graph, build_graph
from indforest.models.plane import FaceWalk, PlaneGraph
from indforest.models.reduction import BuildResult, Certification, ReductionStep, RSet

__all__ = [
    "BoundReport",
    "BuildResult",
    "Certification",
    "ChargeLedger",
    "ConfigHit",
    "CorpusEntry",
    "FaceWalk",
    "FinalCharges",
    "ForestCertificate",
    "Graph",
    "PlaneGraph",
    "RSet",
    "ReductionStep",
    "Transfer",
    "VertexTypeLabel",
    "build_graph",
]

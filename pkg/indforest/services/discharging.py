"""Discharging: initial charges, the three transfer rules and the audit."""
import logging
from typing import Iterable, List, Optional, Set

from indforest.core.exceptions import EmbeddingError
from indforest.models.catalog import ConfigHit
from indforest.models.charges import AuditReport, ChargeLedger, FinalCharges, Transfer
from indforest.models.graph import Graph
from indforest.models.plane import PlaneGraph, trace_faces
from indforest.services.catalog import Local, assert_minimal_shape, detect

logger = logging.getLogger(__name__)

# One unit of charge in ledger units.
UNIT = 4


def initial_charges(pg: PlaneGraph) -> ChargeLedger:
    """
    Charge every vertex deg(v) - 4 and every face len(f) - 4.

    Args:
        pg: Plane graph; faces are traced per component

    Returns:
        Ledger in quarter units without transfers

    Raises:
        EmbeddingError: if the rotation system fails Euler's formula
    """
    faces = trace_faces(pg)
    vertex_charge = [UNIT * (pg.graph.degree(v) - 4) for v in range(pg.n)]
    face_charge = [UNIT * (face.length - 4) for face in faces]
    return ChargeLedger(vertex_charge, face_charge)


def _common_vertex(elements: List[tuple]) -> Optional[int]:
    common = set(elements[0])
    for element in elements[1:]:
        common &= set(element)
    return next(iter(common)) if len(common) == 1 else None


def _rule_one(local: Local, v: int) -> List[Transfer]:
    elements = local.r_set(v).elements
    amount = UNIT * (local.deg(v) - 4)
    if not elements:
        return []
    if len(elements) == 1:
        (element,) = elements
        share = amount // len(element)
        return [Transfer(v, r, share, "i", element) for r in element]
    target = _common_vertex(elements)
    if target is None:
        return []
    context = tuple(sorted({r for e in elements for r in e}))
    return [Transfer(v, target, amount, "i", context)]


def _rule_two(local: Local, v: int) -> List[Transfer]:
    transfers = []
    for u in local.graph.neighbors(v):
        if local.deg(u) != 3 or local.r_set(v, (u,)):
            continue
        amount = UNIT if local.all_weak(u, v) else UNIT // 2
        transfers.append(Transfer(v, u, amount, "ii", tuple(local.others(u, v))))
    return transfers


def _rule_three(local: Local, v: int) -> List[Transfer]:
    # w lies opposite v, so excluding it leaves R_{v,U} = R_{v,empty}
    if local.r_set(v) or local.has_type(v, "5-2-C"):
        return []
    transfers = []
    order = local.pg.rotation[v]
    for i, a in enumerate(order):
        b = order[(i + 1) % len(order)]
        w = local.opposite(v, a, b)
        if w is None or local.deg(w) != 3:
            continue
        for x, y in ((a, b), (b, a)):
            if local.deg(x) >= 5 and local.deg(y) == 4:
                if not local.has_type(x, "5-2-C"):
                    transfers.append(Transfer(v, x, 1, "iii", (x, w, y, v)))
    return transfers


def sender_transfers(local: Local, v: int) -> List[Transfer]:
    """Transfers sent by v; rule (i) excludes the other two rules."""
    if local.deg(v) < 5:
        return []
    first = _rule_one(local, v)
    if first:
        return first
    return _rule_two(local, v) + _rule_three(local, v)


def apply_rules(
    pg: PlaneGraph, ledger: ChargeLedger, order: Optional[Iterable[int]] = None
) -> ChargeLedger:
    """
    Append the transfers of every sender of degree at least 5.

    Args:
        pg: Plane graph, normally a quadrangulation
        ledger: Ledger from initial_charges
        order: Sender order (default: vertex id order); the transfers do not
            depend on it

    Returns:
        A new ledger with the transfers appended
    """
    local = Local(pg)
    senders = range(pg.n) if order is None else order
    transfers = []
    for v in senders:
        transfers.extend(sender_transfers(local, v))
    logger.debug(f"Discharging on n={pg.n}: {len(transfers)} transfers")
    return ledger.with_transfers(transfers)


def final_charges(ledger: ChargeLedger) -> FinalCharges:
    """Initial charges plus the net effect of every transfer."""
    vertices = dict(enumerate(ledger.vertex_charge))
    for transfer in ledger.transfers:
        vertices[transfer.source] -= transfer.amount
        vertices[transfer.target] += transfer.amount
    return FinalCharges(vertices, dict(enumerate(ledger.face_charge)))


def _ball(graph: Graph, v: int, radius: int) -> Set[int]:
    ball = {v}
    frontier = {v}
    for _ in range(radius):
        frontier = {u for w in frontier for u in graph.neighbors(w)} - ball
        ball |= frontier
    return ball


def uncovered_negatives(
    graph: Graph, negatives: Iterable[int], hits: Iterable[ConfigHit]
) -> List[int]:
    """
    Negative vertices of degree 5 or 6 with no configuration near them.

    A vertex is covered when some hit lies entirely inside its closed
    2-neighborhood; a hit that only reaches into the ball does not count.
    """
    witnesses = [frozenset(hit.witness) for hit in hits]
    uncovered = []
    for v in negatives:
        if graph.degree(v) not in (5, 6):
            continue
        ball = _ball(graph, v, 2)
        if not any(witness <= ball for witness in witnesses):
            uncovered.append(v)
    return uncovered


def audit(pg: PlaneGraph) -> AuditReport:
    """
    Run the charge audit on one plane graph.

    Charges are computed whenever the faces can be traced. The meta-claims
    (meta_ok) are only made when every minimal-counterexample precondition
    holds: a catalog hit must be present and every negative 5- or 6-vertex
    must have a hit within distance two.

    Args:
        pg: Plane graph

    Returns:
        The audit report; partial when a precondition fails
    """
    shape = assert_minimal_shape(pg)
    report = AuditReport(shape=shape)
    try:
        ledger = apply_rules(pg, initial_charges(pg))
    except EmbeddingError as e:
        logger.warning(f"Audit skipped charges: {e.message}")
        return report
    final = final_charges(ledger)
    components = len(pg.graph.component_masks())
    report.ledger = ledger
    report.final = final
    report.total = final.total
    report.expected_total = -8 * UNIT * components
    report.conserved = final.total == ledger.total
    report.negative_vertices = sorted(v for v, c in final.vertices.items() if c < 0)
    if not shape.all_hold:
        logger.info(f"Audit on n={pg.n} is partial: {shape}")
        return report

    report.hits = detect(pg)
    report.hits_present = bool(report.hits)
    report.uncovered_negatives = uncovered_negatives(
        pg.graph, report.negative_vertices, report.hits
    )
    report.meta_ok = (
        report.conserved
        and report.total == report.expected_total
        and report.hits_present
        and not report.uncovered_negatives
    )
    logger.info(
        f"Audit on n={pg.n}: total={report.total}, "
        f"negatives={len(report.negative_vertices)}, hits={len(report.hits)}"
    )
    return report

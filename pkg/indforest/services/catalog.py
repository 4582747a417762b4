"""
Detection of reducible configurations and the degree-5/6 vertex types.

Each catalog tag has an enumerator proposing role assignments from the
rotation system and a predicate that checks the pattern from the roles.
Detection keeps the proposals whose predicate holds.
"""
import logging
from itertools import combinations, permutations
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from indforest.core.exceptions import EmbeddingError
from indforest.models.catalog import (
    CATALOG_TAGS,
    FIVE_LABELS,
    OTHER_LABEL,
    SIX_LABELS,
    ConfigHit,
    ShapeReport,
    VertexTypeLabel,
)
from indforest.models.graph import is_bipartite
from indforest.models.plane import (
    PlaneGraph,
    face_at_corner,
    is_quadrangulation,
    opposite_in_face,
)
from indforest.models.reduction import ReductionStep, RSet
from indforest.services.reduction import closed_step, compute_R, recipe_step

logger = logging.getLogger(__name__)

Roles = Dict[str, int]


class Local:
    """Per-graph cache of R-sets and type labels used by the detectors."""

    def __init__(self, pg: PlaneGraph):
        self.pg = pg
        self.graph = pg.graph
        self._r: Dict[Tuple[int, frozenset], RSet] = {}
        self._labels: Dict[int, VertexTypeLabel] = {}
        self._frames: Dict[int, List[Tuple[int, ...]]] = {}

    def deg(self, v: int) -> int:
        return self.graph.degree(v)

    def adjacent(self, u: int, v: int) -> bool:
        return self.graph.has_edge(u, v)

    def others(self, a: int, v: int) -> List[int]:
        """Neighbors of a other than v."""
        return [u for u in self.graph.neighbors(a) if u != v]

    def r_set(self, w: int, excluded: Iterable[int] = ()) -> RSet:
        key = (w, frozenset(excluded))
        if key not in self._r:
            self._r[key] = compute_R(self.pg, w, key[1])
        return self._r[key]

    def weak(self, w: int, u: int) -> bool:
        return self.deg(w) <= 4 or bool(self.r_set(w, (u,)))

    def all_weak(self, a: int, v: int) -> bool:
        """Both other neighbors of the 3-vertex a are weak with respect to a."""
        return all(self.weak(w, a) for w in self.others(a, v))

    def has_strong(self, a: int, v: int) -> bool:
        return any(not self.weak(w, a) for w in self.others(a, v))

    def opposite(self, v: int, a: int, b: int) -> Optional[int]:
        """The fourth vertex of the 4-face through the corner a-v-b."""
        return opposite_in_face(face_at_corner(self.pg, v, a, b), v)

    def frames(self, v: int) -> List[Tuple[int, ...]]:
        if v not in self._frames:
            self._frames[v] = type_frames(self.pg, v)
        return self._frames[v]

    def is_frame(self, v: int, frame: Sequence[int]) -> bool:
        return tuple(frame) in self.frames(v)

    def label(self, v: int) -> VertexTypeLabel:
        if v not in self._labels:
            self._labels[v] = _classify(self, v)
        return self._labels[v]

    def has_type(self, v: int, label: str) -> bool:
        """Whether some cyclic labelling of N(v) satisfies the label."""
        return any(_matches(self, v, frame, label) for frame in self.frames(v))


def weak(pg: PlaneGraph, w: int, u: int) -> bool:
    """deg(w) <= 4 or R_{w,{u}} is nonempty."""
    return Local(pg).weak(w, u)


def strong(pg: PlaneGraph, w: int, u: int) -> bool:
    return not weak(pg, w, u)


def type_frames(pg: PlaneGraph, v: int) -> List[Tuple[int, ...]]:
    """The cyclic labellings of N(v): every start, forwards then backwards."""
    frames = []
    for start in pg.rotation[v]:
        for step in (1, -1):
            frame = pg.rotation_from(v, start, step)
            if frame not in frames:
                frames.append(frame)
    return frames


def _matches(local: Local, v: int, frame: Sequence[int], label: str) -> bool:
    d = len(frame)
    if d != local.deg(v):
        return False
    degs = [local.deg(u) for u in frame]

    def three(*idx: int) -> bool:
        return all(degs[i - 1] == 3 for i in idx)

    def high(*idx: int) -> bool:
        return all(degs[i - 1] >= 4 for i in idx)

    a = lambda i: frame[i - 1]  # noqa: E731
    if d == 5:
        two = three(1, 3) and high(2, 4, 5)
        one = three(1) and high(2, 3, 4, 5)
        if label == "5-2-A":
            return two and local.all_weak(a(1), v) and local.all_weak(a(3), v)
        if label == "5-2-B":
            return two and local.all_weak(a(3), v) and local.has_strong(a(1), v)
        if label == "5-2-C":
            return two and local.has_strong(a(1), v) and local.has_strong(a(3), v)
        if label == "5-1-A":
            return one and local.all_weak(a(1), v)
        if label == "5-1-B":
            return one and local.has_strong(a(1), v)
        if label == "5-0":
            return high(1, 2, 3, 4, 5)
    if d == 6:
        if label == "6-3":
            return three(1, 3, 5) and high(2, 4, 6)
        if label == "6-2-A":
            return three(1, 3) and high(2, 4, 5, 6)
        if label == "6-2-B":
            return three(1, 4) and high(2, 3, 5, 6)
        if label == "6-1":
            return three(1) and high(2, 3, 4, 5, 6)
        if label == "6-0":
            return high(1, 2, 3, 4, 5, 6)
    return False


def _classify(local: Local, v: int) -> VertexTypeLabel:
    labels = {5: FIVE_LABELS, 6: SIX_LABELS}.get(local.deg(v), ())
    for label in labels:
        for frame in local.frames(v):
            if _matches(local, v, frame, label):
                return VertexTypeLabel(v, label, frame)
    return VertexTypeLabel(v, OTHER_LABEL)


def classify_vertex(pg: PlaneGraph, v: int) -> VertexTypeLabel:
    """
    Type of a degree-5 or degree-6 vertex.

    Labels are tried in definition order, each over every cyclic labelling of
    the neighbors; the first match wins and its labelling is recorded.

    Args:
        pg: Plane graph
        v: Vertex to classify

    Returns:
        The label, "other" for any other degree or when nothing matches
    """
    return Local(pg).label(v)


# Patterns: each takes the cache and a role assignment and re-checks everything.


def _is_r_element(local: Local, v: int, element: Sequence[int]) -> bool:
    if not all(local.adjacent(v, r) for r in element):
        return False
    if len(element) == 1:
        return local.deg(element[0]) <= 2
    r1, r2 = element
    return (
        local.deg(r1) == 3
        and local.deg(r2) == 3
        and local.opposite(v, r1, r2) is not None
    )


def _element(roles: Roles, prefix: str) -> Tuple[int, ...]:
    return tuple(roles[k] for k in (f"{prefix}1", f"{prefix}2") if k in roles)


def _two_disjoint_r(local: Local, roles: Roles) -> bool:
    v = roles["v"]
    first, second = _element(roles, "a"), _element(roles, "b")
    return (
        _is_r_element(local, v, first)
        and _is_r_element(local, v, second)
        and not set(first) & set(second)
    )


def _profile_ok(d1: int, d2: int) -> bool:
    return (d1 >= 5 and d2 >= 5) or (d1 <= 4 and d2 >= 6) or (d2 <= 4 and d1 >= 6)


def _deg2_profile(local: Local, roles: Roles) -> bool:
    x, p, q = roles["x"], roles["p"], roles["q"]
    return (
        local.deg(x) == 2
        and set(local.graph.neighbors(x)) == {p, q}
        and not _profile_ok(local.deg(p), local.deg(q))
    )


def _edge434(local: Local, roles: Roles) -> bool:
    x, x1, y1, z1, x2 = (roles[k] for k in ("x", "x1", "y1", "z1", "x2"))
    return (
        local.deg(x1) == 3
        and set(local.graph.neighbors(x1)) == {x, y1, z1}
        and local.deg(y1) == 4
        and local.deg(z1) == 4
        and local.opposite(x1, x, y1) == x2
        and local.adjacent(z1, x2)
    )


def _low_deg_path(local: Local, roles: Roles) -> bool:
    x, y, z = roles["x"], roles["y"], roles["z"]
    return (
        x != z
        and all(local.deg(u) <= 3 for u in (x, y, z))
        and local.adjacent(x, y)
        and local.adjacent(y, z)
    )


def _double_r_at3(local: Local, roles: Roles) -> bool:
    x, y, z = roles["x"], roles["y"], roles["z"]
    return (
        local.deg(x) == 3
        and y != z
        and local.adjacent(x, y)
        and local.adjacent(x, z)
        and bool(local.r_set(y, (x,)))
        and bool(local.r_set(z, (x,)))
    )


def _weak_plus_r(local: Local, roles: Roles) -> bool:
    x, y, z = roles["x"], roles["y"], roles["z"]
    return (
        local.deg(x) == 3
        and y != z
        and local.adjacent(x, y)
        and local.adjacent(x, z)
        and local.deg(y) <= 4
        and bool(local.r_set(z, (x,)))
    )


def _all_weak3(local: Local, roles: Roles) -> bool:
    x = roles["x"]
    return local.deg(x) == 3 and all(
        local.deg(u) <= 4 for u in local.graph.neighbors(x)
    )


def _five_two_b_face(local: Local, roles: Roles) -> bool:
    x, w, y, z, v = (roles[k] for k in ("x", "w", "y", "z", "v"))
    if not (
        local.deg(x) == 3
        and set(local.graph.neighbors(x)) == {w, y, z}
        and local.deg(y) <= 4
        and local.deg(z) <= 4
        and local.deg(w) == 5
        and local.opposite(x, z, w) == v
    ):
        return False
    return local.deg(v) <= 4 or bool(local.r_set(v, (w, z)))


def _mixed345(local: Local, roles: Roles) -> bool:
    x = roles["x"]
    degs = {local.deg(u) for u in local.graph.neighbors(x)}
    return local.deg(x) == 3 and {3, 4, 5} <= degs


def _frame_roles(roles: Roles, names: Sequence[str]) -> Tuple[int, ...]:
    return tuple(roles[k] for k in names)


def _five_two_b_ladder(local: Local, roles: Roles) -> bool:
    x = roles["x"]
    frame = _frame_roles(roles, ("y", "x3", "z", "x2", "x1"))
    y, x3, z, x2, x1 = frame
    z1, z2, w = roles["z1"], roles["z2"], roles["w"]
    return (
        local.is_frame(x, frame)
        and _matches(local, x, frame, "5-2-B")
        and local.deg(x1) == 4
        and set(local.graph.neighbors(z)) == {x, z1, z2}
        and local.adjacent(z1, x2)
        and local.adjacent(z2, x3)
        and local.deg(z1) == 4
        and local.deg(z2) == 4
        and local.opposite(x, x2, x1) == w
        and local.deg(w) == 3
    )


def _five_one_b_wheel(local: Local, roles: Roles) -> bool:
    x = roles["x"]
    frame = _frame_roles(roles, ("y4", "y2", "y5", "y1", "y3"))
    y4, y2, y5, y1, y3 = frame
    y3p, y4p, z1, z2 = (roles[k] for k in ("y3p", "y4p", "z1", "z2"))
    return (
        local.is_frame(x, frame)
        and _matches(local, x, frame, "5-1-B")
        and local.deg(y1) == 4
        and local.deg(y2) == 4
        and local.opposite(x, y1, y3) == y3p
        and local.opposite(x, y4, y2) == y4p
        and local.opposite(x, y1, y5) == z1
        and local.opposite(x, y2, y5) == z2
        and all(local.deg(u) == 3 for u in (z1, z2, y3p, y4))
    )


def _six_two_a_twin(local: Local, roles: Roles) -> bool:
    x, x1, x2, xkm1, xk = (roles[k] for k in ("x", "x1", "x2", "xkm1", "xk"))
    y1, z1, y2, z2 = (roles[k] for k in ("y1", "z1", "y2", "z2"))
    if local.deg(x) < 5 or x1 == xk or not local.adjacent(x, x1):
        return False
    order = local.pg.rotation_from(x, x1, roles.get("dir", 1))
    if order[1] != x2 or xk not in order[2:]:
        return False
    if order[order.index(xk) - 1] != xkm1:
        return False
    return (
        local.deg(x1) == 3
        and local.deg(xk) == 3
        and set(local.graph.neighbors(x1)) == {x, y1, z1}
        and set(local.graph.neighbors(xk)) == {x, y2, z2}
        and local.adjacent(y1, x2)
        and local.adjacent(y2, xkm1)
        and local.weak(y1, x1)
        and local.weak(z1, x1)
        and local.weak(y2, xk)
        and local.weak(z2, xk)
    )


def _around(
    local: Local, center: int, first: int, second: int
) -> Optional[Tuple[int, ...]]:
    """The rotation at center read from first so that second comes next."""
    if not local.adjacent(center, first):
        return None
    for step in (1, -1):
        order = local.pg.rotation_from(center, first, step)
        if len(order) > 1 and order[1] == second:
            return order
    return None


_V_FRAME = ("v1", "v2", "v3", "v4", "v5")


def _cc_skeleton(local: Local, roles: Roles, label_v: str, label_v4: str) -> bool:
    v = roles["v"]
    frame = _frame_roles(roles, _V_FRAME)
    v4, v5 = roles["v4"], roles["v5"]
    x, v3p, v4p, v4pp = (roles[k] for k in ("x", "v3p", "v4p", "v4pp"))
    if not (local.is_frame(v, frame) and _matches(local, v, frame, label_v)):
        return False
    if local.opposite(v, v4, v5) != x or local.deg(v4) != 5:
        return False
    if _around(local, v4, x, v) != (x, v, v3p, v4p, v4pp):
        return False
    return (
        local.has_type(v4, label_v4)
        and local.deg(v5) == 4
        and local.deg(x) == 3
        and local.opposite(v4, v3p, v4p) == roles["y"]
        and local.opposite(v4, v4p, v4pp) == roles["z"]
        and local.opposite(v4, v4pp, x) == roles["xp"]
    )


def _cc_adj_b(local: Local, roles: Roles) -> bool:
    return (
        _cc_skeleton(local, roles, "5-2-C", "5-2-B")
        and local.deg(roles["v4p"]) == 3
        and local.deg(roles["xp"]) == 4
    )


def _cc_adj_a(local: Local, roles: Roles) -> bool:
    return (
        _cc_skeleton(local, roles, "5-2-C", "5-1-A")
        and local.deg(roles["y"]) == 3
        and local.deg(roles["z"]) == 3
        and local.deg(roles["xp"]) <= 4
    )


def _cc_adj_b2(local: Local, roles: Roles) -> bool:
    v = roles["v"]
    frame = _frame_roles(roles, _V_FRAME)
    v1, v2, v3, v4, v5 = frame
    v1p, v1pp, v3p, v3pp = (roles[k] for k in ("v1p", "v1pp", "v3p", "v3pp"))
    if not (local.is_frame(v, frame) and _matches(local, v, frame, "5-2-B")):
        return False
    faces_ok = (
        local.opposite(v, v1, v2) == v1p
        and local.opposite(v, v2, v3) == v3p
        and local.opposite(v, v3, v4) == v3pp
        and local.opposite(v, v5, v1) == v1pp
    )
    if not faces_ok or local.deg(v2) != 5:
        return False
    order = _around(local, v2, v, v1p)
    return (
        order is not None
        and order[2:] == (roles["v2p"], roles["v2pp"], v3p)
        and set(local.graph.neighbors(v1)) == {v, v1p, v1pp}
        and set(local.graph.neighbors(v3)) == {v, v3p, v3pp}
        and local.deg(v1pp) >= 5
        and local.deg(v3p) == 4
        and local.deg(v3pp) == 4
        and local.deg(v1p) == 3
        and local.deg(roles["v2pp"]) == 3
        and local.has_type(v2, "5-2-C")
    )


PATTERNS: Dict[str, Callable[[Local, Roles], bool]] = {
    "TwoDisjointR": _two_disjoint_r,
    "Deg2Profile": _deg2_profile,
    "Edge434": _edge434,
    "LowDegPath": _low_deg_path,
    "DoubleRAt3": _double_r_at3,
    "WeakPlusR": _weak_plus_r,
    "AllWeak3": _all_weak3,
    "FiveTwoBFace": _five_two_b_face,
    "Mixed345": _mixed345,
    "FiveTwoBLadder": _five_two_b_ladder,
    "FiveOneBWheel": _five_one_b_wheel,
    "SixTwoATwin": _six_two_a_twin,
    "CCadjB": _cc_adj_b,
    "CCadjA": _cc_adj_a,
    "CCadjB2": _cc_adj_b2,
}


# Enumerators: propose role assignments; the patterns decide.


def _vertices(
    local: Local, degree: Optional[int] = None, low: int = 0
) -> Iterator[int]:
    for v in range(local.graph.n):
        d = local.deg(v)
        if (degree is None or d == degree) and d >= low:
            yield v


def _enum_two_disjoint_r(local: Local) -> Iterator[Roles]:
    for v in _vertices(local):
        elements = local.r_set(v).elements
        for first, second in combinations(elements, 2):
            if set(first) & set(second):
                continue
            roles = {"v": v}
            for prefix, element in (("a", first), ("b", second)):
                for i, r in enumerate(element, 1):
                    roles[f"{prefix}{i}"] = r
                if len(element) == 2:
                    roles[f"{prefix}w"] = local.opposite(v, *element)
            yield roles


def _enum_deg2(local: Local) -> Iterator[Roles]:
    for x in _vertices(local, 2):
        p, q = local.graph.neighbors(x)
        yield {"x": x, "p": p, "q": q}


def _enum_edge434(local: Local) -> Iterator[Roles]:
    for x1 in _vertices(local, 3):
        for x in local.graph.neighbors(x1):
            for y1, z1 in permutations(local.others(x1, x), 2):
                x2 = local.opposite(x1, x, y1)
                if x2 is not None:
                    yield {"x": x, "x1": x1, "y1": y1, "z1": z1, "x2": x2}


def _enum_low_path(local: Local) -> Iterator[Roles]:
    for y in _vertices(local):
        if local.deg(y) > 3:
            continue
        low = [u for u in local.graph.neighbors(y) if local.deg(u) <= 3]
        for x, z in combinations(low, 2):
            yield {"x": x, "y": y, "z": z}


def _enum_neighbor_pairs(local: Local) -> Iterator[Roles]:
    for x in _vertices(local, 3):
        for y, z in permutations(local.graph.neighbors(x), 2):
            yield {"x": x, "y": y, "z": z}


def _enum_single(local: Local) -> Iterator[Roles]:
    for x in _vertices(local, 3):
        yield {"x": x}


def _enum_five_two_b_face(local: Local) -> Iterator[Roles]:
    for x in _vertices(local, 3):
        for w in local.graph.neighbors(x):
            for z, y in permutations(local.others(x, w), 2):
                v = local.opposite(x, z, w)
                if v is not None:
                    yield {"x": x, "w": w, "y": y, "z": z, "v": v}


def _frames_with(local: Local, v: int, label: str) -> Iterator[Tuple[int, ...]]:
    for frame in local.frames(v):
        if _matches(local, v, frame, label):
            yield frame


def _enum_ladder(local: Local) -> Iterator[Roles]:
    for x in _vertices(local, 5):
        for y, x3, z, x2, x1 in _frames_with(local, x, "5-2-B"):
            w = local.opposite(x, x2, x1)
            if w is None:
                continue
            for z1, z2 in permutations(local.others(z, x), 2):
                yield {
                    "x": x, "y": y, "x3": x3, "z": z, "x2": x2, "x1": x1,
                    "z1": z1, "z2": z2, "w": w,
                }  # fmt: skip


def _enum_wheel(local: Local) -> Iterator[Roles]:
    for x in _vertices(local, 5):
        for y4, y2, y5, y1, y3 in _frames_with(local, x, "5-1-B"):
            named = {
                "y3p": local.opposite(x, y1, y3),
                "y4p": local.opposite(x, y4, y2),
                "z1": local.opposite(x, y1, y5),
                "z2": local.opposite(x, y2, y5),
            }
            if None in named.values():
                continue
            yield {"x": x, "y1": y1, "y2": y2, "y3": y3, "y4": y4, "y5": y5, **named}


def _enum_twin(local: Local) -> Iterator[Roles]:
    for x in _vertices(local, low=5):
        for x1 in local.graph.neighbors(x):
            if local.deg(x1) != 3:
                continue
            for step in (1, -1):
                order = local.pg.rotation_from(x, x1, step)
                for k in range(3, len(order) + 1):
                    xk = order[k - 1]
                    if local.deg(xk) != 3:
                        continue
                    x2, xkm1 = order[1], order[k - 2]
                    for y1 in local.others(x1, x):
                        if not local.adjacent(y1, x2):
                            continue
                        (z1,) = [u for u in local.others(x1, x) if u != y1] or [y1]
                        for y2 in local.others(xk, x):
                            if not local.adjacent(y2, xkm1):
                                continue
                            (z2,) = [u for u in local.others(xk, x) if u != y2] or [y2]
                            yield {
                                "x": x, "x1": x1, "x2": x2, "xkm1": xkm1, "xk": xk,
                                "y1": y1, "z1": z1, "y2": y2, "z2": z2, "dir": step,
                            }  # fmt: skip


def _enum_cc(local: Local, label_v: str) -> Iterator[Roles]:
    for v in _vertices(local, 5):
        for frame in _frames_with(local, v, label_v):
            roles = dict(zip(_V_FRAME, frame), v=v)
            x = local.opposite(v, roles["v4"], roles["v5"])
            if x is None:
                continue
            order = _around(local, roles["v4"], x, v)
            if order is None or len(order) != 5:
                continue
            roles.update(x=x, v3p=order[2], v4p=order[3], v4pp=order[4])
            named = {
                "y": local.opposite(roles["v4"], order[2], order[3]),
                "z": local.opposite(roles["v4"], order[3], order[4]),
                "xp": local.opposite(roles["v4"], order[4], x),
            }
            if None in named.values():
                continue
            roles.update(named)
            yield roles


def _enum_cc_adj_a(local: Local) -> Iterator[Roles]:
    for roles in _enum_cc(local, "5-2-C"):
        v5p = local.opposite(roles["x"], roles["xp"], roles["v5"])
        v1p = local.opposite(roles["v"], roles["v5"], roles["v1"])
        if v5p is not None and v1p is not None:
            yield {**roles, "v5p": v5p, "v1p": v1p}


def _enum_cc_adj_b2(local: Local) -> Iterator[Roles]:
    for v in _vertices(local, 5):
        for frame in _frames_with(local, v, "5-2-B"):
            v1, v2, v3, v4, v5 = frame
            roles = dict(zip(_V_FRAME, frame), v=v)
            named = {
                "v1p": local.opposite(v, v1, v2),
                "v3p": local.opposite(v, v2, v3),
                "v3pp": local.opposite(v, v3, v4),
                "v1pp": local.opposite(v, v5, v1),
            }
            if None in named.values():
                continue
            order = _around(local, v2, v, named["v1p"])
            if order is None or len(order) != 5:
                continue
            yield {**roles, **named, "v2p": order[2], "v2pp": order[3]}


ENUMERATORS: Dict[str, Callable[[Local], Iterator[Roles]]] = {
    "TwoDisjointR": _enum_two_disjoint_r,
    "Deg2Profile": _enum_deg2,
    "Edge434": _enum_edge434,
    "LowDegPath": _enum_low_path,
    "DoubleRAt3": _enum_neighbor_pairs,
    "WeakPlusR": _enum_neighbor_pairs,
    "AllWeak3": _enum_single,
    "FiveTwoBFace": _enum_five_two_b_face,
    "Mixed345": _enum_single,
    "FiveTwoBLadder": _enum_ladder,
    "FiveOneBWheel": _enum_wheel,
    "SixTwoATwin": _enum_twin,
    "CCadjB": lambda local: _enum_cc(local, "5-2-C"),
    "CCadjA": _enum_cc_adj_a,
    "CCadjB2": _enum_cc_adj_b2,
}


# Suggested reduction steps


def _first_element(local: Local, w: int, u: int) -> Tuple[int, ...]:
    return local.r_set(w, (u,)).elements[0]


def _step_two_disjoint_r(local: Local, roles: Roles) -> Optional[ReductionStep]:
    v = roles["v"]
    removed, keep = {v}, set()
    for prefix in ("a", "b"):
        element = _element(roles, prefix)
        removed.update(element)
        keep.update(element)
        if len(element) == 2:
            removed.add(roles[f"{prefix}w"])
    return recipe_step(local.graph, "TwoDisjointR", removed, keep)


def _step_keep(names: Sequence[str], tag: str):
    def build(local: Local, roles: Roles) -> Optional[ReductionStep]:
        return closed_step(local.graph, [roles[k] for k in names], tag)

    return build


def _step_double_r(local: Local, roles: Roles) -> Optional[ReductionStep]:
    x, y, z = roles["x"], roles["y"], roles["z"]
    keep = {x, *_first_element(local, y, x), *_first_element(local, z, x)}
    return closed_step(local.graph, keep, "DoubleRAt3")


def _step_weak_plus_r(local: Local, roles: Roles) -> Optional[ReductionStep]:
    x, z = roles["x"], roles["z"]
    return closed_step(local.graph, {x, *_first_element(local, z, x)}, "WeakPlusR")


def _step_cc_adj_a(local: Local, roles: Roles) -> Optional[ReductionStep]:
    removed = [
        roles[k]
        for k in (
            "v5p", "v1p", "xp", "v5", "x", "v1", "v4pp",
            "v4", "v", "z", "v4p", "y", "v3p", "v3",
        )
    ]  # fmt: skip
    keep = [roles[k] for k in ("xp", "x", "v5", "v1", "v3", "v4", "y", "z")]
    return recipe_step(local.graph, "CCadjA", removed, keep)


STEPS: Dict[str, Callable[[Local, Roles], Optional[ReductionStep]]] = {
    "TwoDisjointR": _step_two_disjoint_r,
    "Deg2Profile": _step_keep(("x",), "Deg2Profile"),
    "LowDegPath": _step_keep(("x", "y", "z"), "LowDegPath"),
    "DoubleRAt3": _step_double_r,
    "WeakPlusR": _step_weak_plus_r,
    "CCadjA": _step_cc_adj_a,
}


def _notes(local: Local, tag: str, roles: Roles) -> Dict[str, object]:
    if tag == "Deg2Profile":
        x = roles["x"]
        notes = {}
        for key in ("p", "q"):
            elements = local.r_set(roles[key]).elements
            notes[f"R_{key}"] = [list(e) for e in elements]
            notes[f"R_{key}_is_x"] = elements == [(x,)]
        return notes
    if tag in ("DoubleRAt3", "WeakPlusR"):
        x = roles["x"]
        return {
            f"R_{k}": [list(e) for e in local.r_set(roles[k], (x,)).elements]
            for k in ("y", "z")
        }
    return {}


def detect(pg: PlaneGraph, tags: Optional[Iterable[str]] = None) -> List[ConfigHit]:
    """
    Find every catalog configuration in a plane graph.

    Args:
        pg: Plane graph
        tags: Restrict detection to these tags (default: the whole catalog)

    Returns:
        Hits in catalog order, deduplicated by (tag, sorted witness)
    """
    selected = CATALOG_TAGS if tags is None else tuple(tags)
    unknown = [t for t in selected if t not in PATTERNS]
    if unknown:
        raise ValueError(f"unknown catalog tags: {unknown}")
    local = Local(pg)
    seen = set()
    hits = []
    for tag in selected:
        pattern = PATTERNS[tag]
        for roles in ENUMERATORS[tag](local):
            if not pattern(local, roles):
                continue
            witness = tuple(
                sorted({u for k, u in roles.items() if k != "dir" and u is not None})
            )
            if (tag, witness) in seen:
                continue
            seen.add((tag, witness))
            step_builder = STEPS.get(tag)
            hits.append(
                ConfigHit(
                    tag,
                    witness,
                    dict(roles),
                    _notes(local, tag, roles),
                    step_builder(local, roles) if step_builder else None,
                )
            )
    logger.debug(f"Detected {len(hits)} configurations on n={pg.n}")
    return hits


def assert_minimal_shape(pg: PlaneGraph) -> ShapeReport:
    """
    Report which minimal-counterexample preconditions hold.

    Returns:
        Connectivity, quadrangulation, minimum degree at least 2 and
        bipartiteness of the plane graph
    """
    graph = pg.graph
    connected = pg.n > 0 and graph.is_connected()
    try:
        quadrangulation = connected and is_quadrangulation(pg)
    except EmbeddingError:
        quadrangulation = False
    return ShapeReport(
        connected=connected,
        quadrangulation=quadrangulation,
        min_degree_ok=pg.n > 0 and min(graph.degree(v) for v in range(pg.n)) >= 2,
        bipartite=is_bipartite(graph) is not None,
    )

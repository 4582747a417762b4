"""
Re-check of detected configurations from their roles alone.

Detection and this module share no predicate code: degrees and adjacency are
read from a networkx copy of the graph, cyclic order and cofaciality from the
traced faces, and every tag is checked against its own role specification.
"""
import logging
from collections import defaultdict
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from indforest.core.exceptions import EmbeddingError
from indforest.models.catalog import ConfigHit
from indforest.models.plane import PlaneGraph, trace_faces

logger = logging.getLogger(__name__)

Roles = Dict[str, int]

# Vertex types: frame positions holding a degree-3 vertex, with the status
# that vertex must have ("weak": both other neighbors weak towards it,
# "strong": at least one is not, None: unconstrained). Other positions need
# degree at least 4.
VERTEX_TYPES: Dict[str, Tuple[int, Dict[int, Optional[str]]]] = {
    "5-2-A": (5, {1: "weak", 3: "weak"}),
    "5-2-B": (5, {1: "strong", 3: "weak"}),
    "5-2-C": (5, {1: "strong", 3: "strong"}),
    "5-1-A": (5, {1: "weak"}),
    "5-1-B": (5, {1: "strong"}),
    "5-0": (5, {}),
    "6-3": (6, {1: None, 3: None, 5: None}),
    "6-2-A": (6, {1: None, 3: None}),
    "6-2-B": (6, {1: None, 4: None}),
    "6-1": (6, {1: None}),
    "6-0": (6, {}),
}


class FaceView:
    """Degrees, adjacency, corners and 4-face opposites of one plane graph."""

    def __init__(self, pg: PlaneGraph):
        self.nx = pg.graph.to_networkx()
        self.corners: Dict[int, Set[FrozenSet[int]]] = defaultdict(set)
        self.quads: Dict[Tuple[int, FrozenSet[int]], Set[int]] = defaultdict(set)
        for face in trace_faces(pg):
            walk = face.vertices
            k = len(walk)
            for i, v in enumerate(walk):
                corner = frozenset((walk[i - 1], walk[(i + 1) % k]))
                self.corners[v].add(corner)
                if k == 4 and len(set(walk)) == 4:
                    self.quads[(v, corner)].add(walk[(i + 2) % 4])

    def has(self, *vertices: int) -> bool:
        return all(v in self.nx for v in vertices)

    def deg(self, v: int) -> int:
        return self.nx.degree[v]

    def adj(self, u: int, v: int) -> bool:
        return self.nx.has_edge(u, v)

    def nbrs(self, v: int) -> Set[int]:
        return set(self.nx[v])

    def opposites(self, v: int, a: int, b: int) -> Set[int]:
        """Fourth vertices of the simple 4-faces with corner a-v-b."""
        if a == b:
            return set()
        return self.quads.get((v, frozenset((a, b))), set())

    def walk(self, center: int, first: int, second: int) -> Optional[List[int]]:
        """N(center) in cyclic order, starting first then second."""
        corners = self.corners[center]
        if first == second or frozenset((first, second)) not in corners:
            return None
        order = [first, second]
        while len(order) < self.deg(center):
            nxt = [
                u
                for pair in corners
                if order[-1] in pair and len(pair) == 2
                for u in pair
                if u not in (order[-1], order[-2])
            ]
            if len(nxt) != 1 or nxt[0] in order:
                return None
            order.append(nxt[0])
        if set(order) != self.nbrs(center):
            return None
        if len(order) > 2 and frozenset((order[-1], order[0])) not in corners:
            return None
        return order

    def is_cyclic_order(self, center: int, frame: Iterable[int]) -> bool:
        frame = list(frame)
        return len(frame) > 1 and self.walk(center, frame[0], frame[1]) == frame

    def orders(self, center: int) -> List[List[int]]:
        found = []
        for first in sorted(self.nbrs(center)):
            for second in sorted(self.nbrs(center)):
                order = self.walk(center, first, second)
                if order is not None:
                    found.append(order)
        return found

    def reducible_at(self, w: int, excluded: Iterable[int] = ()) -> bool:
        """Whether R at w, avoiding excluded, has an element."""
        skip = set(excluded)
        if not skip <= self.nbrs(w):
            return False
        if any(self.deg(r) <= 2 for r in self.nbrs(w) - skip):
            return True
        for (v, corner), far in self.quads.items():
            if v != w or not far or corner & skip:
                continue
            if all(self.deg(r) == 3 for r in corner):
                return True
        return False

    def is_weak(self, w: int, toward: int) -> bool:
        return self.deg(w) <= 4 or self.reducible_at(w, (toward,))

    def status(self, a: int, center: int) -> str:
        others = self.nbrs(a) - {center}
        return "weak" if all(self.is_weak(w, a) for w in others) else "strong"

    def frame_has_type(self, center: int, frame: List[int], label: str) -> bool:
        degree, threes = VERTEX_TYPES[label]
        if self.deg(center) != degree or len(frame) != degree:
            return False
        for position, u in enumerate(frame, 1):
            if position not in threes:
                if self.deg(u) < 4:
                    return False
            elif self.deg(u) != 3:
                return False
        return all(
            wanted is None or self.status(frame[position - 1], center) == wanted
            for position, wanted in threes.items()
        )

    def has_type(self, center: int, label: str) -> bool:
        return any(
            self.frame_has_type(center, order, label) for order in self.orders(center)
        )


def _pick(roles: Roles, *names: str) -> List[int]:
    return [roles[name] for name in names]


def _r_element(
    view: FaceView, v: int, element: List[int], far: Optional[int]
) -> bool:
    if not element or not all(view.adj(v, r) for r in element):
        return False
    if len(element) == 1:
        return view.deg(element[0]) <= 2
    r1, r2 = element
    return (
        view.deg(r1) == 3 and view.deg(r2) == 3 and far in view.opposites(v, r1, r2)
    )


def _check_two_disjoint_r(view: FaceView, roles: Roles) -> bool:
    v = roles["v"]
    elements = []
    for prefix in ("a", "b"):
        element = [roles[k] for k in (f"{prefix}1", f"{prefix}2") if k in roles]
        if not _r_element(view, v, element, roles.get(f"{prefix}w")):
            return False
        elements.append(set(element))
    return not elements[0] & elements[1]


def _check_deg2_profile(view: FaceView, roles: Roles) -> bool:
    x, p, q = _pick(roles, "x", "p", "q")
    if view.deg(x) != 2 or view.nbrs(x) != {p, q}:
        return False
    low, high = sorted((view.deg(p), view.deg(q)))
    return low <= 4 and high <= 5


def _check_edge434(view: FaceView, roles: Roles) -> bool:
    x, x1, y1, z1, x2 = _pick(roles, "x", "x1", "y1", "z1", "x2")
    return (
        view.deg(x1) == 3
        and view.nbrs(x1) == {x, y1, z1}
        and view.deg(y1) == view.deg(z1) == 4
        and x2 in view.opposites(x1, x, y1)
        and view.adj(z1, x2)
    )


def _check_low_deg_path(view: FaceView, roles: Roles) -> bool:
    x, y, z = _pick(roles, "x", "y", "z")
    return (
        x != z
        and view.adj(x, y)
        and view.adj(y, z)
        and max(view.deg(x), view.deg(y), view.deg(z)) <= 3
    )


def _three_with(view: FaceView, roles: Roles) -> bool:
    x, y, z = _pick(roles, "x", "y", "z")
    return view.deg(x) == 3 and y != z and {y, z} <= view.nbrs(x)


def _check_double_r(view: FaceView, roles: Roles) -> bool:
    x, y, z = _pick(roles, "x", "y", "z")
    return (
        _three_with(view, roles)
        and view.reducible_at(y, (x,))
        and view.reducible_at(z, (x,))
    )


def _check_weak_plus_r(view: FaceView, roles: Roles) -> bool:
    x, y, z = _pick(roles, "x", "y", "z")
    return (
        _three_with(view, roles) and view.deg(y) <= 4 and view.reducible_at(z, (x,))
    )


def _neighbor_degrees(view: FaceView, x: int) -> List[int]:
    return sorted(view.deg(u) for u in view.nbrs(x))


def _check_all_weak3(view: FaceView, roles: Roles) -> bool:
    x = roles["x"]
    return view.deg(x) == 3 and _neighbor_degrees(view, x)[-1] <= 4


def _check_mixed345(view: FaceView, roles: Roles) -> bool:
    return _neighbor_degrees(view, roles["x"]) == [3, 4, 5]


def _check_five_two_b_face(view: FaceView, roles: Roles) -> bool:
    x, w, y, z, v = _pick(roles, "x", "w", "y", "z", "v")
    return (
        view.deg(x) == 3
        and view.nbrs(x) == {w, y, z}
        and view.deg(y) <= 4
        and view.deg(z) <= 4
        and view.deg(w) == 5
        and v in view.opposites(x, z, w)
        and (view.deg(v) <= 4 or view.reducible_at(v, (w, z)))
    )


def _typed_frame(view: FaceView, center: int, frame: List[int], label: str) -> bool:
    return view.is_cyclic_order(center, frame) and view.frame_has_type(
        center, frame, label
    )


def _check_five_two_b_ladder(view: FaceView, roles: Roles) -> bool:
    x = roles["x"]
    frame = _pick(roles, "y", "x3", "z", "x2", "x1")
    _, x3, z, x2, x1 = frame
    z1, z2, w = _pick(roles, "z1", "z2", "w")
    return (
        _typed_frame(view, x, frame, "5-2-B")
        and view.deg(x1) == 4
        and view.nbrs(z) == {x, z1, z2}
        and view.adj(z1, x2)
        and view.adj(z2, x3)
        and view.deg(z1) == view.deg(z2) == 4
        and w in view.opposites(x, x2, x1)
        and view.deg(w) == 3
    )


def _check_five_one_b_wheel(view: FaceView, roles: Roles) -> bool:
    x = roles["x"]
    frame = _pick(roles, "y4", "y2", "y5", "y1", "y3")
    y4, y2, y5, y1, y3 = frame
    faces = {
        "y3p": (y1, y3),
        "y4p": (y4, y2),
        "z1": (y1, y5),
        "z2": (y2, y5),
    }
    if not _typed_frame(view, x, frame, "5-1-B"):
        return False
    if not all(roles[k] in view.opposites(x, *pair) for k, pair in faces.items()):
        return False
    return view.deg(y1) == view.deg(y2) == 4 and all(
        view.deg(u) == 3 for u in _pick(roles, "z1", "z2", "y3p", "y4")
    )


def _check_six_two_a_twin(view: FaceView, roles: Roles) -> bool:
    x, x1, x2, xkm1, xk = _pick(roles, "x", "x1", "x2", "xkm1", "xk")
    y1, z1, y2, z2 = _pick(roles, "y1", "z1", "y2", "z2")
    if view.deg(x) < 5 or x1 == xk:
        return False
    order = view.walk(x, x1, x2)
    if order is None or xk not in order[2:]:
        return False
    return (
        order[order.index(xk) - 1] == xkm1
        and view.deg(x1) == view.deg(xk) == 3
        and view.nbrs(x1) == {x, y1, z1}
        and view.nbrs(xk) == {x, y2, z2}
        and view.adj(y1, x2)
        and view.adj(y2, xkm1)
        and view.is_weak(y1, x1)
        and view.is_weak(z1, x1)
        and view.is_weak(y2, xk)
        and view.is_weak(z2, xk)
    )


_V_ROLES = ("v1", "v2", "v3", "v4", "v5")


def _cc_core(view: FaceView, roles: Roles, label_v: str, label_v4: str) -> bool:
    v, x, v4, v5 = _pick(roles, "v", "x", "v4", "v5")
    v3p, v4p, v4pp = _pick(roles, "v3p", "v4p", "v4pp")
    if not _typed_frame(view, v, _pick(roles, *_V_ROLES), label_v):
        return False
    if x not in view.opposites(v, v4, v5) or view.deg(v4) != 5:
        return False
    if view.walk(v4, x, v) != [x, v, v3p, v4p, v4pp]:
        return False
    return (
        view.deg(v5) == 4
        and view.deg(x) == 3
        and roles["y"] in view.opposites(v4, v3p, v4p)
        and roles["z"] in view.opposites(v4, v4p, v4pp)
        and roles["xp"] in view.opposites(v4, v4pp, x)
        and view.has_type(v4, label_v4)
    )


def _check_cc_adj_b(view: FaceView, roles: Roles) -> bool:
    return (
        _cc_core(view, roles, "5-2-C", "5-2-B")
        and view.deg(roles["v4p"]) == 3
        and view.deg(roles["xp"]) == 4
    )


def _check_cc_adj_a(view: FaceView, roles: Roles) -> bool:
    return (
        _cc_core(view, roles, "5-2-C", "5-1-A")
        and view.deg(roles["y"]) == view.deg(roles["z"]) == 3
        and view.deg(roles["xp"]) <= 4
        and roles["v5p"] in view.opposites(roles["x"], roles["xp"], roles["v5"])
        and roles["v1p"] in view.opposites(roles["v"], roles["v5"], roles["v1"])
    )


def _check_cc_adj_b2(view: FaceView, roles: Roles) -> bool:
    v = roles["v"]
    frame = _pick(roles, *_V_ROLES)
    v1, v2, v3, v4, v5 = frame
    v1p, v1pp, v3p, v3pp = _pick(roles, "v1p", "v1pp", "v3p", "v3pp")
    if not _typed_frame(view, v, frame, "5-2-B") or view.deg(v2) != 5:
        return False
    faces = {v1p: (v1, v2), v3p: (v2, v3), v3pp: (v3, v4), v1pp: (v5, v1)}
    if not all(far in view.opposites(v, *pair) for far, pair in faces.items()):
        return False
    order = view.walk(v2, v, v1p)
    return (
        order is not None
        and order[2:] == [roles["v2p"], roles["v2pp"], v3p]
        and view.nbrs(v1) == {v, v1p, v1pp}
        and view.nbrs(v3) == {v, v3p, v3pp}
        and view.deg(v1pp) >= 5
        and view.deg(v3p) == view.deg(v3pp) == 4
        and view.deg(v1p) == view.deg(roles["v2pp"]) == 3
        and view.has_type(v2, "5-2-C")
    )


# Per tag: the roles a hit must name, then the check over those roles.
ROLE_SPECS: Dict[str, Tuple[Tuple[str, ...], Callable[[FaceView, Roles], bool]]] = {
    "TwoDisjointR": (("v", "a1", "b1"), _check_two_disjoint_r),
    "Deg2Profile": (("x", "p", "q"), _check_deg2_profile),
    "Edge434": (("x", "x1", "y1", "z1", "x2"), _check_edge434),
    "LowDegPath": (("x", "y", "z"), _check_low_deg_path),
    "DoubleRAt3": (("x", "y", "z"), _check_double_r),
    "WeakPlusR": (("x", "y", "z"), _check_weak_plus_r),
    "AllWeak3": (("x",), _check_all_weak3),
    "FiveTwoBFace": (("x", "w", "y", "z", "v"), _check_five_two_b_face),
    "Mixed345": (("x",), _check_mixed345),
    "FiveTwoBLadder": (
        ("x", "y", "x3", "z", "x2", "x1", "z1", "z2", "w"),
        _check_five_two_b_ladder,
    ),
    "FiveOneBWheel": (
        ("x", "y1", "y2", "y3", "y4", "y5", "y3p", "y4p", "z1", "z2"),
        _check_five_one_b_wheel,
    ),
    "SixTwoATwin": (
        ("x", "x1", "x2", "xkm1", "xk", "y1", "z1", "y2", "z2"),
        _check_six_two_a_twin,
    ),
    "CCadjB": (
        ("v", *_V_ROLES, "x", "v3p", "v4p", "v4pp", "y", "z", "xp"),
        _check_cc_adj_b,
    ),
    "CCadjA": (
        ("v", *_V_ROLES, "x", "v3p", "v4p", "v4pp", "y", "z", "xp", "v5p", "v1p"),
        _check_cc_adj_a,
    ),
    "CCadjB2": (
        ("v", *_V_ROLES, "v1p", "v1pp", "v3p", "v3pp", "v2p", "v2pp"),
        _check_cc_adj_b2,
    ),
}


def validate_hit(
    pg: PlaneGraph, hit: ConfigHit, view: Optional[FaceView] = None
) -> bool:
    """
    Re-check a detected configuration from its recorded roles.

    Args:
        pg: Plane graph the hit was detected on
        hit: The hit
        view: Precomputed face view of pg, to share across many hits

    Returns:
        True when the roles form the tagged pattern; False for an unknown tag,
        a missing or out-of-range role, or a pattern that does not hold
    """
    spec = ROLE_SPECS.get(hit.tag)
    if spec is None:
        return False
    required, check = spec
    roles = {k: u for k, u in hit.roles.items() if k != "dir"}
    if not set(required) <= roles.keys():
        return False
    try:
        view = view or FaceView(pg)
    except EmbeddingError as e:
        logger.warning(f"Cannot validate {hit.tag}: {e.message}")
        return False
    if not view.has(*roles.values()):
        return False
    return check(view, roles)

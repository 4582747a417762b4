"""Combinatorial embeddings: rotation systems, face walks and face-local surgery."""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from indforest.core.exceptions import (
    ChordUnavailableError,
    EmbeddingError,
    LoopWouldFormError,
    NoChordNeededError,
)
from indforest.models.graph import (
    Edge,
    Graph,
    IdMap,
    add_edge,
    build_graph,
    delete_vertices,
    identify,
)
from indforest.utils.bits import iter_bits, mask_of


def _canonical(boundary: Sequence[Edge]) -> Tuple[Edge, ...]:
    """Rotate a closed walk so that its smallest directed edge comes first."""
    if not boundary:
        return ()
    start = min(range(len(boundary)), key=lambda i: boundary[i])
    return tuple(boundary[start:]) + tuple(boundary[:start])


@dataclass(frozen=True)
class FaceWalk:
    """
    A face as a closed walk of directed edges.

    Attributes:
        boundary: Directed edges in walk order, canonically rotated
        isolated: The vertex of an isolated-vertex face (empty boundary)
    """

    boundary: Tuple[Edge, ...]
    isolated: Optional[int] = None

    @property
    def length(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> Tuple[int, ...]:
        if self.isolated is not None:
            return (self.isolated,)
        return tuple(u for u, _ in self.boundary)

    @property
    def is_simple(self) -> bool:
        """True when no vertex repeats along the walk."""
        return len(set(self.vertices)) == len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def sort_key(self) -> Tuple[Edge, ...]:
        return self.boundary or ((self.isolated, -1),)


@dataclass(frozen=True)
class PlaneGraph:
    """
    A graph with a rotation system.

    Attributes:
        graph: Underlying simple graph
        rotation: For each vertex, its neighbors in cyclic order
    """

    graph: Graph
    rotation: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rotation) != self.graph.n:
            raise EmbeddingError(
                f"rotation has {len(self.rotation)} entries for {self.graph.n} vertices"
            )
        for v, order in enumerate(self.rotation):
            if len(order) != len(set(order)) or mask_of(order) != self.graph.adj[v]:
                raise EmbeddingError(
                    f"rotation at {v} is not a permutation of its neighbors",
                    {"vertex": v},
                )

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def _positions(self) -> Tuple[Dict[int, int], ...]:
        return tuple({u: i for i, u in enumerate(order)} for order in self.rotation)

    def successor(self, v: int, u: int) -> int:
        """The neighbor following u in the rotation at v."""
        order = self.rotation[v]
        return order[(self._positions[v][u] + 1) % len(order)]

    def rotation_from(self, v: int, start: int, step: int = 1) -> Tuple[int, ...]:
        """The rotation at v read from start, forwards (step=1) or backwards."""
        order = self.rotation[v]
        i = self._positions[v][start]
        return tuple(order[(i + step * j) % len(order)] for j in range(len(order)))

    @cached_property
    def faces(self) -> Tuple[FaceWalk, ...]:
        """Traced faces; see trace_faces for the validated entry point."""
        seen = set()
        faces = []
        for u in range(self.n):
            if not self.rotation[u]:
                faces.append(FaceWalk((), isolated=u))
                continue
            for v in self.rotation[u]:
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append((a, b))
                    a, b = b, self.successor(b, a)
                faces.append(FaceWalk(_canonical(walk)))
        return tuple(sorted(faces, key=FaceWalk.sort_key))

    @cached_property
    def _face_index(self) -> Dict[Edge, int]:
        index = {}
        for i, face in enumerate(self.faces):
            for edge in face.boundary:
                index[edge] = i
        return index

    def face_of(self, u: int, v: int) -> FaceWalk:
        """The face whose walk contains the directed edge u->v."""
        return self.faces[self._face_index[(u, v)]]

    def __repr__(self) -> str:
        return f"<PlaneGraph n={self.n} m={self.graph.m} faces={len(self.faces)}>"


def embed(graph: Graph, rotation: Sequence[Sequence[int]]) -> PlaneGraph:
    """Attach a rotation system to a graph, validating it is a permutation."""
    return PlaneGraph(graph, tuple(tuple(order) for order in rotation))


def from_rotation(
    rotation: Sequence[Sequence[int]], bipartition: Optional[Sequence[int]] = None
) -> PlaneGraph:
    """Build the graph and the embedding from rotation lists alone."""
    edges = [(v, u) for v, order in enumerate(rotation) for u in order if v < u]
    return embed(build_graph(len(rotation), edges, bipartition), rotation)


def euler_defects(pg: PlaneGraph) -> List[Tuple[int, int, int]]:
    """
    Components violating V - E + F = 2, as (V, E, F) triples.

    Faces of different components are traced separately, so every component
    of an embedding satisfies the formula on its own.
    """
    graph = pg.graph
    component_of = {}
    components = graph.component_masks()
    for i, comp in enumerate(components):
        for v in iter_bits(comp):
            component_of[v] = i
    face_count = [0] * len(components)
    for face in pg.faces:
        face_count[component_of[face.vertices[0]]] += 1
    defects = []
    for i, comp in enumerate(components):
        v = comp.bit_count()
        e = graph.edges_within(comp)
        if v - e + face_count[i] != 2:
            defects.append((v, e, face_count[i]))
    return defects


def trace_faces(pg: PlaneGraph) -> List[FaceWalk]:
    """
    Trace every face of the embedding.

    Every directed edge lies on exactly one walk. A disconnected graph is
    traced per component; merging the outer faces then gives
    V - E + F = 1 + C.

    Args:
        pg: Plane graph

    Returns:
        Faces, each canonically rotated, in canonical order

    Raises:
        EmbeddingError: if Euler's formula fails on some component
    """
    defects = euler_defects(pg)
    if defects:
        raise EmbeddingError(
            f"rotation system is not planar: (V, E, F) = {defects[0]}",
            {"defects": [list(d) for d in defects]},
        )
    return list(pg.faces)


def merged_face_count(pg: PlaneGraph) -> int:
    """Face count once the outer faces of all components are merged."""
    components = len(pg.graph.component_masks())
    return len(pg.faces) - max(components - 1, 0)


def is_quadrangulation(pg: PlaneGraph) -> bool:
    """True iff the plane graph is connected and every face has length 4."""
    if pg.n == 0 or not pg.graph.is_connected():
        return False
    return all(face.length == 4 for face in trace_faces(pg))


def face_at_corner(pg: PlaneGraph, v: int, a: int, b: int) -> Optional[FaceWalk]:
    """
    The face through the corner formed by consecutive neighbors a, b of v.

    Returns:
        The face walk, or None when a and b are not consecutive around v
    """
    if a == b or a not in pg._positions[v] or b not in pg._positions[v]:
        return None
    if pg.successor(v, a) == b:
        return pg.face_of(a, v)
    if pg.successor(v, b) == a:
        return pg.face_of(b, v)
    return None


def opposite_in_face(face: Optional[FaceWalk], v: int) -> Optional[int]:
    """The vertex opposite v on a simple 4-face, or None."""
    if face is None or face.length != 4 or not face.is_simple or v not in face:
        return None
    walk = face.vertices
    return walk[(walk.index(v) + 2) % 4]


def cofacial_faces(pg: PlaneGraph, v: int) -> List[Tuple[int, int, int]]:
    """
    All 4-faces v r1 w r2 through v, as (r1, w, r2) with r1 < r2.

    Returns:
        Sorted, deduplicated triples
    """
    triples = set()
    for u in pg.rotation[v]:
        face = pg.face_of(v, u)
        if face.length != 4 or not face.is_simple:
            continue
        walk = face.vertices
        i = walk.index(v)
        r1, w, r2 = walk[(i + 1) % 4], walk[(i + 2) % 4], walk[(i + 3) % 4]
        triples.add((min(r1, r2), w, max(r1, r2)))
    return sorted(triples)


def cofacial_pairs(pg: PlaneGraph, v: int) -> List[Tuple[int, int]]:
    """Pairs {r1, r2} of neighbors of v lying on a common 4-face with v."""
    return sorted({(r1, r2) for r1, _, r2 in cofacial_faces(pg, v)})


def insert_edge(
    pg: PlaneGraph, u: int, v: int, after_u: int, after_v: int
) -> PlaneGraph:
    """
    Draw the edge uv, placing v just after after_u around u and u just after
    after_v around v.
    """
    graph = add_edge(pg.graph, u, v)
    if graph is pg.graph:
        raise ChordUnavailableError(f"edge {u}{v} already present", {"edge": [u, v]})
    rotation = [list(order) for order in pg.rotation]
    for x, y, anchor in ((u, v, after_u), (v, u, after_v)):
        order = rotation[x]
        if not order:
            order.append(y)
        else:
            order.insert(order.index(anchor) + 1, y)
    return embed(graph, rotation)


def add_chord(pg: PlaneGraph, face: FaceWalk) -> PlaneGraph:
    """
    Add a chord a_1a_4 inside a face of length at least 6.

    The walk start is rotated until a_1 and a_4 are distinct and non-adjacent;
    the chord splits the face into a 4-face and a (k-2)-face.

    Raises:
        NoChordNeededError: face length at most 4
        ChordUnavailableError: every rotation of the walk is blocked
    """
    k = face.length
    if k <= 4:
        raise NoChordNeededError(f"face of length {k} needs no chord")
    walk = face.vertices
    colours = pg.graph.bipartition
    for i in range(k):
        a1, a3, a4 = walk[i], walk[(i + 2) % k], walk[(i + 3) % k]
        if a1 == a4 or pg.graph.has_edge(a1, a4):
            continue
        if colours is not None and colours[a1] == colours[a4]:
            continue
        return insert_edge(pg, a1, a4, after_u=walk[i - 1], after_v=a3)
    raise ChordUnavailableError(
        f"no chord available in face of length {k}", {"face": list(walk)}
    )


def delete_plane_vertices(
    pg: PlaneGraph, removed: Iterable[int]
) -> Tuple[PlaneGraph, IdMap]:
    """Delete vertices, restricting the rotations to the survivors."""
    graph, mapping = delete_vertices(pg.graph, removed)
    rotation = [()] * graph.n
    for old, new in mapping.items():
        rotation[new] = tuple(mapping[u] for u in pg.rotation[old] if u in mapping)
    return embed(graph, rotation), mapping


def restrict_to(pg: PlaneGraph, keep: Iterable[int]) -> Tuple[PlaneGraph, IdMap]:
    """The plane subgraph induced by keep."""
    keep_mask = mask_of(keep)
    return delete_plane_vertices(
        pg, [v for v in range(pg.n) if not keep_mask >> v & 1]
    )


def _identify_pair(
    pg: PlaneGraph, face: FaceWalk, x: int, y: int
) -> Tuple[PlaneGraph, IdMap]:
    walk = face.vertices
    k = len(walk)
    ix, iy = walk.index(x), walk.index(y)
    p, q = walk[ix - 1], walk[(ix + 1) % k]
    r, s = walk[iy - 1], walk[(iy + 1) % k]
    # corner p->x->q means q follows p around x, so reading from q ends at p
    seq_x = pg.rotation_from(x, q) if pg.rotation[x] else ()
    seq_y = pg.rotation_from(y, s) if pg.rotation[y] else ()
    assert not seq_x or seq_x[-1] == p
    assert not seq_y or seq_y[-1] == r
    shared = set(seq_x)
    merged = list(seq_x) + [t for t in seq_y if t not in shared]
    graph, mapping = identify(pg.graph, [[x, y]])
    rotation: List[Tuple[int, ...]] = [()] * graph.n
    for v in range(pg.n):
        if v == y:
            continue
        if v == x:
            order = merged
        elif v in shared and pg.graph.has_edge(v, y):
            order = [t for t in pg.rotation[v] if t != y]
        else:
            order = pg.rotation[v]
        rotation[mapping[v]] = tuple(mapping[t] for t in order)
    return embed(graph, rotation), mapping


def identify_in_face(
    pg: PlaneGraph, face: FaceWalk, group: Iterable[int]
) -> Tuple[PlaneGraph, IdMap]:
    """
    Identify a group of vertices lying on one face into a single vertex.

    The merged rotation splices the two rotations at their corners on the
    face, so the result stays plane; parallel edges are merged. Groups of
    more than two vertices are merged one vertex at a time, each later merge
    using the first face that contains both current vertices.

    Args:
        pg: Plane graph
        face: A face of pg containing every group member
        group: Vertices to identify; no edge may join two of them

    Returns:
        The identified plane graph and the old-to-new id map

    Raises:
        LoopWouldFormError: if the group contains an edge
        EmbeddingError: if a member is not on the face
    """
    members = sorted(set(group))
    if len(members) <= 1:
        return pg, {v: v for v in range(pg.n)}
    group_mask = mask_of(members)
    for u in members:
        inside = pg.graph.adj[u] & group_mask
        if inside:
            raise LoopWouldFormError((u, (inside & -inside).bit_length() - 1))
    for u in members:
        if u not in face:
            raise EmbeddingError(f"vertex {u} is not on the face", {"vertex": u})

    current = pg
    mapping = {v: v for v in range(pg.n)}
    current_face = face
    for other in members[1:]:
        x, y = mapping[members[0]], mapping[other]
        if current_face is None:
            current_face = next(
                (f for f in current.faces if x in f and y in f), None
            )
            if current_face is None:
                raise EmbeddingError(f"vertices {x} and {y} share no face")
        current, step = _identify_pair(current, current_face, x, y)
        mapping = {old: step[new] for old, new in mapping.items()}
        current_face = None
    return current, mapping

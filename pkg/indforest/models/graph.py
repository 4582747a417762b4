"""Immutable simple graphs over dense vertex ids and their vertex surgeries."""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from indforest.core.exceptions import InvalidEdgeError, LoopWouldFormError
from indforest.utils.bits import bit, iter_bits, lowest, mask_of, popcount

Edge = Tuple[int, int]
VertexSet = FrozenSet[int]
IdMap = Dict[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    Attributes:
        n: Vertex count
        adj: Per-vertex neighbor bitmask
        bipartition: Optional per-vertex colour in {0, 1}
    """

    n: int
    adj: Tuple[int, ...]
    bipartition: Optional[Tuple[int, ...]] = None

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Edge]:
        """Edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    def vertices_with_degree(self, lo: int = 0, hi: Optional[int] = None) -> List[int]:
        """Vertices whose degree lies in [lo, hi]."""
        return [
            v
            for v in range(self.n)
            if lo <= self.degree(v) and (hi is None or self.degree(v) <= hi)
        ]

    def component_masks(self, mask: Optional[int] = None) -> List[int]:
        """Connected components of G[mask] as bitmasks, ordered by smallest member."""
        remaining = self.all_mask if mask is None else mask
        components = []
        while remaining:
            frontier = remaining & -remaining
            seen = frontier
            while frontier:
                grown = 0
                for v in iter_bits(frontier):
                    grown |= self.adj[v]
                frontier = grown & remaining & ~seen
                seen |= frontier
            components.append(seen)
            remaining &= ~seen
        return components

    def components(self) -> List[VertexSet]:
        return [frozenset(iter_bits(c)) for c in self.component_masks()]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def edges_within(self, mask: int) -> int:
        return sum(popcount(self.adj[v] & mask) for v in iter_bits(mask)) // 2

    def to_networkx(self, mask: Optional[int] = None) -> nx.Graph:
        """Return G (or G[mask]) as a networkx graph."""
        keep = self.all_mask if mask is None else mask
        graph = nx.Graph()
        graph.add_nodes_from(iter_bits(keep))
        graph.add_edges_from(
            (u, v) for u, v in self.edges() if keep >> u & 1 and keep >> v & 1
        )
        return graph

    def __repr__(self) -> str:
        return f"<Graph n={self.n} m={self.m}>"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidEdgeError((u, v), f"endpoint outside [0, {n})")
    if u == v:
        raise InvalidEdgeError((u, v), "loop")


def build_graph(
    n: int, edges: Iterable[Sequence[int]], bipartition: Optional[Sequence[int]] = None
) -> Graph:
    """
    Build a simple graph, merging repeated edges.

    Args:
        n: Vertex count
        edges: Iterable of (u, v) id pairs
        bipartition: Optional colouring to attach; it must be proper

    Returns:
        Graph with symmetric deduplicated adjacency

    Raises:
        InvalidEdgeError: on a loop or an out-of-range id
    """
    if n < 0:
        raise InvalidEdgeError((n, n), "negative vertex count")
    adj = [0] * n
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        _check_pair(n, u, v)
        adj[u] |= bit(v)
        adj[v] |= bit(u)
    colours = None
    if bipartition is not None:
        colours = tuple(int(c) for c in bipartition)
        if len(colours) != n or any(c not in (0, 1) for c in colours):
            raise InvalidEdgeError((0, n), "bipartition must give each vertex 0 or 1")
        for u in range(n):
            for v in iter_bits(adj[u]):
                if colours[u] == colours[v]:
                    raise InvalidEdgeError((u, v), "edge inside a colour class")
    return Graph(n, tuple(adj), colours)


def _relabel(graph: Graph, mapping: IdMap, new_n: int) -> Tuple[int, ...]:
    adj = [0] * new_n
    for u, v in graph.edges():
        a, b = mapping.get(u), mapping.get(v)
        if a is None or b is None or a == b:
            continue
        adj[a] |= bit(b)
        adj[b] |= bit(a)
    return tuple(adj)


def delete_vertices(graph: Graph, removed: Iterable[int]) -> Tuple[Graph, IdMap]:
    """
    Delete a vertex set: G - X.

    Args:
        graph: Host graph
        removed: Vertices to delete

    Returns:
        The induced subgraph on the survivors (ids compacted in order) and the
        old-to-new id map of the survivors
    """
    gone = mask_of(removed)
    survivors = [v for v in range(graph.n) if not gone >> v & 1]
    mapping = {old: new for new, old in enumerate(survivors)}
    colours = None
    if graph.bipartition is not None:
        colours = tuple(graph.bipartition[v] for v in survivors)
    adj = _relabel(graph, mapping, len(survivors))
    return Graph(len(survivors), adj, colours), mapping


def identify(graph: Graph, groups: Sequence[Iterable[int]]) -> Tuple[Graph, IdMap]:
    """
    Identify each group of vertices into one vertex, merging parallel edges.

    Args:
        graph: Host graph
        groups: Pairwise disjoint vertex groups, none containing an edge

    Returns:
        The identified graph and the old-to-new id map (every old id is mapped;
        a group takes the position of its smallest member)

    Raises:
        LoopWouldFormError: if a group contains an edge
        InvalidEdgeError: if groups overlap or name unknown vertices
    """
    representative = list(range(graph.n))
    claimed = 0
    for group in groups:
        members = sorted(set(group))
        if not members:
            continue
        group_mask = mask_of(members)
        if group_mask & claimed:
            raise InvalidEdgeError((members[0], members[-1]), "groups overlap")
        if members[-1] >= graph.n or members[0] < 0:
            raise InvalidEdgeError((members[0], members[-1]), "unknown vertex")
        claimed |= group_mask
        for u in members:
            inside = graph.adj[u] & group_mask
            if inside:
                raise LoopWouldFormError((u, lowest(inside)))
        for u in members:
            representative[u] = members[0]
    kept = [v for v in range(graph.n) if representative[v] == v]
    position = {old: new for new, old in enumerate(kept)}
    mapping = {v: position[representative[v]] for v in range(graph.n)}
    colours = None
    if graph.bipartition is not None and all(
        graph.bipartition[v] == graph.bipartition[representative[v]]
        for v in range(graph.n)
    ):
        colours = tuple(graph.bipartition[v] for v in kept)
    return Graph(len(kept), _relabel(graph, mapping, len(kept)), colours), mapping


def add_edge(graph: Graph, u: int, v: int) -> Graph:
    """
    Add the edge uv: G + uv. Adding an existing edge returns G unchanged.

    Raises:
        InvalidEdgeError: if u == v or an id is out of range
    """
    _check_pair(graph.n, u, v)
    if graph.has_edge(u, v):
        return graph
    adj = list(graph.adj)
    adj[u] |= bit(v)
    adj[v] |= bit(u)
    colours = graph.bipartition
    if colours is not None and colours[u] == colours[v]:
        colours = None
    return Graph(graph.n, tuple(adj), colours)


def is_bipartite(graph: Graph) -> Optional[Tuple[int, ...]]:
    """
    Two-colour the graph by breadth-first search.

    Returns:
        A proper colouring (the smallest vertex of each component gets 0), or
        None when the graph has an odd cycle
    """
    colour = [-1] * graph.n
    for start in range(graph.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = [start]
        for u in queue:
            for w in iter_bits(graph.adj[u]):
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return tuple(colour)


def count_components(graph: Graph, mask: int) -> int:
    return len(graph.component_masks(mask))


def induces_forest(graph: Graph, vertices: Iterable[int]) -> bool:
    """
    Check whether G[S] is acyclic.

    A graph is a forest exactly when its edge count equals its vertex count
    minus its component count.
    """
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    if not mask:
        return True
    return graph.edges_within(mask) == popcount(mask) - count_components(graph, mask)


def find_cycle(graph: Graph, vertices: Iterable[int]) -> Optional[List[int]]:
    """Return the vertices of one cycle of G[S], or None if G[S] is a forest."""
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    try:
        cycle_edges = nx.find_cycle(graph.to_networkx(mask))
    except nx.NetworkXNoCycle:
        return None
    return [u for u, _ in cycle_edges]

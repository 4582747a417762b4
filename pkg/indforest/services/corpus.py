"""Embedded graph families and the seeded quadrangulation generator."""
import logging
import random
from typing import Callable, Dict, List, Optional, Sequence

from indforest.core.config import get_settings
from indforest.models.corpus import CorpusEntry
from indforest.models.graph import is_bipartite
from indforest.models.plane import FaceWalk, PlaneGraph, from_rotation, trace_faces

logger = logging.getLogger(__name__)


def _plane(rotation: Sequence[Sequence[int]]) -> PlaneGraph:
    pg = from_rotation(rotation)
    colours = is_bipartite(pg.graph)
    pg = from_rotation(rotation, colours)
    trace_faces(pg)
    return pg


def even_cycle(k: int) -> PlaneGraph:
    """The cycle C_{2k}."""
    n = 2 * k
    return _plane([((i + 1) % n, (i - 1) % n) for i in range(n)])


def grid(rows: int, cols: int) -> PlaneGraph:
    """The rows x cols grid; vertex (i, j) has id i * cols + j."""
    rotation = []
    for i in range(rows):
        for j in range(cols):
            order = []
            for di, dj in ((0, 1), (1, 0), (0, -1), (-1, 0)):
                a, b = i + di, j + dj
                if 0 <= a < rows and 0 <= b < cols:
                    order.append(a * cols + b)
            rotation.append(order)
    return _plane(rotation)


def stacked_prism(k: int, layers: int) -> PlaneGraph:
    """
    C_{2k} x P_layers drawn as concentric cycles.

    Vertex i of layer l has id l * 2k + i; layer 0 is innermost.
    """
    size = 2 * k
    rotation = []
    for layer in range(layers):
        for i in range(size):
            order = []
            if layer + 1 < layers:
                order.append((layer + 1) * size + i)
            order.append(layer * size + (i + 1) % size)
            if layer > 0:
                order.append((layer - 1) * size + i)
            order.append(layer * size + (i - 1) % size)
            rotation.append(order)
    return _plane(rotation)


def prism(k: int) -> PlaneGraph:
    """C_{2k} x K_2; prism(2) is the cube."""
    return stacked_prism(k, 2)


def pseudo_double_wheel(k: int) -> PlaneGraph:
    """
    The cycle c_0..c_{2k-1} with an inner pole joined to the even c_i and an
    outer pole joined to the odd c_i.
    """
    size = 2 * k
    inner, outer = size, size + 1
    rotation = []
    for i in range(size):
        nxt, prv = (i + 1) % size, (i - 1) % size
        rotation.append((nxt, inner, prv) if i % 2 == 0 else (outer, nxt, prv))
    rotation.append(tuple(range(0, size, 2)))
    rotation.append(tuple(reversed(range(1, size, 2))))
    return _plane(rotation)


def random_tree(n: int, rng: random.Random) -> PlaneGraph:
    """A random recursive tree on n vertices."""
    neighbors: List[List[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        parent = rng.randrange(v)
        neighbors[v].append(parent)
        neighbors[parent].append(v)
    return _plane(neighbors)


def expand_diagonal(pg: PlaneGraph, face: FaceWalk, corner: int = 0) -> PlaneGraph:
    """
    Split a 4-face a b c d with a new degree-2 vertex joined to a and c.

    Args:
        pg: Plane quadrangulation
        face: A simple 4-face of pg
        corner: 0 joins walk positions 0 and 2, 1 joins positions 1 and 3

    Returns:
        The expanded plane graph; the new vertex has id n
    """
    walk = face.vertices
    a, b, c, d = (walk[(corner + i) % 4] for i in range(4))
    x = pg.n
    rotation = [list(order) for order in pg.rotation]
    rotation[a].insert(rotation[a].index(d) + 1, x)
    rotation[c].insert(rotation[c].index(b) + 1, x)
    rotation.append([a, c])
    return _recolour(pg, rotation, {x: a})


def expand_cube(pg: PlaneGraph, face: FaceWalk) -> PlaneGraph:
    """Insert a 4-cycle inside a 4-face, joining each new vertex to one corner."""
    walk = face.vertices
    base = pg.n
    rotation = [list(order) for order in pg.rotation]
    for i, w in enumerate(walk):
        rotation[w].insert(rotation[w].index(walk[i - 1]) + 1, base + i)
    for i, w in enumerate(walk):
        rotation.append([w, base + (i - 1) % 4, base + (i + 1) % 4])
    return _recolour(pg, rotation, {base + i: w for i, w in enumerate(walk)})


def _recolour(
    pg: PlaneGraph, rotation: List[List[int]], partner: Dict[int, int]
) -> PlaneGraph:
    colours = pg.graph.bipartition
    if colours is not None:
        colours = list(colours) + [1 - colours[partner[x]] for x in sorted(partner)]
    return from_rotation(rotation, colours)


def random_quadrangulation(n: int, rng: random.Random) -> PlaneGraph:
    """
    Grow a quadrangulation on n >= 4 vertices from C_4 by face expansions.

    Every expansion keeps the graph simple, bipartite and of minimum degree
    at least 2.
    """
    pg = even_cycle(2)
    while pg.n < n:
        face = rng.choice([f for f in pg.faces if f.length == 4])
        if n - pg.n >= 4 and rng.random() < 0.25:
            pg = expand_cube(pg, face)
        else:
            pg = expand_diagonal(pg, face, rng.randrange(2))
    return pg


def _entry(name: str, pg: PlaneGraph) -> CorpusEntry:
    return CorpusEntry(name, "generator", pg.graph, pg, attested_planar=True)


def even_cycles(size: int, **_) -> List[CorpusEntry]:
    return [_entry(f"even_cycle-{2 * k}", even_cycle(k)) for k in range(2, size + 2)]


def grids(size: int, **_) -> List[CorpusEntry]:
    return [
        _entry(f"grid-{r}x{c}", grid(r, c))
        for r in range(2, size + 1)
        for c in range(r, size + 1)
    ]


def prisms(size: int, **_) -> List[CorpusEntry]:
    return [_entry(f"prism-{2 * k}", prism(k)) for k in range(2, size + 2)]


def stacked_prisms(size: int, **_) -> List[CorpusEntry]:
    return [
        _entry(f"stacked_prism-{2 * k}x{layers}", stacked_prism(k, layers))
        for k in range(2, size + 2)
        for layers in range(2, size + 2)
    ]


def cube_family(size: int, **_) -> List[CorpusEntry]:
    """The cube and the nested cubes C_4 x P_m obtained by cube expansion."""
    entries = []
    pg = prism(2)
    for i in range(size):
        entries.append(_entry(f"cube-{i + 1}", pg))
        pg = expand_cube(pg, pg.faces[0])
    return entries


def double_cube_matching(size: int, **_) -> List[CorpusEntry]:
    """Two cubes joined by a matching between 4-cycles, then longer chains."""
    return [
        _entry(f"double_cube-{m}", stacked_prism(2, 2 * m)) for m in range(2, size + 2)
    ]


def pseudo_double_wheels(size: int, **_) -> List[CorpusEntry]:
    return [
        _entry(f"pseudo_double_wheel-{k}", pseudo_double_wheel(k))
        for k in range(2, size + 2)
    ]


def trees(size: int, seed: int = 0, **_) -> List[CorpusEntry]:
    rng = random.Random(seed)
    return [_entry(f"tree-{n}-{seed}", random_tree(n, rng)) for n in range(1, size + 2)]


def random_quadrangulations_by_face_expansion(
    size: int,
    seed: int = 0,
    min_n: Optional[int] = None,
    max_n: Optional[int] = None,
) -> List[CorpusEntry]:
    """
    Seeded random quadrangulations.

    Args:
        size: Number of graphs
        seed: Random seed
        min_n: Smallest vertex count (default from settings)
        max_n: Largest vertex count (default from settings)

    Returns:
        size entries whose vertex counts are drawn uniformly from [min_n, max_n]
    """
    settings = get_settings()
    low = max(4, min_n if min_n is not None else settings.QUAD_MIN_N)
    high = max(low, max_n if max_n is not None else settings.QUAD_MAX_N)
    rng = random.Random(seed)
    entries = []
    for i in range(size):
        n = rng.randint(low, high)
        entries.append(_entry(f"quad-{seed}-{i}-n{n}", random_quadrangulation(n, rng)))
    return entries


FAMILIES: Dict[str, Callable[..., List[CorpusEntry]]] = {
    "even_cycles": even_cycles,
    "grids": grids,
    "prisms": prisms,
    "stacked_prisms": stacked_prisms,
    "cube_family": cube_family,
    "double_cube_matching": double_cube_matching,
    "random_quadrangulations_by_face_expansion": (
        random_quadrangulations_by_face_expansion
    ),
    "trees": trees,
    "pseudo_double_wheels": pseudo_double_wheels,
}


def generate_corpus(
    family: str,
    size: int,
    seed: Optional[int] = None,
    min_n: Optional[int] = None,
    max_n: Optional[int] = None,
) -> List[CorpusEntry]:
    """
    Generate an embedded bipartite planar family.

    Args:
        family: One of FAMILIES
        size: Family size parameter
        seed: Seed for the random families (default from settings)
        min_n: Smallest random quadrangulation
        max_n: Largest random quadrangulation

    Returns:
        Entries with attested_planar set

    Raises:
        ValueError: for an unknown family or a size below 1
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family}; expected one of {sorted(FAMILIES)}")
    if size < 1:
        raise ValueError("size must be at least 1")
    seed = get_settings().RANDOM_SEED if seed is None else seed
    entries = FAMILIES[family](size, seed=seed, min_n=min_n, max_n=max_n)
    logger.info(f"Generated {len(entries)} {family} entries (size={size}, seed={seed})")
    return entries

"""Distance and connectivity invariants.

BFS layer profiles, diameter with a typed sentinel for disconnected
graphs, and vertex connectivity by Menger's theorem: the maximum number
of internally disjoint paths between a non-adjacent pair equals the
minimum separator size, computed as unit-capacity max flow on the
vertex-split digraph.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError
from .graphs import Graph, bits, is_clique


class Disconnected:
    """Diameter sentinel; a single shared instance, never equal to an int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "DISCONNECTED"


DISCONNECTED = Disconnected()


@dataclass(frozen=True)
class LayerProfile:
    """BFS layering from one source.

    ``layers[r]`` is the bitmask of vertices at distance exactly r from
    the source; unreachable vertices appear in no layer.  The
    eccentricity is the largest finite distance, ``len(layers) - 1``.
    """

    source: int
    layers: tuple[int, ...]
    eccentricity: int

    def reached(self) -> int:
        """Bitmask of the source's component."""
        mask = 0
        for layer in self.layers:
            mask |= layer
        return mask

    def layer_of(self, v: int) -> int | None:
        """Distance from the source to v, or None if unreachable."""
        for r, layer in enumerate(self.layers):
            if layer >> v & 1:
                return r
        return None


@dataclass(frozen=True)
class ConnectivityResult:
    """Vertex connectivity plus a witness.

    ``witness_cut`` is a vertex bitmask whose removal disconnects the
    graph; it is empty (0) for complete graphs, where no cut exists and
    kappa is order - 1 by convention.  Among all minimum cuts the
    witness is the one whose sorted vertex tuple is lexicographically
    smallest.
    """

    kappa: int
    witness_cut: int


def bfs_layers(g: Graph, source: int) -> LayerProfile:
    """Layers of vertices by exact distance from ``source``."""
    if not 0 <= source < g.order:
        raise IndexError(f"vertex {source} out of range for order {g.order}")
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while True:
        grown = 0
        for v in bits(frontier):
            grown |= g.rows[v]
        grown &= ~seen
        if not grown:
            return LayerProfile(source, tuple(layers), len(layers) - 1)
        layers.append(grown)
        seen |= grown
        frontier = grown


def is_connected(g: Graph) -> bool:
    """True iff the graph has one component (vacuously true for order 1)."""
    if g.order == 0:
        raise ParameterError("connectivity undefined for order-0 graph")
    return bfs_layers(g, 0).reached() == (1 << g.order) - 1


def diameter(g: Graph) -> int | Disconnected:
    """Greatest distance between two vertices, or DISCONNECTED."""
    if g.order == 0:
        raise ParameterError("diameter undefined for order-0 graph")
    first = bfs_layers(g, 0)
    if first.reached() != (1 << g.order) - 1:
        return DISCONNECTED
    ecc = first.eccentricity
    for v in range(1, g.order):
        ecc = max(ecc, bfs_layers(g, v).eccentricity)
    return ecc


# ---------------------------------------------------------------------------
# connectivity via max flow

# Flow network node ids: vertex v splits into entry node 2v and exit
# node 2v + 1, linked by a capacity-1 internal arc; edge uv becomes the
# arcs exit(u) -> entry(v) and exit(v) -> entry(u).  A path through the
# digraph then consumes each intermediate vertex at most once.


def _max_flow_units(cap: dict, nbrs: dict, source: int, sink: int,
                    limit: int | None) -> int:
    flow = 0
    while limit is None or flow < limit:
        parent = {source: source}
        queue = deque([source])
        while queue:
            a = queue.popleft()
            if a == sink:
                break
            for b in nbrs[a]:
                if b not in parent and cap[a, b] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[a, b] -= 1
            cap[b, a] += 1
            b = a
        flow += 1
    return flow


def local_connectivity(g: Graph, s: int, t: int, *,
                       limit: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths.

    Requires a non-adjacent pair; adjacent pairs have no finite
    separator and are the caller's business to skip.  ``limit`` stops
    the augmentation early once that many paths are found.
    """
    g._check_vertex(s)
    g._check_vertex(t)
    if s == t:
        raise ParameterError("endpoints must be distinct")
    if g.has_edge(s, t):
        raise ParameterError("endpoints must be non-adjacent")
    cap: dict = defaultdict(int)
    nbrs: dict = defaultdict(list)

    def arc(a: int, b: int) -> None:
        cap[a, b] += 1
        nbrs[a].append(b)
        nbrs[b].append(a)

    for v in range(g.order):
        if v != s and v != t:
            arc(2 * v, 2 * v + 1)
    for u in range(g.order):
        for v in bits(g.rows[u]):
            arc(2 * u + 1, 2 * v)
    return _max_flow_units(cap, nbrs, 2 * s + 1, 2 * t, limit)


def _is_complete(g: Graph) -> bool:
    full = (1 << g.order) - 1
    return all(g.rows[v] == full ^ (1 << v) for v in range(g.order))


def _removal_disconnects(g: Graph, cut: int) -> bool:
    remaining = (1 << g.order) - 1 & ~cut
    if remaining == 0 or remaining & (remaining - 1) == 0:
        return False
    comp = remaining & -remaining
    frontier = comp
    while frontier:
        grown = 0
        for v in bits(frontier):
            grown |= g.rows[v]
        frontier = grown & remaining & ~comp
        comp |= frontier
    return comp != remaining


def _lex_min_cut(g: Graph, kappa: int) -> int:
    # combinations() yields sorted tuples in lexicographic order, so the
    # first disconnecting subset is the canonical witness.
    for combo in combinations(range(g.order), kappa):
        cut = 0
        for v in combo:
            cut |= 1 << v
        if _removal_disconnects(g, cut):
            return cut
    raise AssertionError("no cut of the computed connectivity size")


def vertex_connectivity(g: Graph) -> ConnectivityResult:
    """Minimum separating set size; order - 1 for complete graphs."""
    if g.order == 0:
        raise ParameterError("connectivity undefined for order-0 graph")
    if _is_complete(g):
        return ConnectivityResult(g.order - 1, 0)
    if not is_connected(g):
        return ConnectivityResult(0, 0)
    best = g.order - 1
    for s in range(g.order):
        for t in range(s + 1, g.order):
            if not g.rows[s] >> t & 1:
                # values above the running minimum cannot matter
                flow = local_connectivity(g, s, t, limit=best)
                if flow < best:
                    best = flow
    return ConnectivityResult(best, _lex_min_cut(g, best))


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff order > k and every separator has at least k vertices."""
    if k < 1:
        raise ParameterError("connectivity level must be at least 1")
    if g.order <= k:
        return False
    if _is_complete(g):
        return True
    if min(row.bit_count() for row in g.rows) < k:
        return False
    if not is_connected(g):
        return False
    for s in range(g.order):
        for t in range(s + 1, g.order):
            if not g.rows[s] >> t & 1:
                if local_connectivity(g, s, t, limit=k) < k:
                    return False
    return True


def layer_structure_check(g: Graph, x: int, y: int, k: int) -> bool:
    """Structural test along a diameter-realizing pair.

    With d the diameter and x, y at distance d, checks that every
    intermediate layer from x has at least k vertices and that each
    union of consecutive layers N_i(x) | N_{i+1}(x), i = 1..d-1, is a
    clique.  Maximum-size graphs satisfy this; it prunes impostors.
    """
    g._check_vertex(x)
    g._check_vertex(y)
    if k < 1:
        raise ParameterError("connectivity level must be at least 1")
    dia = diameter(g)
    if dia is DISCONNECTED:
        raise ParameterError("graph must be connected")
    profile = bfs_layers(g, x)
    if profile.layer_of(y) != dia:
        raise ParameterError("x and y must be at distance exactly the diameter")
    for i in range(1, dia):
        if profile.layers[i].bit_count() < k:
            return False
        if not is_clique(g, bits(profile.layers[i] | profile.layers[i + 1])):
            return False
    return True

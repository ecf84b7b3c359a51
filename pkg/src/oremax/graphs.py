"""Simple undirected graphs as bitmask adjacency rows.

Vertices are dense integers ``0..order-1``.  Each adjacency row is an int
whose set bits are the neighbours of that vertex, so neighbourhood algebra
(unions, intersections, clique tests) is plain integer arithmetic.  Graph
values are immutable; every mutator returns a new value.

Everything is sized for desk-scale work: serialization uses the graph6
format and therefore caps the order at 62, and canonical forms are found
by exhaustive permutation minimisation, guarded to order 10.

Bit conventions used throughout (they match graph6): the upper-triangle
adjacency cells are ordered column by column,

    (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...

and the first cell in that list is the most significant bit of the
integer encoding produced by :func:`bit_code`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .errors import CapacityError, Graph6ParseError, ParameterError

#: Largest order representable in single-byte-header graph6.
MAX_ORDER = 62

#: Largest order accepted by the exhaustive canonical-form search.
CANONICAL_MAX_ORDER = 10

_GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``rows[v]`` is the neighbour bitmask of v."""

    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ParameterError("order must be non-negative")
        if len(self.rows) != self.order:
            raise ParameterError("adjacency must have one row per vertex")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ParameterError(f"row {v} has bits outside 0..{self.order - 1}")
            if row >> v & 1:
                raise ParameterError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.rows):
            m = row
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not self.rows[u] >> v & 1:
                    raise ParameterError(f"asymmetric adjacency between {u} and {v}")

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.rows) // 2

    def vertices(self) -> range:
        return range(self.order)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise IndexError(f"vertex {v} out of range for order {self.order}")


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Labelling-independent encoding: the graph6 string of the relabelling
    that minimises the upper-triangle bit string.  Equal exactly for
    isomorphic graphs."""

    g6: str


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_from(vertices: Iterable[int], order: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < order:
            raise IndexError(f"vertex {v} out of range for order {order}")
        mask |= 1 << v
    return mask


@lru_cache(maxsize=None)
def pair_list(order: int) -> tuple[tuple[int, int], ...]:
    """Upper-triangle cells in column order: (0,1), (0,2), (1,2), ..."""
    return tuple((i, j) for j in range(order) for i in range(j))


# ---------------------------------------------------------------------------
# construction


def empty_graph(order: int, *, max_order: int = MAX_ORDER) -> Graph:
    """Graph with ``order`` vertices and no edges."""
    if order < 0:
        raise ParameterError("order must be non-negative")
    if order > max_order:
        raise CapacityError(f"order {order} exceeds cap {max_order}")
    return Graph(order, (0,) * order)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """New graph with the edge uv added (idempotent)."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ParameterError(f"self-loop at vertex {u} not allowed")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.order, tuple(rows))


def from_edges(order: int, edges: Iterable[tuple[int, int]],
               *, max_order: int = MAX_ORDER) -> Graph:
    """Graph on ``order`` vertices with the given edges."""
    if order < 0:
        raise ParameterError("order must be non-negative")
    if order > max_order:
        raise CapacityError(f"order {order} exceeds cap {max_order}")
    rows = [0] * order
    for u, v in edges:
        if not 0 <= u < order or not 0 <= v < order:
            raise IndexError(f"edge ({u}, {v}) out of range for order {order}")
        if u == v:
            raise ParameterError(f"self-loop at vertex {u} not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabelled by ascending original index."""
    mask = _mask_from(vertices, g.order)
    kept = list(bits(mask))
    rows = []
    for u in kept:
        row = 0
        for new_v, old_v in enumerate(kept):
            if g.rows[u] >> old_v & 1:
                row |= 1 << new_v
        rows.append(row)
    return Graph(len(kept), tuple(rows))


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff every pair in ``vertices`` is adjacent (true for size <= 1)."""
    mask = _mask_from(vertices, g.order)
    for v in bits(mask):
        if g.rows[v] & mask != mask ^ (1 << v):
            return False
    return True


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Relabelled copy: old vertex v becomes ``perm[v]``."""
    p = tuple(perm)
    if sorted(p) != list(range(g.order)):
        raise ParameterError("perm must be a permutation of 0..order-1")
    rows = [0] * g.order
    for v in range(g.order):
        row = 0
        for u in bits(g.rows[v]):
            row |= 1 << p[u]
        rows[p[v]] = row
    return Graph(g.order, tuple(rows))


# ---------------------------------------------------------------------------
# bit encodings and canonical forms


def bit_code(g: Graph) -> int:
    """Upper-triangle adjacency as an integer; cell (0,1) is the top bit."""
    code = 0
    for j in range(1, g.order):
        for i in range(j):
            code = code << 1 | (g.rows[i] >> j & 1)
    return code


def from_bit_code(order: int, code: int) -> Graph:
    """Inverse of :func:`bit_code`."""
    n_cells = order * (order - 1) // 2
    if code < 0 or code >> n_cells:
        raise ParameterError(f"code out of range for order {order}")
    rows = [0] * order
    pos = n_cells
    for j in range(1, order):
        for i in range(j):
            pos -= 1
            if code >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(order, tuple(rows))


def _check_canonical_order(order: int) -> None:
    if order > CANONICAL_MAX_ORDER:
        raise CapacityError(
            f"order {order} exceeds canonical-form guard {CANONICAL_MAX_ORDER}")


def _encoding_blocks(g: Graph, block: int = 120_960) -> Iterator[np.ndarray]:
    """Bit codes of all relabellings of ``g``, in permutation blocks.

    Vectorised: a block of permutations is gathered against the adjacency
    matrix at every upper-triangle cell at once, then dotted with bit
    weights.  For order <= 8 there is a single block.
    """
    n = g.order
    n_cells = n * (n - 1) // 2
    adj = np.zeros((n, n), dtype=np.uint8)
    for v in range(n):
        for u in bits(g.rows[v]):
            adj[v, u] = 1
    cells = pair_list(n)
    cell_i = np.fromiter((i for i, _ in cells), dtype=np.intp, count=n_cells)
    cell_j = np.fromiter((j for _, j in cells), dtype=np.intp, count=n_cells)
    weights = np.left_shift(1, np.arange(n_cells - 1, -1, -1), dtype=np.int64)
    perms = itertools.permutations(range(n))
    while True:
        chunk = list(itertools.islice(perms, block))
        if not chunk:
            return
        p = np.array(chunk, dtype=np.intp)
        cells_hit = adj[p[:, cell_i], p[:, cell_j]]
        yield cells_hit.astype(np.int64) @ weights


def canonical_form(g: Graph) -> CanonicalForm:
    """Minimum bit code over all vertex relabellings, as a graph6 string.

    Exhaustive over the symmetric group, hence the order guard.  Two
    graphs have equal canonical forms iff they are isomorphic.
    """
    _check_canonical_order(g.order)
    if g.order <= 1:
        return CanonicalForm(to_graph6(g))
    best = None
    for codes in _encoding_blocks(g):
        m = int(codes.min())
        if best is None or m < best:
            best = m
    return CanonicalForm(to_graph6(from_bit_code(g.order, best)))


def relabeling_codes(g: Graph) -> set[int]:
    """Set of bit codes of all relabellings of ``g`` (its labelled orbit)."""
    _check_canonical_order(g.order)
    if g.order <= 1:
        return {0}
    parts = [np.unique(codes) for codes in _encoding_blocks(g)]
    return set(map(int, np.unique(np.concatenate(parts))))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff the two graphs are isomorphic (orders <= 10)."""
    _check_canonical_order(g.order)
    _check_canonical_order(h.order)
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(r.bit_count() for r in g.rows) != sorted(r.bit_count() for r in h.rows):
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# serialization


def to_graph6(g: Graph) -> str:
    """graph6 line for ``g`` (no ``>>graph6<<`` header)."""
    if g.order > MAX_ORDER:
        raise CapacityError(f"graph6 supports order <= {MAX_ORDER}")
    out = [chr(63 + g.order)]
    buf = 0
    nbits = 0
    for j in range(1, g.order):
        for i in range(j):
            buf = buf << 1 | (g.rows[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + buf))
                buf = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (buf << (6 - nbits))))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    """Parse one graph6 line; accepts and strips the ``>>graph6<<`` header."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6ParseError("non-ASCII byte", exc.start) from None
    base = 0
    if text.startswith(_GRAPH6_HEADER):
        base = len(_GRAPH6_HEADER)
        text = text[base:]
    if not text:
        raise Graph6ParseError("missing order byte", base)
    first = ord(text[0])
    if first == 126:
        raise Graph6ParseError("multi-byte order not supported (order > 62)", base)
    order = first - 63
    if not 0 <= order <= MAX_ORDER:
        raise Graph6ParseError(f"invalid order byte {text[0]!r}", base)
    n_cells = order * (order - 1) // 2
    need = (n_cells + 5) // 6
    data = text[1:]
    if len(data) < need:
        raise Graph6ParseError(
            f"truncated: expected {need} data bytes, got {len(data)}",
            base + len(text))
    if len(data) > need:
        raise Graph6ParseError("trailing bytes after adjacency data",
                               base + 1 + need)
    rows = [0] * order
    cells = pair_list(order)
    pos = 0
    for ofs, ch in enumerate(data):
        group = ord(ch) - 63
        if not 0 <= group < 64:
            raise Graph6ParseError(f"byte {ch!r} outside graph6 range",
                                   base + 1 + ofs)
        for b in range(5, -1, -1):
            bit = group >> b & 1
            if pos < n_cells:
                if bit:
                    i, j = cells[pos]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6ParseError("non-zero padding bits", base + 1 + ofs)
            pos += 1
    return Graph(order, tuple(rows))


def to_edge_list(g: Graph) -> str:
    """One ``u v`` pair per line with u < v, sorted; empty string if no edges."""
    lines = []
    for u in range(g.order):
        m = g.rows[u] >> (u + 1) << (u + 1)
        for v in bits(m):
            lines.append(f"{u} {v}")
    return "\n".join(lines)


def to_dot(g: Graph) -> str:
    """Deterministic DOT text; every vertex declared, edges sorted."""
    lines = ["graph g {"]
    for v in range(g.order):
        lines.append(f"  {v};")
    for u in range(g.order):
        m = g.rows[u] >> (u + 1) << (u + 1)
        for v in bits(m):
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)

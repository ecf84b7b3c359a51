"""Maximum-size formula and extremal constructions.

Centers on the classical extremal result for k-connected graphs of
order n and diameter d (Ore, 1968).  The densest such graphs contain a
backbone: the sequential join K1 v Kk v ... v Kk v K1 with d - 1 middle
blocks, whose two end vertices (the poles) realize the diameter.  The
remaining n - (kd - k + 2) vertices form a clique and attach to a short
window of consecutive blocks.

The closed-form maximum comes in two modes.  The attachment term is
cap * multiplier where cap is the per-vertex attachment bound:

* CORRECTED multiplies by the number of vertices outside the backbone,
  which is what a per-vertex bound supports.  This is the default and
  the mode the exhaustive oracle confirms.
* PAPER_LITERAL multiplies by the backbone order kd - k + 2, mirroring
  the statement as it is sometimes printed.  For small instances this
  overshoots, even past the complete graph.

Family generation is validate-by-computation: every syntactically valid
window/side assignment is built, then kept only if the result has the
right diameter, connectivity, and size.  Window positions that fall
short of the cap (for example windows touching a pole when k >= 2 and
d >= 4) are thereby dropped without any case analysis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import CapacityError, ParameterError
from .graphs import (CANONICAL_MAX_ORDER, MAX_ORDER, Graph, bits,
                     canonical_form, from_edges, from_graph6)
from .metrics import DISCONNECTED, diameter, is_k_connected


@dataclass(frozen=True)
class Parameters:
    """Validated problem instance (order n, connectivity k, diameter d)."""

    n: int
    k: int
    d: int

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError("k must be at least 1")
        if self.d < 2:
            raise ParameterError("d must be at least 2")
        if self.n > MAX_ORDER:
            raise ParameterError(f"n must be at most {MAX_ORDER}")
        least = backbone_order(self.k, self.d)
        if self.n < least:
            raise ParameterError(
                f"n must be at least {least} for k={self.k}, d={self.d}")

    @property
    def outside_count(self) -> int:
        """Vertices beyond the backbone."""
        return self.n - backbone_order(self.k, self.d)


class FormulaMode(enum.Enum):
    """Multiplier choice for the attachment term of the size formula."""

    CORRECTED = "corrected"
    PAPER_LITERAL = "paper-literal"


class Side(enum.Enum):
    """Which three blocks of a four-block window a vertex attaches to."""

    FIRST_THREE = "first-three"
    LAST_THREE = "last-three"


@dataclass(frozen=True)
class FamilyMemberSpec:
    """One extremal-family candidate.

    ``window_start`` indexes the backbone blocks 1-based (block 1 is the
    pole x, block d+1 is the pole y).  A window of length 3 joins every
    outside vertex to all three blocks; a window of length 4 splits the
    outside clique between its first three and last three blocks, as
    recorded per vertex in ``side_of``.
    """

    window_start: int
    window_len: int
    side_of: tuple[Side, ...] = field(default=())

    def __post_init__(self):
        if self.window_len not in (3, 4):
            raise ParameterError("window length must be 3 or 4")
        if self.window_start < 1:
            raise ParameterError("window start must be at least 1")
        if self.window_len == 3:
            if any(s is not Side.FIRST_THREE for s in self.side_of):
                raise ParameterError(
                    "3-block windows admit only FIRST_THREE assignments")
        else:
            sides = set(self.side_of)
            if len(sides) < 2:
                raise ParameterError(
                    "4-block windows need both sides non-empty")


@dataclass(frozen=True)
class BlockMap:
    """Backbone block layout inside a constructed graph.

    ``blocks[i]`` is the vertex bitmask of block i+1; blocks partition
    the backbone's vertices; ``poles`` are its two end vertices.
    """

    blocks: tuple[int, ...]
    poles: tuple[int, int]


def _check_kd(k: int, d: int) -> None:
    if k < 1:
        raise ParameterError("k must be at least 1")
    if d < 2:
        raise ParameterError("d must be at least 2")


def backbone_order(k: int, d: int) -> int:
    """Vertex count of the backbone: k*d - k + 2."""
    _check_kd(k, d)
    return k * d - k + 2


def backbone_size(k: int, d: int) -> int:
    """Edge count of the backbone: ((3d-5)k^2 + (5-d)k) / 2."""
    _check_kd(k, d)
    value = (3 * d - 5) * k * k + (5 - d) * k
    assert value % 2 == 0
    return value // 2


def attachment_cap(k: int, d: int) -> int:
    """Most backbone vertices one outside vertex may attach to.

    3k for d >= 4; (d-1)k + 4 - d for d in {2, 3}.  The two expressions
    agree at k = 1.
    """
    _check_kd(k, d)
    if d >= 4:
        return 3 * k
    return (d - 1) * k + 4 - d


def max_size_formula(p: Parameters,
                     mode: FormulaMode = FormulaMode.CORRECTED) -> int:
    """Closed-form maximum edge count for the instance, by mode."""
    outside = p.outside_count
    if mode is FormulaMode.CORRECTED:
        multiplier = outside
    else:
        multiplier = backbone_order(p.k, p.d)
    return (backbone_size(p.k, p.d) + comb(outside, 2)
            + attachment_cap(p.k, p.d) * multiplier)


def build_backbone(k: int, d: int) -> tuple[Graph, BlockMap]:
    """The sequential join K1 v Kk v ... v Kk v K1 with d - 1 middle blocks.

    Vertex layout: pole x = 0, middle blocks in order, pole y last.
    The result has diameter d and vertex connectivity k.
    """
    _check_kd(k, d)
    order = backbone_order(k, d)
    if order > MAX_ORDER:
        raise CapacityError(f"backbone order {order} exceeds cap {MAX_ORDER}")
    blocks = [1]
    start = 1
    for _ in range(d - 1):
        blocks.append(((1 << k) - 1) << start)
        start += k
    blocks.append(1 << start)
    edges = []
    for block in blocks:
        edges.extend(combinations(bits(block), 2))
    for left, right in zip(blocks, blocks[1:]):
        edges.extend((u, v) for u in bits(left) for v in bits(right))
    return from_edges(order, edges), BlockMap(tuple(blocks), (0, order - 1))


def _window_blocks(spec: FamilyMemberSpec, blocks: tuple[int, ...],
                   side: Side) -> int:
    lo = spec.window_start - 1
    if spec.window_len == 4 and side is Side.LAST_THREE:
        lo += 1
    return blocks[lo] | blocks[lo + 1] | blocks[lo + 2]


def build_family_member(p: Parameters,
                        spec: FamilyMemberSpec) -> tuple[Graph, BlockMap]:
    """Backbone plus an outside clique attached per ``spec``.

    Outside vertices occupy labels backbone_order .. n-1; each is joined
    to every vertex of its assigned three consecutive blocks and to the
    rest of the outside clique, and to nothing else.
    """
    if spec.window_start + spec.window_len - 1 > p.d + 1:
        raise ParameterError("window runs past the last block")
    if len(spec.side_of) != p.outside_count:
        raise ParameterError(
            f"need one side per outside vertex ({p.outside_count})")
    base, bmap = build_backbone(p.k, p.d)
    rows = list(base.rows) + [0] * p.outside_count
    outside = range(base.order, p.n)
    for u in outside:
        for v in outside:
            if u != v:
                rows[u] |= 1 << v
    for u, side in zip(outside, spec.side_of):
        target = _window_blocks(spec, bmap.blocks, side)
        rows[u] |= target
        for v in bits(target):
            rows[v] |= 1 << u
    return Graph(p.n, tuple(rows)), bmap


def _candidate_specs(p: Parameters):
    r = p.outside_count
    for start in range(1, p.d):
        yield FamilyMemberSpec(start, 3, (Side.FIRST_THREE,) * r)
    if r >= 2:
        for start in range(1, p.d - 1):
            for c in range(1, r):
                sides = (Side.FIRST_THREE,) * c + (Side.LAST_THREE,) * (r - c)
                yield FamilyMemberSpec(start, 4, sides)


def enumerate_family(p: Parameters) -> list[Graph]:
    """All graphs attaining the CORRECTED maximum, via window candidates.

    Builds every window/side assignment, keeps those with diameter
    exactly d, connectivity at least k, and size equal to the formula,
    and returns one canonically relabelled graph per isomorphism class,
    sorted by canonical encoding.
    """
    if p.n > CANONICAL_MAX_ORDER:
        raise CapacityError(
            f"order {p.n} exceeds canonical-form guard {CANONICAL_MAX_ORDER}")
    target = max_size_formula(p)
    seen: set[str] = set()
    for spec in _candidate_specs(p):
        g, _ = build_family_member(p, spec)
        if g.size != target:
            continue
        if diameter(g) != p.d:
            continue
        if not is_k_connected(g, p.k):
            continue
        seen.add(canonical_form(g).g6)
    return [from_graph6(text) for text in sorted(seen)]


def is_extremal(g: Graph, k: int) -> bool:
    """True iff g attains the maximum size for its own order and diameter.

    Checks connectivity level, exact size, and isomorphism with some
    family member.  Instances outside the formula's domain (complete
    graphs, disconnected graphs, order too small for the backbone)
    return False rather than raising.
    """
    if g.order > CANONICAL_MAX_ORDER:
        raise CapacityError(
            f"order {g.order} exceeds canonical-form guard "
            f"{CANONICAL_MAX_ORDER}")
    if k < 1:
        raise ParameterError("k must be at least 1")
    dia = diameter(g)
    if dia is DISCONNECTED:
        return False
    try:
        p = Parameters(g.order, k, dia)
    except ParameterError:
        return False
    if g.size != max_size_formula(p):
        return False
    if not is_k_connected(g, k):
        return False
    mine = canonical_form(g).g6
    return any(canonical_form(m).g6 == mine for m in enumerate_family(p))

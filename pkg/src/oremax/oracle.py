"""Exhaustive-search ground truth for small instances.

Independently recomputes the maximum size over all simple graphs with a
given order, exact diameter, and connectivity level, then compares the
answer against the closed-form modes and the generated family.  The
search walks complements in ascending size: maximum-size graphs are
near-complete, so removing edges from the complete graph one level at a
time reaches the answer after a handful of levels, and the first
feasible level is provably the maximum.

Everything is guarded: order 8 by default, and a candidate budget that
aborts loudly instead of truncating silently.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from itertools import combinations
from math import comb

from .errors import BudgetError, CapacityError
from .extremal import (FormulaMode, Parameters, enumerate_family,
                       max_size_formula)
from .graphs import (from_bit_code, from_graph6, pair_list, relabeling_codes,
                     to_graph6)
from .metrics import diameter, is_k_connected

DEFAULT_ORDER_GUARD = 8
DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class OracleReport:
    """Search result plus (optionally) agreement verdicts.

    ``max_size`` is None when no graph meets the constraints at all.
    ``extremal`` holds the maximizers up to isomorphism as sorted
    canonical graph6 strings.  The three match fields stay None until
    ``verify_theorem`` fills them.
    """

    params: Parameters
    max_size: int | None
    extremal: tuple[str, ...]
    corrected_match: bool | None = None
    paper_literal_match: bool | None = None
    family_match: bool | None = None
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "params": {"n": self.params.n, "k": self.params.k,
                       "d": self.params.d},
            "max_size": self.max_size,
            "extremal": list(self.extremal),
            "corrected_match": self.corrected_match,
            "paper_literal_match": self.paper_literal_match,
            "family_match": self.family_match,
            "elapsed_seconds": self.elapsed,
        }


def _cut_masks(n: int, k: int) -> list[int]:
    """Bitmasks of every vertex subset of size 1..k-1."""
    masks = []
    for size in range(1, k):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            masks.append(mask)
    return masks


def _splits(rows: list[int], remaining: int) -> bool:
    """True iff the graph induced on the ``remaining`` mask is disconnected."""
    comp = remaining & -remaining
    frontier = comp
    while frontier:
        grown = 0
        m = frontier
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            grown |= rows[w]
        frontier = grown & remaining & ~comp
        comp |= frontier
    return comp != remaining


def _far_ok(rows: list[int], far: list[tuple[int, int]], d: int) -> bool:
    """Check pairs already known to be at distance >= 3.

    True iff every far pair lies at distance <= d and at least one lies
    at distance exactly d.  Grouped by source so each source is swept by
    one depth-capped BFS.
    """
    hit_d = False
    by_src: dict[int, int] = {}
    for u, v in far:
        by_src[u] = by_src.get(u, 0) | 1 << v
    for u, targets in by_src.items():
        seen = 1 << u
        frontier = seen
        for dist in range(1, d + 1):
            grown = 0
            m = frontier
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                grown |= rows[w]
            frontier = grown & ~seen
            if not frontier:
                break
            seen |= frontier
            found = frontier & targets
            if found:
                if dist == d:
                    hit_d = True
                targets &= ~found
                if not targets:
                    break
        if targets:
            return False
    return hit_d


def _candidate_ok(rows: list[int], missing: list[tuple[int, int]], k: int,
                  d: int, full: int, cut_masks: list[int]) -> bool:
    """True iff the graph has diameter exactly d and connectivity >= k.

    ``missing`` must be exactly the non-adjacent pairs and the order must
    exceed k; then the verdict matches diameter() + is_k_connected().
    Cheap screens first: a non-adjacent pair with a common neighbour is
    at distance 2, so d = 2 needs every missing pair screened and d >= 3
    needs at least one to fail the screen.
    """
    if d == 2:
        if not missing:
            return False
        for u, v in missing:
            if not rows[u] & rows[v]:
                return False
    else:
        far = [(u, v) for u, v in missing if not rows[u] & rows[v]]
        if not far or not _far_ok(rows, far, d):
            return False
    for cut in cut_masks:
        if _splits(rows, full & ~cut):
            return False
    return True


def _scan_level(n: int, k: int, d: int, level: int,
                cut_masks: list[int]) -> list[int]:
    """Bit codes of all valid graphs whose complement has ``level`` edges."""
    m = n * (n - 1) // 2
    pairs = pair_list(n)
    base = [((1 << n) - 1) ^ (1 << v) for v in range(n)]
    full = (1 << n) - 1
    full_code = (1 << m) - 1
    codebit = [1 << (m - 1 - i) for i in range(m)]
    winners = []
    for combo in combinations(range(m), level):
        rows = base[:]
        missing = []
        for idx in combo:
            pair = pairs[idx]
            u, v = pair
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u
            missing.append(pair)
        if _candidate_ok(rows, missing, k, d, full, cut_masks):
            code = full_code
            for idx in combo:
                code ^= codebit[idx]
            winners.append(code)
    return winners


def _search(n: int, k: int, d: int,
            budget: int) -> tuple[int | None, list[int]]:
    """Ascend complement levels; first feasible level gives the maximum."""
    m = n * (n - 1) // 2
    cut_masks = _cut_masks(n, k)
    used = 0
    for level in range(m + 1):
        used += comb(m, level)
        if used > budget:
            raise BudgetError(
                f"level {level} would push the scan past {budget} candidates")
        winners = _scan_level(n, k, d, level, cut_masks)
        if winners:
            return m - level, winners
    return None, []


def _dedup_canonical(n: int, codes: list[int]) -> list[str]:
    """One canonical graph6 string per isomorphism class of ``codes``.

    The labelled winner set is closed under relabelling, so its minimum
    is the canonical code of its own class; subtracting that class's
    whole orbit and repeating costs one orbit expansion per class
    instead of one canonicalisation per labelled graph.
    """
    remaining = set(codes)
    out = []
    while remaining:
        rep = min(remaining)
        orbit = relabeling_codes(from_bit_code(n, rep))
        if not orbit <= remaining:
            raise RuntimeError("winner set not closed under relabelling")
        remaining -= orbit
        out.append(to_graph6(from_bit_code(n, rep)))
    return sorted(out)


def max_size_bruteforce(p: Parameters, *,
                        order_guard: int = DEFAULT_ORDER_GUARD,
                        budget: int = DEFAULT_BUDGET) -> OracleReport:
    """Exact maximum size and all maximizers up to isomorphism."""
    if p.n > order_guard:
        raise CapacityError(f"order {p.n} exceeds search guard {order_guard}")
    start = time.perf_counter()
    max_size, codes = _search(p.n, p.k, p.d, budget)
    extremal = tuple(_dedup_canonical(p.n, codes))
    for text in extremal:
        g = from_graph6(text)
        if (g.size != max_size or diameter(g) != p.d
                or not is_k_connected(g, p.k)):
            raise RuntimeError(f"search accepted an invalid graph {text}")
    return OracleReport(params=p, max_size=max_size, extremal=extremal,
                        elapsed=time.perf_counter() - start)


def verify_theorem(p: Parameters, *,
                   order_guard: int = DEFAULT_ORDER_GUARD,
                   budget: int = DEFAULT_BUDGET) -> OracleReport:
    """Brute-force the instance and compare every made claim against it.

    corrected_match / paper_literal_match report formula agreement;
    family_match reports that the generated family and the found
    maximizers coincide as sets of isomorphism classes.
    """
    start = time.perf_counter()
    report = max_size_bruteforce(p, order_guard=order_guard, budget=budget)
    family = {to_graph6(g) for g in enumerate_family(p)}
    return replace(
        report,
        corrected_match=report.max_size == max_size_formula(
            p, FormulaMode.CORRECTED),
        paper_literal_match=report.max_size == max_size_formula(
            p, FormulaMode.PAPER_LITERAL),
        family_match=set(report.extremal) == family,
        elapsed=time.perf_counter() - start,
    )


def sweep(n_max: int, k_max: int | None = None, d_max: int | None = None, *,
          order_guard: int = DEFAULT_ORDER_GUARD,
          budget: int = DEFAULT_BUDGET) -> list[OracleReport]:
    """verify_theorem over every valid instance within the bounds.

    Instances run in lexicographic (n, k, d) order; k_max and d_max
    default to n_max.
    """
    if n_max > order_guard:
        raise CapacityError(f"n_max {n_max} exceeds search guard {order_guard}")
    if k_max is None:
        k_max = n_max
    if d_max is None:
        d_max = n_max
    reports = []
    for n in range(3, n_max + 1):
        for k in range(1, k_max + 1):
            for d in range(2, d_max + 1):
                if n >= k * d - k + 2:
                    reports.append(verify_theorem(
                        Parameters(n, k, d),
                        order_guard=order_guard, budget=budget))
    return reports

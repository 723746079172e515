"""Packing colorings: verification and exact computation.

A packing coloring assigns each vertex a color in 1..k so that two distinct
vertices sharing color l are at distance greater than l.  The exact solver
is a deterministic branch-and-bound over the distance matrix:

* vertices are colored in descending-degree order (ties by index), colors
  tried in ascending order;
* assigning color c to v bans c at every uncolored vertex within distance c;
  a partial assignment is abandoned as soon as some uncolored vertex has no
  feasible color;
* each color class of color c has at most alpha_c vertices (the exact
  c-packing number, computed once per graph by the subset branch-and-bound
  in graphs.py), and a partial assignment is abandoned when the remaining
  class capacities cannot cover the uncolored vertices.

The capacity sum also seeds the ascending search for the exact value: the
smallest k with alpha_1 + ... + alpha_k >= n is a valid lower bound, and on
diameter-3 graphs it reduces to 2 + (n - alpha - alpha_2).

UNSAT answers are proofs of exhaustion, never timeouts: an optional node
budget aborts the search with SearchBudgetExceeded, which is a distinct
"unknown" outcome.

chi_rho_naive is an intentionally plain second path (index order, direct
conflict checks only, no bounds) kept for cross-checking the main solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (ColoringCoverageError, DisconnectedGraphError,
                     GraphTooLargeError, SearchBudgetExceeded)
from .graphs import DEFAULT_EXACT_SEARCH_BOUND, Graph, distances, max_packing

DEFAULT_SOLVER_BOUND = DEFAULT_EXACT_SEARCH_BOUND


@dataclass(frozen=True)
class PackingColoring:
    """A total assignment vertex -> color in 1..k, with k = max color used.

    Validity is a separate, checked property (verify_packing_coloring); the
    type itself only guarantees coverage and positivity.
    """

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if not self.colors:
            raise ValueError("coloring covers no vertices")
        if min(self.colors) < 1:
            raise ValueError("colors must be positive")
        if self.k != max(self.colors):
            raise ValueError("k must equal the maximum color present")

    @staticmethod
    def from_colors(colors) -> "PackingColoring":
        colors = tuple(colors)
        return PackingColoring(colors, max(colors))


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    violation: Optional[tuple[int, int, int]] = None  # (u, v, color)

    def __bool__(self) -> bool:
        return self.ok


def verify_packing_coloring(g: Graph, c: PackingColoring) -> VerifyResult:
    """Check the distance contract; on failure report the first violating
    (u, v, color) triple, scanning colors ascending and pairs in lex order."""
    if len(c.colors) != g.order:
        raise ColoringCoverageError(
            f"coloring covers {len(c.colors)} vertices, graph has {g.order}")
    dm = distances(g)
    by_color: dict[int, list[int]] = {}
    for v, col in enumerate(c.colors):
        by_color.setdefault(col, []).append(v)
    for col in sorted(by_color):
        members = by_color[col]
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if dm(u, v) <= col:
                    return VerifyResult(False, (u, v, col))
    return VerifyResult(True)


# ---------------------------------------------------------------------------
# class capacities

_capacity_cache: dict[tuple[Graph, int], int] = {}


def packing_capacity(g: Graph, c: int,
                     max_order: int = DEFAULT_SOLVER_BOUND) -> int:
    """Exact c-packing number alpha_c, cached per (graph, c)."""
    key = (g, c)
    if key not in _capacity_cache:
        _capacity_cache[key] = max_packing(g, c, max_order)
    return _capacity_cache[key]


def chi_rho_lower_bound(g: Graph,
                        max_order: int = DEFAULT_SOLVER_BOUND) -> int:
    """A valid lower bound for the packing chromatic number.

    Two bounds are combined: the smallest k with alpha_1 + ... + alpha_k
    >= n (each alpha_c caps one color class; on diameter-3 graphs this is
    2 + n - alpha - alpha_2), and the size of a greedily grown clique
    (clique vertices are pairwise adjacent, so no two share any color)."""
    n = g.order
    total = 0
    k = 0
    while total < n:
        k += 1
        total += packing_capacity(g, k, max_order)
    return max(k, _greedy_clique(g))


def _greedy_clique(g: Graph) -> int:
    best = 1
    for seed in sorted(range(g.order), key=g.degree, reverse=True)[:4]:
        clique = [seed]
        for v in sorted(g.adj[seed], key=g.degree, reverse=True):
            if all(g.has_edge(v, u) for u in clique):
                clique.append(v)
        best = max(best, len(clique))
    return best


# ---------------------------------------------------------------------------
# decision search

def chi_rho_decision(g: Graph, k: int, *,
                     node_budget: Optional[int] = None,
                     max_order: int = DEFAULT_SOLVER_BOUND
                     ) -> Optional[PackingColoring]:
    """A valid coloring of g with colors in 1..k, or None after exhausting
    the search space (a trustworthy UNSAT).

    Raises SearchBudgetExceeded when node_budget runs out first; that
    outcome is unknown, not UNSAT.
    """
    n = g.order
    if n > max_order:
        raise GraphTooLargeError(f"order {n} exceeds solver bound {max_order}")
    dm = distances(g)
    if not dm.is_connected:
        raise DisconnectedGraphError("chi_rho_decision requires a connected graph")
    if k < 1:
        return None

    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    # near[c][v]: vertices within distance c of v (excluding v)
    near = [None] * (k + 1)
    for c in range(1, k + 1):
        near[c] = [0] * n
        for u in range(n):
            m = 0
            for v in range(n):
                if v != u and dm(u, v) <= c:
                    m |= 1 << v
            near[c][u] = m

    caps = [0] * (k + 1)
    for c in range(1, k + 1):
        caps[c] = min(packing_capacity(g, c, max_order), n)

    full = (1 << (k + 1)) - 2  # bits 1..k
    banned = [0] * n
    class_banned = [0] * (k + 1)
    colors = [0] * n
    used = [0] * (k + 1)
    if sum(caps[1:]) < n:
        return None
    # colors whose class can only ever hold one vertex are interchangeable
    # while unused, so only the smallest unused one is ever tried
    singleton = 0
    for c in range(1, k + 1):
        if caps[c] == 1:
            singleton |= 1 << c
    unused_singletons = singleton
    uncolored = (1 << n) - 1
    nodes = 0

    def dfs(pos: int) -> bool:
        nonlocal uncolored, unused_singletons, nodes
        if pos == n:
            return True
        v = order[pos]
        uncolored ^= 1 << v
        need = n - pos - 1
        avail = ~banned[v] & full
        while avail:
            bit = avail & -avail
            avail ^= bit
            c = bit.bit_length() - 1
            if used[c] >= caps[c]:
                continue
            if bit & unused_singletons and \
                    bit != unused_singletons & -unused_singletons:
                continue
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise SearchBudgetExceeded(nodes)
            colors[v] = c
            used[c] += 1
            unused_singletons &= ~bit
            touched = []
            dead = False
            hit = near[c][v] & uncolored
            while hit:
                b = hit & -hit
                hit ^= b
                u = b.bit_length() - 1
                if not banned[u] & bit:
                    banned[u] |= bit
                    class_banned[c] |= b
                    touched.append(u)
                    if banned[u] == full:
                        dead = True
                        break
            if not dead and need:
                # remaining class capacities must still cover the uncolored
                # vertices, counting only vertices a class can still take
                room = 0
                for cc in range(1, k + 1):
                    rc = caps[cc] - used[cc]
                    if rc > 0:
                        cnt = (uncolored & ~class_banned[cc]).bit_count()
                        room += rc if rc < cnt else cnt
                        if room >= need:
                            break
                if room < need:
                    dead = True
            if not dead and dfs(pos + 1):
                return True
            clear = 0
            for u in touched:
                banned[u] ^= bit
                clear |= 1 << u
            class_banned[c] &= ~clear
            used[c] -= 1
            if bit & singleton and used[c] == 0:
                unused_singletons |= bit
            colors[v] = 0
        uncolored ^= 1 << v
        return False

    if dfs(0):
        return PackingColoring.from_colors(colors)
    return None


def chi_rho_exact(g: Graph, *,
                  node_budget: Optional[int] = None,
                  max_order: int = DEFAULT_SOLVER_BOUND
                  ) -> tuple[int, PackingColoring]:
    """The packing chromatic number with a verifying witness, by ascending
    decision calls starting from the capacity lower bound."""
    if g.order == 1:
        return 1, PackingColoring.from_colors([1])
    k = chi_rho_lower_bound(g, max_order)
    while True:
        witness = chi_rho_decision(g, k, node_budget=node_budget,
                                   max_order=max_order)
        if witness is not None:
            return k, witness
        k += 1


def greedy_upper_bound(g: Graph) -> int:
    """k of a valid coloring found by one degree-descending greedy pass."""
    dm = distances(g)
    n = g.order
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    colors = [0] * n
    for v in order:
        c = 1
        while any(colors[u] == c and dm(u, v) <= c for u in range(n) if u != v):
            c += 1
        colors[v] = c
    return max(colors)


# ---------------------------------------------------------------------------
# the plain second path

def chi_rho_naive(g: Graph, max_k: Optional[int] = None) -> tuple[int, PackingColoring]:
    """Exhaustive reference solver: vertices in index order, colors tried
    ascending, pruning only on a direct conflict with an assigned vertex.
    Kept deliberately free of the main solver's ordering and bounds."""
    n = g.order
    dm = distances(g)
    if not dm.is_connected:
        raise DisconnectedGraphError("chi_rho_naive requires a connected graph")
    limit = n if max_k is None else max_k
    colors = [0] * n

    def extend(v: int, k: int) -> bool:
        if v == n:
            return True
        for c in range(1, k + 1):
            if all(colors[u] != c or dm(u, v) > c for u in range(v)):
                colors[v] = c
                if extend(v + 1, k):
                    return True
                colors[v] = 0
        return False

    for k in range(1, limit + 1):
        if extend(0, k):
            return k, PackingColoring.from_colors(colors)
    raise ValueError(f"no packing coloring with at most {limit} colors")

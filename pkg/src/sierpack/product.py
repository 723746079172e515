"""The Sierpinski product of two graphs and exact optimization over all
connecting functions.

G (x)_f H has vertex set V(G) x V(H).  Each base vertex g carries a copy of
H (Type-1 edges), and each base edge gg' contributes the single connecting
edge (g, f(g'))-(g', f(g)) (Type-2).  Vertex (g, h) gets index g*n(H) + h.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .coloring import PackingColoring, chi_rho_exact
from .errors import (EnumerationBudgetExceeded, FactorMismatchError,
                     InputFormatError, SearchBudgetExceeded)
from .graphs import DEFAULT_EXACT_SEARCH_BOUND, Graph

DEFAULT_ENUM_BOUND = 2_000_000


class EdgeKind(enum.Enum):
    TYPE1 = 1  # inside a fiber
    TYPE2 = 2  # connecting edge


@dataclass(frozen=True)
class VertexMap:
    """A function from base vertices to fiber vertices, stored as a tuple."""

    base_order: int
    fiber_order: int
    image: tuple[int, ...]

    def __post_init__(self):
        if self.base_order < 1 or self.fiber_order < 1:
            raise ValueError("orders must be positive")
        if len(self.image) != self.base_order:
            raise ValueError("image length must equal base_order")
        for h in self.image:
            if not 0 <= h < self.fiber_order:
                raise ValueError(f"image value {h} outside fiber range")

    def __call__(self, g: int) -> int:
        return self.image[g]

    @staticmethod
    def constant(base_order: int, fiber_order: int, value: int) -> "VertexMap":
        return VertexMap(base_order, fiber_order, (value,) * base_order)

    # text format: "n_base n_fiber: i0 i1 ... i_{nbase-1}"

    @staticmethod
    def parse(text: str) -> "VertexMap":
        try:
            head, _, body = text.partition(":")
            nb, nf = (int(t) for t in head.split())
            image = tuple(int(t) for t in body.split())
            return VertexMap(nb, nf, image)
        except (ValueError, TypeError) as exc:
            raise InputFormatError(f"bad vertex map {text!r}: {exc}") from None

    def to_text(self) -> str:
        return f"{self.base_order} {self.fiber_order}: " + \
            " ".join(str(h) for h in self.image)


@dataclass(frozen=True)
class ProductGraph:
    """A Sierpinski product together with its factor structure and per-edge
    Type-1/Type-2 tags."""

    graph: Graph
    base: Graph
    fiber: Graph
    vmap: VertexMap
    connecting: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    # each entry: ((u, v) product edge with u < v, (g, g') originating base edge)

    def vertex_of(self, g: int, h: int) -> int:
        return g * self.fiber.order + h

    def base_of(self, v: int) -> int:
        return v // self.fiber.order

    def fiber_of(self, v: int) -> int:
        return v % self.fiber.order

    def edge_kind(self, u: int, v: int) -> EdgeKind:
        if not self.graph.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge of the product")
        e = (u, v) if u < v else (v, u)
        return EdgeKind.TYPE2 if e in self._connecting_set else EdgeKind.TYPE1

    @property
    def _connecting_set(self):
        return frozenset(e for e, _ in self.connecting)


def sierpinski_product(g: Graph, h: Graph, f: VertexMap) -> ProductGraph:
    """Build G (x)_f H with deterministic vertex indexing g*n(H) + h."""
    if f.base_order != g.order or f.fiber_order != h.order:
        raise FactorMismatchError(
            f"map is {f.base_order}->{f.fiber_order}, factors are "
            f"{g.order} and {h.order}")
    nh = h.order
    edges = []
    for gv in range(g.order):
        off = gv * nh
        for (a, b) in h.edges():
            edges.append((off + a, off + b))
    connecting = []
    for (g1, g2) in g.edges():
        u = g1 * nh + f(g2)
        v = g2 * nh + f(g1)
        e = (u, v) if u < v else (v, u)
        edges.append(e)
        connecting.append((e, (g1, g2)))
    labels = tuple(f"({gv},{hv})" for gv in range(g.order) for hv in range(nh))
    graph = Graph.from_edges(g.order * nh, edges, labels)
    assert graph.size == g.order * h.size + g.size
    return ProductGraph(graph, g, h, f, tuple(connecting))


def connecting_edges(p: ProductGraph) -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
    """The Type-2 edges, each with its originating base edge."""
    return p.connecting


# ---------------------------------------------------------------------------
# automorphisms and map enumeration

def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms of g as permutation tuples.

    Complete graphs, paths and stars are special-cased; other graphs use a
    degree-pruned backtracking search, intended for small factors.
    """
    n = g.order
    m = g.size
    degs = sorted(g.degree(v) for v in range(n))
    if m == n * (n - 1) // 2:  # complete
        return [tuple(p) for p in itertools.permutations(range(n))]
    if n >= 2 and degs == sorted([1, 1] + [2] * (n - 2)) and _is_path_order(g):
        ident = tuple(range(n))
        return [ident, tuple(range(n - 1, -1, -1))]
    if n >= 3 and g.degree(0) == n - 1 and degs == [1] * (n - 1) + [n - 1]:
        # star with center 0
        return [(0,) + p for p in itertools.permutations(range(1, n))]
    return _automorphisms_backtrack(g)


def _is_path_order(g: Graph) -> bool:
    """True when g is the path 0-1-...-(n-1) in index order."""
    return all(g.has_edge(i, i + 1) for i in range(g.order - 1)) \
        and g.size == g.order - 1


def _automorphisms_backtrack(g: Graph) -> list[tuple[int, ...]]:
    n = g.order
    deg = [g.degree(v) for v in range(n)]
    out: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def extend(v: int):
        if v == n:
            out.append(tuple(image))
            return
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != g.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
                image[v] = -1

    extend(0)
    return out


def enumerate_maps(g: Graph, h: Graph, reduce_symmetry: bool = False,
                   enum_bound: int = DEFAULT_ENUM_BOUND) -> Iterator[VertexMap]:
    """All maps V(G) -> V(H) in lexicographic order of their image tuples.

    With reduce_symmetry, one lexicographically minimal representative per
    orbit of the action f -> sigma o f o pi (sigma an automorphism of H, pi
    of G) is yielded; products of omitted maps are isomorphic to the
    representative's, via (g, h) -> (pi(g), sigma(h)).
    """
    total = h.order ** g.order
    if total > enum_bound:
        raise EnumerationBudgetExceeded(
            f"{h.order}^{g.order} = {total} maps exceeds bound {enum_bound}")
    if not reduce_symmetry:
        for image in itertools.product(range(h.order), repeat=g.order):
            yield VertexMap(g.order, h.order, image)
        return
    auts_g = automorphisms(g)
    auts_h = automorphisms(h)
    for image in itertools.product(range(h.order), repeat=g.order):
        minimal = True
        for pi in auts_g:
            for sigma in auts_h:
                cand = tuple(sigma[image[pi[v]]] for v in range(g.order))
                if cand < image:
                    minimal = False
                    break
            if not minimal:
                break
        if minimal:
            yield VertexMap(g.order, h.order, image)


# ---------------------------------------------------------------------------
# optimizing chi_rho over all connecting functions

@dataclass(frozen=True)
class SierpinskiChiResult:
    mode: str                      # "min" or "max"
    value: Optional[int]
    witness_map: Optional[VertexMap]
    witness_coloring: Optional[PackingColoring]
    explored: int
    complete: bool


def _complete_pair_floor(g: Graph, h: Graph) -> Optional[int]:
    """The mn-2m+2 lower bound valid for every f when both factors are
    complete with order >= 3; None when it does not apply."""
    m, n = g.order, h.order
    if m >= 3 and n >= 3 and g.size == m * (m - 1) // 2 \
            and h.size == n * (n - 1) // 2:
        return m * n - 2 * m + 2
    return None


def sierpinski_chi(g: Graph, h: Graph, mode: str, *,
                   reduce_symmetry: bool = False,
                   enum_bound: int = DEFAULT_ENUM_BOUND,
                   node_budget: Optional[int] = None,
                   max_order: int = DEFAULT_EXACT_SEARCH_BOUND
                   ) -> SierpinskiChiResult:
    """Exact min (or max) of chi_rho(G (x)_f H) over all f, with a witness
    map and an optimal coloring for it.

    Budget exhaustion (enumeration bound or solver node budget) yields a
    partial result with complete=False and the explored count.
    """
    if mode not in ("min", "max"):
        raise ValueError("mode must be 'min' or 'max'")
    best: Optional[int] = None
    best_map: Optional[VertexMap] = None
    best_col: Optional[PackingColoring] = None
    explored = 0
    floor = _complete_pair_floor(g, h) if mode == "min" else None
    complete_run = True
    try:
        for f in enumerate_maps(g, h, reduce_symmetry, enum_bound):
            prod = sierpinski_product(g, h, f)
            value, coloring = chi_rho_exact(prod.graph,
                                            node_budget=node_budget,
                                            max_order=max_order)
            explored += 1
            better = best is None or \
                (value < best if mode == "min" else value > best)
            if better:
                best, best_map, best_col = value, f, coloring
            if mode == "min" and floor is not None and best == floor:
                # no f can go below the floor, so the minimum is settled
                break
    except (SearchBudgetExceeded, EnumerationBudgetExceeded):
        complete_run = False
    return SierpinskiChiResult(mode, best, best_map, best_col,
                               explored, complete_run)

"""Undirected simple graphs on vertices 0..n-1, with the distance, packing
and tree machinery the rest of the package is built on.

Graphs are immutable after construction and all operations here are pure
functions of their inputs, so everything is safe to use from concurrent
workers on independent inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import GraphTooLargeError, NotATreeError

INF = math.inf

# Exact subset searches (independence number, i-packing numbers) reject
# graphs above this order unless the caller raises the bound explicitly.
DEFAULT_EXACT_SEARCH_BOUND = 40


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    Vertices are the integers 0..order-1.  ``adj[v]`` is the sorted tuple of
    neighbors of ``v``.  ``labels`` is an optional per-vertex text label and
    plays no role in any algorithm.
    """

    order: int
    adj: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("graph must have at least one vertex")
        if len(self.adj) != self.order:
            raise ValueError("adjacency length does not match order")
        if self.labels is not None and len(self.labels) != self.order:
            raise ValueError("label count does not match order")
        for v, nbrs in enumerate(self.adj):
            if tuple(sorted(set(nbrs))) != nbrs:
                raise ValueError(f"adjacency of {v} is not a sorted set")
            for u in nbrs:
                if not 0 <= u < self.order:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @staticmethod
    def from_edges(order: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[Iterable[str]] = None) -> "Graph":
        """Build a graph from an edge list; rejects loops and duplicates."""
        nbrs: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u},{v}) out of range for order {order}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(order,
                     tuple(tuple(sorted(s)) for s in nbrs),
                     None if labels is None else tuple(labels))

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.order):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def relabel(self, perm: dict[int, int] | list[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        labels = None
        if self.labels is not None:
            new = [""] * self.order
            for v in range(self.order):
                new[perm[v]] = self.labels[v]
            labels = new
        return Graph.from_edges(self.order, edges, labels)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on the given vertices, relabeled 0..k-1 in the
        order given."""
        verts = list(vertices)
        index = {v: i for i, v in enumerate(verts)}
        edges = [(index[u], index[v])
                 for u in verts for v in self.adj[u]
                 if v in index and index[u] < index[v]]
        labels = None if self.labels is None else [self.labels[v] for v in verts]
        return Graph.from_edges(len(verts), edges, labels)


# ---------------------------------------------------------------------------
# family generators (vertex conventions are fixed here: path vertices in path
# order, star vertex 0 is the center)

def path(n: int) -> Graph:
    """Path P_n with vertices 0..n-1 in path order."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Star K_{1,n} on n+1 vertices; vertex 0 is the center."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise ValueError("complete needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def corona(g: Graph, p: int) -> Graph:
    """Attach p new pendant vertices to every vertex of g.

    The original vertices keep their indices 0..n-1; the pendants of vertex
    v are n + v*p .. n + v*p + p - 1.
    """
    if p < 1:
        raise ValueError("corona needs p >= 1 pendants per vertex")
    n = g.order
    edges = list(g.edges())
    for v in range(n):
        for j in range(p):
            edges.append((v, n + v * p + j))
    return Graph.from_edges(n * (1 + p), edges)


# ---------------------------------------------------------------------------
# distances

@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; disconnected pairs hold math.inf."""

    order: int
    dist: tuple[tuple[float, ...], ...]

    def __call__(self, u: int, v: int) -> float:
        return self.dist[u][v]

    @property
    def is_connected(self) -> bool:
        return all(d != INF for d in self.dist[0])

    @property
    def diameter(self) -> float:
        """Largest finite entry; math.inf when the graph is disconnected."""
        if not self.is_connected:
            return INF
        return max(max(row) for row in self.dist)


def _bfs_row(adj: tuple[tuple[int, ...], ...], source: int, n: int) -> tuple[float, ...]:
    dist: list[float] = [INF] * n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if dist[w] == INF:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return tuple(dist)


@lru_cache(maxsize=512)
def distances(g: Graph) -> DistanceMatrix:
    """BFS-exact all-pairs distances (cached per graph)."""
    return DistanceMatrix(g.order,
                          tuple(_bfs_row(g.adj, s, g.order) for s in range(g.order)))


def diameter(g: Graph) -> float:
    """Max finite distance; math.inf when g is disconnected."""
    return distances(g).diameter


def is_connected(g: Graph) -> bool:
    return distances(g).is_connected


# ---------------------------------------------------------------------------
# exact packing numbers: one subset branch-and-bound, thresholded by distance

def max_packing(g: Graph, i: int,
                max_order: int = DEFAULT_EXACT_SEARCH_BOUND) -> int:
    """Exact size of a largest i-packing: a set of vertices with pairwise
    distance greater than i.  i=1 is the independence number, i=2 the
    2-packing number.
    """
    n = g.order
    if n > max_order:
        raise GraphTooLargeError(
            f"order {n} exceeds exact-search bound {max_order}")
    dm = distances(g)
    conflict = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and dm(u, v) <= i:
                conflict[u] |= 1 << v

    best = 0

    def grow(cand: int, size: int):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            bit = cand & -cand
            v = bit.bit_length() - 1
            cand ^= bit
            grow(cand & ~conflict[v], size + 1)

    grow((1 << n) - 1, 0)
    return best


def independence_number(g: Graph,
                        max_order: int = DEFAULT_EXACT_SEARCH_BOUND) -> int:
    """Exact independence number (largest set with pairwise distance >= 2)."""
    return max_packing(g, 1, max_order)


def two_packing_number(g: Graph,
                       max_order: int = DEFAULT_EXACT_SEARCH_BOUND) -> int:
    """Exact 2-packing number (largest set with pairwise distance >= 3)."""
    return max_packing(g, 2, max_order)


# ---------------------------------------------------------------------------
# trees

def is_tree(g: Graph) -> bool:
    """True iff g is connected with exactly order-1 edges."""
    return g.size == g.order - 1 and is_connected(g)


def tree_centers(g: Graph) -> list[int]:
    """The one or two center vertices of a tree (peel leaves until <= 2)."""
    if not is_tree(g):
        raise NotATreeError("centers are defined here for trees only")
    n = g.order
    if n <= 2:
        return list(range(n))
    deg = [g.degree(v) for v in range(n)]
    removed = [False] * n
    leaves = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for v in leaves:
            removed[v] = True
            for u in g.adj[v]:
                if not removed[u]:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        leaves = nxt
    return sorted(v for v in range(n) if not removed[v])


def _rooted_canon(g: Graph, root: int, parent: int) -> str:
    children = sorted(_rooted_canon(g, c, root)
                      for c in g.adj[root] if c != parent)
    return "(" + "".join(children) + ")"


def tree_canonical_form(g: Graph) -> str:
    """Canonical encoding of a free tree: rooted encoding at the center,
    taking the lexicographic minimum when there are two centers."""
    return min(_rooted_canon(g, c, -1) for c in tree_centers(g))


def tree_isomorphic(t1: Graph, t2: Graph) -> bool:
    """True iff two trees are isomorphic (canonical encodings at centers)."""
    for t in (t1, t2):
        if not is_tree(t):
            raise NotATreeError("tree_isomorphic requires tree inputs")
    if t1.order != t2.order or sorted(
            t1.degree(v) for v in range(t1.order)) != sorted(
            t2.degree(v) for v in range(t2.order)):
        return False
    return tree_canonical_form(t1) == tree_canonical_form(t2)


def rooted_tree_iso_map(t1: Graph, r1: int, t2: Graph, r2: int) -> Optional[dict[int, int]]:
    """An isomorphism of rooted trees (t1, r1) -> (t2, r2) as a vertex map,
    or None if none exists.  Children with equal canonical forms are paired
    greedily, which is valid because equal forms are interchangeable."""

    def canon(g, v, parent):
        return _rooted_canon(g, v, parent)

    mapping: dict[int, int] = {}

    def pair(v1, p1, v2, p2) -> bool:
        c1 = sorted((canon(t1, c, v1), c) for c in t1.adj[v1] if c != p1)
        c2 = sorted((canon(t2, c, v2), c) for c in t2.adj[v2] if c != p2)
        if [s for s, _ in c1] != [s for s, _ in c2]:
            return False
        mapping[v1] = v2
        for (_, a), (_, b) in zip(c1, c2):
            if not pair(a, v1, b, v2):
                return False
        return True

    if canon(t1, r1, -1) != canon(t2, r2, -1):
        return None
    if not pair(r1, -1, r2, -1):
        return None
    return mapping


def tree_iso_map(t1: Graph, t2: Graph) -> Optional[dict[int, int]]:
    """An isomorphism between free trees as a vertex map, or None."""
    for t in (t1, t2):
        if not is_tree(t):
            raise NotATreeError("tree_iso_map requires tree inputs")
    if t1.order != t2.order:
        return None
    c1 = tree_centers(t1)
    c2 = tree_centers(t2)
    if len(c1) != len(c2):
        return None
    for r2 in c2:
        m = rooted_tree_iso_map(t1, c1[0], t2, r2)
        if m is not None:
            return m
    return None


def random_tree(n: int, rng) -> Graph:
    """A uniformly random labeled tree on n vertices (Pruefer decoding)."""
    import heapq
    if n < 1:
        raise ValueError("random_tree needs n >= 1")
    if n <= 2:
        return path(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        deg[v] -= 1
        if deg[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def free_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on n vertices,
    generated by leaf extension with canonical-form deduplication."""
    if n < 1:
        raise ValueError("free_trees needs n >= 1")
    if n == 1:
        return [path(1)]
    out: dict[str, Graph] = {}
    for t in free_trees(n - 1):
        for v in range(t.order):
            g = Graph.from_edges(n, list(t.edges()) + [(v, n - 1)])
            out.setdefault(tree_canonical_form(g), g)
    return list(out.values())

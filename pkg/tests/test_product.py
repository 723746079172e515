import random
from itertools import product as iproduct

import pytest

from sierpack.coloring import chi_rho_exact
from sierpack.errors import (EnumerationBudgetExceeded, FactorMismatchError,
                             InputFormatError)
from sierpack.graphs import (Graph, complete, diameter, path, random_tree,
                             star, tree_isomorphic)
from sierpack.product import (EdgeKind, VertexMap, automorphisms,
                              connecting_edges, enumerate_maps,
                              sierpinski_chi, sierpinski_product)

FIG1_MAP = VertexMap.parse("5 4: 1 3 3 0 2")


def test_vertex_map_text_roundtrip():
    assert FIG1_MAP.image == (1, 3, 3, 0, 2)
    assert VertexMap.parse(FIG1_MAP.to_text()) == FIG1_MAP
    with pytest.raises(InputFormatError):
        VertexMap.parse("2 2: 0")
    with pytest.raises(InputFormatError):
        VertexMap.parse("junk")
    with pytest.raises(InputFormatError):
        VertexMap.parse("2 2: 0 5")


def test_figure_instance_counts():
    prod = sierpinski_product(complete(5), complete(4), FIG1_MAP)
    assert prod.graph.order == 20
    assert prod.graph.size == 40
    assert len(connecting_edges(prod)) == 10
    assert diameter(prod.graph) == 3


def test_dimension_mismatch():
    with pytest.raises(FactorMismatchError):
        sierpinski_product(complete(3), complete(4), VertexMap(2, 4, (0, 1)))


def test_k2_by_k2_is_p4():
    for img in iproduct(range(2), repeat=2):
        prod = sierpinski_product(complete(2), complete(2),
                                  VertexMap(2, 2, img))
        assert tree_isomorphic(prod.graph, path(4))


def test_direct_rule_construction_agrees():
    # rebuild P3 (x) P3 under the constant map straight from the two edge
    # rules and compare adjacency
    f = VertexMap.constant(3, 3, 0)
    prod = sierpinski_product(path(3), path(3), f)
    n = 3
    edges = set()
    for g in range(3):
        for (a, b) in path(3).edges():
            edges.add((g * n + a, g * n + b))
    for (g1, g2) in path(3).edges():
        u, v = g1 * n + f(g2), g2 * n + f(g1)
        edges.add((min(u, v), max(u, v)))
    assert set(prod.graph.edges()) == edges
    assert prod.graph.size == 8 and prod.graph.order == 9


def test_connecting_edge_counts():
    for n in (2, 3, 5):
        prod = sierpinski_product(complete(2), complete(n),
                                  VertexMap.constant(2, n, 0))
        assert len(connecting_edges(prod)) == 1
    prod = sierpinski_product(path(4), path(3), VertexMap.constant(4, 3, 1))
    assert len(connecting_edges(prod)) == 3
    for edge, base_edge in connecting_edges(prod):
        assert prod.edge_kind(*edge) is EdgeKind.TYPE2
        assert base_edge in set(path(4).edges())


def test_fibers_are_copies_of_the_fiber_graph():
    rng = random.Random(21)
    for _ in range(15):
        g = random_tree(rng.randint(2, 5), rng)
        h = random_tree(rng.randint(1, 5), rng)
        f = VertexMap(g.order, h.order,
                      tuple(rng.randrange(h.order) for _ in range(g.order)))
        prod = sierpinski_product(g, h, f)
        assert prod.graph.order == g.order * h.order
        assert prod.graph.size == g.order * h.size + g.size
        type2 = {e for e, _ in prod.connecting}
        for gv in range(g.order):
            seen = set()
            for u, v in prod.graph.edges():
                if (u, v) in type2:
                    continue
                if prod.base_of(u) == gv:
                    assert prod.base_of(v) == gv
                    seen.add((prod.fiber_of(u), prod.fiber_of(v)))
            assert seen == set(h.edges())
        for gv in range(g.order):
            incident = sum(1 for e, _ in prod.connecting
                           if prod.base_of(e[0]) == gv or prod.base_of(e[1]) == gv)
            assert incident <= g.degree(gv) and incident == g.degree(gv)


def _iso_under_bijection(g1, g2, bij):
    return all(g2.has_edge(bij[u], bij[v]) for u, v in g1.edges()) \
        and g1.size == g2.size


def test_factor_automorphisms_give_isomorphic_products():
    rng = random.Random(22)
    for g, h in [(complete(3), path(3)), (path(4), star(3)),
                 (star(3), complete(3))]:
        f = VertexMap(g.order, h.order,
                      tuple(rng.randrange(h.order) for _ in range(g.order)))
        prod = sierpinski_product(g, h, f)
        for sigma in automorphisms(h):
            f2 = VertexMap(g.order, h.order,
                           tuple(sigma[f(v)] for v in range(g.order)))
            prod2 = sierpinski_product(g, h, f2)
            bij = {prod.vertex_of(gv, hv): prod2.vertex_of(gv, sigma[hv])
                   for gv in range(g.order) for hv in range(h.order)}
            assert _iso_under_bijection(prod.graph, prod2.graph, bij)
        for pi in automorphisms(g):
            inv = [0] * g.order
            for v in range(g.order):
                inv[pi[v]] = v
            f2 = VertexMap(g.order, h.order,
                           tuple(f(inv[v]) for v in range(g.order)))
            prod2 = sierpinski_product(g, h, f2)
            bij = {prod.vertex_of(gv, hv): prod2.vertex_of(pi[gv], hv)
                   for gv in range(g.order) for hv in range(h.order)}
            assert _iso_under_bijection(prod.graph, prod2.graph, bij)


def test_automorphism_groups():
    assert len(automorphisms(complete(4))) == 24
    assert len(automorphisms(path(4))) == 2
    assert len(automorphisms(star(3))) == 6
    bull = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)])
    assert len(automorphisms(bull)) == 2


def test_enumerate_counts_and_order():
    maps = list(enumerate_maps(complete(2), complete(2)))
    assert len(maps) == 4
    assert [m.image for m in maps] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert sum(1 for _ in enumerate_maps(complete(3), complete(3))) == 27
    with pytest.raises(EnumerationBudgetExceeded):
        list(enumerate_maps(complete(10), complete(10), enum_bound=1000))


def test_reduction_hits_every_isomorphism_class():
    # all 27 maps fall into three product-isomorphism classes (sizes
    # 3/18/6, every value 5); the reduced enumeration emits exactly one
    # representative for each
    reps = list(enumerate_maps(complete(3), complete(3), reduce_symmetry=True))
    assert [r.image for r in reps] == [(0, 0, 0), (0, 0, 1), (0, 1, 2)]
    rep_values = sorted(
        chi_rho_exact(sierpinski_product(complete(3), complete(3), f).graph)[0]
        for f in reps)
    all_values = sorted(
        chi_rho_exact(sierpinski_product(complete(3), complete(3), f).graph)[0]
        for f in enumerate_maps(complete(3), complete(3)))
    assert rep_values == [5, 5, 5]
    assert set(all_values) == set(rep_values)


def test_reduction_preserves_min_and_max():
    for g, h in [(complete(3), complete(3)), (path(3), path(3)),
                 (star(3), complete(3))]:
        for mode in ("min", "max"):
            full = sierpinski_chi(g, h, mode)
            red = sierpinski_chi(g, h, mode, reduce_symmetry=True)
            assert full.value == red.value
            assert red.explored <= full.explored


def test_sierpinski_chi_examples():
    assert sierpinski_chi(complete(3), complete(3), "min").value == 5
    assert sierpinski_chi(complete(3), complete(4), "max").value == 8
    assert sierpinski_chi(complete(4), complete(3), "max").value == 7


def test_sierpinski_chi_partial_on_budget():
    result = sierpinski_chi(complete(3), complete(3), "max", node_budget=3)
    assert not result.complete
    assert result.explored == 0

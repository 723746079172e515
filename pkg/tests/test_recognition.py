import random

from sierpack.graphs import (Graph, free_trees, path, random_tree, star,
                             tree_canonical_form, tree_isomorphic)
from sierpack.product import VertexMap, sierpinski_product
from sierpack.recognition import (pendant_split_edges, recognize_tree_product,
                                  reconstruct_map)


def test_pendant_split_examples():
    assert pendant_split_edges(path(6), 3) == [(2, 3)]
    prod = sierpinski_product(path(2), path(3), VertexMap.constant(2, 3, 0))
    edges = pendant_split_edges(prod.graph, 3)
    assert edges == [e for e, _ in prod.connecting]
    assert pendant_split_edges(star(5), 2) == []


def test_pendant_split_on_non_tree():
    # two triangles joined by one bridge
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                             (0, 3)])
    assert pendant_split_edges(g, 3) == [(0, 3)]


def test_recognize_p4():
    out = recognize_tree_product(path(4))
    assert out.status == "factored"
    fact = out.factorizations[0]
    assert fact.base.order == 2 and fact.fiber.order == 2
    rebuilt = sierpinski_product(fact.base, fact.fiber, fact.vmap)
    assert tree_isomorphic(rebuilt.graph, path(4))


def test_recognize_rejections():
    out = recognize_tree_product(star(11))  # order 12, no valid peel
    assert out.status == "not_a_product"
    assert len(out.diagnostics) == 4
    assert recognize_tree_product(path(7)).status == "not_a_product"
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert recognize_tree_product(c4).status == "not_a_product"


def test_roundtrip_random_products():
    rng = random.Random(41)
    for _ in range(40):
        n1, n2 = rng.randint(2, 8), rng.randint(2, 8)
        t1, t2 = random_tree(n1, rng), random_tree(n2, rng)
        f = VertexMap(n1, n2, tuple(rng.randrange(n2) for _ in range(n1)))
        prod = sierpinski_product(t1, t2, f)
        out = recognize_tree_product(prod.graph)
        assert out.status == "factored"
        for fact in out.factorizations:
            rebuilt = sierpinski_product(fact.base, fact.fiber, fact.vmap)
            assert tree_isomorphic(rebuilt.graph, prod.graph)


def test_reconstruct_map_roundtrips():
    cases = [
        (path(2), path(2), VertexMap(2, 2, (1, 0))),
        (path(4), path(3), VertexMap.constant(4, 3, 1)),
        (star(3), path(2), VertexMap(4, 2, (0, 1, 1, 0))),
    ]
    for t1, t2, f in cases:
        prod = sierpinski_product(t1, t2, f)
        out = recognize_tree_product(prod.graph)
        assert out.status == "factored"
        fact = out.factorizations[0]
        # reconstruct_map is what produced fact.vmap; replay it and rebuild
        vmap = reconstruct_map(fact.peel_trace, fact.base, fact.fiber)
        rebuilt = sierpinski_product(fact.base, fact.fiber, vmap)
        assert tree_isomorphic(rebuilt.graph, prod.graph)


def test_pendant_connecting_edge_characterization():
    # an edge of a tree product is a pendant connecting edge exactly when
    # it splits off a component of the fiber's order that is one whole fiber
    rng = random.Random(42)
    for _ in range(100):
        n1, n2 = rng.randint(2, 7), rng.randint(2, 7)
        t1, t2 = random_tree(n1, rng), random_tree(n2, rng)
        f = VertexMap(n1, n2, tuple(rng.randrange(n2) for _ in range(n1)))
        prod = sierpinski_product(t1, t2, f)
        pendant_tagged = set()
        for edge, (g1, g2) in prod.connecting:
            if t1.degree(g1) == 1 or t1.degree(g2) == 1:
                pendant_tagged.add(edge)
        split = set(pendant_split_edges(prod.graph, n2))
        fibers = [frozenset(prod.vertex_of(g, h) for h in range(n2))
                  for g in range(n1)]
        confirmed = set()
        for u, v in split:
            for side in _components_minus_edge(prod.graph, (u, v)):
                if frozenset(side) in fibers:
                    confirmed.add((u, v))
        assert pendant_tagged == confirmed == split


def _components_minus_edge(g, edge):
    comps = []
    seen = set()
    for start in edge:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if {x, y} == set(edge) or y in comp:
                    continue
                comp.add(y)
                stack.append(y)
        comps.append(comp)
        seen |= comp
    return comps


def test_completeness_small_trees():
    from itertools import product as iproduct
    for n in (4, 6, 8):
        for x in free_trees(n):
            brute = False
            for n2 in range(2, n // 2 + 1):
                if n % n2:
                    continue
                n1 = n // n2
                for t1 in free_trees(n1):
                    for t2 in free_trees(n2):
                        for img in iproduct(range(n2), repeat=n1):
                            prod = sierpinski_product(
                                t1, t2, VertexMap(n1, n2, img))
                            if tree_isomorphic(prod.graph, x):
                                brute = True
                                break
                        if brute:
                            break
                    if brute:
                        break
                if brute:
                    break
            exhaustive = recognize_tree_product(x, exhaustive=True)
            greedy = recognize_tree_product(x)
            assert (exhaustive.status == "factored") == brute
            assert greedy.status == exhaustive.status


def test_factorizations_deduplicated_by_shape():
    prod = sierpinski_product(path(2), path(4), VertexMap.constant(2, 4, 0))
    out = recognize_tree_product(prod.graph, exhaustive=True)
    shapes = [(tree_canonical_form(f.base), tree_canonical_form(f.fiber))
              for f in out.factorizations]
    assert len(shapes) == len(set(shapes))

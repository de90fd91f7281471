"""Construction, relation queries, products, width, and embedding search."""

from itertools import combinations, permutations

import pytest

import posetkit as pk


def graph_of(vertices, edges):
    vertices = tuple(vertices)
    idx = {v: i for i, v in enumerate(vertices)}
    adj = [0] * len(vertices)
    for a, b in edges:
        adj[idx[a]] |= 1 << idx[b]
        adj[idx[b]] |= 1 << idx[a]
    return pk.Graph(vertices, adj)


def brute_max_antichain(p):
    best = 0
    for r in range(len(p), 0, -1):
        for sub in combinations(p.elements, r):
            if all(not p.leq(a, b) and not p.leq(b, a) for a, b in combinations(sub, 2)):
                return r
    return best


def brute_embedding_exists(pattern, host):
    for image in permutations(host.elements, len(pattern)):
        ok = True
        for i, a in enumerate(pattern.elements):
            for j, b in enumerate(pattern.elements):
                if pattern.leq(a, b) != host.leq(image[i], image[j]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def test_from_relation_pairs_closure():
    p = pk.from_relation(["a", "b", "c"], [("a", "b"), ("b", "c")], mode="pairs")
    assert p.leq("a", "c")
    assert p.lt("a", "b") and not p.lt("b", "a")
    assert p.covers() == (("a", "b"), ("b", "c"))


def test_from_relation_covers_matches_pairs():
    pairs = [("a", "b"), ("b", "c"), ("a", "c")]
    assert pk.from_relation("abc", pairs, mode="pairs") == pk.from_relation("abc", pairs[:2], mode="covers")


def test_constructor_rejects_duplicates_and_cycles():
    with pytest.raises(pk.DuplicateElement):
        pk.from_relation(["a", "a"], [])
    with pytest.raises(pk.CycleDetected):
        pk.from_relation("ab", [("a", "b"), ("b", "a")])


def test_unknown_element_raises():
    p = pk.chain_of("ab")
    with pytest.raises(pk.UnknownElement):
        p.leq("a", "z")
    with pytest.raises(pk.UnknownElement):
        pk.from_relation("ab", [("a", "q")])


def test_chain_and_antichain():
    c = pk.chain_of("abc")
    assert c.leq("a", "c") and c.is_chain()
    a = pk.antichain_of("xyz")
    assert a.incomparable("x", "y") and not a.is_chain()


def test_dual_reverses_everything():
    p = pk.two_plus_two()
    d = pk.dual(p)
    for x in p.elements:
        for y in p.elements:
            assert p.leq(x, y) == d.leq(y, x)
    assert pk.dual(d) == p


def test_induced_keeps_the_relation():
    p = pk.from_relation("abcd", [("a", "b"), ("b", "c"), ("a", "d")], mode="pairs")
    q = pk.induced(p, ["a", "c", "d"])
    assert q.elements == ("a", "c", "d")
    assert q.leq("a", "c") and q.incomparable("c", "d")


def test_direct_product_order_and_size():
    c2 = pk.chain_of("01")
    grid = pk.direct_product(c2, c2)
    assert len(grid) == 4
    assert grid.leq("(0,0)", "(1,1)")
    assert grid.incomparable("(0,1)", "(1,0)")


def test_lex_product_breaks_ties_by_second_factor():
    c2 = pk.chain_of("01")
    a2 = pk.antichain_of("xy")
    lex = pk.lex_product([a2, c2])
    assert lex.leq("(x,0)", "(x,1)")
    assert lex.incomparable("(x,1)", "(y,0)")
    lex2 = pk.lex_product([c2, a2])
    # first factor strictly dominates
    assert lex2.leq("(0,x)", "(1,y)") and lex2.incomparable("(0,x)", "(0,y)")


def test_ordinal_product_2_stacks_two_copies():
    p = pk.two_plus_two()
    q = pk.ordinal_product_2(p)
    assert len(q) == 2 * len(p)
    for x in p.elements:
        assert q.lt(f"({x},0)", f"({x},1)")
        for y in p.elements:
            assert q.leq(f"({x},1)", f"({y},0)") == p.lt(x, y)
            assert q.leq(f"({x},0)", f"({y},0)") == p.leq(x, y)


def test_disjoint_sum_suffixes_on_collision():
    c = pk.chain_of("ab")
    s = pk.disjoint_sum(c, c)
    assert set(s.elements) == {"a.0", "b.0", "a.1", "b.1"}
    assert s.leq("a.0", "b.0") and s.incomparable("a.0", "b.1")
    t = pk.disjoint_sum(pk.chain_of("ab"), pk.chain_of("cd"))
    assert set(t.elements) == {"a", "b", "c", "d"}


def test_width_matches_brute_force():
    for n in range(5):
        for p in pk.all_posets(n):
            res = pk.width(p)
            assert res.width == (brute_max_antichain(p) if n else 0)
            covered = [e for chain in res.chains for e in chain]
            assert sorted(covered) == sorted(p.elements)
            assert len(res.chains) == res.width


def test_width_chains_are_chains():
    p = pk.rado(4)
    res = pk.width(p)
    for chain in res.chains:
        for a, b in zip(chain, chain[1:]):
            assert p.lt(a, b)
    for a, b in combinations(res.antichain, 2):
        assert p.incomparable(a, b)


def test_find_embedding_agrees_with_brute_force():
    hosts = [pk.two_plus_two(), pk.chain_of("0123"), pk.binary_tree(2)]
    for n in range(4):
        for pattern in pk.all_posets(n):
            for host in hosts:
                emb = pk.find_embedding(pattern, host)
                assert (emb is not None) == brute_embedding_exists(pattern, host)
                if emb is not None:
                    assert emb.verify(pattern, host)


def test_embedding_map_verify_is_biconditional():
    c2 = pk.chain_of("ab")
    host = pk.two_plus_two()
    # a, b map to incomparable elements: order not reflected
    assert not pk.EmbeddingMap({"a": "a", "b": "c"}).verify(c2, host)
    assert pk.EmbeddingMap({"a": "a", "b": "b"}).verify(c2, host)
    # non-injective assignments never verify
    assert not pk.EmbeddingMap({"a": "a", "b": "a"}).verify(pk.antichain_of("ab"), host)


def test_all_linear_extensions_counts():
    assert sum(1 for _ in pk.all_linear_extensions(pk.chain_of("abcd"))) == 1
    assert sum(1 for _ in pk.all_linear_extensions(pk.antichain_of("abc"))) == 6
    assert sum(1 for _ in pk.all_linear_extensions(pk.two_plus_two())) == 6


def test_linear_order_extension_checks():
    p = pk.two_plus_two()
    ell = pk.LinearOrder(("a", "c", "b", "d"))
    assert ell.is_extension_of(p)
    assert not pk.LinearOrder(("b", "a", "c", "d")).is_extension_of(p)
    q = ell.as_poset()
    assert q.is_chain() and q.leq("a", "d")


def test_incomparability_graph():
    p = pk.two_plus_two()
    g = pk.incomparability_graph(p)
    assert g.has_edge("a", "c") and g.has_edge("a", "d")
    assert not g.has_edge("a", "b")
    assert len(g.edges()) == 4


def test_transitive_orientation_known_graphs():
    # 4-cycle: comparability graph of the complete bipartite order
    c4 = graph_of("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    assert pk.transitive_orientation(c4) is not None
    # 5-cycle: the smallest non-comparability graph
    c5 = graph_of("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")])
    assert pk.transitive_orientation(c5) is None
    # path on 4 vertices orients transitively
    p4 = graph_of("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    assert pk.transitive_orientation(p4) is not None


def test_size_cap_on_generators_and_products():
    with pytest.raises(pk.SizeLimitExceeded):
        pk.random_poset(65, 0.5, seed=1)
    with pytest.raises(pk.SizeLimitExceeded):
        pk.direct_product(pk.random_poset(9, 0.5, seed=1), pk.random_poset(9, 0.5, seed=2))
    with pk.limits.temporary(max_elements=128):
        assert len(pk.random_poset(65, 0.5, seed=1)) == 65

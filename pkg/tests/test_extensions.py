"""Linear extensions, the separation property, conjugates, and the two-dimension tests."""

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


def brute_nonseparating(p):
    return [ell for ell in pk.linear_extensions(p) if pk.is_separating(p, ell) is None]


def test_is_separating_finds_the_sandwiched_element():
    p = pk.two_plus_two()
    w = pk.is_separating(p, pk.LinearOrder(("a", "c", "b", "d")))
    assert (w.x, w.y, w.z) == ("a", "c", "b")
    assert pk.is_separating(p, pk.LinearOrder(("a", "b", "c", "d"))) is None
    with pytest.raises(pk.NotAnExtension):
        pk.is_separating(p, pk.LinearOrder(("b", "a", "c", "d")))


def test_enumerate_nonseparating_matches_filter():
    for n in range(5):
        for p in pk.all_posets(n):
            fast = list(pk.enumerate_nonseparating(p))
            slow = brute_nonseparating(p)
            assert [ell.order for ell in fast] == [ell.order for ell in slow]


def test_enumeration_cap():
    big = pk.chain_of([str(i) for i in range(11)])
    with pytest.raises(pk.SizeLimitExceeded):
        pk.linear_extensions(big)
    with pytest.raises(pk.SizeLimitExceeded):
        pk.enumerate_nonseparating(big)


def test_find_nonseparating_extension_agrees_with_dimension():
    for n in range(5):
        for p in pk.all_posets(n):
            ell = pk.find_nonseparating_extension(p)
            if pk.dm_dimension(p)[0] <= 2:
                assert ell is not None and pk.is_separating(p, ell) is None
            else:
                assert ell is None


def test_find_nonseparating_beyond_enumeration_cap():
    # 12 elements: too many for enumeration, so a two-realizer answers instead
    p = pk.split(pk.chain_of("abcdef"))
    assert len(p) > pk.limits.active().extension_elements
    ell = pk.find_nonseparating_extension(p)
    assert ell is not None and pk.is_separating(p, ell) is None
    # and a dimension-three order of the same size still reports None
    q = pk.split(pk.binary_tree(2))
    assert pk.find_nonseparating_extension(q) is None


def test_conjugate_of_two_plus_two():
    p = pk.two_plus_two()
    flipped = pk.conjugate(p, pk.LinearOrder(("a", "b", "c", "d")))
    assert flipped.order == ("c", "d", "a", "b")
    with pytest.raises(pk.NotNonSeparating):
        pk.conjugate(p, pk.LinearOrder(("a", "c", "b", "d")))


def test_conjugate_pair_realizes_the_order():
    for n in range(5):
        for p in pk.all_posets(n):
            ell = pk.find_nonseparating_extension(p)
            if ell is None:
                continue
            flipped = pk.conjugate(p, ell)
            assert pk.Realizer((ell, flipped)).verify(p)


def test_is_comparability_graph():
    c5 = graph_of("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")])
    assert pk.is_comparability_graph(c5) is None
    p4 = graph_of("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    orient = pk.is_comparability_graph(p4)
    assert orient is not None and orient.verify(p4)


def test_dim2_test_knowns():
    assert pk.dim2_test(pk.two_plus_two())
    assert pk.dim2_test(pk.chain_of("abc"))
    assert pk.dim2_test(pk.binary_tree(3))
    assert not pk.dim2_test(pk.three_irreducible_b())


def test_lemma24_check_accepts_every_prefix():
    p = pk.binary_tree(2)
    for ell in pk.enumerate_nonseparating(p):
        for cut in range(len(p) + 1):
            assert pk.lemma24_check(p, ell, ell.order[:cut])
        break


def test_lemma24_check_preconditions():
    p = pk.binary_tree(1)
    ell = pk.find_nonseparating_extension(p)
    with pytest.raises(pk.PreconditionViolated):
        pk.lemma24_check(pk.three_irreducible_b(), pk.LinearOrder(tuple()), [])
    with pytest.raises(pk.PreconditionViolated):
        pk.lemma24_check(p, ell, ell.order[-1:])
    sep = pk.LinearOrder(("a", "c", "b", "d"))
    with pytest.raises(pk.PreconditionViolated):
        pk.lemma24_check(pk.two_plus_two(), sep, [])


def test_t2_cover_check_small_depths():
    assert pk.t2_cover_check(1)
    assert pk.t2_cover_check(2)
    with pytest.raises(pk.SizeLimitExceeded):
        pk.t2_cover_check(5)

"""Incidence structures, Galois lattices, completions, Ferrers tests, codings."""

from itertools import combinations

import pytest

import posetkit as pk
from posetkit.incidence import down_family, moore_closure, SubsetFamily


def brute_closed_sets(r):
    """Every fixed point of X -> lower(upper(X)), by scanning all row subsets."""
    out = set()
    for k in range(len(r.rows) + 1):
        for sub in combinations(r.rows, k):
            out.add(pk.lower(r, pk.upper(r, sub)))
    return frozenset(out)


def brute_down_sets(p):
    out = set()
    for k in range(len(p) + 1):
        for sub in combinations(p.elements, k):
            s = frozenset(sub)
            if all(p.down_set(x) <= s for x in sub):
                out.add(s)
    return frozenset(out)


def test_incidence_structure_basics():
    r = pk.IncidenceStructure.from_pairs("ab", "xy", [("a", "x"), ("b", "y")])
    assert r.has("a", "x") and not r.has("a", "y")
    assert set(r.pairs()) == {("a", "x"), ("b", "y")}
    with pytest.raises(pk.UnknownElement):
        r.has("q", "x")


def test_complement_and_dual_are_involutions():
    r = pk.random_incidence(3, 4, 0.5, seed=7)
    assert pk.complement(pk.complement(r)).pairs() == r.pairs()
    d = pk.structure_dual(r)
    assert d.rows == r.cols and d.cols == r.rows
    assert all(d.has(y, x) == r.has(x, y) for x, y in r.pairs())


def test_upper_lower_galois_conventions():
    r = pk.IncidenceStructure.from_pairs("ab", "xy", [("a", "x"), ("b", "x")])
    assert pk.upper(r, ["a", "b"]) == frozenset({"x"})
    assert pk.lower(r, ["x"]) == frozenset({"a", "b"})
    # empty input: every column (resp. row) vacuously qualifies
    assert pk.upper(r, []) == frozenset("xy")
    assert pk.lower(r, []) == frozenset("ab")


def test_galois_lattice_matches_subset_scan():
    for t in range(12):
        r = pk.random_incidence(1 + t % 5, 1 + (t * 3) % 5, (0.3, 0.5, 0.7)[t % 3], seed=100 + t)
        lat = pk.galois_lattice(r)
        assert lat.closed_sets() == brute_closed_sets(r)


def test_galois_lattice_is_a_lattice_of_closures():
    r = pk.random_incidence(4, 4, 0.5, seed=3)
    lat = pk.galois_lattice(r)
    assert pk.is_lattice(lat.underlying)
    assert lat.label[lat.bottom] == pk.lower(r, pk.upper(r, []))
    assert lat.label[lat.top] == frozenset(r.rows)
    for e in lat.underlying.elements:
        for e2 in lat.underlying.elements:
            assert lat.underlying.leq(e, e2) == (lat.label[e] <= lat.label[e2])


def test_galois_lattice_of_empty_relation_is_two_chain():
    r = pk.IncidenceStructure.from_pairs("ab", "xy", [])
    lat = pk.galois_lattice(r)
    assert lat.closed_sets() == frozenset({frozenset(), frozenset("ab")})
    assert lat.underlying.is_chain() and len(lat.underlying) == 2


def test_macneille_of_two_plus_two():
    lat = pk.macneille(pk.two_plus_two())
    expect = {
        frozenset(),
        frozenset("a"),
        frozenset("c"),
        frozenset("ab"),
        frozenset("cd"),
        frozenset("abcd"),
    }
    assert lat.closed_sets() == frozenset(expect)


def test_macneille_of_antichain_is_boolean():
    lat = pk.macneille(pk.antichain_of("xy"))
    assert len(lat.underlying) == 4
    lat3 = pk.macneille(pk.antichain_of("xyz"))
    # cuts of a 3-antichain: singletons, bottom, top; no 2-subsets
    assert len(lat3.underlying) == 5


def test_macneille_embeds_the_order():
    for n in range(5):
        for p in pk.all_posets(n):
            lat = pk.macneille(p)
            assert pk.is_lattice(lat.underlying)
            cuts = {x: lat.element_of(p.down_set(x)) for x in p.elements}
            if n:
                assert pk.EmbeddingMap(cuts).verify(p, lat.underlying)


def test_initial_segments_match_down_set_scan():
    for n in range(5):
        for p in pk.all_posets(n):
            lat = pk.initial_segments(p)
            assert lat.closed_sets() == brute_down_sets(p)
            assert pk.is_distributive(lat.underlying)


def test_element_of_rejects_non_closed_sets():
    lat = pk.initial_segments(pk.chain_of("ab"))
    assert lat.element_of(frozenset("a")) in lat.underlying.elements
    with pytest.raises(pk.UnknownElement):
        lat.element_of(frozenset("b"))


def test_moore_closure_adds_intersections():
    fam = SubsetFamily(("a", "b", "c"), frozenset({frozenset("ab"), frozenset("bc")}))
    closed = moore_closure(fam)
    assert frozenset("b") in closed.members
    assert frozenset("abc") in closed.members
    # closing twice is a fixed point
    assert moore_closure(closed).members == closed.members


def test_down_family_closure_is_initial_segments():
    p = pk.binary_tree(2)
    closed = moore_closure(down_family(p))
    under_intersection = {a & b for a in closed.members for b in closed.members}
    assert under_intersection <= closed.members


def test_is_ferrers_flag_and_witness():
    stair = pk.IncidenceStructure.from_pairs(
        "ab", "xy", [("a", "x"), ("a", "y"), ("b", "y")]
    )
    flag, witness = pk.is_ferrers(stair)
    assert flag and witness is None

    crossed = pk.IncidenceStructure.from_pairs("ab", "xy", [("a", "x"), ("b", "y")])
    flag, witness = pk.is_ferrers(crossed)
    assert not flag
    assert crossed.has(witness.x, witness.y) and crossed.has(witness.x2, witness.y2)
    assert not crossed.has(witness.x, witness.y2) and not crossed.has(witness.x2, witness.y)


def test_interval_order_recognition():
    assert not pk.is_interval_order(pk.two_plus_two())
    assert pk.is_interval_order(pk.chain_of("abcd"))
    assert pk.is_interval_order(pk.antichain_of("abc"))
    # N poset: 2+2-free but not a semiorder; still an interval order
    npos = pk.from_relation("abcd", [("a", "b"), ("c", "b"), ("c", "d")], mode="covers")
    assert pk.is_interval_order(npos)


def test_bipartite_split_and_open_split_shapes():
    c2 = pk.chain_of("ab")
    sp = pk.split(c2)
    assert set(sp.elements) == {"(a,0)", "(b,0)", "(a,1)", "(b,1)"}
    assert sp.leq("(a,0)", "(a,1)") and sp.leq("(a,0)", "(b,1)")
    assert not sp.leq("(b,0)", "(a,1)")
    osp = pk.open_split(c2)
    assert osp.leq("(a,0)", "(b,1)")
    assert osp.incomparable("(a,0)", "(a,1)")
    # row copies form an antichain, column copies too
    assert sp.incomparable("(a,0)", "(b,0)") and sp.incomparable("(a,1)", "(b,1)")


def test_coding_verification():
    r = pk.IncidenceStructure.from_pairs("ab", "xy", [("a", "x"), ("b", "y")])
    ident = pk.Coding({"a": "a", "b": "b"}, {"x": "x", "y": "y"})
    assert pk.is_coding(r, r, ident)
    swapped = pk.Coding({"a": "b", "b": "a"}, {"x": "x", "y": "y"})
    assert not pk.is_coding(r, r, swapped)
    with pytest.raises(pk.PreconditionViolated):
        pk.is_coding(r, r, pk.Coding({"a": "a"}, {"x": "x", "y": "y"}))


def test_canonical_coding_lands_in_the_galois_lattice():
    for t in range(8):
        r = pk.random_incidence(1 + t % 4, 1 + (t * 2) % 4, 0.5, seed=40 + t)
        cod = pk.canonical_coding(r)
        lat = pk.galois_lattice(r)
        target = pk.lattice_order_structure(lat)
        assert pk.is_coding(r, target, cod)
        assert set(cod.f.values()) <= set(lat.underlying.elements)


def test_order_structure_strict_flag():
    p = pk.chain_of("ab")
    refl = pk.order_structure(p)
    strict = pk.order_structure(p, strict=True)
    assert refl.has("a", "a") and not strict.has("a", "a")
    assert refl.has("a", "b") and strict.has("a", "b")

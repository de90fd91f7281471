"""Lattice recognition, spectra, the dimension-width identity, chain factorization."""

import pytest

import posetkit as pk


def diamond_m3():
    return pk.from_relation(
        "0abc1",
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        mode="covers",
    )


def pentagon_n5():
    return pk.from_relation(
        "0abc1",
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        mode="covers",
    )


def boolean_lattice(k):
    return pk.initial_segments(pk.antichain_of([f"x{i}" for i in range(k)])).underlying


def test_is_lattice_and_is_distributive():
    assert pk.is_lattice(diamond_m3()) and not pk.is_distributive(diamond_m3())
    assert pk.is_lattice(pentagon_n5()) and not pk.is_distributive(pentagon_n5())
    assert not pk.is_lattice(pk.antichain_of("ab"))
    assert not pk.is_lattice(pk.two_plus_two())
    assert pk.is_distributive(pk.chain_of("abc"))
    assert pk.is_distributive(boolean_lattice(3))


def test_join_irreducibles_requires_a_lattice():
    with pytest.raises(pk.NotALattice):
        pk.join_irreducibles(pk.antichain_of("ab"))
    ji = pk.join_irreducibles(boolean_lattice(3))
    assert len(ji) == 3 and ji.is_antichain()


def test_spectrum_of_a_chain_is_a_chain():
    spec = pk.spectrum(pk.chain_of("abcd"))
    assert len(spec) == 3
    assert spec.underlying.is_chain()
    smallest = spec.underlying.minimal()[0]
    assert spec.ideal[smallest].members == frozenset("a")


def test_spectrum_of_boolean_lattice_is_antichain():
    spec = pk.spectrum(boolean_lattice(2))
    assert len(spec) == 2 and spec.underlying.is_antichain()
    assert len(pk.spectrum(boolean_lattice(1))) == 1
    # the one-element lattice has no proper nonempty prime ideals
    assert len(pk.spectrum(boolean_lattice(0))) == 0


def test_spectrum_rejects_non_distributive():
    with pytest.raises(pk.NotDistributive):
        pk.spectrum(diamond_m3())
    with pytest.raises(pk.NotDistributive):
        pk.spectrum(pentagon_n5())


def test_down_set_lattice_recovers_the_order():
    for n in range(5):
        for p in pk.all_posets(n):
            t = pk.initial_segments(p).underlying
            ji = pk.join_irreducibles(t)
            assert len(ji) == len(p)
            spec = pk.spectrum(t)
            assert len(spec) == len(ji)
            if n:
                assert pk.find_embedding(p, ji) is not None
                assert pk.find_embedding(ji, spec.underlying) is not None


def test_dilworth_check_values():
    assert pk.dilworth_check(boolean_lattice(3)) == (3, 3)
    assert pk.dilworth_check(boolean_lattice(1)) == (1, 1)
    assert pk.dilworth_check(pk.chain_of("abcde")) == (1, 1)
    with pytest.raises(pk.PreconditionViolated):
        pk.dilworth_check(boolean_lattice(0))


def test_chain_factorization_counts():
    count, emb = pk.chain_factorization(boolean_lattice(2))
    assert count == 2
    assert sorted(emb.assignment) == sorted(boolean_lattice(2).elements)
    assert pk.chain_factorization(pk.chain_of("abcd"))[0] == 1
    # the one-element lattice needs no chains at all
    count, emb = pk.chain_factorization(boolean_lattice(0))
    assert count == 0 and list(emb.assignment.values()) == ["()"]
    with pytest.raises(pk.NotDistributive):
        pk.chain_factorization(diamond_m3())


def test_chain_factorization_is_a_lattice_embedding():
    for p in (pk.antichain_of("ab"), pk.chain_of("abc"), pk.two_plus_two()):
        t = pk.initial_segments(p).underlying
        count, emb = pk.chain_factorization(t)
        assert count == pk.width(pk.join_irreducibles(t)).width
        sizes = [len(c) + 1 for c in pk.width(pk.join_irreducibles(t)).chains]
        host = pk.lattice._ranks_host(sizes)
        assert pk.is_lattice_embedding(emb, t, host)


def test_embeds_in_chains_tight_bound():
    b3 = boolean_lattice(3)
    assert pk.embeds_in_chains(b3, 3)
    assert not pk.embeds_in_chains(b3, 2)
    assert pk.embeds_in_chains(pk.chain_of("abcd"), 1)
    with pytest.raises(pk.SizeLimitExceeded):
        pk.embeds_in_chains(boolean_lattice(4), 4)
    with pytest.raises(pk.NotALattice):
        pk.embeds_in_chains(pk.antichain_of("ab"), 2)


def test_interval_spectrum_check():
    b3 = boolean_lattice(3)
    bottom = b3.minimal()[0]
    top = b3.maximal()[0]
    assert pk.interval_spectrum_check(b3, bottom, top)
    atom = [e for e in b3.elements if b3.covers().count((bottom, e))][0]
    assert pk.interval_spectrum_check(b3, atom, top)
    assert pk.interval_spectrum_check(b3, bottom, atom)
    with pytest.raises(pk.PreconditionViolated):
        pk.interval_spectrum_check(b3, top, bottom)


def test_is_lattice_embedding_rejects_non_lattice_maps():
    # order embedding that moves the join: B_2 into the 3-cube corner-to-corner
    b2 = boolean_lattice(2)
    b3 = boolean_lattice(3)
    order_emb = pk.find_embedding(b2, b3)
    assert order_emb is not None
    lift = {
        "{}": "{}",
        "{x0}": "{x0}",
        "{x1}": "{x1}",
        "{x0,x1}": "{x0,x1,x2}",
    }
    assert pk.EmbeddingMap(lift).verify(b2, b3)
    assert not pk.is_lattice_embedding(pk.EmbeddingMap(lift), b2, b3)

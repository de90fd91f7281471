"""Distributive lattices: spectra, chain covers, and chain-product embeddings.

The prime ideals of a finite distributive lattice, ordered by inclusion,
form a poset isomorphic to the join irreducibles, and the lattice embeds in
a direct product of n chains exactly when that spectrum has width at most n.
Dilworth's theorem turns the width into a concrete chain cover, and the
cover into rank coordinates; both directions are machine-checked here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .core import EmbeddingMap, Poset, _bits, chain_of, direct_product, induced, width
from .dimension import dm_dimension
from .errors import (
    InternalInconsistency,
    NotALattice,
    NotDistributive,
    PreconditionViolated,
    SizeLimitExceeded,
)
from .incidence import _render_subset
from . import limits


def _lattice_tables(p: Poset):
    """Index tables (join, meet), or None when some pair lacks a bound."""
    n = len(p)
    if n == 0:
        return None
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    ups = [p.up_row(i) for i in range(n)]
    downs = [p.down_row(i) for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            u = ups[i] & ups[j]
            if not u:
                return None
            k = max(_bits(u), key=lambda c: (ups[c] & u).bit_count())
            if u & ~ups[k]:
                return None
            join[i][j] = join[j][i] = k
            d = downs[i] & downs[j]
            if not d:
                return None
            k = max(_bits(d), key=lambda c: (downs[c] & d).bit_count())
            if d & ~downs[k]:
                return None
            meet[i][j] = meet[j][i] = k
    return join, meet


def is_lattice(p: Poset) -> bool:
    return _lattice_tables(p) is not None


def is_distributive(p: Poset) -> bool:
    """Full triple scan of the meet-over-join law; False for non-lattices."""
    tables = _lattice_tables(p)
    if tables is None:
        return False
    join, meet = tables
    n = len(p)
    for y in range(n):
        my = meet[y]
        for z in range(y, n):
            mz = meet[z]
            mj = meet[join[y][z]]
            if any(mj[x] != join[my[x]][mz[x]] for x in range(n)):
                return False
    return True


def _irreducible_indices(p: Poset) -> list:
    """Indices with exactly one lower cover; the bottom never qualifies."""
    out = []
    for k in range(len(p)):
        below = p.strict_down_row(k)
        covers = [i for i in _bits(below) if not p.strict_up_row(i) & below]
        if len(covers) == 1:
            out.append(k)
    return out


def join_irreducibles(t: Poset) -> Poset:
    if not is_lattice(t):
        raise NotALattice("join irreducibles need a lattice")
    return induced(t, [t.elements[k] for k in _irreducible_indices(t)])


@dataclass(frozen=True)
class PrimeIdeal:
    """Nonempty proper ideal whose complement is a filter."""

    members: frozenset


class Spectrum:
    """Prime ideals of a distributive lattice, ordered by inclusion."""

    __slots__ = ("underlying", "ideal", "ground")

    def __init__(self, underlying: Poset, ideal: Mapping, ground: tuple):
        self.underlying = underlying
        self.ideal = dict(ideal)
        self.ground = ground

    def __len__(self) -> int:
        return len(self.underlying)

    def ideals(self) -> tuple:
        return tuple(self.ideal[e] for e in self.underlying.elements)


def spectrum(t: Poset) -> Spectrum:
    """Every prime ideal, found by the filter-complement test.

    Nonempty ideals of a finite lattice are exactly the principal down-sets
    (an ideal contains the join of its members), so candidates are the sets
    below a non-top element; the complement is a filter exactly when it has
    a unique minimal element.  The family is cross-checked against the
    complements of the principal filters at join irreducibles.
    """
    if not is_distributive(t):
        raise NotDistributive("spectrum needs a distributive lattice")
    n = len(t)
    full = (1 << n) - 1
    primes = []
    for a in range(n):
        mask = t.down_row(a)
        if mask == full:
            continue
        complement = full & ~mask
        minimal = [i for i in _bits(complement) if not t.strict_down_row(i) & complement]
        if len(minimal) == 1:
            primes.append(mask)
    expected = {full & ~t.up_row(j) for j in _irreducible_indices(t)}
    if set(primes) != expected:
        raise InternalInconsistency(
            "prime ideals disagree with join-irreducible filter complements"
        )
    members = [frozenset(t.elements[i] for i in _bits(m)) for m in primes]
    labels = [_render_subset(ms, t.elements) for ms in members]
    rows = []
    for a in primes:
        row = 0
        for j, b in enumerate(primes):
            if a & ~b == 0:
                row |= 1 << j
        rows.append(row)
    poset = Poset(labels, rows)
    ideal = {lab: PrimeIdeal(ms) for lab, ms in zip(labels, members)}
    return Spectrum(poset, ideal, t.elements)


def dilworth_check(t: Poset) -> tuple:
    """(order dimension, spectrum width); raises unless the two agree.

    The one-element lattice is excluded: its spectrum is empty while the
    dimension convention never drops below one.
    """
    spec = spectrum(t)
    if len(t) < 2:
        raise PreconditionViolated("dimension-width comparison needs two elements")
    dim = dm_dimension(t)[0]
    w = width(spec.underlying).width
    if dim != w:
        raise InternalInconsistency(
            f"dimension {dim} differs from spectrum width {w}"
        )
    return dim, w


def _ranks_host(sizes) -> Poset:
    """Direct product of chains on 0..size-1; a single point for no chains."""
    if not sizes:
        return Poset(("()",), (1,))
    host = chain_of([str(r) for r in range(sizes[0])])
    for size in sizes[1:]:
        with limits.temporary(max_elements=len(host) * size):
            host = direct_product(host, chain_of([str(r) for r in range(size)]))
    return host


def is_lattice_embedding(emb: EmbeddingMap, pattern: Poset, host: Poset) -> bool:
    """Order embedding that also carries joins to joins and meets to meets."""
    if not emb.verify(pattern, host):
        return False
    ptab = _lattice_tables(pattern)
    htab = _lattice_tables(host)
    if ptab is None or htab is None:
        return False
    pjoin, pmeet = ptab
    hjoin, hmeet = htab
    image = [host.index(emb.assignment[x]) for x in pattern.elements]
    n = len(pattern)
    for i in range(n):
        for j in range(i + 1, n):
            if image[pjoin[i][j]] != hjoin[image[i]][image[j]]:
                return False
            if image[pmeet[i][j]] != hmeet[image[i]][image[j]]:
                return False
    return True


def chain_factorization(t: Poset) -> tuple:
    """Least chain count n and a verified lattice embedding into n chains.

    A Dilworth cover of the join irreducibles by n chains turns into rank
    coordinates: x goes to the count of chain-i irreducibles below x.  Join
    irreducibles are join-prime in a distributive lattice, so the ranks
    carry joins to maxima and meets to minima.
    """
    if not is_distributive(t):
        raise NotDistributive("chain factorization needs a distributive lattice")
    chains = width(join_irreducibles(t)).chains
    sizes = [len(c) + 1 for c in chains]
    product = 1
    for s in sizes:
        product *= s
    cap = limits.active().max_lattice
    if product > cap:
        raise SizeLimitExceeded(f"chain product would have {product} elements")
    host = _ranks_host(sizes)
    assignment = {}
    for x in t.elements:
        ranks = [sum(1 for j in chain if t.leq(j, x)) for chain in chains]
        if not ranks:
            label = "()"
        else:
            label = str(ranks[0])
            for r in ranks[1:]:
                label = f"({label},{r})"
        assignment[x] = label
    emb = EmbeddingMap(assignment)
    if not is_lattice_embedding(emb, t, host):
        raise InternalInconsistency("chain factorization fails its verification")
    return len(chains), emb


def _partitions(n: int):
    """All partitions of range(n) as block-id vectors, first-occurrence order."""
    blocks = [0] * n

    def rec(i: int, used: int):
        if i == n:
            yield tuple(blocks)
            return
        for b in range(used + 1):
            blocks[i] = b
            yield from rec(i + 1, used + (b == used))

    yield from rec(0, 0)


def _chain_congruences(t: Poset, join, meet) -> list:
    """Partitions compatible with join and meet whose quotient is a chain."""
    n = len(t)
    out = []
    for blocks in _partitions(n):
        count = max(blocks) + 1
        reps = [blocks.index(b) for b in range(count)]
        ok = True
        for x in range(n):
            for y in range(x + 1, n):
                if blocks[x] != blocks[y]:
                    continue
                for z in range(n):
                    if (
                        blocks[join[x][z]] != blocks[join[y][z]]
                        or blocks[meet[x][z]] != blocks[meet[y][z]]
                    ):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        for a in range(count):
            for b in range(a + 1, count):
                if blocks[join[reps[a]][reps[b]]] not in (a, b):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(blocks)
    return out


def embeds_in_chains(t: Poset, k: int) -> bool:
    """Whether t lattice-embeds into a direct product of at most k chains.

    Every such embedding projects to chain-quotient congruences meeting in
    equality, and any k such congruences rebuild an embedding, so the search
    runs over congruence subsets instead of host assignments.
    """
    if len(t) > 8:
        raise SizeLimitExceeded("congruence search capped at 8 elements")
    tables = _lattice_tables(t)
    if tables is None:
        raise NotALattice("chain-product embeddings need a lattice")
    n = len(t)
    if n <= 1:
        return True
    candidates = _chain_congruences(t, *tables)
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
    for r in range(1, k + 1):
        for combo in combinations(candidates, r):
            if all(any(c[x] != c[y] for c in combo) for x, y in pairs):
                return True
    return False


def interval_spectrum_check(t: Poset, x: str, y: str) -> bool:
    """The spectrum of [x, y] matches the primes containing x but not y.

    Cutting each such prime ideal down to the interval must be a bijection
    onto the interval's spectrum that preserves and reflects inclusion.
    """
    spec = spectrum(t)
    if not t.lt(x, y):
        raise PreconditionViolated("interval needs x strictly below y")
    mask = t.up_row(t.index(x)) & t.down_row(t.index(y))
    segment = [t.elements[i] for i in _bits(mask)]
    inner = spectrum(induced(t, segment))
    selected = [
        lab
        for lab in spec.underlying.elements
        if x in spec.ideal[lab].members and y not in spec.ideal[lab].members
    ]
    cut = {lab: spec.ideal[lab].members & frozenset(segment) for lab in selected}
    inner_family = {ideal.members for ideal in inner.ideals()}
    if set(cut.values()) != inner_family or len(set(cut.values())) != len(selected):
        return False
    for a in selected:
        for b in selected:
            if (spec.ideal[a].members <= spec.ideal[b].members) != (cut[a] <= cut[b]):
                return False
    return True

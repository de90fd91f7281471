"""Finite partial orders stored as bit-packed comparability rows.

A Poset keeps one Python int per element; bit j of row i says element i is
below-or-equal element j.  All derived queries (covers, heights, width,
products, embeddings) work on these masks, which keeps every operation exact
and deterministic at desk scale.  Element identity is by label; synthesized
labels (products, splits) are parenthesized pairs in input order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from . import limits
from .errors import (
    CycleDetected,
    DuplicateElement,
    InternalInconsistency,
    SizeLimitExceeded,
    UnknownElement,
)


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset on labeled elements."""

    __slots__ = ("elements", "_index", "_up", "_down")

    def __init__(self, elements: Sequence[str], up_rows: Sequence[int]):
        elements = tuple(elements)
        up = tuple(up_rows)
        n = len(elements)
        if len(set(elements)) != n:
            seen = set()
            for e in elements:
                if e in seen:
                    raise DuplicateElement(f"duplicate element label {e!r}")
                seen.add(e)
        if len(up) != n:
            raise InternalInconsistency("row count does not match element count")
        full = (1 << n) - 1
        down = [0] * n
        for i, row in enumerate(up):
            if row & ~full:
                raise InternalInconsistency("comparability row has stray bits")
            if not row & (1 << i):
                raise InternalInconsistency(f"order is not reflexive at {elements[i]!r}")
            for j in _bits(row):
                down[j] |= 1 << i
        for i in range(n):
            both = up[i] & down[i] & ~(1 << i)
            if both:
                j = next(_bits(both))
                raise CycleDetected(
                    f"{elements[i]!r} and {elements[j]!r} are below each other"
                )
            # transitivity: everything above j must already be above i
            for j in _bits(up[i]):
                if up[j] & ~up[i]:
                    k = next(_bits(up[j] & ~up[i]))
                    raise InternalInconsistency(
                        f"order is not transitive: {elements[i]!r} <= {elements[j]!r} "
                        f"<= {elements[k]!r} but not {elements[i]!r} <= {elements[k]!r}"
                    )
        self.elements = elements
        self._index = {e: i for i, e in enumerate(elements)}
        self._up = up
        self._down = tuple(down)

    # -- basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.elements, self._up))

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements)"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement(f"unknown element {label!r}") from None

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def leq(self, a: str, b: str) -> bool:
        return bool(self._up[self.index(a)] >> self.index(b) & 1)

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def incomparable(self, a: str, b: str) -> bool:
        return not self.leq(a, b) and not self.leq(b, a)

    # index-based mask access for the solvers
    def up_row(self, i: int) -> int:
        return self._up[i]

    def down_row(self, i: int) -> int:
        return self._down[i]

    def strict_up_row(self, i: int) -> int:
        return self._up[i] & ~(1 << i)

    def strict_down_row(self, i: int) -> int:
        return self._down[i] & ~(1 << i)

    def leq_idx(self, i: int, j: int) -> bool:
        return bool(self._up[i] >> j & 1)

    def up_set(self, label: str) -> frozenset:
        i = self.index(label)
        return frozenset(self.elements[j] for j in _bits(self._up[i]))

    def down_set(self, label: str) -> frozenset:
        i = self.index(label)
        return frozenset(self.elements[j] for j in _bits(self._down[i]))

    # -- structure --------------------------------------------------------

    def covers(self) -> tuple:
        """Cover pairs (a, b) with a covered by b, in element order."""
        out = []
        for i in range(len(self)):
            strict = self.strict_up_row(i)
            for j in _bits(strict):
                if not strict & self.strict_down_row(j):
                    out.append((self.elements[i], self.elements[j]))
        return tuple(out)

    def minimal(self) -> tuple:
        return tuple(
            self.elements[i]
            for i in range(len(self))
            if not self.strict_down_row(i)
        )

    def maximal(self) -> tuple:
        return tuple(
            self.elements[i] for i in range(len(self)) if not self.strict_up_row(i)
        )

    def is_chain(self) -> bool:
        n = len(self)
        return all(
            _popcount(self._up[i]) + _popcount(self._down[i]) == n + 1
            for i in range(n)
        )

    def is_antichain(self) -> bool:
        return all(self._up[i] == 1 << i for i in range(len(self)))

    def heights(self) -> dict:
        """Longest-path height of each element above the minimal level."""
        n = len(self)
        h = [0] * n
        for i in sorted(range(n), key=lambda i: _popcount(self._down[i])):
            below = self.strict_down_row(i)
            h[i] = max((h[j] + 1 for j in _bits(below)), default=0)
        return {self.elements[i]: h[i] for i in range(n)}

    def restrict(self, labels: Iterable[str]) -> "Poset":
        """Induced subposet on the given labels, keeping this poset's element order."""
        keep = {self.index(x) for x in labels}
        idxs = [i for i in range(len(self)) if i in keep]
        remap = {old: new for new, old in enumerate(idxs)}
        rows = []
        for i in idxs:
            row = 0
            for j in _bits(self._up[i]):
                if j in remap:
                    row |= 1 << remap[j]
            rows.append(row)
        return Poset([self.elements[i] for i in idxs], rows)

    def relabeled(self, mapping: Mapping[str, str]) -> "Poset":
        return Poset([mapping[e] for e in self.elements], self._up)

    def strict_pairs(self) -> tuple:
        out = []
        for i in range(len(self)):
            for j in _bits(self.strict_up_row(i)):
                out.append((self.elements[i], self.elements[j]))
        return tuple(out)


@dataclass(frozen=True)
class LinearOrder:
    """A linear order given as the sequence of its elements, least first."""

    order: tuple

    def __post_init__(self):
        if len(set(self.order)) != len(self.order):
            raise DuplicateElement("linear order repeats an element")

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def position(self, label: str) -> int:
        try:
            return self.order.index(label)
        except ValueError:
            raise UnknownElement(f"unknown element {label!r}") from None

    def positions(self) -> dict:
        return {e: i for i, e in enumerate(self.order)}

    def leq(self, a: str, b: str) -> bool:
        return self.position(a) <= self.position(b)

    def as_poset(self) -> Poset:
        n = len(self.order)
        full = (1 << n) - 1
        rows = [(full >> i) << i for i in range(n)]
        return Poset(self.order, rows)

    def is_extension_of(self, p: Poset) -> bool:
        if set(self.order) != set(p.elements):
            return False
        pos = self.positions()
        return all(pos[a] < pos[b] for a, b in p.strict_pairs())


class Graph:
    """Undirected graph on labeled vertices, symmetric bitmask rows."""

    __slots__ = ("vertices", "_index", "adj")

    def __init__(self, vertices: Sequence[str], adj: Sequence[int]):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise DuplicateElement("duplicate vertex label")
        rows = tuple(adj)
        n = len(self.vertices)
        for i, row in enumerate(rows):
            if row >> i & 1:
                raise InternalInconsistency("graph has a loop")
            for j in _bits(row):
                if not rows[j] >> i & 1:
                    raise InternalInconsistency("adjacency is not symmetric")
        self.adj = rows
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownElement(f"unknown vertex {v!r}") from None

    def has_edge(self, a: str, b: str) -> bool:
        return bool(self.adj[self.index(a)] >> self.index(b) & 1)

    def edges(self) -> tuple:
        out = []
        for i in range(len(self)):
            for j in _bits(self.adj[i]):
                if j > i:
                    out.append((self.vertices[i], self.vertices[j]))
        return tuple(out)


@dataclass(frozen=True)
class EmbeddingMap:
    """Injective map whose image induces the pattern's order inside the host."""

    assignment: Mapping[str, str]

    def verify(self, pattern: Poset, host: Poset) -> bool:
        amap = self.assignment
        if set(amap) != set(pattern.elements):
            return False
        image = list(amap.values())
        if len(set(image)) != len(image):
            return False
        if any(v not in host for v in image):
            return False
        for a in pattern.elements:
            for b in pattern.elements:
                if pattern.leq(a, b) != host.leq(amap[a], amap[b]):
                    return False
        return True


@dataclass(frozen=True)
class WidthResult:
    width: int
    antichain: tuple
    chains: tuple


# -- construction ----------------------------------------------------------


def from_relation(elements: Sequence[str], pairs: Iterable, mode: str = "pairs") -> Poset:
    """Reflexive-transitive closure of `pairs` (each meaning a < b) as a Poset.

    `mode` is "covers" or "pairs"; both close the relation the same way, the
    mode records how the input was meant (Hasse diagram vs raw pairs).
    """
    if mode not in ("covers", "pairs"):
        raise ValueError(f"mode must be 'covers' or 'pairs', got {mode!r}")
    elements = tuple(elements)
    cap = limits.active().max_elements
    if len(elements) > cap:
        raise SizeLimitExceeded(f"{len(elements)} elements exceeds cap {cap}")
    if len(set(elements)) != len(elements):
        raise DuplicateElement("duplicate element label")
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    rows = [1 << i for i in range(n)]
    for a, b in pairs:
        if a not in index:
            raise UnknownElement(f"unknown element {a!r} in relation")
        if b not in index:
            raise UnknownElement(f"unknown element {b!r} in relation")
        rows[index[a]] |= 1 << index[b]
    # Warshall over bitmask rows
    for k in range(n):
        rk = rows[k]
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    for i in range(n):
        for j in _bits(rows[i]):
            if j != i and rows[j] >> i & 1:
                raise CycleDetected(
                    f"{elements[i]!r} and {elements[j]!r} lie on a cycle"
                )
    return Poset(elements, rows)


def chain_of(labels: Sequence[str]) -> Poset:
    """The chain with the given labels, least first."""
    return LinearOrder(tuple(labels)).as_poset()


def antichain_of(labels: Sequence[str]) -> Poset:
    labels = tuple(labels)
    return Poset(labels, [1 << i for i in range(len(labels))])


# -- unary/binary constructions ---------------------------------------------


def dual(p: Poset) -> Poset:
    return Poset(p.elements, p._down)


def induced(p: Poset, labels: Iterable[str]) -> Poset:
    return p.restrict(labels)


def _pair_label(a: str, b) -> str:
    return f"({a},{b})"


def direct_product(p: Poset, q: Poset) -> Poset:
    """Componentwise order on pairs, row-major over (p, q)."""
    n, m = len(p), len(q)
    cap = limits.active().max_elements
    if n * m > cap:
        raise SizeLimitExceeded(f"product has {n * m} elements, cap {cap}")
    labels = [_pair_label(x, u) for x in p.elements for u in q.elements]
    rows = []
    for i in range(n):
        prow = p.up_row(i)
        for u in range(m):
            qrow = q.up_row(u)
            row = 0
            for j in _bits(prow):
                row |= qrow << (j * m)
            rows.append(row)
    return Poset(labels, rows)


def lex_product(factors: Sequence[Poset]) -> Poset:
    """Lexicographic order on tuples; first factor most significant."""
    if not factors:
        raise ValueError("lex_product needs at least one factor")
    total = 1
    for f in factors:
        total *= len(f)
    cap = limits.active().max_elements
    if total > cap:
        raise SizeLimitExceeded(f"product has {total} elements, cap {cap}")
    import itertools

    tuples = list(itertools.product(*[f.elements for f in factors]))
    labels = ["(" + ",".join(t) + ")" for t in tuples]

    def lex_leq(s, t):
        for f, a, b in zip(factors, s, t):
            if a == b:
                continue
            return f.lt(a, b)
        return True

    rows = []
    for s in tuples:
        row = 0
        for j, t in enumerate(tuples):
            if lex_leq(s, t):
                row |= 1 << j
        rows.append(row)
    return Poset(labels, rows)


def ordinal_product_2(p: Poset) -> Poset:
    """Two stacked copies of each element: (x,i) <= (y,j) iff x < y, or x = y and i <= j."""
    n = len(p)
    cap = limits.active().max_elements
    if 2 * n > cap:
        raise SizeLimitExceeded(f"product has {2 * n} elements, cap {cap}")
    labels = []
    for x in p.elements:
        labels.append(_pair_label(x, 0))
        labels.append(_pair_label(x, 1))
    rows = []
    for i in range(n):
        strict = p.strict_up_row(i)
        above = 0
        for j in _bits(strict):
            above |= 0b11 << (2 * j)
        rows.append(above | 0b11 << (2 * i))
        rows.append(above | 0b10 << (2 * i))
    return Poset(labels, rows)


def disjoint_sum(p: Poset, q: Poset) -> Poset:
    """Disjoint union with no cross comparabilities; colliding labels get .0/.1."""
    n, m = len(p), len(q)
    cap = limits.active().max_elements
    if n + m > cap:
        raise SizeLimitExceeded(f"sum has {n + m} elements, cap {cap}")
    if set(p.elements) & set(q.elements):
        left = [e + ".0" for e in p.elements]
        right = [e + ".1" for e in q.elements]
    else:
        left = list(p.elements)
        right = list(q.elements)
    rows = [p.up_row(i) for i in range(n)]
    rows += [q.up_row(i) << n for i in range(m)]
    return Poset(left + right, rows)


def incomparability_graph(p: Poset) -> Graph:
    n = len(p)
    full = (1 << n) - 1
    rows = [full & ~(p.up_row(i) | p.down_row(i)) for i in range(n)]
    return Graph(p.elements, rows)


# -- width (Dilworth via bipartite matching) --------------------------------


def width(p: Poset) -> WidthResult:
    """Maximum antichain size with a certifying antichain and chain cover."""
    n = len(p)
    if n == 0:
        return WidthResult(0, (), ())
    # bipartite graph: left copy x -> right copy y for every strict x < y
    match_right = [-1] * n  # right vertex -> matched left vertex
    match_left = [-1] * n

    def try_augment(i: int, seen: list) -> bool:
        for j in _bits(p.strict_up_row(i)):
            if seen[j]:
                continue
            seen[j] = True
            if match_right[j] == -1 or try_augment(match_right[j], seen):
                match_right[j] = i
                match_left[i] = j
                return True
        return False

    for i in range(n):
        try_augment(i, [False] * n)

    # Koenig: alternating reachability from unmatched left vertices
    seen_left = [False] * n
    seen_right = [False] * n
    stack = [i for i in range(n) if match_left[i] == -1]
    for i in stack:
        seen_left[i] = True
    while stack:
        i = stack.pop()
        for j in _bits(p.strict_up_row(i)):
            if seen_right[j]:
                continue
            seen_right[j] = True
            k = match_right[j]
            if k != -1 and not seen_left[k]:
                seen_left[k] = True
                stack.append(k)
    # cover = unreachable lefts + reachable rights; antichain avoids both copies
    antichain = tuple(
        p.elements[i] for i in range(n) if seen_left[i] and not seen_right[i]
    )
    # chains follow matched edges
    heads = [i for i in range(n) if match_right[i] == -1]
    chains = []
    for h in heads:
        chain = [h]
        while match_left[chain[-1]] != -1:
            chain.append(match_left[chain[-1]])
        chains.append(tuple(p.elements[i] for i in chain))
    chains.sort(key=lambda c: p.index(c[0]))
    size = len(antichain)
    if size != len(chains):
        raise InternalInconsistency("antichain and chain cover sizes disagree")
    for a in antichain:
        for b in antichain:
            if a != b and not p.incomparable(a, b):
                raise InternalInconsistency("claimed antichain is not an antichain")
    covered = [x for c in chains for x in c]
    if sorted(covered) != sorted(p.elements):
        raise InternalInconsistency("chain cover misses elements")
    for c in chains:
        for a, b in zip(c, c[1:]):
            if not p.lt(a, b):
                raise InternalInconsistency("chain cover contains a non-chain")
    return WidthResult(size, antichain, tuple(chains))


# -- order embedding search --------------------------------------------------


def find_embedding(pattern: Poset, host: Poset):
    """Injective order embedding of pattern into host, or None.

    Exhaustive backtracking, so absence is a proof.  Raises SizeLimitExceeded
    if the node budget runs out before the search space is exhausted.
    """
    np_, nh = len(pattern), len(host)
    if np_ > nh:
        return None
    if np_ == 0:
        return EmbeddingMap({})
    budget = limits.active().embedding_budget

    pup = [pattern.strict_up_row(i) for i in range(np_)]
    pdn = [pattern.strict_down_row(i) for i in range(np_)]
    hup = [host.strict_up_row(i) for i in range(nh)]
    hdn = [host.strict_down_row(i) for i in range(nh)]

    # most-constrained-first: high comparability degree first, ties by index
    order = sorted(
        range(np_), key=lambda i: (-(_popcount(pup[i] | pdn[i])), i)
    )
    cand = []
    for i in range(np_):
        cu, cd = _popcount(pup[i]), _popcount(pdn[i])
        cand.append(
            [
                h
                for h in range(nh)
                if _popcount(hup[h]) >= cu and _popcount(hdn[h]) >= cd
            ]
        )

    assigned: dict = {}
    used = set()
    nodes = 0

    def extend(depth: int):
        nonlocal nodes
        if depth == np_:
            return True
        i = order[depth]
        for h in cand[i]:
            if h in used:
                continue
            nodes += 1
            if nodes > budget:
                raise SizeLimitExceeded("embedding search budget exhausted")
            ok = True
            for j, g in assigned.items():
                pij = 1 if pup[i] >> j & 1 else (2 if pdn[i] >> j & 1 else 0)
                hij = 1 if hup[h] >> g & 1 else (2 if hdn[h] >> g & 1 else 0)
                if pij != hij:
                    ok = False
                    break
            if not ok:
                continue
            assigned[i] = h
            used.add(h)
            if extend(depth + 1):
                return True
            del assigned[i]
            used.discard(h)
        return False

    if extend(0):
        mapping = {
            pattern.elements[i]: host.elements[h] for i, h in sorted(assigned.items())
        }
        emb = EmbeddingMap(mapping)
        if not emb.verify(pattern, host):
            raise InternalInconsistency("embedding search returned a bad witness")
        return emb
    return None


# -- linear extension enumeration (shared by the oracle and extensions) ------


def all_linear_extensions(p: Poset) -> Iterator[tuple]:
    """Yield every linear extension as a tuple of labels, lexicographic in element order."""
    n = len(p)
    down = [p.strict_down_row(i) for i in range(n)]
    placed_mask = 0
    prefix: list = []

    def rec():
        nonlocal placed_mask
        if len(prefix) == n:
            yield tuple(p.elements[i] for i in prefix)
            return
        for i in range(n):
            bit = 1 << i
            if placed_mask & bit:
                continue
            if down[i] & ~placed_mask:
                continue  # some smaller element still unplaced
            placed_mask |= bit
            prefix.append(i)
            yield from rec()
            prefix.pop()
            placed_mask &= ~bit

    return rec()


# -- transitive orientation ---------------------------------------------------


def transitive_orientation(g: Graph):
    """Out-neighbor bitmasks of a transitive orientation of g, or None.

    Edges are oriented one forcing class at a time: orienting a-b forces c-b
    whenever c is adjacent to b but not to a, and a-c whenever c is adjacent
    to a but not to b.  A doubly-forced edge means no orientation exists; a
    full transitivity check over the result guards the other direction.
    """
    n = len(g)
    adj = g.adj
    out = [0] * n
    inn = [0] * n

    def force(x0: int, y0: int) -> bool:
        queue = [(x0, y0)]
        while queue:
            x, y = queue.pop()
            if out[x] >> y & 1:
                continue
            if out[y] >> x & 1:
                return False
            out[x] |= 1 << y
            inn[y] |= 1 << x
            for z in _bits(adj[y] & ~adj[x] & ~(1 << x)):
                queue.append((z, y))
            for z in _bits(adj[x] & ~adj[y] & ~(1 << y)):
                queue.append((x, z))
        return True

    for i in range(n):
        for j in _bits(adj[i]):
            if j > i and not (out[i] | inn[i]) >> j & 1:
                if not force(i, j):
                    return None
    for i in range(n):
        if (out[i] | inn[i]) != adj[i] or out[i] & inn[i]:
            return None
        for j in _bits(out[i]):
            if out[j] & ~out[i]:
                return None
    return tuple(out)

"""Deterministic poset families: trees, layered trees, Rado's order, fixtures.

Tree-shaped labels carry a leading "r" so the root is a printable token;
everything after it is the binary address of the node.  Same-parameter calls
always rebuild identical posets, and the seeded generators draw from their
own Random instance so results never depend on ambient state.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from . import limits
from .core import Poset, chain_of, dual, from_relation, induced
from .errors import PreconditionViolated, SizeLimitExceeded
from .incidence import IncidenceStructure, open_split


def _tree_labels(d: int) -> list:
    level = ["r"]
    labels = ["r"]
    for _ in range(d):
        level = [s + b for s in level for b in "01"]
        labels.extend(level)
    return labels


def binary_tree(d: int) -> Poset:
    """Binary addresses of depth at most d, ordered by prefix."""
    if d < 0:
        raise PreconditionViolated("depth must be nonnegative")
    cap = limits.active().max_elements
    if 2 ** (d + 1) - 1 > cap:
        raise SizeLimitExceeded(f"depth {d} tree exceeds cap {cap}")
    labels = _tree_labels(d)
    rows = []
    for s in labels:
        row = 0
        for j, t in enumerate(labels):
            if t.startswith(s):
                row |= 1 << j
        rows.append(row)
    return Poset(labels, rows)


def omega_eta(d: int) -> Poset:
    """The layered tree: each depth is a chain, and prefixes stay below.

    s is below t when s is no deeper and the address of s is lexicographically
    at most the address of t cut to the depth of s; this contains the prefix
    order of binary_tree(d).
    """
    if d < 0:
        raise PreconditionViolated("depth must be nonnegative")
    cap = limits.active().max_elements
    if 2 ** (d + 1) - 1 > cap:
        raise SizeLimitExceeded(f"depth {d} tree exceeds cap {cap}")
    labels = _tree_labels(d)
    rows = []
    for s in labels:
        bits = s[1:]
        row = 0
        for j, t in enumerate(labels):
            if len(s) <= len(t) and bits <= t[1 : len(s)]:
                row |= 1 << j
        rows.append(row)
    return Poset(labels, rows)


def rado(n: int) -> Poset:
    """Pairs (m, k) with m < k <= n; up inside a row, or jumping k < m'."""
    if n < 1:
        raise PreconditionViolated("rado needs n >= 1")
    cap = limits.active().max_elements
    count = (n + 1) * n // 2
    if count > cap:
        raise SizeLimitExceeded(f"{count} pairs exceeds cap {cap}")
    pairs = [(m, k) for m in range(n) for k in range(m + 1, n + 1)]
    labels = [f"({m},{k})" for m, k in pairs]
    rows = []
    for m, k in pairs:
        row = 0
        for j, (m2, k2) in enumerate(pairs):
            if (m == m2 and k <= k2) or k < m2:
                row |= 1 << j
        rows.append(row)
    return Poset(labels, rows)


def spider_a() -> Poset:
    """A least element under three disjoint two-element chains."""
    labels = ["0"] + [f"({i},{j})" for i in range(3) for j in range(2)]
    pairs = [("0", lab) for lab in labels[1:]]
    pairs += [(f"({i},0)", f"({i},1)") for i in range(3)]
    rows = []
    for a in labels:
        row = 0
        for j, b in enumerate(labels):
            if a == b or (a, b) in pairs:
                row |= 1 << j
        rows.append(row)
    return Poset(labels, rows)


def three_irreducible_b() -> Poset:
    """Seven-point restriction of the spider's open split.

    Keeps the lower copy of the least element, the lower copies of the chain
    bottoms, and the upper copies of the chain tops.
    """
    keep = ["(0,0)"]
    keep += [f"(({i},{j}),{j})" for i in range(3) for j in range(2)]
    return induced(open_split(spider_a()), keep)


def obstruction_catalog(d: int) -> dict:
    """The ten obstruction truncations at depth d, keyed by construction.

    The chain and its open split are self-dual, so only the other four
    members contribute duals.
    """
    chain = chain_of([str(i) for i in range(2 ** d)])
    small_chain = chain_of([str(i) for i in range(d)])
    tree = binary_tree(d)
    layered = omega_eta(d)
    out = {
        "chain": chain,
        "binary_tree": tree,
        "omega_eta": layered,
        "open_split_chain": open_split(small_chain),
        "open_split_binary_tree": open_split(tree),
        "open_split_omega_eta": open_split(layered),
    }
    out["dual_binary_tree"] = dual(tree)
    out["dual_omega_eta"] = dual(layered)
    out["dual_open_split_binary_tree"] = dual(out["open_split_binary_tree"])
    out["dual_open_split_omega_eta"] = dual(out["open_split_omega_eta"])
    return out


def random_poset(n: int, p: float, seed: int) -> Poset:
    """Transitive closure of a seeded random DAG on a shuffled labeling."""
    if not 0 <= p <= 1:
        raise PreconditionViolated("edge probability must lie in [0, 1]")
    cap = limits.active().max_elements
    if n > cap:
        raise SizeLimitExceeded(f"{n} elements exceeds cap {cap}")
    rng = random.Random(seed)
    labels = [f"v{i}" for i in range(n)]
    spots = rng.sample(range(n), n)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                pairs.append((labels[spots[i]], labels[spots[j]]))
    return from_relation(labels, pairs)


def random_incidence(nrows: int, ncols: int, p: float, seed: int) -> IncidenceStructure:
    """Seeded random incidence structure with iid cells."""
    if not 0 <= p <= 1:
        raise PreconditionViolated("cell probability must lie in [0, 1]")
    rng = random.Random(seed)
    rows = [f"x{i}" for i in range(nrows)]
    cols = [f"y{j}" for j in range(ncols)]
    pairs = [(x, y) for x in rows for y in cols if rng.random() < p]
    return IncidenceStructure.from_pairs(rows, cols, pairs)


def _refined_blocks(n: int, strict_up: list, strict_down: list) -> list:
    """Iso-invariant element classes, refined by neighbor class multisets."""
    color = [(strict_down[i].bit_count(), strict_up[i].bit_count()) for i in range(n)]
    for _ in range(n):
        fresh = []
        for i in range(n):
            below = sorted(color[j] for j in range(n) if strict_down[i] >> j & 1)
            above = sorted(color[j] for j in range(n) if strict_up[i] >> j & 1)
            fresh.append((color[i], tuple(below), tuple(above)))
        ranks = {c: r for r, c in enumerate(sorted(set(fresh)))}
        renamed = [ranks[c] for c in fresh]
        if renamed == color:
            break
        color = renamed
    blocks = {}
    for i, c in enumerate(color):
        blocks.setdefault(c, []).append(i)
    return [blocks[c] for c in sorted(blocks)]


def _canonical_code(n: int, up: list) -> tuple:
    strict_up = [up[i] & ~(1 << i) for i in range(n)]
    strict_down = [0] * n
    for i in range(n):
        for j in range(n):
            if strict_up[i] >> j & 1:
                strict_down[j] |= 1 << i
    blocks = _refined_blocks(n, strict_up, strict_down)
    best = None
    for pieces in _block_permutations(blocks):
        perm = [0] * n
        for spot, i in enumerate(pieces):
            perm[i] = spot
        code = tuple(
            sorted(
                (perm[i] << 8) | perm[j]
                for i in range(n)
                for j in range(n)
                if strict_up[i] >> j & 1
            )
        )
        if best is None or code < best:
            best = code
    return best if best is not None else ()


def _block_permutations(blocks: list) -> Iterator[list]:
    if not blocks:
        yield []
        return
    head, rest = blocks[0], blocks[1:]
    for arranged in permutations(head):
        for tail in _block_permutations(rest):
            yield list(arranged) + tail


@lru_cache(maxsize=None)
def _all_posets_cached(n: int) -> tuple:
    found = set()
    bit_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(bit_pairs)):
        up = [1 << i for i in range(n)]
        for b, (i, j) in enumerate(bit_pairs):
            if mask >> b & 1:
                up[i] |= 1 << j
        ok = True
        for i in range(n):
            row = up[i]
            for j in range(i + 1, n):
                if row >> j & 1 and up[j] & ~row:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        found.add(_canonical_code(n, up))
    labels = tuple(f"e{i}" for i in range(n))
    out = []
    for code in sorted(found):
        up = [1 << i for i in range(n)]
        for packed in code:
            up[packed >> 8] |= 1 << (packed & 0xFF)
        out.append(Poset(labels, up))
    return tuple(out)


def all_posets(n: int) -> Iterator[Poset]:
    """One representative per isomorphism class, in a fixed canonical order."""
    if n > 6:
        raise SizeLimitExceeded("exhaustive enumeration capped at 6 elements")
    if n < 0:
        raise PreconditionViolated("element count must be nonnegative")
    return iter(_all_posets_cached(n))

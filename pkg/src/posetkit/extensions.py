"""Linear extensions and the two-dimension boundary.

A linear extension separates the order when some covered pair x < z has an
element y, incomparable to both, sitting between them.  Extensions without
such triples are exactly the ones admitting a conjugate: reversing every
incomparable pair of a non-separating extension yields a second linear order
meeting it precisely in the original order.  Together with transitive
orientability of the incomparability graph this gives three independent
routes to "dimension at most two", and the module cross-checks all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import limits
from .core import (
    Graph,
    LinearOrder,
    Poset,
    _bits,
    all_linear_extensions,
    incomparability_graph,
    transitive_orientation,
)
from .dimension import Realizer, dm_dimension
from .errors import (
    InternalInconsistency,
    NotAnExtension,
    NotNonSeparating,
    PreconditionViolated,
    SizeLimitExceeded,
)


def linear_extensions(p: Poset) -> Iterator[LinearOrder]:
    """Every linear extension, deterministically by element index."""
    cap = limits.active().extension_elements
    if len(p) > cap:
        raise SizeLimitExceeded(f"extension enumeration capped at {cap} elements")
    return (LinearOrder(ext) for ext in all_linear_extensions(p))


@dataclass(frozen=True)
class SeparationWitness:
    """x below z in the order, y incomparable to both, but x, y, z in L."""

    x: str
    y: str
    z: str


def is_separating(p: Poset, ell: LinearOrder):
    """First witness triple in position order, or None for non-separating."""
    if not ell.is_extension_of(p):
        raise NotAnExtension("the linear order does not extend the poset")
    seq = [p.index(e) for e in ell.order]
    n = len(seq)
    for a in range(n):
        x = seq[a]
        for b in range(a + 1, n):
            y = seq[b]
            if p.leq_idx(x, y) or p.leq_idx(y, x):
                continue
            for c in range(b + 1, n):
                z = seq[c]
                if not p.leq_idx(x, z) or x == z:
                    continue
                if p.leq_idx(y, z) or p.leq_idx(z, y):
                    continue
                return SeparationWitness(p.elements[x], p.elements[y], p.elements[z])
    return None


def _prefix_violation(p: Poset, prefix: list, new: int) -> bool:
    """Appending `new` completes a separation triple with `new` as the top."""
    for a, x in enumerate(prefix):
        if not p.leq_idx(x, new) or x == new:
            continue
        for y in prefix[a + 1:]:
            if p.leq_idx(x, y) or p.leq_idx(y, x):
                continue
            if not p.leq_idx(y, new) and not p.leq_idx(new, y):
                return True
    return False


def enumerate_nonseparating(p: Poset) -> Iterator[LinearOrder]:
    """All non-separating extensions, in the same order as linear_extensions."""
    cap = limits.active().extension_elements
    if len(p) > cap:
        raise SizeLimitExceeded(f"extension enumeration capped at {cap} elements")
    n = len(p)
    down = [p.strict_down_row(i) for i in range(n)]
    prefix: list = []

    def rec(placed: int) -> Iterator[LinearOrder]:
        if len(prefix) == n:
            yield LinearOrder(tuple(p.elements[i] for i in prefix))
            return
        for i in range(n):
            bit = 1 << i
            if placed & bit or down[i] & ~placed:
                continue
            if _prefix_violation(p, prefix, i):
                continue
            prefix.append(i)
            yield from rec(placed | bit)
            prefix.pop()

    return rec(0)


def find_nonseparating_extension(p: Poset):
    """A non-separating extension, or None when the dimension exceeds two.

    Exhaustive witness-pruned search at small sizes; beyond the enumeration
    cap or budget, a realizer of dimension at most two supplies the answer
    (each member of such a realizer is itself non-separating).
    """
    lim = limits.active()
    if len(p) > lim.max_solver:
        raise SizeLimitExceeded(f"search capped at {lim.max_solver} elements")
    if len(p) <= lim.extension_elements:
        found, exhausted = _bounded_nonseparating_search(p, lim.extension_budget)
        if found is not None:
            return found
        if exhausted:
            return None
    k, realizer = dm_dimension(p)
    if k <= 2:
        member = realizer.extensions[0]
        if is_separating(p, member) is not None:
            raise InternalInconsistency("two-realizer member is separating")
        return member
    return None


def _bounded_nonseparating_search(p: Poset, budget: int):
    n = len(p)
    down = [p.strict_down_row(i) for i in range(n)]
    prefix: list = []
    steps = [budget]

    def rec(placed: int):
        if len(prefix) == n:
            return LinearOrder(tuple(p.elements[i] for i in prefix))
        for i in range(n):
            bit = 1 << i
            if placed & bit or down[i] & ~placed:
                continue
            if _prefix_violation(p, prefix, i):
                continue
            steps[0] -= 1
            if steps[0] < 0:
                return None
            prefix.append(i)
            got = rec(placed | bit)
            prefix.pop()
            if got is not None or steps[0] < 0:
                return got
        return None

    got = rec(0)
    return got, steps[0] >= 0


def conjugate(p: Poset, c: LinearOrder) -> LinearOrder:
    """The complement extension: reverse c on every incomparable pair.

    Only defined for non-separating c; the result is validated as a linear
    order and the pair (c, result) is verified to realize the order exactly.
    """
    witness = is_separating(p, c)
    if witness is not None:
        raise NotNonSeparating(
            f"separating triple ({witness.x}, {witness.y}, {witness.z})"
        )
    n = len(p)
    pos = [c.position(e) for e in p.elements]
    rows = []
    for i in range(n):
        row = p.up_row(i)
        for j in range(n):
            if i == j or p.leq_idx(i, j) or p.leq_idx(j, i):
                continue
            if pos[j] < pos[i]:
                row |= 1 << j
        rows.append(row)
    total = Poset(p.elements, rows)
    order = sorted(range(n), key=lambda i: -total.up_row(i).bit_count())
    flipped = LinearOrder(tuple(p.elements[i] for i in order))
    if not Realizer((c, flipped)).verify(p):
        raise InternalInconsistency("conjugate pair fails to realize the order")
    return flipped


@dataclass(frozen=True)
class Orientation:
    """One direction per graph edge, closed under composition."""

    vertices: tuple
    arcs: frozenset

    def verify(self, g: Graph) -> bool:
        if self.vertices != g.vertices:
            return False
        seen = set()
        for a, b in self.arcs:
            if not g.has_edge(a, b) or (b, a) in self.arcs:
                return False
            seen.add(frozenset((a, b)))
        if len(seen) != len(g.edges()):
            return False
        for a, b in self.arcs:
            for c, d in self.arcs:
                if b == c and (a, d) not in self.arcs:
                    return False
        return True


def is_comparability_graph(g: Graph):
    """A verified transitive orientation, or None (absence is a proof)."""
    cap = limits.active().max_solver
    if len(g) > cap:
        raise SizeLimitExceeded(f"orientation search capped at {cap} vertices")
    rows = transitive_orientation(g)
    if rows is None:
        return None
    arcs = frozenset(
        (g.vertices[i], g.vertices[j]) for i in range(len(g)) for j in _bits(rows[i])
    )
    orientation = Orientation(g.vertices, arcs)
    if not orientation.verify(g):
        raise InternalInconsistency("orientation fails its own verification")
    return orientation


def dim2_test(p: Poset) -> bool:
    """Three independent routes to "dimension at most two"; they must agree."""
    by_dimension = dm_dimension(p)[0] <= 2
    by_extension = find_nonseparating_extension(p) is not None
    by_orientation = is_comparability_graph(incomparability_graph(p)) is not None
    if by_dimension != by_extension or by_extension != by_orientation:
        raise InternalInconsistency(
            "two-dimension characterizations disagree: "
            f"dimension={by_dimension} extension={by_extension} "
            f"orientation={by_orientation}"
        )
    return by_dimension


def lemma24_check(p: Poset, ell: LinearOrder, segment: Iterable) -> bool:
    """Nested lower shadows over an initial segment of a non-separating extension.

    With D(z) the part of z's strict down-set inside the segment, checks for
    every incomparable pair x, y outside the segment that D(x), D(y) are
    nested, and that strict containment D(x) < D(y) forces y before x.
    """
    seg = frozenset(segment)
    for e in seg:
        p.index(e)
    if dm_dimension(p)[0] > 2:
        raise PreconditionViolated("order must have dimension at most two")
    if not ell.is_extension_of(p):
        raise PreconditionViolated("the linear order does not extend the poset")
    if is_separating(p, ell) is not None:
        raise PreconditionViolated("the extension is separating")
    if seg != frozenset(ell.order[: len(seg)]):
        raise PreconditionViolated("the set is not an initial segment of the extension")
    pos = ell.positions()
    outside = [e for e in p.elements if e not in seg]
    shadows = {
        e: frozenset(z for z in p.down_set(e) if z != e and z in seg) for e in outside
    }
    for a, x in enumerate(outside):
        for y in outside[a + 1:]:
            if p.leq(x, y) or p.leq(y, x):
                continue
            dx, dy = shadows[x], shadows[y]
            if not (dx <= dy or dy <= dx):
                return False
            if dx < dy and not pos[y] < pos[x]:
                return False
            if dy < dx and not pos[x] < pos[y]:
                return False
    return True


def t2_cover_check(d: int, sample: int = 200) -> bool:
    """In non-separating extensions of the depth-d binary tree, each internal
    node is immediately followed by one of its two children.

    Exhaustive for d at most 2; deeper trees take the first `sample`
    extensions in enumeration order.
    """
    if d > 4:
        raise SizeLimitExceeded("tree successor check capped at depth 4")
    from .generators import binary_tree

    tree = binary_tree(d)
    internal = [e for e in tree.elements if len(e) - 1 < d]
    with limits.temporary(extension_elements=max(len(tree), 1)):
        for count, ell in enumerate(enumerate_nonseparating(tree)):
            if d >= 3 and count >= sample:
                break
            pos = ell.positions()
            for v in internal:
                after = pos[v] + 1
                if after >= len(ell.order):
                    return False
                if ell.order[after] not in (v + "0", v + "1"):
                    return False
    return True

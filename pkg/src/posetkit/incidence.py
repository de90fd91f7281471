"""Incidence structures and the closure constructions built on them.

An incidence structure is a binary relation between a row ground set and a
column ground set.  The polarity it induces (lower/upper) yields the Galois
lattice of closed row sets; applied to a poset's own order this gives the
completion by cuts, and applied to the complement it gives the lattice of
initial segments.  Splits turn a structure into a bipartite poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import limits
from .core import Poset, _bits, dual, find_embedding, from_relation
from .errors import (
    DuplicateElement,
    InternalInconsistency,
    PreconditionViolated,
    SizeLimitExceeded,
    UnknownElement,
)


class IncidenceStructure:
    """Relation between labeled rows and columns, one column bitmask per row."""

    __slots__ = ("rows", "cols", "_rowidx", "_colidx", "_rel", "_colmasks")

    def __init__(self, rows: Sequence[str], cols: Sequence[str], rel: Sequence[int]):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        if len(set(self.rows)) != len(self.rows):
            raise DuplicateElement("duplicate row label")
        if len(set(self.cols)) != len(self.cols):
            raise DuplicateElement("duplicate column label")
        rel = tuple(rel)
        if len(rel) != len(self.rows):
            raise InternalInconsistency("relation row count mismatch")
        full = (1 << len(self.cols)) - 1
        for r in rel:
            if r & ~full:
                raise InternalInconsistency("relation row has stray bits")
        self._rel = rel
        self._rowidx = {x: i for i, x in enumerate(self.rows)}
        self._colidx = {y: j for j, y in enumerate(self.cols)}
        masks = [0] * len(self.cols)
        for i, r in enumerate(rel):
            for j in _bits(r):
                masks[j] |= 1 << i
        self._colmasks = tuple(masks)

    @classmethod
    def from_pairs(cls, rows: Sequence[str], cols: Sequence[str], pairs: Iterable):
        rows = tuple(rows)
        cols = tuple(cols)
        cap = limits.active().max_elements
        if len(rows) > cap or len(cols) > cap:
            raise SizeLimitExceeded(f"ground set exceeds cap {cap}")
        rowidx = {x: i for i, x in enumerate(rows)}
        colidx = {y: j for j, y in enumerate(cols)}
        if len(rowidx) != len(rows) or len(colidx) != len(cols):
            raise DuplicateElement("duplicate ground-set label")
        rel = [0] * len(rows)
        for x, y in pairs:
            if x not in rowidx:
                raise UnknownElement(f"unknown row {x!r}")
            if y not in colidx:
                raise UnknownElement(f"unknown column {y!r}")
            rel[rowidx[x]] |= 1 << colidx[y]
        return cls(rows, cols, rel)

    def __len__(self) -> int:
        return len(self.rows) * len(self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._rel == other._rel
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._rel))

    def __repr__(self) -> str:
        return f"IncidenceStructure({len(self.rows)}x{len(self.cols)})"

    def row_index(self, x: str) -> int:
        try:
            return self._rowidx[x]
        except KeyError:
            raise UnknownElement(f"unknown row {x!r}") from None

    def col_index(self, y: str) -> int:
        try:
            return self._colidx[y]
        except KeyError:
            raise UnknownElement(f"unknown column {y!r}") from None

    def has(self, x: str, y: str) -> bool:
        return bool(self._rel[self.row_index(x)] >> self.col_index(y) & 1)

    def row_mask(self, i: int) -> int:
        return self._rel[i]

    def col_mask(self, j: int) -> int:
        return self._colmasks[j]

    def pairs(self) -> tuple:
        out = []
        for i, x in enumerate(self.rows):
            for j in _bits(self._rel[i]):
                out.append((x, self.cols[j]))
        return tuple(out)


def order_structure(p: Poset, strict: bool = False) -> IncidenceStructure:
    """The structure (E, <=, E), or (E, <, E) when strict."""
    rows = [p.strict_up_row(i) if strict else p.up_row(i) for i in range(len(p))]
    return IncidenceStructure(p.elements, p.elements, rows)


def complement(r: IncidenceStructure) -> IncidenceStructure:
    full = (1 << len(r.cols)) - 1
    return IncidenceStructure(r.rows, r.cols, [full & ~m for m in r._rel])


def structure_dual(r: IncidenceStructure) -> IncidenceStructure:
    """Swap rows and columns (the inverse relation)."""
    return IncidenceStructure(r.cols, r.rows, r._colmasks)


def upper(r: IncidenceStructure, xs: Iterable[str]) -> frozenset:
    """Columns related to every row in xs (all columns for the empty set)."""
    mask = (1 << len(r.cols)) - 1
    for x in xs:
        mask &= r.row_mask(r.row_index(x))
    return frozenset(r.cols[j] for j in _bits(mask))


def lower(r: IncidenceStructure, ys: Iterable[str]) -> frozenset:
    """Rows related to every column in ys (all rows for the empty set)."""
    mask = (1 << len(r.rows)) - 1
    for y in ys:
        mask &= r.col_mask(r.col_index(y))
    return frozenset(r.rows[i] for i in _bits(mask))


# -- subset families ---------------------------------------------------------


@dataclass(frozen=True)
class SubsetFamily:
    ground: tuple
    members: frozenset

    def __post_init__(self):
        gset = frozenset(self.ground)
        for m in self.members:
            if not m <= gset:
                raise UnknownElement("family member leaves the ground set")


def down_family(p: Poset) -> SubsetFamily:
    return SubsetFamily(p.elements, frozenset(p.down_set(x) for x in p.elements))


def moore_closure(fam: SubsetFamily) -> SubsetFamily:
    """Close under intersections; the empty intersection contributes the ground set."""
    ground = frozenset(fam.ground)
    members = {ground} | set(fam.members)
    frontier = list(members)
    while frontier:
        m = frontier.pop()
        for other in list(members):
            inter = m & other
            if inter not in members:
                members.add(inter)
                frontier.append(inter)
    return SubsetFamily(fam.ground, frozenset(members))


# -- labeled lattices --------------------------------------------------------


def _render_subset(subset: frozenset, ground: Sequence[str]) -> str:
    return "{" + ",".join(x for x in ground if x in subset) + "}"


class LabeledLattice:
    """A lattice of subsets: underlying Poset ordered exactly by label inclusion."""

    __slots__ = ("underlying", "label", "ground")

    def __init__(self, underlying: Poset, label: Mapping[str, frozenset], ground):
        self.underlying = underlying
        self.label = dict(label)
        self.ground = tuple(ground)
        elems = underlying.elements
        if set(self.label) != set(elems):
            raise InternalInconsistency("label map does not cover the lattice")
        gidx = {g: i for i, g in enumerate(self.ground)}
        masks = []
        for e in elems:
            m = 0
            for x in self.label[e]:
                if x not in gidx:
                    raise UnknownElement(f"label member {x!r} outside the ground set")
                m |= 1 << gidx[x]
            masks.append(m)
        if len(set(masks)) != len(masks):
            raise InternalInconsistency("label map is not injective")
        n = len(elems)
        for i in range(n):
            for j in range(n):
                incl = masks[i] & ~masks[j] == 0
                if underlying.leq_idx(i, j) != incl:
                    raise InternalInconsistency("lattice order is not label inclusion")
        mask_set = set(masks)
        if (1 << len(self.ground)) - 1 not in mask_set:
            raise InternalInconsistency("lattice misses the full ground set")
        for i in range(n):
            for j in range(i + 1, n):
                if masks[i] & masks[j] not in mask_set:
                    raise InternalInconsistency("labels not closed under intersection")

    def __len__(self) -> int:
        return len(self.underlying)

    def closed_sets(self) -> frozenset:
        return frozenset(self.label.values())

    def element_of(self, subset) -> str:
        name = _render_subset(frozenset(subset), self.ground)
        if name not in self.label or self.label[name] != frozenset(subset):
            raise UnknownElement("subset is not a member of this lattice")
        return name

    @property
    def top(self) -> str:
        return max(self.label, key=lambda e: len(self.label[e]))

    @property
    def bottom(self) -> str:
        return min(self.label, key=lambda e: len(self.label[e]))


def _lattice_from_masks(masks: Sequence[int], ground: Sequence[str]) -> LabeledLattice:
    closed = [frozenset(ground[i] for i in _bits(m)) for m in masks]
    labels = [_render_subset(c, ground) for c in closed]
    rows = []
    for a in masks:
        row = 0
        for j, b in enumerate(masks):
            if a & ~b == 0:
                row |= 1 << j
        rows.append(row)
    poset = Poset(labels, rows)
    return LabeledLattice(poset, dict(zip(labels, closed)), ground)


def _next_closure_enumerate(m: int, close) -> list:
    """All closed sets of `close` over {0..m-1} as masks, in lectic order."""
    cap = limits.active().max_lattice
    out = [close(0)]
    while True:
        cur = out[-1]
        nxt = None
        for i in range(m - 1, -1, -1):
            bit = 1 << i
            if cur & bit:
                cur &= ~bit
                continue
            b = close(cur | bit)
            if (b & ~cur) & (bit - 1) == 0:
                nxt = b
                break
        if nxt is None:
            return out
        out.append(nxt)
        if len(out) > cap:
            raise SizeLimitExceeded(f"more than {cap} closed sets")


def galois_lattice(r: IncidenceStructure) -> LabeledLattice:
    """Lattice of closed row sets lower(upper(X)), enumerated in lectic order."""
    m = len(r.rows)
    full_rows = (1 << m) - 1
    full_cols = (1 << len(r.cols)) - 1
    rel = r._rel
    colmasks = r._colmasks

    def close(x: int) -> int:
        ys = full_cols
        for i in _bits(x):
            ys &= rel[i]
        zs = full_rows
        for j in _bits(ys):
            zs &= colmasks[j]
        return zs

    masks = _next_closure_enumerate(m, close)
    return _lattice_from_masks(masks, r.rows)


def macneille(p: Poset) -> LabeledLattice:
    """Completion by cuts: the Galois lattice of the order relation itself."""
    return galois_lattice(order_structure(p))


def initial_segments(p: Poset) -> LabeledLattice:
    """All down-sets of p, cross-checked against the complement-relation lattice."""
    n = len(p)
    down = [p.strict_down_row(i) for i in range(n)]

    def close(x: int) -> int:
        out = x
        for i in _bits(x):
            out |= down[i]
        return out

    masks = _next_closure_enumerate(n, close)
    direct = _lattice_from_masks(masks, p.elements)
    # closed sets of the complemented dual order are exactly the down-sets
    other = galois_lattice(complement(order_structure(dual(p))))
    if direct.closed_sets() != other.closed_sets():
        raise InternalInconsistency(
            "down-set enumeration disagrees with the complement-relation lattice"
        )
    return direct


# -- Ferrers and interval tests ----------------------------------------------


@dataclass(frozen=True)
class FerrersWitness:
    """Crossing pair: (x,y) and (x2,y2) related, but (x,y2) and (x2,y) are not."""

    x: str
    y: str
    x2: str
    y2: str


def is_ferrers(r: IncidenceStructure):
    """(flag, witness): quadruple test and nested-rows test, which must agree."""
    nrows = len(r.rows)
    witness = None
    for i in range(nrows):
        if witness:
            break
        for k in range(nrows):
            a = r._rel[i] & ~r._rel[k]
            b = r._rel[k] & ~r._rel[i]
            if a and b:
                j = next(_bits(a))
                l = next(_bits(b))
                witness = FerrersWitness(r.rows[i], r.cols[j], r.rows[k], r.cols[l])
                break
    # independent route: row sets sorted by size must form an inclusion chain
    ordered = sorted(range(nrows), key=lambda i: (r._rel[i].bit_count(), r._rel[i]))
    nested = all(
        r._rel[ordered[t]] & ~r._rel[ordered[t + 1]] == 0 for t in range(nrows - 1)
    )
    if nested != (witness is None):
        raise InternalInconsistency("Ferrers tests disagree")
    return witness is None, witness


def bipartite(r: IncidenceStructure) -> Poset:
    """Height-one poset: row copies below the column copies they relate to."""
    nr, nc = len(r.rows), len(r.cols)
    cap = limits.active().max_elements
    if nr + nc > cap:
        raise SizeLimitExceeded(f"bipartite poset has {nr + nc} elements, cap {cap}")
    labels = [f"({x},0)" for x in r.rows] + [f"({y},1)" for y in r.cols]
    rows = [(1 << i) | (r._rel[i] << nr) for i in range(nr)]
    rows += [1 << (nr + j) for j in range(nc)]
    return Poset(labels, rows)


def split(p: Poset) -> Poset:
    """Bipartite poset of the order relation itself."""
    return bipartite(order_structure(p))


def open_split(p: Poset) -> Poset:
    """Bipartite poset of the strict order."""
    return bipartite(order_structure(p, strict=True))


def two_plus_two() -> Poset:
    return from_relation(["a", "b", "c", "d"], [("a", "b"), ("c", "d")], mode="covers")


def is_interval_order(p: Poset) -> bool:
    """Strict order is Ferrers; cross-checked against 2+2-freeness."""
    flag, _ = is_ferrers(order_structure(p, strict=True))
    free = find_embedding(two_plus_two(), p) is None
    if free != flag:
        raise InternalInconsistency("Ferrers test disagrees with 2+2 search")
    return flag


# -- codings -----------------------------------------------------------------


@dataclass(frozen=True)
class Coding:
    """Pair of maps (rows, cols) -> rows'/cols' with x R y iff f(x) R' g(y)."""

    f: Mapping[str, str]
    g: Mapping[str, str]


def is_coding(r: IncidenceStructure, r2: IncidenceStructure, c: Coding) -> bool:
    """Verify the biconditional on every pair; totality is a precondition."""
    if set(c.f) != set(r.rows) or set(c.g) != set(r.cols):
        raise PreconditionViolated("coding maps must be total on the ground sets")
    for x in r.rows:
        for y in r.cols:
            if r.has(x, y) != r2.has(c.f[x], c.g[y]):
                return False
    return True


def lattice_order_structure(lat: LabeledLattice) -> IncidenceStructure:
    """(T, <=, T) for a labeled lattice, reusing its element labels."""
    return order_structure(lat.underlying)


def canonical_coding(r: IncidenceStructure) -> Coding:
    """The closure coding into (Gal(R), inclusion, Gal(R)); verified before return.

    Rows map to the closure of their singleton, columns to the rows below them.
    """
    lat = galois_lattice(r)
    f = {}
    for x in r.rows:
        f[x] = lat.element_of(lower(r, upper(r, [x])))
    g = {}
    for y in r.cols:
        g[y] = lat.element_of(lower(r, [y]))
    coding = Coding(f, g)
    if not is_coding(r, lattice_order_structure(lat), coding):
        raise InternalInconsistency("canonical coding failed verification")
    return coding

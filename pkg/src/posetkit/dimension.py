"""Order dimension, exactly, with certificates.

The solver colors critical pairs: a family of linear extensions realizes the
order iff every critical pair is reversed somewhere, and a set of reversals
fits one extension iff the order plus those reversal arcs stays acyclic.  So
the dimension is the least number of acyclicity-respecting classes.  Two is
decided fast through a transitive orientation of the incomparability graph;
higher values go through a conflict-guided exact search.  Ferrers dimension
reduces to the dimension of the Galois lattice, and each realizer extension
is turned back into one Ferrers relation of a verified cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import limits
from .core import (
    EmbeddingMap,
    LinearOrder,
    Poset,
    _bits,
    chain_of,
    direct_product,
    incomparability_graph,
    transitive_orientation,
)
from .core import all_linear_extensions
from .errors import (
    InternalInconsistency,
    InvalidRealizer,
    SizeLimitExceeded,
)
from .incidence import (
    IncidenceStructure,
    galois_lattice,
    is_ferrers,
    lower,
    order_structure,
    upper,
)


@dataclass(frozen=True)
class FerrersCover:
    """Ferrers relations over shared ground sets whose intersection is the input."""

    members: tuple

    def __post_init__(self):
        if not self.members:
            raise InvalidRealizer("a Ferrers cover needs at least one member")

    def __len__(self) -> int:
        return len(self.members)

    def verify(self, r: IncidenceStructure) -> bool:
        inter = [(1 << len(r.cols)) - 1] * len(r.rows)
        for member in self.members:
            if member.rows != r.rows or member.cols != r.cols:
                return False
            if not is_ferrers(member)[0]:
                return False
            for i in range(len(r.rows)):
                if r.row_mask(i) & ~member.row_mask(i):
                    return False
                inter[i] &= member.row_mask(i)
        return all(inter[i] == r.row_mask(i) for i in range(len(r.rows)))


@dataclass(frozen=True)
class Realizer:
    """Linear extensions whose intersection is exactly the order."""

    extensions: tuple

    def __post_init__(self):
        if not self.extensions:
            raise InvalidRealizer("a realizer needs at least one extension")

    def __len__(self) -> int:
        return len(self.extensions)

    def verify(self, p: Poset) -> bool:
        positions = []
        for ext in self.extensions:
            if not ext.is_extension_of(p):
                return False
            positions.append(ext.positions())
        for a in p.elements:
            for b in p.elements:
                if a == b:
                    continue
                everywhere = all(pos[a] < pos[b] for pos in positions)
                if everywhere != p.lt(a, b):
                    return False
        return True


def critical_pairs(p: Poset) -> tuple:
    """Ordered incomparable pairs (a, b) with down(a) under b and up(b) over a."""
    return tuple(
        (p.elements[i], p.elements[j]) for i, j in _critical_index_pairs(p)
    )


def _critical_index_pairs(p: Poset) -> list:
    n = len(p)
    out = []
    for i in range(n):
        for j in range(n):
            if i == j or p.leq_idx(i, j) or p.leq_idx(j, i):
                continue
            if p.strict_down_row(i) & ~p.strict_down_row(j):
                continue
            if p.strict_up_row(j) & ~p.strict_up_row(i):
                continue
            out.append((i, j))
    return out


def _topological_extension(p: Poset, before: dict) -> LinearOrder:
    """Linear extension of p honoring extra precedence arcs, smallest index first."""
    n = len(p)
    preds = [p.strict_down_row(i) for i in range(n)]
    for u, vs in before.items():
        for v in _bits(vs):
            preds[v] |= 1 << u
    placed = 0
    order = []
    while len(order) < n:
        for i in range(n):
            if not placed >> i & 1 and preds[i] & ~placed == 0:
                placed |= 1 << i
                order.append(p.elements[i])
                break
        else:
            raise InternalInconsistency("precedence arcs form a cycle")
    return LinearOrder(tuple(order))


def _realizer_from_classes(p: Poset, classes: list) -> Realizer:
    exts = []
    for cls in classes:
        before: dict = {}
        for a, b in cls:
            before.setdefault(b, 0)
            before[b] |= 1 << a  # reverse the pair: b comes first
        exts.append(_topological_extension(p, before))
    realizer = Realizer(tuple(exts))
    if not realizer.verify(p):
        raise InternalInconsistency("constructed realizer fails verification")
    return realizer


def _chain_realizer(p: Poset) -> Realizer:
    order = sorted(p.elements, key=lambda e: -p.up_row(p.index(e)).bit_count())
    return Realizer((LinearOrder(tuple(order)),))


def _orientation_realizer(p: Poset, out_rows) -> Realizer:
    n = len(p)
    exts = []
    for flip in (False, True):
        extra = [0] * n
        for i in range(n):
            for j in _bits(out_rows[i]):
                if flip:
                    extra[j] |= 1 << i
                else:
                    extra[i] |= 1 << j
        rows = [p.up_row(i) | extra[i] for i in range(n)]
        # order union conjugate orientation must be a linear order
        total = Poset(p.elements, rows)
        order = sorted(total.elements, key=lambda e: -total.up_row(total.index(e)).bit_count())
        exts.append(LinearOrder(tuple(order)))
    realizer = Realizer(tuple(exts))
    if not realizer.verify(p):
        raise InternalInconsistency("conjugate orientation fails as a realizer")
    return realizer


class _Budget:
    __slots__ = ("left",)

    def __init__(self, amount: int):
        self.left = amount

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise SizeLimitExceeded("dimension search budget exhausted")


class _ClassState:
    """Reachability rows per color class, with an undo trail."""

    __slots__ = ("reach", "trail")

    def __init__(self, p: Poset):
        self.reach = [p.up_row(i) for i in range(len(p))]
        self.trail: list = []

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int):
        while len(self.trail) > mark:
            v, old = self.trail.pop()
            self.reach[v] = old

    def add(self, a: int, b: int) -> bool:
        """Require b before a; False when that closes a cycle."""
        reach = self.reach
        if reach[a] >> b & 1:
            return False
        add_mask = reach[a]
        for v in range(len(reach)):
            if reach[v] >> b & 1 and add_mask & ~reach[v]:
                self.trail.append((v, reach[v]))
                reach[v] |= add_mask
        return True


def _greedy_clique(conf: list) -> list:
    order = sorted(range(len(conf)), key=lambda t: -conf[t].bit_count())
    clique: list = []
    mask = ~0
    for t in order:
        if mask >> t & 1 or not clique:
            clique.append(t)
            mask &= conf[t]
    return clique


def _connected_order(m: int, conf: list, clique: list) -> list:
    """Clique first, then always the pair most in conflict with placed ones.

    Keeping consecutive pairs entangled makes both propagation and the
    blocked-class masks bite as early as possible.
    """
    placed = list(clique)
    placed_mask = 0
    for t in clique:
        placed_mask |= 1 << t
    while len(placed) < m:
        best = None
        for t in range(m):
            if placed_mask >> t & 1:
                continue
            key = ((conf[t] & placed_mask).bit_count(), conf[t].bit_count(), -t)
            if best is None or key > best[0]:
                best = (key, t)
        placed.append(best[1])
        placed_mask |= 1 << best[1]
    return placed


def _greedy_classes(p: Poset, crit: list, order: list):
    states: list = []
    classes: list = []
    for t in order:
        i, j = crit[t]
        for c, st in enumerate(states):
            mark = st.mark()
            if st.add(i, j):
                classes[c].append(t)
                break
            st.undo(mark)
        else:
            st = _ClassState(p)
            if not st.add(i, j):
                raise InternalInconsistency("single critical pair cannot be reversed")
            states.append(st)
            classes.append([t])
    return classes


def _exact_classes(p: Poset, crit: list, order: list, conf: list, k: int, budget: _Budget):
    states = [_ClassState(p) for _ in range(k)]
    blocked = [0] * k
    assignment = [-1] * len(order)

    def rec(step: int, used: int):
        if step == len(order):
            return True
        t = order[step]
        i, j = crit[t]
        for c in range(min(used + 1, k)):
            if blocked[c] >> t & 1:
                continue
            budget.spend()
            st = states[c]
            mark = st.mark()
            if st.add(i, j):
                old_blocked = blocked[c]
                blocked[c] |= conf[t]
                assignment[step] = c
                if rec(step + 1, max(used, c + 1)):
                    return True
                blocked[c] = old_blocked
            st.undo(mark)
        return False

    if not rec(0, 0):
        return None
    classes: list = [[] for _ in range(k)]
    for step, t in enumerate(order):
        classes[assignment[step]].append(t)
    return [cls for cls in classes if cls]


def dm_dimension(p: Poset):
    """(k, Realizer): least number of extensions intersecting to the order.

    Chains, the empty poset and singletons give 1.  Two is decided through a
    transitive orientation of the incomparability graph; from three upward an
    exact branch-and-bound over critical-pair classes runs between a conflict
    clique lower bound and a greedy upper bound.
    """
    cap = limits.active().max_solver
    if len(p) > cap:
        raise SizeLimitExceeded(f"dimension solver capped at {cap} elements")
    if p.is_chain():
        return 1, _chain_realizer(p)
    out_rows = transitive_orientation(incomparability_graph(p))
    if out_rows is not None:
        return 2, _orientation_realizer(p, out_rows)

    crit = _critical_index_pairs(p)
    if not crit:
        raise InternalInconsistency("non-chain order without critical pairs")
    m = len(crit)
    conf = [0] * m
    for s in range(m):
        a, b = crit[s]
        for t in range(s + 1, m):
            c, d = crit[t]
            if p.leq_idx(a, d) and p.leq_idx(c, b):
                conf[s] |= 1 << t
                conf[t] |= 1 << s
    clique = _greedy_clique(conf)
    order = _connected_order(m, conf, clique)
    classes = _greedy_classes(p, crit, order)
    upper_k = len(classes)
    # the failed orientation test above already refutes dimension 2
    lower_k = max(3, len(clique))
    budget = _Budget(limits.active().dimension_budget)
    for k in range(lower_k, upper_k):
        found = _exact_classes(p, crit, order, conf, k, budget)
        if found is not None:
            classes = found
            break
    realizer = _realizer_from_classes(p, [[crit[t] for t in cls] for cls in classes])
    return len(realizer), realizer


# -- independent oracle -------------------------------------------------------


def dm_dimension_oracle(p: Poset) -> int:
    """Minimum realizer size by exhaustive cover of reversal requirements.

    Enumerates every linear extension and set-covers the incomparable ordered
    pairs; shares no code with the solver beyond the extension generator.
    """
    cap = limits.active().oracle_elements
    if len(p) > cap:
        raise SizeLimitExceeded(f"dimension oracle capped at {cap} elements")
    n = len(p)
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and not p.leq_idx(i, j) and not p.leq_idx(j, i)
    ]
    if not pairs:
        return 1
    masks = set()
    for ext in all_linear_extensions(p):
        pos = {e: r for r, e in enumerate(ext)}
        m = 0
        for t, (i, j) in enumerate(pairs):
            if pos[p.elements[j]] < pos[p.elements[i]]:
                m |= 1 << t
        masks.add(m)
    keep = [m for m in masks if not any(m != o and m & ~o == 0 for o in masks)]
    keep.sort(key=lambda m: -m.bit_count())
    universe = (1 << len(pairs)) - 1
    covering = [[m for m in keep if m >> t & 1] for t in range(len(pairs))]

    def reaches(uncovered: int, depth: int) -> bool:
        if not uncovered:
            return True
        if depth == 0:
            return False
        t = next(_bits(uncovered))
        return any(reaches(uncovered & ~m, depth - 1) for m in covering[t])

    k = 1
    while not reaches(universe, k):
        k += 1
    return k


# -- Ferrers and interval dimension -------------------------------------------


def ferrers_dimension(r: IncidenceStructure):
    """(k, FerrersCover): least Ferrers relations containing r intersecting to r.

    Equals the dimension of the Galois lattice; each realizer extension L
    yields the Ferrers relation {(x,y): f(x) at or below g(y) in L} through
    the closure coding, and the bundle is verified before it is returned.
    """
    lat = galois_lattice(r)
    f = {x: lat.element_of(lower(r, upper(r, [x]))) for x in r.rows}
    g = {y: lat.element_of(lower(r, [y])) for y in r.cols}
    k, realizer = dm_dimension(lat.underlying)
    members = []
    for ext in realizer.extensions:
        pos = ext.positions()
        rows = []
        for x in r.rows:
            mask = 0
            for cj, y in enumerate(r.cols):
                if pos[f[x]] <= pos[g[y]]:
                    mask |= 1 << cj
            rows.append(mask)
        member = IncidenceStructure(r.rows, r.cols, rows)
        members.append(member)
    cover = FerrersCover(tuple(members))
    if not cover.verify(r):
        raise InternalInconsistency("synthesized Ferrers cover fails verification")
    if len(cover.members) != k:
        raise InternalInconsistency("Ferrers cover size drifted from the dimension")
    return k, cover


def interval_dimension(p: Poset) -> int:
    """Ferrers dimension of the strict order (interval orders: 1)."""
    return ferrers_dimension(order_structure(p, strict=True))[0]


def ferrers_dimension_oracle(r: IncidenceStructure) -> int:
    """Minimum Ferrers cover size by exhaustive enumeration over absent cells."""
    avoid = _maximal_avoid_masks(r)
    zeros_mask = (1 << len(_zero_cells(r))) - 1
    if zeros_mask == 0:
        return 1

    def reaches(uncovered: int, depth: int) -> bool:
        if not uncovered:
            return True
        if depth == 0:
            return False
        t = next(_bits(uncovered))
        return any(reaches(uncovered & ~m, depth - 1) for m in avoid if m >> t & 1)

    k = 1
    while not reaches(zeros_mask, k):
        k += 1
    return k


def minimal_ferrers_cover_oracle(r: IncidenceStructure, k: int):
    """A verified Ferrers cover with exactly k members, or None if k is too few.

    Independent of the solver: every way of filling absent cells is tried,
    so the search is limited to small structures.
    """
    zeros = _zero_cells(r)
    avoid = _maximal_avoid_masks(r)
    universe = (1 << len(zeros)) - 1
    chosen = _min_cover(universe, avoid)
    if chosen is None or len(chosen) > max(k, 0):
        return None
    members = [_member_avoiding(r, zeros, m) for m in chosen]
    full = (1 << len(r.cols)) - 1
    while len(members) < k:
        members.append(IncidenceStructure(r.rows, r.cols, [full] * len(r.rows)))
    cover = FerrersCover(tuple(members))
    if not cover.verify(r):
        raise InternalInconsistency("oracle cover fails verification")
    return cover


def _zero_cells(r: IncidenceStructure) -> list:
    cap = limits.active().ferrers_oracle_cells
    if len(r.rows) * len(r.cols) > cap:
        raise SizeLimitExceeded(f"Ferrers oracle capped at {cap} cells")
    return [
        (i, j)
        for i in range(len(r.rows))
        for j in range(len(r.cols))
        if not r.row_mask(i) >> j & 1
    ]


def _maximal_avoid_masks(r: IncidenceStructure) -> list:
    """For each Ferrers superset of r, the set of absent cells it leaves absent."""
    zeros = _zero_cells(r)
    base = [r.row_mask(i) for i in range(len(r.rows))]
    found = set()
    for sub in range(1 << len(zeros)):
        rows = list(base)
        for t in _bits(sub):
            i, j = zeros[t]
            rows[i] |= 1 << j
        ordered = sorted(rows, key=lambda mk: (mk.bit_count(), mk))
        if all(ordered[t] & ~ordered[t + 1] == 0 for t in range(len(rows) - 1)):
            found.add((1 << len(zeros)) - 1 & ~sub)
    kept = [m for m in found if not any(m != o and m & ~o == 0 for o in found)]
    kept.sort(key=lambda m: -m.bit_count())
    return kept


def _min_cover(universe: int, masks: list):
    if universe == 0:
        return []
    best: list = [None]

    def rec(uncovered: int, chosen: list, depth: int):
        if not uncovered:
            best[0] = list(chosen)
            return
        if depth == 0:
            return
        t = next(_bits(uncovered))
        for m in masks:
            if m >> t & 1:
                chosen.append(m)
                rec(uncovered & ~m, chosen, depth - 1)
                chosen.pop()
                if best[0] is not None:
                    return

    k = 1
    while best[0] is None and k <= max(len(masks), 1):
        rec(universe, [], k)
        k += 1
    return best[0]


def _member_avoiding(r: IncidenceStructure, zeros: list, avoid_mask: int) -> IncidenceStructure:
    full = (1 << len(r.cols)) - 1
    rows = [full] * len(r.rows)
    for t in _bits(avoid_mask):
        i, j = zeros[t]
        rows[i] &= ~(1 << j)
    return IncidenceStructure(r.rows, r.cols, rows)


# -- chain product embedding ---------------------------------------------------


def chain_product_host(members: int, size: int) -> Poset:
    """Direct product of `members` chains with `size` elements each."""
    labels = [str(i) for i in range(size)]
    host = chain_of(labels)
    for _ in range(members - 1):
        host = direct_product(host, chain_of(labels))
    return host


def chain_product_embedding(p: Poset, r: Realizer) -> EmbeddingMap:
    """Rank map of p into a product of len(r) chains, verified against the host."""
    if not r.verify(p):
        raise InvalidRealizer("the supplied realizer does not realize the order")
    n = len(p)
    if n == 0:
        return EmbeddingMap({})
    host = chain_product_host(len(r), n)
    poss = [ext.positions() for ext in r.extensions]
    assignment = {}
    for x in p.elements:
        lab = str(poss[0][x])
        for pos in poss[1:]:
            lab = f"({lab},{pos[x]})"
        assignment[x] = lab
    emb = EmbeddingMap(assignment)
    if not emb.verify(p, host):
        raise InternalInconsistency("chain product embedding fails verification")
    return emb

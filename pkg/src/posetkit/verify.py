"""Batch suites replaying the package's structural identities on many inputs.

Each suite runs a fixed property list over every isomorphism class up to the
exhaustive cap plus a seeded stream of random instances, and reports one
pass/fail verdict per instance.  Failures carry the instance as document
text, so any reported violation can be re-parsed and re-run in isolation.
All module operations are called through names bound at import time; tests
corrupt one binding to confirm the harness notices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import limits
from .core import (
    EmbeddingMap,
    Poset,
    chain_of,
    direct_product,
    find_embedding,
    ordinal_product_2,
    width,
)
from .dimension import dm_dimension, ferrers_dimension, interval_dimension
from .errors import InternalInconsistency, PosetKitError, UnknownSuite
from .extensions import conjugate, dim2_test, enumerate_nonseparating, find_nonseparating_extension, lemma24_check, t2_cover_check
from .generators import all_posets, binary_tree, random_incidence, random_poset
from .incidence import (
    IncidenceStructure,
    bipartite,
    galois_lattice,
    initial_segments,
    is_interval_order,
    lower,
    macneille,
    open_split,
    order_structure,
    split,
    upper,
)
from .io import emit_incidence, emit_poset, parse_document
from .lattice import (
    chain_factorization,
    dilworth_check,
    embeds_in_chains,
    interval_spectrum_check,
    is_distributive,
    is_lattice,
    join_irreducibles,
    spectrum,
)

SUITES = ("identities", "splits", "galois", "dilworth", "theorem11", "lemma24", "bouchet")

# every poset-driven suite runs exhaustively up to this size; a larger
# --max-size only widens the random tier
_EXHAUSTIVE_CAP = 6


@dataclass(frozen=True)
class Failure:
    instance: str
    identity: str
    document: str


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    instances: int
    passed: int
    failures: tuple

    def __post_init__(self):
        if self.passed + self.failed != self.instances:
            raise InternalInconsistency("report counts do not add up")

    @property
    def failed(self) -> int:
        return len({f.instance for f in self.failures})

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
            "failures": [
                {"instance": f.instance, "identity": f.identity, "document": f.document}
                for f in self.failures
            ],
        }

    def as_text(self) -> str:
        out = [
            f"suite {self.suite}",
            f"instances {self.instances}",
            f"passed {self.passed}",
            f"failed {self.failed}",
        ]
        for f in self.failures:
            out.append(f"failure {f.instance}: {f.identity}")
        return "\n".join(out) + "\n"


def _child_seeds(seed: int, count: int) -> list:
    rng = random.Random(seed)
    return [rng.randrange(2 ** 32) for _ in range(count)]


def _random_sizes(max_size: int, trials: int) -> list:
    low = min(3, max(0, max_size))
    span = list(range(low, max_size + 1)) or [max(0, max_size)]
    probs = (0.3, 0.5, 0.7)
    return [(span[t % len(span)], probs[t % 3]) for t in range(trials)]


def _poset_instances(cap: int, max_size: int, trials: int, seed: int) -> list:
    out = []
    for n in range(min(max_size, cap) + 1):
        for idx, p in enumerate(all_posets(n)):
            out.append((f"class/n={n}/i={idx:03d}", emit_poset(p, f"class_{n}_{idx}"), p))
    seeds = _child_seeds(seed, trials)
    for t, (size, prob) in enumerate(_random_sizes(max_size, trials)):
        p = random_poset(size, prob, seeds[t])
        out.append((f"random/t={t:03d}", emit_poset(p, f"random_{t}"), p))
    return out


def _incidence_instances(bound: int, trials: int, seed: int, exhaustive: bool) -> list:
    out = []
    if exhaustive:
        for idx, r in enumerate(_incidence_classes(bound)):
            out.append((f"incidence/i={idx:03d}", emit_incidence(r, f"class_{idx}"), r))
    seeds = _child_seeds(seed + 1, trials)
    probs = (0.3, 0.5, 0.7)
    for t in range(trials):
        nr = 1 + t % bound
        nc = 1 + (t // bound) % bound
        r = random_incidence(nr, nc, probs[t % 3], seeds[t])
        out.append((f"incidence/t={t:03d}", emit_incidence(r, f"random_{t}"), r))
    return out


def _incidence_classes(bound: int):
    """One representative per row/column-permutation class, fixed order."""
    from itertools import permutations

    reps = []
    seen = set()
    for nr in range(bound + 1):
        for nc in range(bound + 1):
            for mask in range(1 << (nr * nc)):
                rows = [(mask >> (i * nc)) & ((1 << nc) - 1) for i in range(nr)]
                best = None
                for cperm in permutations(range(nc)):
                    shuffled = sorted(
                        sum(((r >> j) & 1) << k for k, j in enumerate(cperm))
                        for r in rows
                    )
                    code = (nr, nc, tuple(shuffled))
                    if best is None or code < best:
                        best = code
                if best in seen:
                    continue
                seen.add(best)
                pairs = [
                    (f"x{i}", f"y{j}") for i in range(nr) for j in range(nc) if rows[i] >> j & 1
                ]
                reps.append(
                    IncidenceStructure.from_pairs(
                        [f"x{i}" for i in range(nr)], [f"y{j}" for j in range(nc)], pairs
                    )
                )
    return reps


# -- per-suite property lists ------------------------------------------------


def _identity_problems(p: Poset) -> list:
    problems = []
    dm = dm_dimension(p)[0]
    closed = order_structure(p)
    fdim_closed = ferrers_dimension(closed)[0]
    if fdim_closed != dm:
        problems.append(f"closed-structure Ferrers dimension {fdim_closed}, order dimension {dm}")
    idim = interval_dimension(p)
    sp = split(p)
    osp = open_split(p)
    idim_sp = interval_dimension(sp)
    idim_osp = interval_dimension(osp)
    dm_sp = dm_dimension(sp)[0]
    dm_osp = dm_dimension(osp)[0]
    if dm != idim_sp:
        problems.append(f"split interval dimension {idim_sp}, order dimension {dm}")
    if idim != idim_osp:
        problems.append(f"open-split interval dimension {idim_osp}, interval dimension {idim}")
    if not dm <= dm_sp <= dm + 1:
        problems.append(f"split dimension {dm_sp} outside [{dm}, {dm + 1}]")
    if not idim <= dm_osp <= idim + 1:
        problems.append(f"open-split dimension {dm_osp} outside [{idim}, {idim + 1}]")
    if not idim_sp <= dm_sp <= idim_sp + 1:
        problems.append(f"split violates the bipartite dimension bracket ({idim_sp}, {dm_sp})")
    if not idim_osp <= dm_osp <= idim_osp + 1:
        problems.append(f"open split violates the bipartite dimension bracket ({idim_osp}, {dm_osp})")
    gal_closed = dm_dimension(galois_lattice(closed).underlying)[0]
    if not fdim_closed == idim_sp == gal_closed:
        problems.append(
            "closed structure: Ferrers dimension, bipartite interval dimension, "
            f"and Galois-lattice dimension differ ({fdim_closed}, {idim_sp}, {gal_closed})"
        )
    strict = order_structure(p, strict=True)
    fdim_strict = ferrers_dimension(strict)[0]
    gal_strict = dm_dimension(galois_lattice(strict).underlying)[0]
    if not fdim_strict == idim_osp == gal_strict:
        problems.append(
            "strict structure: Ferrers dimension, bipartite interval dimension, "
            f"and Galois-lattice dimension differ ({fdim_strict}, {idim_osp}, {gal_strict})"
        )
    if is_interval_order(p) != (idim <= 1):
        problems.append(f"interval-order test disagrees with interval dimension {idim}")
    return problems


def _split_exchange_problems(p: Poset) -> list:
    if 4 * len(p) > limits.active().max_elements:
        return []
    q = ordinal_product_2(p)
    one = {f"({x},0)": f"(({x},0),0)" for x in p.elements}
    one.update({f"({y},1)": f"(({y},1),1)" for y in p.elements})
    problems = []
    if not EmbeddingMap(one).verify(split(p), open_split(q)):
        problems.append("doubled-order coding fails to embed the split into the open split")
    two = {f"({x},0)": f"(({x},1),0)" for x in p.elements}
    two.update({f"({y},1)": f"(({y},0),1)" for y in p.elements})
    if not EmbeddingMap(two).verify(open_split(p), split(q)):
        problems.append("swapped coding fails to embed the open split into the split")
    return problems


def _ladder_embedding_problems(p: Poset) -> list:
    n = len(p)
    if n == 0 or 2 * n * n > limits.active().max_elements:
        return []
    reversed_ext = sorted(p.elements, key=lambda x: (len(p.up_set(x)), p.index(x)))
    rank = {x: i for i, x in enumerate(reversed_ext)}
    ladder = chain_of([f"c{i}" for i in range(2 * n)])
    host = direct_product(p, ladder)
    assignment = {f"({x},0)": f"({x},c{rank[x]})" for x in p.elements}
    assignment.update({f"({y},1)": f"({y},c{n + rank[y]})" for y in p.elements})
    if not EmbeddingMap(assignment).verify(split(p), host):
        return ["split does not embed into the product with the doubled dual chain"]
    return []


def _completion_embedding_problems(r: IncidenceStructure) -> list:
    gal = galois_lattice(r)
    bp = bipartite(r)
    completion = macneille(bp)
    rel = order_structure(bp)
    assignment = {}
    for lab in gal.underlying.elements:
        image = frozenset(f"({x},0)" for x in gal.label[lab])
        assignment[lab] = completion.element_of(lower(rel, upper(rel, image)))
    if not EmbeddingMap(assignment).verify(gal.underlying, completion.underlying):
        return ["Galois lattice does not embed into the split's completion by cuts"]
    return []


def _split_problems(obj) -> list:
    if isinstance(obj, IncidenceStructure):
        return _completion_embedding_problems(obj)
    problems = _split_exchange_problems(obj)
    problems += _ladder_embedding_problems(obj)
    if len(obj) <= 6:
        problems += _completion_embedding_problems(order_structure(obj))
    return problems


def _brute_closed_sets(r: IncidenceStructure):
    out = set()
    rows = list(r.rows)
    for mask in range(1 << len(rows)):
        chosen = frozenset(rows[i] for i in range(len(rows)) if mask >> i & 1)
        out.add(lower(r, upper(r, chosen)))
    return out


def _galois_problems(obj) -> list:
    problems = []
    if isinstance(obj, IncidenceStructure):
        gal = galois_lattice(obj)
        if not is_lattice(gal.underlying):
            problems.append("closed sets do not form a lattice")
        if len(obj.rows) <= 6 and _brute_closed_sets(obj) != set(gal.closed_sets()):
            problems.append("enumerated closed sets differ from the subset scan")
        return problems
    p = obj
    completion = macneille(p)
    if not is_lattice(completion.underlying):
        problems.append("completion is not a lattice")
    rel = order_structure(p)
    cuts = {
        x: completion.element_of(lower(rel, upper(rel, frozenset([x])))) for x in p.elements
    }
    if not EmbeddingMap(cuts).verify(p, completion.underlying):
        problems.append("principal cuts fail to embed the order into its completion")
    segments = initial_segments(p)
    if not is_distributive(segments.underlying):
        problems.append("down-set lattice is not distributive")
    if len(p) <= 6:
        masks = set()
        n = len(p)
        for mask in range(1 << n):
            closed = all(
                p.down_row(i) & ~mask == 0 or not mask >> i & 1 for i in range(n)
            )
            if closed:
                masks.add(frozenset(p.elements[i] for i in range(n) if mask >> i & 1))
        if masks != set(segments.closed_sets()):
            problems.append("down-set family differs from the subset scan")
    return problems


def _dilworth_problems(p: Poset) -> list:
    problems = []
    t = initial_segments(p).underlying
    if not is_distributive(t):
        return ["down-set lattice is not distributive"]
    ji = join_irreducibles(t)
    spec = spectrum(t)
    if len(spec) != len(ji):
        problems.append(f"spectrum size {len(spec)} differs from irreducible count {len(ji)}")
    if len(ji) != len(p) or (len(p) > 0 and find_embedding(ji, p) is None):
        problems.append("join irreducibles are not a copy of the base order")
    if len(spec) == len(ji) and len(ji) > 0 and find_embedding(spec.underlying, ji) is None:
        problems.append("spectrum is not a copy of the join irreducibles")
    if len(t) >= 2:
        dim, w = dilworth_check(t)
        count, _ = chain_factorization(t)
        if count != w:
            problems.append(f"factorization uses {count} chains, spectrum width is {w}")
        if len(t) <= 8 and count >= 1 and embeds_in_chains(t, count - 1):
            problems.append(f"lattice embeds into fewer than {count} chains")
        bottom, top = t.elements[0], t.elements[0]
        for e in t.elements:
            if t.leq(e, bottom):
                bottom = e
            if t.leq(top, e):
                top = e
        if not interval_spectrum_check(t, bottom, top):
            problems.append("full-interval spectrum does not match the selected primes")
        covers = t.covers()
        if covers and not interval_spectrum_check(t, covers[0][0], covers[0][1]):
            problems.append("cover-interval spectrum does not match the selected primes")
    return problems


def _theorem11_problems(p: Poset) -> list:
    flat = dim2_test(p)
    if flat and len(p) > 0:
        ell = find_nonseparating_extension(p)
        if ell is None:
            return ["no non-separating extension found despite dimension at most 2"]
        conjugate(p, ell)
    return []


def _lemma24_problems(p: Poset) -> list:
    # the exhaustive extension scan is only feasible for small orders
    if len(p) > min(6, limits.active().extension_elements):
        return []
    if dm_dimension(p)[0] > 2:
        return []
    problems = []
    for ell in enumerate_nonseparating(p):
        for k in range(len(p) + 1):
            if not lemma24_check(p, ell, ell.order[:k]):
                problems.append(
                    f"shadow nesting fails for extension {','.join(ell.order)} at prefix {k}"
                )
    return problems


def _small_lattices(limit: int) -> list:
    out = []
    for n in range(1, limit + 1):
        for idx, p in enumerate(all_posets(n)):
            if is_lattice(p):
                out.append((f"n={n}/i={idx:03d}", p))
    return out


def _has_coding(r: IncidenceStructure, t: Poset) -> bool:
    from itertools import product

    n = len(t)
    rows = list(r.rows)
    cols = list(r.cols)
    related = [[r.has(x, y) for y in cols] for x in rows]
    for f in product(range(n), repeat=len(rows)):
        ok = True
        for jy in range(len(cols)):
            if not any(
                all(t.leq_idx(f[ix], c) == related[ix][jy] for ix in range(len(rows)))
                for c in range(n)
            ):
                ok = False
                break
        if ok:
            return True
    return False


def _bouchet_problems(r: IncidenceStructure) -> list:
    problems = []
    gal = galois_lattice(r).underlying
    for lattice_id, t in _small_lattices(5):
        coded = _has_coding(r, t)
        embedded = find_embedding(gal, t) is not None
        if coded != embedded:
            problems.append(
                f"coding {'exists' if coded else 'missing'} but embedding "
                f"{'exists' if embedded else 'missing'} for lattice {lattice_id}"
            )
    return problems


_CHECKS = {
    "identities": _identity_problems,
    "splits": _split_problems,
    "galois": _galois_problems,
    "dilworth": _dilworth_problems,
    "theorem11": _theorem11_problems,
    "lemma24": _lemma24_problems,
    "bouchet": _bouchet_problems,
}


def _instances_for(suite: str, max_size: int, trials: int, seed: int) -> list:
    cap = _EXHAUSTIVE_CAP
    if suite in ("identities", "theorem11", "dilworth"):
        return _poset_instances(cap, max_size, trials, seed)
    if suite == "lemma24":
        out = _poset_instances(cap, max_size, trials, seed)
        for d in range(min(3, max(0, max_size)) + 1):
            tree = binary_tree(d)
            out.append((f"tree/d={d}", emit_poset(tree, f"tree_{d}"), ("tree", d)))
        return out
    if suite == "splits":
        out = _poset_instances(cap, max_size, 0, seed)
        out += _incidence_instances(max(1, min(max_size, 4)), trials, seed, exhaustive=False)
        return out
    if suite == "galois":
        out = _poset_instances(cap, max_size, trials, seed)
        out += _incidence_instances(max(1, min(max_size, 4)), trials, seed, exhaustive=False)
        return out
    if suite == "bouchet":
        return _incidence_instances(max(1, min(max_size, 3)), trials, seed, exhaustive=True)
    raise UnknownSuite(f"no suite named {suite!r}")


def verify_suite(suite: str, max_size: int, trials: int, seed: int) -> VerifyReport:
    if suite not in SUITES:
        raise UnknownSuite(f"no suite named {suite!r}")
    check = _CHECKS[suite]
    instances = _instances_for(suite, max_size, trials, seed)
    passed = 0
    failures = []
    for iid, document, obj in instances:
        if isinstance(obj, tuple) and obj[0] == "tree":
            problems = [] if t2_cover_check(obj[1]) else ["internal nodes are not followed by a child"]
        else:
            try:
                problems = check(obj)
            except PosetKitError as exc:
                problems = [f"error {type(exc).__name__}: {exc}"]
        if problems:
            failures.extend(Failure(iid, ident, document) for ident in sorted(problems))
        else:
            passed += 1
    failures.sort(key=lambda f: (f.instance, f.identity))
    return VerifyReport(suite, len(instances), passed, tuple(failures))


def replay(suite: str, failure: Failure) -> tuple:
    """Violated identities when the failed instance runs again by itself."""
    if suite not in SUITES:
        raise UnknownSuite(f"no suite named {suite!r}")
    if failure.instance.startswith("tree/d="):
        d = int(failure.instance.split("=", 1)[1])
        return () if t2_cover_check(d) else ("internal nodes are not followed by a child",)
    obj = parse_document(failure.document).build()
    try:
        return tuple(sorted(_CHECKS[suite](obj)))
    except PosetKitError as exc:
        return (f"error {type(exc).__name__}: {exc}",)

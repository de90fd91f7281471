"""Command surface over the library.

Every subcommand reads the line-oriented document format and prints either
plain text or, with --json, a structured mirror of the same fields including
whatever certificate backs the answer.  Commands that emit an order (split,
dual, product, ext) print it in document form so outputs pipe back in as
inputs.  Exit codes: 0 success, 1 a verification came back negative, 2 bad
usage or inadmissible input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import limits
from .core import (
    LinearOrder,
    Poset,
    antichain_of,
    chain_of,
    direct_product,
    dual,
    find_embedding,
    lex_product,
)
from .dimension import dm_dimension, dm_dimension_oracle, ferrers_dimension, interval_dimension
from .errors import (
    CycleDetected,
    DuplicateElement,
    NotALattice,
    NotDistributive,
    ParseError,
    PosetKitError,
    PreconditionViolated,
    SizeLimitExceeded,
    UnknownElement,
    UnknownSuite,
)
from .extensions import conjugate, find_nonseparating_extension
from .generators import binary_tree, obstruction_catalog, omega_eta, rado, random_poset, spider_a, three_irreducible_b
from .incidence import galois_lattice, initial_segments, macneille, open_split, order_structure, split
from .io import emit_poset, export_hasse, parse_incidence, parse_poset, poset_document
from .lattice import chain_factorization, spectrum
from .verify import verify_suite

# input was structurally inadmissible for the command
_USAGE_ERRORS = (
    ParseError,
    UnknownSuite,
    SizeLimitExceeded,
    PreconditionViolated,
    UnknownElement,
    DuplicateElement,
    CycleDetected,
    NotALattice,
    NotDistributive,
)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_poset(path: str) -> Poset:
    return parse_poset(_read(path))


def _emit(args, text: str, data: dict) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _lattice_payload(lat) -> dict:
    return {
        "elements": list(lat.underlying.elements),
        "closed_sets": {e: sorted(lat.label[e]) for e in lat.underlying.elements},
        "covers": [list(pair) for pair in lat.underlying.covers()],
    }


def _lattice_text(lat, kind: str) -> str:
    out = [f"{kind} with {len(lat.underlying)} closed sets over ground " + " ".join(lat.ground)]
    out.extend(f"  {e}" for e in lat.underlying.elements)
    out.append("covers")
    out.extend(f"  {a} < {b}" for a, b in lat.underlying.covers())
    return "\n".join(out) + "\n"


# -- gen ----------------------------------------------------------------------

_FAMILIES = {
    "chain": ("N",),
    "antichain": ("N",),
    "binary_tree": ("D",),
    "omega_eta": ("D",),
    "rado": ("N",),
    "spider_a": (),
    "three_irreducible_b": (),
    "random": ("N", "P", "SEED"),
    "catalog": ("NAME", "D"),
}


def _generate(family: str, params: list) -> Poset:
    want = _FAMILIES[family]
    if len(params) != len(want):
        raise PreconditionViolated(
            f"family {family} takes {len(want)} parameter(s): {' '.join(want) or 'none'}"
        )
    if family in ("chain", "antichain"):
        n = int(params[0])
        cap = limits.active().max_elements
        if n > cap:
            raise SizeLimitExceeded(f"{family} has {n} elements, cap {cap}")
        labels = [str(i) for i in range(n)]
        return chain_of(labels) if family == "chain" else antichain_of(labels)
    if family == "binary_tree":
        return binary_tree(int(params[0]))
    if family == "omega_eta":
        return omega_eta(int(params[0]))
    if family == "rado":
        return rado(int(params[0]))
    if family == "spider_a":
        return spider_a()
    if family == "three_irreducible_b":
        return three_irreducible_b()
    if family == "random":
        return random_poset(int(params[0]), float(params[1]), int(params[2]))
    catalog = obstruction_catalog(int(params[1]))
    if params[0] not in catalog:
        raise PreconditionViolated(
            f"unknown catalog member {params[0]!r}; members: {', '.join(catalog)}"
        )
    return catalog[params[0]]


def _cmd_gen(args) -> int:
    try:
        p = _generate(args.family, args.params)
    except ValueError as exc:
        raise PreconditionViolated(f"bad parameter for family {args.family}: {exc}")
    name = "_".join([args.family] + [str(x).replace(".", "p") for x in args.params]) or args.family
    text = emit_poset(p, name)
    with open(args.output, "w", encoding="utf-8") as handle:
        handle.write(text)
    _emit(
        args,
        f"wrote {args.output}: {len(p)} elements\n",
        {"command": "gen", "family": args.family, "file": args.output, "elements": len(p)},
    )
    return 0


# -- dim ----------------------------------------------------------------------


def _cmd_dim(args) -> int:
    if args.ferrers:
        r = parse_incidence(_read(args.file))
        k, cover = ferrers_dimension(r)
        if not cover.verify(r):
            raise PosetKitError("emitted cover failed re-verification")
        lines = [f"ferrers dimension {k}"]
        members = []
        for idx, member in enumerate(cover.members):
            pairs = member.pairs()
            lines.append(f"relation {idx}: " + " ".join(f"{x}<{y}" for x, y in pairs))
            members.append([list(pair) for pair in pairs])
        _emit(
            args,
            "\n".join(lines) + "\n",
            {"command": "dim", "mode": "ferrers", "dimension": k, "cover": members},
        )
        return 0
    p = _load_poset(args.file)
    if args.interval:
        k = interval_dimension(p)
        _, cover = ferrers_dimension(order_structure(p, strict=True))
        members = [
            [list(pair) for pair in member.pairs()] for member in cover.members
        ]
        _emit(
            args,
            f"interval dimension {k}\n",
            {"command": "dim", "mode": "interval", "dimension": k, "cover": members},
        )
        return 0
    if args.oracle:
        k = dm_dimension_oracle(p)
        _emit(
            args,
            f"dimension {k} (oracle)\n",
            {"command": "dim", "mode": "oracle", "dimension": k},
        )
        return 0
    k, realizer = dm_dimension(p)
    if not realizer.verify(p):
        raise PosetKitError("emitted realizer failed re-verification")
    lines = [f"dimension {k}"]
    lines.extend(
        f"extension {i}: " + " ".join(ext.order) for i, ext in enumerate(realizer.extensions)
    )
    _emit(
        args,
        "\n".join(lines) + "\n",
        {
            "command": "dim",
            "mode": "order",
            "dimension": k,
            "realizer": [list(ext.order) for ext in realizer.extensions],
        },
    )
    return 0


# -- lattice views --------------------------------------------------------------


def _cmd_galois(args) -> int:
    lat = galois_lattice(parse_incidence(_read(args.file)))
    _emit(args, _lattice_text(lat, "galois lattice"), {"command": "galois", **_lattice_payload(lat)})
    return 0


def _cmd_macneille(args) -> int:
    lat = macneille(_load_poset(args.file))
    _emit(args, _lattice_text(lat, "completion"), {"command": "macneille", **_lattice_payload(lat)})
    return 0


def _cmd_segments(args) -> int:
    lat = initial_segments(_load_poset(args.file))
    _emit(args, _lattice_text(lat, "down-set lattice"), {"command": "segments", **_lattice_payload(lat)})
    return 0


# -- order transforms ------------------------------------------------------------


def _emit_order(args, command: str, p: Poset, name: str) -> int:
    doc = poset_document(p, name)
    _emit(args, emit_poset(p, name), {"command": command, **doc.as_dict()})
    return 0


def _cmd_split(args) -> int:
    p = _load_poset(args.file)
    if args.open:
        return _emit_order(args, "split", open_split(p), "open_split")
    return _emit_order(args, "split", split(p), "split")


def _cmd_dual(args) -> int:
    return _emit_order(args, "dual", dual(_load_poset(args.file)), "dual")


def _cmd_product(args) -> int:
    a = _load_poset(args.a)
    b = _load_poset(args.b)
    if args.lex:
        return _emit_order(args, "product", lex_product(a, b), "lex_product")
    return _emit_order(args, "product", direct_product(a, b), "direct_product")


# -- embed / ext -----------------------------------------------------------------


def _cmd_embed(args) -> int:
    pattern = _load_poset(args.pattern)
    host = _load_poset(args.host)
    emb = find_embedding(pattern, host)
    if emb is None:
        _emit(args, "no embedding\n", {"command": "embed", "embedding": None})
        return 1
    lines = [f"{x} -> {emb.assignment[x]}" for x in pattern.elements]
    _emit(
        args,
        "\n".join(lines) + ("\n" if lines else ""),
        {"command": "embed", "embedding": {x: emb.assignment[x] for x in pattern.elements}},
    )
    return 0


def _chain_order(q: Poset) -> LinearOrder:
    for a in q.elements:
        for b in q.elements:
            if not q.leq(a, b) and not q.leq(b, a):
                raise PreconditionViolated(f"document is not a linear order: {a} and {b} incomparable")
    return LinearOrder(sorted(q.elements, key=lambda e: len(q.down_set(e))))


def _cmd_ext(args) -> int:
    p = _load_poset(args.file)
    if args.nonseparating:
        ell = find_nonseparating_extension(p)
        if ell is None:
            print("no non-separating extension", file=sys.stderr)
            if args.json:
                print(json.dumps({"command": "ext", "extension": None}, indent=2))
            return 1
        doc = poset_document(ell.as_poset(), "extension")
        _emit(
            args,
            emit_poset(ell.as_poset(), "extension"),
            {"command": "ext", "extension": list(ell.order), **doc.as_dict()},
        )
        return 0
    ell = _chain_order(_load_poset(args.conjugate))
    flipped = conjugate(p, ell)
    doc = poset_document(flipped.as_poset(), "conjugate")
    _emit(
        args,
        emit_poset(flipped.as_poset(), "conjugate"),
        {"command": "ext", "conjugate": list(flipped.order), **doc.as_dict()},
    )
    return 0


# -- spectrum / factorize ----------------------------------------------------------


def _cmd_spectrum(args) -> int:
    t = _load_poset(args.file)
    spec = spectrum(t)
    lines = [f"spectrum with {len(spec)} prime ideals"]
    ideals = {}
    for e in spec.underlying.elements:
        members = sorted(spec.ideal[e].members)
        ideals[e] = members
        lines.append(f"  {e}")
    lines.append("covers")
    lines.extend(f"  {a} < {b}" for a, b in spec.underlying.covers())
    _emit(
        args,
        "\n".join(lines) + "\n",
        {
            "command": "spectrum",
            "elements": list(spec.underlying.elements),
            "ideals": ideals,
            "covers": [list(pair) for pair in spec.underlying.covers()],
        },
    )
    return 0


def _cmd_factorize(args) -> int:
    t = _load_poset(args.file)
    count, emb = chain_factorization(t)
    lines = [f"chains {count}"]
    lines.extend(f"{x} -> {emb.assignment[x]}" for x in t.elements)
    _emit(
        args,
        "\n".join(lines) + "\n",
        {
            "command": "factorize",
            "chains": count,
            "assignment": {x: emb.assignment[x] for x in t.elements},
        },
    )
    return 0


# -- verify / export ---------------------------------------------------------------


def _write_report_files(report, directory: str) -> list:
    os.makedirs(directory, exist_ok=True)
    csv_path = os.path.join(directory, f"{report.suite}.csv")
    with open(csv_path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["instance", "identity", "document"])
        for f in report.failures:
            writer.writerow([f.instance, f.identity, f.document])
    png_path = os.path.join(directory, f"{report.suite}.png")
    from .drawing import render_verify_summary

    render_verify_summary(report, png_path)
    return [csv_path, png_path]


def _cmd_verify(args) -> int:
    report = verify_suite(args.suite, args.max_size, args.trials, args.seed)
    data = report.as_dict()
    text = report.as_text()
    if args.report:
        written = _write_report_files(report, args.report)
        data["report_files"] = written
        text += "".join(f"wrote {path}\n" for path in written)
    _emit(args, text, data)
    return 1 if report.failed else 0


def _cmd_export(args) -> int:
    p = _load_poset(args.file)
    if not args.hasse and not args.figure:
        raise PreconditionViolated("export needs --hasse or --figure PATH")
    text = ""
    data = {"command": "export"}
    if args.hasse:
        dot = export_hasse(p)
        text += dot
        data["hasse"] = dot
    if args.figure:
        from .drawing import render_hasse

        render_hasse(p, args.figure)
        text += f"wrote {args.figure}\n"
        data["figure"] = args.figure
    _emit(args, text, data)
    return 0


# -- parser ------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--profile", choices=sorted(limits.PROFILES), help="size-cap profile")

    parser = argparse.ArgumentParser(prog="posetkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="write a named family member to a file")
    gen.add_argument("family", choices=sorted(_FAMILIES))
    gen.add_argument("params", nargs="*")
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=_cmd_gen)

    dim = sub.add_parser("dim", parents=[common], help="order dimension with certificate")
    dim.add_argument("file")
    group = dim.add_mutually_exclusive_group()
    group.add_argument("--interval", action="store_true")
    group.add_argument("--ferrers", action="store_true")
    group.add_argument("--oracle", action="store_true")
    dim.set_defaults(func=_cmd_dim)

    for name, func in (("galois", _cmd_galois), ("macneille", _cmd_macneille), ("segments", _cmd_segments)):
        cmd = sub.add_parser(name, parents=[common], help=f"{name} lattice of the input")
        cmd.add_argument("file")
        cmd.set_defaults(func=func)

    sp = sub.add_parser("split", parents=[common], help="bipartite split of the order")
    sp.add_argument("file")
    sp.add_argument("--open", action="store_true")
    sp.set_defaults(func=_cmd_split)

    du = sub.add_parser("dual", parents=[common], help="opposite order")
    du.add_argument("file")
    du.set_defaults(func=_cmd_dual)

    pr = sub.add_parser("product", parents=[common], help="product of two orders")
    pr.add_argument("a")
    pr.add_argument("b")
    pr.add_argument("--lex", action="store_true")
    pr.set_defaults(func=_cmd_product)

    em = sub.add_parser("embed", parents=[common], help="find an order embedding")
    em.add_argument("pattern")
    em.add_argument("host")
    em.set_defaults(func=_cmd_embed)

    ex = sub.add_parser("ext", parents=[common], help="linear extension tooling")
    ex.add_argument("file")
    exg = ex.add_mutually_exclusive_group(required=True)
    exg.add_argument("--nonseparating", action="store_true")
    exg.add_argument("--conjugate", metavar="EXT")
    ex.set_defaults(func=_cmd_ext)

    spx = sub.add_parser("spectrum", parents=[common], help="prime ideals of a distributive lattice")
    spx.add_argument("file")
    spx.set_defaults(func=_cmd_spectrum)

    fa = sub.add_parser("factorize", parents=[common], help="embed a distributive lattice into chains")
    fa.add_argument("file")
    fa.set_defaults(func=_cmd_factorize)

    ve = sub.add_parser("verify", parents=[common], help="run an identity suite")
    ve.add_argument("--suite", required=True)
    ve.add_argument("--max-size", type=int, required=True)
    ve.add_argument("--trials", type=int, required=True)
    ve.add_argument("--seed", type=int, required=True)
    ve.add_argument("--report", metavar="DIR", help="also write CSV and PNG summaries")
    ve.set_defaults(func=_cmd_verify)

    exp = sub.add_parser("export", parents=[common], help="diagram output")
    exp.add_argument("file")
    exp.add_argument("--hasse", action="store_true")
    exp.add_argument("--figure", metavar="PATH")
    exp.set_defaults(func=_cmd_export)

    return parser


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.profile:
        limits.set_profile(args.profile)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PosetKitError as exc:
        # failed verification of an otherwise admissible input
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # reader closed early (e.g. piped into head); suppress the shutdown flush
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

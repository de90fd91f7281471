"""Line-oriented document formats, their JSON mirrors, and DOT export.

A poset file names the ground set and lists the relation one pair per line;
an incidence file does the same for rows, columns, and cells.  Both formats
skip blank lines and `#` comments, and every emitted document parses back to
an equal object.  Labels are whitespace-free tokens, which every generator
in this package guarantees.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Poset, from_relation
from .errors import ParseError
from .incidence import IncidenceStructure


@dataclass(frozen=True)
class PosetDocument:
    name: str
    elements: tuple
    mode: str
    relations: tuple

    def build(self) -> Poset:
        return from_relation(self.elements, self.relations, mode=self.mode)

    def as_dict(self) -> dict:
        return {
            "type": "poset",
            "name": self.name,
            "elements": list(self.elements),
            "mode": self.mode,
            "relations": [[a, b] for a, b in self.relations],
        }


@dataclass(frozen=True)
class IncidenceDocument:
    name: str
    rows: tuple
    cols: tuple
    pairs: tuple

    def build(self) -> IncidenceStructure:
        return IncidenceStructure.from_pairs(self.rows, self.cols, self.pairs)

    def as_dict(self) -> dict:
        return {
            "type": "incidence",
            "name": self.name,
            "rows": list(self.rows),
            "cols": list(self.cols),
            "pairs": [[a, b] for a, b in self.pairs],
        }


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield number, line


def _parse_relation_line(number: int, line: str) -> tuple:
    parts = line.split()
    if len(parts) != 3 or parts[1] != "<":
        column = line.index(parts[0]) + 1 if parts else 1
        raise ParseError("relation line must read 'a < b'", number, column)
    return parts[0], parts[2]


def parse_document(text: str):
    """PosetDocument or IncidenceDocument from format text."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty document", 1)
    number, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] not in ("poset", "incidence"):
        raise ParseError("header must read 'poset NAME' or 'incidence NAME'", number)
    name = parts[1]
    if parts[0] == "poset":
        return _parse_poset_body(name, lines[1:])
    return _parse_incidence_body(name, lines[1:])


def _parse_poset_body(name: str, lines: list) -> PosetDocument:
    elements: list = []
    mode = None
    relations: list = []
    for number, line in lines:
        parts = line.split()
        key = parts[0]
        if key == "elements":
            if mode is not None:
                raise ParseError("elements must precede relations", number)
            elements.extend(parts[1:])
        elif key == "relations":
            if mode is not None:
                raise ParseError("duplicate relations section", number)
            if len(parts) != 2 or parts[1] not in ("covers", "pairs"):
                raise ParseError("expected 'relations covers' or 'relations pairs'", number)
            mode = parts[1]
        else:
            if mode is None:
                raise ParseError("relation pair before the relations header", number)
            relations.append(_parse_relation_line(number, line))
    if mode is None:
        mode = "pairs"
    return PosetDocument(name, tuple(elements), mode, tuple(relations))


def _parse_incidence_body(name: str, lines: list) -> IncidenceDocument:
    rows: list = []
    cols: list = []
    pairs: list = []
    in_pairs = False
    for number, line in lines:
        parts = line.split()
        key = parts[0]
        if key == "rows" and not in_pairs:
            rows.extend(parts[1:])
        elif key == "cols" and not in_pairs:
            cols.extend(parts[1:])
        elif key == "pairs" and not in_pairs:
            if len(parts) != 1:
                raise ParseError("the pairs header takes no arguments", number)
            in_pairs = True
        else:
            if not in_pairs:
                raise ParseError("expected rows, cols, or pairs section", number)
            if len(parts) != 2:
                raise ParseError("pair line must read 'x y'", number)
            pairs.append((parts[0], parts[1]))
    return IncidenceDocument(name, tuple(rows), tuple(cols), tuple(pairs))


def parse_poset(text: str) -> Poset:
    doc = parse_document(text)
    if not isinstance(doc, PosetDocument):
        raise ParseError("expected a poset document, found incidence", 1)
    return doc.build()


def parse_incidence(text: str) -> IncidenceStructure:
    doc = parse_document(text)
    if not isinstance(doc, IncidenceDocument):
        raise ParseError("expected an incidence document, found poset", 1)
    return doc.build()


def poset_document(p: Poset, name: str = "p") -> PosetDocument:
    return PosetDocument(name, p.elements, "covers", p.covers())


def incidence_document(r: IncidenceStructure, name: str = "r") -> IncidenceDocument:
    return IncidenceDocument(name, r.rows, r.cols, r.pairs())


def emit_poset(p: Poset, name: str = "p") -> str:
    doc = poset_document(p, name)
    out = [f"poset {doc.name}"]
    out.append("elements " + " ".join(doc.elements) if doc.elements else "elements")
    out.append("relations covers")
    out.extend(f"{a} < {b}" for a, b in doc.relations)
    return "\n".join(out) + "\n"


def emit_incidence(r: IncidenceStructure, name: str = "r") -> str:
    doc = incidence_document(r, name)
    out = [f"incidence {doc.name}"]
    out.append("rows " + " ".join(doc.rows) if doc.rows else "rows")
    out.append("cols " + " ".join(doc.cols) if doc.cols else "cols")
    out.append("pairs")
    out.extend(f"{a} {b}" for a, b in doc.pairs)
    return "\n".join(out) + "\n"


def to_json(document) -> str:
    return json.dumps(document.as_dict(), indent=2) + "\n"


def heights(p: Poset) -> dict:
    """Longest-path level of each element, minimal elements at level zero."""
    level: dict = {}
    # strictly smaller elements have strictly smaller down-sets
    for e in sorted(p.elements, key=lambda x: (len(p.down_set(x)), p.index(x))):
        below = [x for x in p.down_set(e) if x != e]
        level[e] = max((level[x] + 1 for x in below), default=0)
    return level


def export_hasse(p: Poset) -> str:
    """DOT digraph with one edge per cover pair, ranked by height."""
    level = heights(p)
    out = ["digraph poset {", "  rankdir=BT;"]
    for e in p.elements:
        out.append(f'  "{e}";')
    by_level: dict = {}
    for e in p.elements:
        by_level.setdefault(level[e], []).append(e)
    for lev in sorted(by_level):
        members = " ".join(f'"{e}";' for e in by_level[lev])
        out.append(f"  {{ rank=same; {members} }}")
    for a, b in p.covers():
        out.append(f'  "{a}" -> "{b}";')
    out.append("}")
    return "\n".join(out) + "\n"

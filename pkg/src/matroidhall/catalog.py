"""Matroid documents, named fixtures and the on-disk catalog of isomorphism classes."""

from __future__ import annotations

import hashlib
import json
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

from .canon import DEFAULT_BOUND, HARD_BOUND, IsoClass, enumerate_matroids, preload_classes
from .errors import BoundExceeded, MatroidError, ParseError, ValidationError
from .matroid import (
    BASEPOINT,
    GroundSet,
    direct_sum_all,
    free_matroid,
    from_bases,
    from_flats,
    from_graph,
    uniform,
    zero_matroid,
)

CATALOG_ENV = "MATROIDHALL_CATALOG"
FORMAT_VERSION = 1
HEADER = f"# matroidhall catalog v{FORMAT_VERSION}"


# --- matroid documents ------------------------------------------------------------


def _label_list(value, where):
    if not isinstance(value, list):
        raise ParseError("expected a list of labels", where)
    out = []
    for k, x in enumerate(value):
        if not isinstance(x, (str, int)) or isinstance(x, bool):
            raise ParseError("labels must be strings or integers", f"{where}[{k}]")
        out.append(str(x))
    return out


def _subset_list(value, ground, where, allow_basepoint=True):
    if not isinstance(value, list):
        raise ParseError("expected a list of subsets", where)
    out = []
    known = set(ground.labels)
    for k, S in enumerate(value):
        labels = _label_list(S, f"{where}[{k}]")
        for m, x in enumerate(labels):
            if x not in known:
                raise ParseError(f"unknown label {x!r}", f"{where}[{k}][{m}]")
            if not allow_basepoint and x == ground.basepoint:
                raise ParseError("basepoint not allowed here", f"{where}[{k}][{m}]")
        out.append(labels)
    return out


def _ground(doc):
    if "ground" not in doc:
        raise ParseError("missing key", "ground")
    labels = _label_list(doc["ground"], "ground")
    try:
        ground = GroundSet(tuple(labels))
    except MatroidError as exc:
        raise ValidationError(exc, "ground") from exc
    return ground


def matroid_from_document(doc):
    """Build a validated matroid from a parsed JSON document."""
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object", "$")
    keys = [k for k in ("flats", "bases", "graph") if k in doc]
    if len(keys) != 1:
        raise ParseError("exactly one of 'flats', 'bases', 'graph' is required", "$")
    key = keys[0]
    if key == "graph":
        g = doc["graph"]
        if not isinstance(g, dict):
            raise ParseError("expected an object", "graph")
        vertices = _label_list(g.get("vertices"), "graph.vertices")
        edges = []
        raw = g.get("edges")
        if not isinstance(raw, list):
            raise ParseError("expected a list of edges", "graph.edges")
        for k, e in enumerate(raw):
            if isinstance(e, dict):
                e = [e.get("name"), *(e.get("ends") or [None, None])]
            if not isinstance(e, list) or len(e) != 3 or any(x is None for x in e):
                raise ParseError("edge must be [name, u, v]", f"graph.edges[{k}]")
            edges.append(tuple(str(x) for x in e))
        loop = str(g.get("loop", doc.get("loop", BASEPOINT)))
        try:
            return from_graph(vertices, edges, loop=loop)
        except MatroidError as exc:
            raise ValidationError(exc, "graph") from exc
    ground = _ground(doc)
    if key == "flats":
        flats = _subset_list(doc["flats"], ground, "flats")
        try:
            return from_flats(ground, flats)
        except MatroidError as exc:
            raise ValidationError(exc, "flats") from exc
    bases = _subset_list(doc["bases"], ground, "bases", allow_basepoint=False)
    try:
        return from_bases(ground, bases)
    except MatroidError as exc:
        raise ValidationError(exc, "bases") from exc


def matroid_to_document(M):
    return {
        "ground": list(M.labels),
        "flats": [list(M.ground.labels_of(F)) for F in sorted(M.flats, key=lambda F: (bin(F).count("1"), F))],
    }


def dumps_matroid(M):
    return json.dumps(matroid_to_document(M))


def loads_matroid(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from exc
    return matroid_from_document(doc)


_FIXTURE = re.compile(r"^(a|b|zero|u_(\d+)_(\d+)|free_(\d+))$")


def fixture(name):
    """Named matroids: ``a``, ``b``, ``zero``, ``u_r_n``, ``free_n`` and ``+``-sums of them."""
    parts = [p.strip() for p in name.split("+")]
    out = []
    for p in parts:
        m = _FIXTURE.match(p)
        if not m:
            raise ParseError(f"unknown fixture {p!r}", name)
        if p == "a":
            out.append(uniform(1, 1))
        elif p == "b":
            out.append(uniform(0, 1))
        elif p == "zero":
            out.append(zero_matroid())
        elif m.group(2) is not None:
            try:
                out.append(uniform(int(m.group(2)), int(m.group(3))))
            except MatroidError as exc:
                raise ValidationError(exc, name) from exc
        else:
            out.append(free_matroid(int(m.group(4))))
    return out[0] if len(out) == 1 else direct_sum_all(out)


def load_matroid(source):
    """A matroid from a fixture name, a path to a JSON document, or JSON text."""
    source = str(source)
    if _FIXTURE.match(source.split("+")[0].strip()) and not os.path.exists(source):
        return fixture(source)
    if source.lstrip().startswith("{"):
        return loads_matroid(source)
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file ({exc.strerror})", source) from exc
    return loads_matroid(text)


# --- catalog ----------------------------------------------------------------------


def _block_lines(classes):
    return [f"{c.degree} {c.rank} {c.hex}" for c in sorted(classes)]


def _digest(lines):
    return hashlib.sha256("".join(line + "\n" for line in lines).encode()).hexdigest()


@dataclass
class Catalog:
    bound: int
    blocks: dict = field(default_factory=dict)

    @classmethod
    def build(cls, n, bound=None):
        bound = DEFAULT_BOUND if bound is None else bound
        if n > HARD_BOUND:
            raise BoundExceeded(f"catalog degree {n} exceeds {HARD_BOUND}")
        bound = max(bound, n)
        return cls(n, {d: list(enumerate_matroids(d, bound)) for d in range(n + 1)})

    def counts(self):
        return [len(self.blocks[d]) for d in sorted(self.blocks)]

    def classes(self):
        return [c for d in sorted(self.blocks) for c in self.blocks[d]]

    def text(self):
        rows = [HEADER, f"# bound {self.bound}"]
        for d in sorted(self.blocks):
            lines = _block_lines(self.blocks[d])
            rows.append(f"# degree {d} count {len(lines)} sha256 {_digest(lines)}")
        for d in sorted(self.blocks):
            rows.extend(_block_lines(self.blocks[d]))
        return "\n".join(rows) + "\n"

    def write(self, path):
        Path(path).write_text(self.text())

    @classmethod
    def parse(cls, text, where="catalog"):
        lines = text.splitlines()
        if not lines or lines[0] != HEADER:
            raise ParseError("missing or unsupported catalog header", f"{where}:1")
        bound = None
        manifest = {}
        blocks = {}
        for no, line in enumerate(lines[1:], start=2):
            if line.startswith("#"):
                parts = line[1:].split()
                if parts[:1] == ["bound"] and len(parts) == 2:
                    bound = int(parts[1])
                elif parts[:1] == ["degree"] and len(parts) == 6:
                    manifest[int(parts[1])] = (int(parts[3]), parts[5])
                else:
                    raise ParseError("unrecognised manifest line", f"{where}:{no}")
                continue
            fields = line.split()
            if len(fields) != 3:
                raise ParseError("expected '<degree> <rank> <canon-hex>'", f"{where}:{no}")
            try:
                cls_ = IsoClass.from_hex(fields[2])
            except ValueError as exc:
                raise ParseError(str(exc), f"{where}:{no}") from exc
            if cls_.degree != int(fields[0]) or cls_.rank != int(fields[1]):
                raise ValidationError("degree/rank columns disagree with the encoding", f"{where}:{no}")
            blocks.setdefault(cls_.degree, []).append(cls_)
        if bound is None:
            raise ParseError("manifest lacks a bound line", where)
        for d, (count, digest) in manifest.items():
            got = _block_lines(blocks.get(d, []))
            if len(got) != count or _digest(got) != digest:
                raise ValidationError(f"checksum mismatch in degree block {d}", where)
        if set(blocks) - set(manifest):
            raise ValidationError("degree block without manifest entry", where)
        for d in manifest:
            blocks.setdefault(d, [])
        return cls(bound, blocks)

    @classmethod
    def read(cls, path):
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read catalog ({exc.strerror})", str(path)) from exc
        return cls.parse(text, str(path))

    def install(self):
        """Make the enumeration routines answer from this catalog."""
        for d, classes in self.blocks.items():
            preload_classes(d, classes)


def catalog_from_environment():
    path = os.environ.get(CATALOG_ENV)
    if not path:
        return None
    catalog = Catalog.read(path)
    catalog.install()
    return catalog


def build_catalog(n, out=None, bound=None):
    catalog = Catalog.build(n, bound)
    if out is not None:
        catalog.write(out)
    return catalog

"""JSON curve documents with exact rationals stored as ``"p/q"`` strings."""
from __future__ import annotations

import json

from .core import Edge, TropicalCurve, Weight
from .errors import InputError, ParseError
from .exact import format_rat, parse_rat
from .polytope import Region

VERSION = 1


def _fmt_point(x):
    return [format_rat(c) for c in x]


def _fmt_end(x, index):
    k = index.get(x)
    return k if k is not None else _fmt_point(x)


def curve_to_doc(G: TropicalCurve) -> dict:
    index = G.vertex_index
    region = {"halfspaces": [{"normal": list(a), "offset": format_rat(b)} for a, b in G.region.halfspaces]}
    if G.region.name:
        region["name"] = G.region.name
    edges = []
    for e in G.edges:
        item = {"id": e.id, "kind": e.kind, "tail": _fmt_end(e.tail, index)}
        if e.is_ray:
            item["ray_sign"] = e.ray_sign
        else:
            item["head"] = _fmt_end(e.head, index)
        item["direction"] = list(e.weight.direction)
        item["multiplicity"] = e.weight.multiplicity
        edges.append(item)
    return {
        "version": VERSION,
        "dimension": G.dim,
        "region": region,
        "vertices": [_fmt_point(v) for v in G.vertices],
        "edges": edges,
        "metadata": dict(G.metadata),
    }


def dumps(G: TropicalCurve) -> str:
    return json.dumps(curve_to_doc(G), indent=2, ensure_ascii=False) + "\n"


def _locate(text, token):
    """Line and column (1-based) of the first occurrence of ``token``."""
    if text is None:
        return None, None
    pos = text.find(token)
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _Reader:
    def __init__(self, text):
        self.text = text

    def fail(self, message, token=None):
        line, col = _locate(self.text, token) if token is not None else (None, None)
        if line is None and self.text is not None:
            line, col = 1, 1
        raise ParseError(message, line, col)

    def rat(self, value, what):
        if isinstance(value, bool) or not isinstance(value, (str, int)):
            self.fail(f"{what}: expected a rational string, got {value!r}", json.dumps(value))
        try:
            return parse_rat(str(value))
        except (InputError, ValueError, ZeroDivisionError) as exc:
            self.fail(f"{what}: {exc}", json.dumps(value))

    def integer(self, value, what):
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail(f"{what}: expected an integer, got {value!r}", json.dumps(value))
        return value

    def point(self, value, n, what):
        if not isinstance(value, list) or len(value) != n:
            self.fail(f"{what}: expected {n} coordinates")
        return tuple(self.rat(c, what) for c in value)

    def ivec(self, value, n, what):
        if not isinstance(value, list) or len(value) != n:
            self.fail(f"{what}: expected an integer vector of length {n}")
        return tuple(self.integer(c, what) for c in value)


def doc_to_curve(doc: dict, text: str | None = None) -> TropicalCurve:
    r = _Reader(text)
    if not isinstance(doc, dict):
        r.fail("document must be a JSON object")
    for key in ("version", "dimension", "region", "vertices", "edges"):
        if key not in doc:
            r.fail(f"missing field {key!r}")
    if doc["version"] != VERSION:
        r.fail(f"unsupported version {doc['version']!r}", '"version"')
    n = r.integer(doc["dimension"], "dimension")
    if n < 2:
        r.fail("dimension must be at least 2", '"dimension"')
    region = doc["region"]
    if not isinstance(region, dict) or not isinstance(region.get("halfspaces"), list):
        r.fail("region must hold a list of half-spaces", '"region"')
    hs = []
    for k, h in enumerate(region["halfspaces"]):
        if not isinstance(h, dict):
            r.fail(f"half-space {k} must be an object")
        hs.append((r.ivec(h.get("normal"), n, f"half-space {k} normal"), r.rat(h.get("offset"), f"half-space {k} offset")))
    try:
        R = Region(n, tuple(hs), region.get("name", ""))
    except ValueError as exc:
        r.fail(f"region: {exc}", '"region"')
    if not isinstance(doc["vertices"], list):
        r.fail("vertices must be a list", '"vertices"')
    verts = tuple(r.point(v, n, f"vertex {k}") for k, v in enumerate(doc["vertices"]))

    def end(value, what):
        if isinstance(value, int) and not isinstance(value, bool):
            if not 0 <= value < len(verts):
                r.fail(f"{what}: unknown vertex index {value}")
            return verts[value]
        return r.point(value, n, what)

    if not isinstance(doc["edges"], list):
        r.fail("edges must be a list", '"edges"')
    edges = []
    for k, item in enumerate(doc["edges"]):
        if not isinstance(item, dict):
            r.fail(f"edge {k} must be an object")
        eid = r.integer(item.get("id", k), f"edge {k} id")
        direction = r.ivec(item.get("direction"), n, f"edge {eid} direction")
        mult = r.integer(item.get("multiplicity", 1), f"edge {eid} multiplicity")
        try:
            w = Weight(direction, mult)
        except ValueError as exc:
            r.fail(f"edge {eid}: {exc}", json.dumps(item.get("direction")).replace(" ", ""))
        tail = end(item.get("tail"), f"edge {eid} tail")
        kind = item.get("kind")
        if kind == "segment":
            head = end(item.get("head"), f"edge {eid} head")
            edges.append(Edge(eid, tail, w, head=head))
        elif kind == "ray":
            sign = item.get("ray_sign", 1)
            if sign not in (1, -1) or isinstance(sign, bool):
                r.fail(f"edge {eid}: ray_sign must be 1 or -1")
            edges.append(Edge(eid, tail, w, ray_sign=sign))
        else:
            r.fail(f"edge {eid}: kind must be 'segment' or 'ray', got {kind!r}")
    meta = doc.get("metadata", {})
    if not isinstance(meta, dict):
        r.fail("metadata must be an object", '"metadata"')
    try:
        return TropicalCurve(n, R, verts, tuple(edges), meta)
    except ValueError as exc:
        r.fail(str(exc))


def loads(text: str) -> TropicalCurve:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return doc_to_curve(doc, text)


def load(path) -> TropicalCurve:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(G: TropicalCurve, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(G))


def canonicalize(text: str) -> str:
    return dumps(loads(text))


def segments(G: TropicalCurve) -> list:
    """Plain ``x1 y1 ... -> x2 y2 ...`` lines of every clipped edge, for external plotting."""
    out = []
    for e in G.edges:
        a, b = G.endpoints(e)
        out.append(f"{' '.join(map(format_rat, a))} -> {' '.join(map(format_rat, b))} m={e.weight.multiplicity}")
    return out



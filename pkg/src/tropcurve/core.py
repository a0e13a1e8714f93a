"""Weights, edges, tropical curves, tropical area and validation.

Points are tuples of ``Fraction``.  An edge is stored by its endpoint(s) and
its weight; its geometric extent is recovered as a parameter interval on the
line ``p + t*u`` clipped to the ambient region.  Only ``normSq`` of a weight
is ever formed, so the tropical area ``|e| * |w_e|`` stays rational.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Mapping

from .errors import (
    BadDimension,
    DegenerateEdge,
    NonTransversal,
    NotContained,
    NotParallel,
    OverlappingEdges,
    UnboundedExtent,
    UnknownVertex,
    VertexOnBoundary,
    ZeroVector,
)
from .exact import along, format_vec, point, ratio, segment_intersection, sub
from .polytope import Region

STRICT = "strict"
LENIENT = "lenient"


@dataclass(frozen=True)
class Weight:
    """A class in (Z^n \\ 0)/+-1: primitive direction with canonical sign, times a multiplicity."""

    direction: tuple
    multiplicity: int = 1

    def __post_init__(self):
        d = tuple(int(c) for c in self.direction)
        object.__setattr__(self, "direction", d)
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if all(c == 0 for c in d):
            raise ZeroVector("weight direction is zero")
        g = 0
        for c in d:
            g = gcd(g, c)
        if g != 1:
            raise ValueError(f"direction {d} is not primitive")
        if next(c for c in d if c != 0) < 0:
            raise ValueError(f"direction {d} does not have canonical sign")

    @property
    def vector(self) -> tuple:
        return tuple(self.multiplicity * c for c in self.direction)

    @property
    def norm_sq(self) -> int:
        return self.multiplicity ** 2 * sum(c * c for c in self.direction)

    def component(self, i: int) -> int:
        """Absolute value of the i-th component (1-based), i.e. ``|w^i|``."""
        return abs(self.vector[i - 1])


def canonical_weight(v) -> Weight:
    v = tuple(int(c) for c in v)
    g = 0
    for c in v:
        g = gcd(g, c)
    if g == 0:
        raise ZeroVector("weights live in Z^n minus the origin")
    d = tuple(c // g for c in v)
    if next(c for c in d if c != 0) < 0:
        d = tuple(-c for c in d)
    return Weight(d, g)


@dataclass(frozen=True)
class QWeight:
    """A rational weight ``scale * base.vector`` (a class in W_Q)."""

    base: Weight
    scale: Fraction

    def __post_init__(self):
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    @property
    def vector(self) -> tuple:
        return tuple(self.scale * c for c in self.base.vector)

    @property
    def norm_sq(self) -> Fraction:
        return self.scale ** 2 * self.base.norm_sq


@dataclass(frozen=True)
class Edge:
    """A weighted segment ``tail -> head`` or a ray from ``tail``.

    A ray points along ``ray_sign * weight.direction`` and is cut off by the
    curve's region.
    """

    id: int
    tail: tuple
    weight: Weight
    head: tuple | None = None
    ray_sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "tail", point(self.tail))
        if self.head is not None:
            object.__setattr__(self, "head", point(self.head))
            if len(self.head) != len(self.tail):
                raise BadDimension(f"edge {self.id}: endpoints differ in dimension")
        elif self.ray_sign not in (1, -1):
            raise ValueError("ray_sign must be +1 or -1")
        if len(self.weight.direction) != len(self.tail):
            raise BadDimension(f"edge {self.id}: weight dimension mismatch")

    @classmethod
    def segment(cls, id, tail, head, weight):
        return cls(id, tail, weight, head=head)

    @classmethod
    def ray(cls, id, tail, weight, sign=1):
        return cls(id, tail, weight, head=None, ray_sign=sign)

    @property
    def kind(self) -> str:
        return "ray" if self.head is None else "segment"

    @property
    def is_ray(self) -> bool:
        return self.head is None

    def line(self):
        """``(p, u, lo, hi)`` before clipping; ``hi`` is ``None`` for rays."""
        if self.head is None:
            u = tuple(Fraction(self.ray_sign * c) for c in self.weight.direction)
            return self.tail, u, Fraction(0), None
        return self.tail, sub(self.head, self.tail), Fraction(0), Fraction(1)

    def is_parallel(self) -> bool:
        if self.head is None:
            return True
        d = sub(self.head, self.tail)
        lam = ratio(d, self.weight.vector)
        return lam is not None and lam != 0

    def oriented_vector(self) -> tuple:
        """Representative of the weight pointing along increasing parameter."""
        p, u, _, _ = self.line()
        w = self.weight.vector
        s = sum(a * b for a, b in zip(u, w))
        return w if s > 0 else tuple(-c for c in w)

    def extent(self, region: Region):
        """Clipped parameter interval ``(p, u, lo, hi)`` of the edge inside ``region``."""
        p, u, lo, hi = self.line()
        if all(c == 0 for c in u):
            raise DegenerateEdge(f"edge {self.id} has zero length")
        clip = region.clip(p, u, lo, hi)
        if clip is None:
            raise DegenerateEdge(f"edge {self.id} does not meet the region")
        lo, hi = clip
        if hi is None or lo is None:
            raise UnboundedExtent(f"edge {self.id} is not bounded by the region")
        if lo == hi:
            raise DegenerateEdge(f"edge {self.id} meets the region in a single point")
        return p, u, lo, hi

    def translated(self, shift) -> "Edge":
        head = None if self.head is None else sub(self.head, shift)
        return Edge(self.id, sub(self.tail, shift), self.weight, head, self.ray_sign)


def _segment_lambda(u, lo, hi, w):
    lam = ratio(u, w)
    if lam is None or lam == 0:
        raise NotParallel(f"direction {format_vec(u)} is not parallel to weight {w}")
    return (hi - lo) * lam


def edge_area(e: Edge, region: Region) -> Fraction:
    """Tropical area ``|lambda| * normSq(w)`` of the edge clipped to ``region``."""
    p, u, lo, hi = e.extent(region)
    return abs(_segment_lambda(u, lo, hi, e.weight.vector)) * e.weight.norm_sq


def piece_area(start, end, weight: Weight) -> Fraction:
    """Area of the straight piece ``start -> end`` carrying ``weight``."""
    return abs(_segment_lambda(sub(end, start), 0, 1, weight.vector)) * weight.norm_sq


@dataclass(frozen=True)
class TropicalCurve:
    dim: int
    region: Region
    vertices: tuple = ()
    edges: tuple = ()
    metadata: Mapping = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.region.dim != self.dim:
            raise BadDimension("region dimension differs from curve dimension")
        verts = tuple(point(v) for v in self.vertices)
        for v in verts:
            if len(v) != self.dim:
                raise BadDimension(f"vertex {v} has wrong dimension")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(self.edges))
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise ValueError("edge ids must be unique")
        for e in self.edges:
            if len(e.tail) != self.dim:
                raise BadDimension(f"edge {e.id} has wrong dimension")

    @cached_property
    def vertex_index(self) -> dict:
        out = {}
        for k, v in enumerate(self.vertices):
            out.setdefault(v, k)
        return out

    @cached_property
    def _edges_by_id(self) -> dict:
        return {e.id: e for e in self.edges}

    def edge(self, eid: int) -> Edge:
        try:
            return self._edges_by_id[eid]
        except KeyError:
            raise KeyError(f"no edge with id {eid}") from None

    @cached_property
    def _extents(self) -> dict:
        out = {}
        for e in self.edges:
            try:
                out[e.id] = e.extent(self.region)
            except (DegenerateEdge, UnboundedExtent) as exc:
                out[e.id] = exc
        return out

    def extent(self, e):
        eid = e if isinstance(e, int) else e.id
        ext = self._extents[eid]
        if isinstance(ext, Exception):
            raise ext
        return ext

    def endpoints(self, e):
        p, u, lo, hi = self.extent(e)
        return along(p, u, lo), along(p, u, hi)

    @cached_property
    def ends(self) -> dict:
        """Map from each extent endpoint to ``[(edge, outward representative), ...]``."""
        out = {}
        for e in self.edges:
            ext = self._extents[e.id]
            if isinstance(ext, Exception) or not e.is_parallel():
                continue
            p, u, lo, hi = ext
            w = e.oriented_vector()
            out.setdefault(along(p, u, lo), []).append((e, w))
            out.setdefault(along(p, u, hi), []).append((e, tuple(-c for c in w)))
        return out

    def incident(self, v: int) -> list:
        if not 0 <= v < len(self.vertices):
            raise UnknownVertex(f"no vertex v{v}")
        return list(self.ends.get(self.vertices[v], ()))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def translated(self, shift) -> "TropicalCurve":
        shift = point(shift)
        return TropicalCurve(
            self.dim,
            self.region.translated(shift),
            tuple(sub(v, shift) for v in self.vertices),
            tuple(e.translated(shift) for e in self.edges),
            dict(self.metadata),
        )

    def with_region(self, region: Region) -> "TropicalCurve":
        return TropicalCurve(self.dim, region, self.vertices, self.edges, dict(self.metadata))


def curve_area(G: TropicalCurve) -> Fraction:
    return sum((edge_area(e, G.region) for e in G.edges), Fraction(0))


def check_balancing(G: TropicalCurve, v: int) -> tuple:
    """Sum of outward weight representatives at vertex ``v``; zero iff balanced."""
    total = [0] * G.dim
    for _, w in G.incident(v):
        for k, c in enumerate(w):
            total[k] += c
    return tuple(total)


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: str
    detail: str = ""

    def __str__(self):
        return f"{self.kind} {self.subject} {self.detail}".rstrip()


@dataclass(frozen=True)
class ValidationReport:
    level: str
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set:
        return {v.kind for v in self.violations}

    def lines(self) -> list:
        return [str(v) for v in self.violations]


def _bbox(p, u, lo, hi):
    a, b = along(p, u, lo), along(p, u, hi)
    return tuple(min(x, y) for x, y in zip(a, b)), tuple(max(x, y) for x, y in zip(a, b))


def _boxes_meet(b1, b2):
    return all(l1 <= h2 and l2 <= h1 for l1, h1, l2, h2 in zip(b1[0], b1[1], b2[0], b2[1]))


def validate(G: TropicalCurve, level: str = STRICT) -> ValidationReport:
    if level not in (STRICT, LENIENT):
        raise ValueError(f"unknown validation level {level!r}")
    out = []
    good = []
    for e in G.edges:
        if not e.is_parallel():
            out.append(Violation("NOT_PARALLEL", f"e{e.id}", f"weight {format_vec(e.weight.direction)}"))
            continue
        p, u, lo, hi = e.line()
        if e.head is not None:
            for x in (e.tail, e.head):
                if not G.region.contains(x):
                    out.append(Violation("OUTSIDE", f"e{e.id}", format_vec(x)))
        elif not G.region.contains(e.tail):
            out.append(Violation("OUTSIDE", f"e{e.id}", format_vec(e.tail)))
        try:
            good.append((e, G.extent(e)))
        except UnboundedExtent:
            out.append(Violation("UNBOUNDED", f"e{e.id}", "ray is not cut off by the region"))
        except DegenerateEdge as exc:
            out.append(Violation("DEGENERATE", f"e{e.id}", str(exc)))
    for k, v in enumerate(G.vertices):
        if not G.region.contains(v, strict=True):
            out.append(Violation("OUTSIDE", f"v{k}", format_vec(v)))
    for k in range(len(G.vertices)):
        defect = check_balancing(G, k)
        if any(defect):
            out.append(Violation("UNBALANCED", f"v{k}", format_vec(defect)))
    if level == LENIENT:
        return ValidationReport(level, tuple(out))

    seen = {}
    for k, v in enumerate(G.vertices):
        if v in seen:
            out.append(Violation("DUPLICATE_VERTEX", f"v{k}", f"same point as v{seen[v]}"))
        else:
            seen[v] = k
    for k, v in enumerate(G.vertices):
        val = len(G.ends.get(v, ()))
        if val < 3:
            out.append(Violation("LOW_VALENCE", f"v{k}", str(val)))
    for e, (p, u, lo, hi) in good:
        for t in (lo, hi):
            x = along(p, u, t)
            if x not in G.vertex_index and not G.region.on_boundary(x):
                out.append(Violation("DANGLING", f"e{e.id}", format_vec(x)))
    boxes = [(e, ext, _bbox(*ext)) for e, ext in good]
    for k, v in enumerate(G.vertices):
        for e, (p, u, lo, hi), _ in boxes:
            lam = ratio(sub(v, p), u)
            if lam is not None and lo < lam < hi:
                out.append(Violation("VERTEX_ON_EDGE", f"v{k}", f"e{e.id}"))
    for a in range(len(boxes)):
        e1, (p, u, lo1, hi1), b1 = boxes[a]
        for b in range(a + 1, len(boxes)):
            e2, (q, v, lo2, hi2), b2 = boxes[b]
            if not _boxes_meet(b1, b2):
                continue
            hit = segment_intersection(p, u, lo1, hi1, q, v, lo2, hi2)
            if hit is None:
                continue
            if hit[0] == "overlap":
                out.append(Violation("OVERLAP", f"e{e1.id}", f"e{e2.id}"))
                continue
            _, x, s, t = hit
            if s in (lo1, hi1) and t in (lo2, hi2):
                # shared endpoint: a vertex, a boundary end, or a breakpoint already reported
                continue
            out.append(Violation("CROSSING", f"e{e1.id}", f"e{e2.id} at {format_vec(x)}"))
    return ValidationReport(level, tuple(out))


def restrict(G: TropicalCurve, V: Region) -> TropicalCurve:
    """The restriction of ``G`` to the interior of ``V``.

    Every edge is clipped to ``V``; rays whose tail lies in ``V`` stay rays,
    other clipped pieces become segments ending on the boundary of ``V``.
    """
    if V.dim != G.dim:
        raise BadDimension("region dimension differs from curve dimension")
    if V != G.region and not G.region.contains_region(V):
        raise NotContained("restriction region is not contained in the curve's region")
    verts = []
    for k, v in enumerate(G.vertices):
        if V.on_boundary(v):
            raise VertexOnBoundary(f"vertex v{k} {format_vec(v)} lies on the boundary")
        if V.contains(v, strict=True):
            verts.append(v)
    edges = []
    for e in G.edges:
        p, u, lo, hi = G.extent(e)
        clip = V.clip(p, u, lo, hi)
        if clip is None or clip[0] == clip[1]:
            continue
        a, b = clip
        if V.tight(along(p, u, (a + b) / 2)):
            raise NonTransversal(f"edge {e.id} runs inside a facet hyperplane of the region")
        if a == lo and b == hi:
            edges.append(e)
        elif e.is_ray and a == lo:
            edges.append(e)
        else:
            start, end = along(p, u, a), along(p, u, b)
            edges.append(Edge(e.id, start, e.weight, head=end))
    return TropicalCurve(G.dim, V, tuple(verts), tuple(edges), dict(G.metadata))


def subdivide_crossings(G: TropicalCurve) -> TropicalCurve:
    """Declare every interior crossing point as a vertex and split edges there.

    The result is a polyhedral complex; collinear overlaps raise
    :class:`OverlappingEdges`.  Edge ids are renumbered from 0.
    """
    exts = [(e, G.extent(e)) for e in G.edges]
    cuts = {e.id: set() for e in G.edges}
    new_points = []
    known = set(G.vertices)
    boxes = [_bbox(*ext) for _, ext in exts]

    def mark(x):
        if x not in known and G.region.contains(x, strict=True):
            known.add(x)
            new_points.append(x)

    for e, (p, u, lo, hi) in exts:
        for v in G.vertices:
            lam = ratio(sub(v, p), u)
            if lam is not None and lo < lam < hi:
                cuts[e.id].add(lam)
    for a in range(len(exts)):
        e1, (p, u, lo1, hi1) = exts[a]
        for b in range(a + 1, len(exts)):
            if not _boxes_meet(boxes[a], boxes[b]):
                continue
            e2, (q, v, lo2, hi2) = exts[b]
            hit = segment_intersection(p, u, lo1, hi1, q, v, lo2, hi2)
            if hit is None:
                continue
            if hit[0] == "overlap":
                raise OverlappingEdges(f"edges {e1.id} and {e2.id} overlap")
            _, x, s, t = hit
            if not G.region.contains(x, strict=True):
                continue
            if lo1 < s < hi1:
                cuts[e1.id].add(s)
            if lo2 < t < hi2:
                cuts[e2.id].add(t)
            if (lo1 < s < hi1) or (lo2 < t < hi2):
                mark(x)
    pieces = []
    for e, (p, u, lo, hi) in exts:
        bounds = [lo] + sorted(cuts[e.id]) + [hi]
        if len(bounds) == 2:
            pieces.append((e.tail, e.weight, e.head, e.ray_sign))
            continue
        for k in range(len(bounds) - 1):
            start, end = along(p, u, bounds[k]), along(p, u, bounds[k + 1])
            if k == len(bounds) - 2 and e.is_ray:
                pieces.append((start, e.weight, None, e.ray_sign))
            else:
                pieces.append((start, e.weight, end, 1))
    edges = tuple(Edge(k, *piece) for k, piece in enumerate(pieces))
    return TropicalCurve(G.dim, G.region, G.vertices + tuple(new_points), edges, dict(G.metadata))


def union(*curves: TropicalCurve) -> TropicalCurve:
    """Superpose curves sharing a region; vertices are merged, edges renumbered."""
    first = curves[0]
    verts = []
    seen = set()
    edges = []
    for G in curves:
        if G.region != first.region:
            raise ValueError("curves must share a region")
        for v in G.vertices:
            if v not in seen:
                seen.add(v)
                verts.append(v)
        for e in G.edges:
            edges.append(Edge(len(edges), e.tail, e.weight, e.head, e.ray_sign))
    return TropicalCurve(first.dim, first.region, tuple(verts), tuple(edges))

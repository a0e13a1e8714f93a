"""Capacity-greedy path decompositions of a curve in a coordinate direction.

A path in direction ``i`` climbs strictly in ``x_i``.  Each edge ``e`` has
capacity ``|w_e^i|``; every path passing through ``e`` spends one unit, so
the union weight ``k * w_e / |w_e^i|`` never exceeds ``w_e``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, NamedTuple

from .core import QWeight, TropicalCurve, piece_area
from .errors import NotContained, PreconditionViolated, StuckVertex
from .exact import along, format_vec, point
from .geometry import _saturated_hits
from .polytope import Region, box


@dataclass(frozen=True)
class PathSegment:
    edge_id: int
    start: tuple
    end: tuple
    weight: QWeight

    @property
    def area(self) -> Fraction:
        return piece_area(self.start, self.end, self.weight.base) * self.weight.scale


@dataclass(frozen=True)
class Path:
    direction: int
    segments: tuple
    entry_edge: int

    @property
    def exit_point(self) -> tuple:
        return self.segments[-1].end

    @property
    def junctions(self) -> tuple:
        return tuple(s.end for s in self.segments[:-1])

    @property
    def edge_ids(self) -> tuple:
        return tuple(s.edge_id for s in self.segments)

    @property
    def area(self) -> Fraction:
        return sum((s.area for s in self.segments), Fraction(0))


@dataclass(frozen=True)
class PathFamily:
    direction: int
    paths: tuple
    usage: Mapping
    capacity: Mapping


def _by_id(edge, out):
    return edge.id


def _by_direction(edge, out):
    m = edge.weight.multiplicity
    return tuple(c // m for c in out), edge.id


TIE_RULES = {"id": _by_id, "lex": _by_direction}


def _rule(tie_rule) -> Callable:
    if callable(tie_rule):
        return tie_rule
    try:
        return TIE_RULES[tie_rule]
    except KeyError:
        raise ValueError(f"unknown tie rule {tie_rule!r}; expected one of {sorted(TIE_RULES)}") from None


def _floor_facet(R: Region, i: int):
    """The level ``c`` of a facet ``{x_i = c}`` with ``R`` inside ``{x_i >= c}``."""
    for a, b in R.halfspaces:
        if a[i - 1] < 0 and all(c == 0 for k, c in enumerate(a) if k != i - 1):
            return -b / a[i - 1]
    return None


def _trace(H, R, e0, i, count, capacity, key):
    e = H.edge(e0)
    w_i = e.weight.component(i)
    if w_i == 0:
        raise PreconditionViolated(f"edge e{e0} has zero {i}-th weight component")
    c = _floor_facet(R, i)
    if c is None:
        raise PreconditionViolated(f"region has no facet x_{i} = const below it")
    p, u, lo, hi = H.extent(e)
    t_star = (c - p[i - 1]) / u[i - 1]
    if not lo <= t_star <= hi:
        raise PreconditionViolated(f"edge e{e0} does not reach the facet x_{i} = {c}")
    z = along(p, u, t_star)
    if len(R.tight(z)) != 1 or not R.contains(z):
        raise PreconditionViolated(f"edge e{e0} misses the relative interior of the facet at {format_vec(z)}")
    clip = R.clip(p, u, lo, hi)
    if clip is None or clip[0] == clip[1]:
        raise PreconditionViolated(f"edge e{e0} does not enter the region")
    a, b = clip
    first_end = along(p, u, b if t_star == a else a)
    paths = []
    for _ in range(count):
        if capacity[e0] <= 0:
            raise PreconditionViolated(f"edge e{e0} has no capacity left")
        capacity[e0] -= 1
        segs = [PathSegment(e0, z, first_end, QWeight(e.weight, Fraction(1, w_i)))]
        B = first_end
        while not R.on_boundary(B):
            cands = [
                (edge, out)
                for edge, out in H.ends.get(B, ())
                if out[i - 1] > 0 and capacity[edge.id] > 0
            ]
            if not cands:
                raise StuckVertex(f"no onward edge with capacity at {format_vec(B)} (direction {i})")
            edge, out = min(cands, key=lambda c_: key(*c_))
            capacity[edge.id] -= 1
            q, v, l2, h2 = H.extent(edge)
            a2, b2 = R.clip(q, v, l2, h2)
            end = along(q, v, b2) if along(q, v, l2) == B else along(q, v, a2)
            segs.append(PathSegment(edge.id, B, end, QWeight(edge.weight, Fraction(1, edge.weight.component(i)))))
            B = end
        paths.append(Path(i, tuple(segs), e0))
    return paths


def _family(H, i, paths, capacity, initial):
    usage = {eid: initial[eid] - capacity[eid] for eid in initial if initial[eid] != capacity[eid]}
    return PathFamily(i, tuple(paths), usage, dict(initial))


def extract_paths(H: TropicalCurve, R: Region, e0: int, i: int, tie_rule="id") -> PathFamily:
    """``|w_{e0}^i|`` paths starting on ``e0`` where it crosses the floor facet of ``R``."""
    if not 1 <= i <= H.dim:
        raise PreconditionViolated(f"direction {i} out of range")
    if R != H.region and not H.region.contains_region(R):
        raise NotContained("path region is not contained in the curve's region")
    for k, v in enumerate(H.vertices):
        if R.on_boundary(v):
            raise PreconditionViolated(f"vertex v{k} lies on the boundary of the path region")
    initial = {e.id: e.weight.component(i) for e in H.edges}
    capacity = dict(initial)
    m = H.edge(e0).weight.component(i)
    paths = _trace(H, R, e0, i, m, capacity, _rule(tie_rule))
    return _family(H, i, paths, capacity, initial)


def union_weights(F: PathFamily) -> dict:
    """Union weight ``k * w_e / |w_e^i|`` for every edge used by the family."""
    base = {}
    for P in F.paths:
        for s in P.segments:
            base[s.edge_id] = s.weight.base
    return {eid: QWeight(base[eid], Fraction(k, base[eid].component(F.direction))) for eid, k in F.usage.items()}


def path_family_for_face(G: TropicalCurve, i: int, tie_rule="id") -> PathFamily:
    """Paths from every crossing of the facet ``{x_i = 0}`` with one shared capacity table."""
    hits = sorted((h for h in _saturated_hits(G) if h.facet == i), key=lambda h: (h.point, h.edge_id))
    initial = {e.id: e.weight.component(i) for e in G.edges}
    capacity = dict(initial)
    key = _rule(tie_rule)
    paths = []
    for h in hits:
        m = G.edge(h.edge_id).weight.component(i)
        paths.extend(_trace(G, G.region, h.edge_id, i, m, capacity, key))
    return _family(G, i, paths, capacity, initial)


def v0_set(P: Path, G: TropicalCurve, i: int | None = None) -> set:
    """Junction vertices of ``P`` with an off-path incident edge having a nonzero j-th weight, j != i."""
    i = P.direction if i is None else i
    on_path = set(P.edge_ids)
    found = set()
    for B in P.junctions:
        vid = G.vertex_index.get(B)
        if vid is None:
            continue
        for edge, out in G.ends.get(B, ()):
            if edge.id in on_path:
                continue
            if any(c != 0 for k, c in enumerate(out) if k != i - 1):
                found.add(vid)
                break
    return found


class BoundCheck(NamedTuple):
    count: int
    bound: int
    passed: bool


def v0_bound_check(P: Path | None, G: TropicalCurve, d: int) -> BoundCheck:
    count = 0 if P is None else len(v0_set(P, G))
    bound = 2 * d * (G.dim - 1)
    return BoundCheck(count, bound, count <= bound)


@dataclass(frozen=True)
class CoverReport:
    covered: bool
    misses: frozenset


def cover_check(G: TropicalCurve, families) -> CoverReport:
    seen = set()
    for F in families:
        for P in F.paths:
            seen |= v0_set(P, G, F.direction)
    misses = frozenset(range(len(G.vertices))) - seen
    return CoverReport(not misses, misses)


def families_for_directions(G: TropicalCurve, tie_rule="id", directions=None) -> list:
    directions = range(1, G.dim) if directions is None else directions
    return [path_family_for_face(G, i, tie_rule) for i in directions]


class FlowBound(NamedTuple):
    area: Fraction
    m: int
    passed: bool
    path_area: Fraction


def flow_box(n: int, i: int, size=1) -> Region:
    size = Fraction(size)
    lo = [-size] * n
    hi = [size] * n
    lo[i - 1] = Fraction(0)
    return box(lo, hi)


def flow_lower_bound(H: TropicalCurve, e0: int, i: int, at=None, size=1) -> FlowBound:
    """Area of ``H`` inside a box sitting on a point of ``e0`` versus ``|w_{e0}^i|``.

    The curve is translated so the distinguished point ``at`` (default: the
    midpoint of ``e0``) is the origin; the box is ``[-s, s]^{j != i} x [0, s]``.
    """
    e = H.edge(e0)
    p, u, lo, hi = H.extent(e)
    if at is None:
        at = along(p, u, (lo + hi) / 2)
    at = point(at)
    k = next(j for j, c in enumerate(u) if c != 0)
    lam = (at[k] - p[k]) / u[k]
    if along(p, u, lam) != at or not lo < lam < hi:
        raise PreconditionViolated(f"{format_vec(at)} is not an interior point of e{e0}")
    m = e.weight.component(i)
    size = Fraction(size)
    moved = H.translated(at)
    R = flow_box(H.dim, i, size)
    if not moved.region.contains_region(R):
        raise PreconditionViolated("flow box is not contained in the curve's region")
    area = open_area(moved, R)
    path_area = Fraction(0)
    if m:
        fam = extract_paths(moved, R, e0, i)
        path_area = sum((P.area for P in fam.paths), Fraction(0))
    return FlowBound(area, m, area >= m * size, path_area)


def open_area(H: TropicalCurve, R: Region) -> Fraction:
    """Area of ``H`` inside the open region ``R``; pieces lying in a facet hyperplane count zero."""
    total = Fraction(0)
    for e in H.edges:
        p, u, lo, hi = H.extent(e)
        clip = R.clip(p, u, lo, hi)
        if clip is None or clip[0] == clip[1]:
            continue
        a, b = clip
        if R.tight(along(p, u, (a + b) / 2)):
            continue
        total += piece_area(along(p, u, a), along(p, u, b), e.weight)
    return total

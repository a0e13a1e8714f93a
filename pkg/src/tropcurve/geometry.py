"""Boundary crossings, global balancing and saturated-curve analysis.

Directions ``i`` are 1-based throughout, matching FaceId: facet ``i`` of the
standard simplex is ``{x_i = 0}`` and facet ``0`` is ``{sum x = 1}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .core import TropicalCurve, curve_area
from .errors import DegenerateSlice, NonTransversal, NotSaturated, VertexOnBoundary
from .exact import along, format_vec, ratio
from .polytope import (
    Region,
    box,
    collar_simplex,
    dilated_simplex,
    facet_normal,
    is_standard_simplex,
    standard_simplex,
)

__all__ = [
    "Region",
    "box",
    "collar_simplex",
    "dilated_simplex",
    "standard_simplex",
    "BoundaryHit",
    "boundary_crossings",
    "global_balance",
    "SaturationReport",
    "is_saturated",
    "face_degrees",
    "saturated_area_check",
    "measure_density",
    "density_prediction",
    "critical_coordinates",
    "slice_midpoints",
]


@dataclass(frozen=True)
class BoundaryHit:
    edge_id: int
    facet: int
    point: tuple
    outward: tuple
    on_skeleton: bool
    facets: tuple
    multiplicity: int


def boundary_crossings(G: TropicalCurve, W: Region) -> list:
    """Points where the closure of ``G`` meets the boundary of ``W``.

    ``outward`` is the weight representative pointing from inside ``W`` to
    outside.  Edge ends lying on the boundary of ``G.region`` count as hits,
    so ``boundary_crossings(G, G.region)`` lists the ends of the curve.
    """
    for k, v in enumerate(G.vertices):
        if W.on_boundary(v):
            raise VertexOnBoundary(f"vertex v{k} {format_vec(v)} lies on the boundary")
    hits = []
    for e in G.edges:
        p, u, lo, hi = G.extent(e)
        for t in (lo, hi):
            x = along(p, u, t)
            if W.on_boundary(x) and not G.region.on_boundary(x):
                raise VertexOnBoundary(f"edge e{e.id} ends at {format_vec(x)} on the boundary")
        clip = W.clip(p, u, lo, hi)
        if clip is None:
            continue
        a, b = clip
        if a == b:
            raise NonTransversal(f"edge e{e.id} touches the boundary at a single point")
        if W.tight(along(p, u, (a + b) / 2)):
            raise NonTransversal(f"edge e{e.id} runs inside a facet hyperplane")
        w = e.oriented_vector()
        for t, sign in ((a, -1), (b, 1)):
            x = along(p, u, t)
            if t in (lo, hi) and not W.on_boundary(x):
                continue
            facets = W.tight(x)
            hits.append(
                BoundaryHit(
                    e.id,
                    facets[0],
                    x,
                    tuple(sign * c for c in w),
                    len(facets) >= 2,
                    facets,
                    e.weight.multiplicity,
                )
            )
    return hits


def global_balance(G: TropicalCurve, W: Region) -> tuple:
    total = [0] * G.dim
    for h in boundary_crossings(G, W):
        for k, c in enumerate(h.outward):
            total[k] += c
    return tuple(total)


@dataclass(frozen=True)
class HitStatus:
    hit: BoundaryHit
    perpendicular: bool


@dataclass(frozen=True)
class SaturationReport:
    saturated: bool
    hits: tuple
    problems: tuple

    def lines(self):
        out = list(self.problems)
        for s in self.hits:
            h = s.hit
            if h.on_skeleton:
                out.append(f"SKELETON e{h.edge_id} {format_vec(h.point)}")
            elif not s.perpendicular:
                out.append(f"NOT_PERPENDICULAR e{h.edge_id} facet {h.facet} {format_vec(h.point)}")
        return out


def is_saturated(G: TropicalCurve) -> SaturationReport:
    n = G.dim
    if not is_standard_simplex(G.region):
        return SaturationReport(False, (), ("region is not the standard simplex",))
    problems = []
    for k, v in enumerate(G.vertices):
        if not G.region.contains(v, strict=True):
            problems.append(f"vertex v{k} is not in the open simplex")
    try:
        hits = boundary_crossings(G, G.region)
    except (NonTransversal, VertexOnBoundary) as exc:
        return SaturationReport(False, (), tuple(problems) + (str(exc),))
    statuses = []
    for h in hits:
        perp = ratio(h.outward, facet_normal(n, h.facet)) is not None
        statuses.append(HitStatus(h, perp))
    ok = not problems and all(s.perpendicular and not s.hit.on_skeleton for s in statuses)
    return SaturationReport(ok, tuple(statuses), tuple(problems))


def _saturated_hits(G):
    rep = is_saturated(G)
    if not rep.saturated:
        raise NotSaturated("; ".join(rep.lines()) or "curve is not saturated")
    return [s.hit for s in rep.hits]


def face_degrees(G: TropicalCurve) -> tuple:
    """Crossing multiplicities per facet, ordered ``(d_1, ..., d_n, d_0)``."""
    deg = [0] * (G.dim + 1)
    for h in _saturated_hits(G):
        deg[h.facet] += h.multiplicity
    return tuple(deg[1:]) + (deg[0],)


class AreaCheck(NamedTuple):
    area: Fraction
    d: int
    equal: bool


def saturated_area_check(G: TropicalCurve) -> AreaCheck:
    d = face_degrees(G)[-1]
    area = curve_area(G)
    return AreaCheck(area, d, area == d)


def _sum_facet_hits(G):
    return [h for h in boundary_crossings(G, G.region) if h.facet == 0 and not h.on_skeleton]


def measure_density(G: TropicalCurve, i: int, zeta) -> int:
    """Sum of ``|w_e^i|`` over edges whose i-th coordinate range strictly contains ``zeta``."""
    zeta = Fraction(zeta)
    if not 0 < zeta < 1:
        raise DegenerateSlice("slice must lie strictly between 0 and 1")
    if any(v[i - 1] == zeta for v in G.vertices):
        raise DegenerateSlice(f"slice x_{i} = {zeta} passes through a vertex")
    if any(h.point[i - 1] == zeta for h in _sum_facet_hits(G)):
        raise DegenerateSlice(f"slice x_{i} = {zeta} passes through a crossing point")
    total = 0
    for e in G.edges:
        a, b = G.endpoints(e)
        lo, hi = sorted((a[i - 1], b[i - 1]))
        if lo < zeta < hi:
            total += e.weight.component(i)
    return total


def density_prediction(G: TropicalCurve, i: int, zeta) -> int:
    """``d`` minus the multiplicities of sum-facet crossings below the slice."""
    zeta = Fraction(zeta)
    hits = _sum_facet_hits(G)
    d = sum(h.multiplicity for h in hits)
    return d - sum(h.multiplicity for h in hits if h.point[i - 1] < zeta)


def critical_coordinates(G: TropicalCurve, i: int) -> list:
    vals = {Fraction(0), Fraction(1)}
    vals.update(v[i - 1] for v in G.vertices)
    for e in G.edges:
        for x in G.endpoints(e):
            vals.add(x[i - 1])
    return sorted(v for v in vals if 0 <= v <= 1)


def slice_midpoints(G: TropicalCurve, i: int) -> list:
    c = critical_coordinates(G, i)
    return [(a + b) / 2 for a, b in zip(c, c[1:])]

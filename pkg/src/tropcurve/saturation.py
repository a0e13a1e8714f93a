"""Turning the restriction of a curve to the open simplex into a saturated curve.

Edge ends that meet the simplex boundary badly (not perpendicular, or on the
(n-2)-skeleton) are cut at an inner collar.  The cut point gets rays along
``-e_1, ..., -e_n`` and ``(1, ..., 1)`` whose multiplicities come from
:func:`decompose`, which keeps the cut point balanced.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import Edge, TropicalCurve, canonical_weight, curve_area, restrict
from .errors import CollarFailure, DegenerateCurve, NonTransversal, SkeletonRay, VertexOnBoundary
from .exact import along, format_vec, ratio
from .geometry import boundary_crossings, is_saturated
from .polytope import collar_simplex, facet_normal, standard_simplex

MAX_RETRIES = 64


@dataclass(frozen=True)
class Decomposition:
    a: tuple

    def reconstruct(self) -> tuple:
        n = len(self.a) - 1
        return tuple(self.a[0] - self.a[j + 1] for j in range(n))


def decompose(w) -> Decomposition:
    """Unique non-negative ``a_0..a_n`` with ``w = a_0 (1,..,1) - sum a_j e_j`` and some ``a_i = 0``."""
    w = tuple(int(c) for c in w)
    a0 = max(0, max(w))
    return Decomposition((a0,) + tuple(a0 - c for c in w))


def basis_vector(n: int, index: int) -> tuple:
    """``e'_0 = (1, ..., 1)`` and ``e'_j = -e_j``."""
    if index == 0:
        return (1,) * n
    return tuple(-1 if k == index - 1 else 0 for k in range(n))


@dataclass(frozen=True)
class SurgeryEntry:
    edge_id: int
    point: tuple
    deleted: tuple
    outward: tuple
    rays: tuple


@dataclass
class SurgeryLog:
    entries: list = field(default_factory=list)
    offsets: tuple = ()
    attempts: int = 0
    notes: list = field(default_factory=list)

    def lines(self):
        out = [f"COLLAR {' '.join(str(o) for o in self.offsets)} attempts {self.attempts}"]
        for s in self.entries:
            rays = " ".join(f"{i}x{m}" for i, m in s.rays)
            out.append(f"CUT e{s.edge_id} at {format_vec(s.point)} outward {format_vec(s.outward)} rays {rays}")
        out.extend(self.notes)
        return out


def _qualifies(K, n, x, w) -> bool:
    facets = K.tight(x)
    if len(facets) >= 2:
        return True
    return ratio(w, facet_normal(n, facets[0])) is None


def _interior_points(G):
    pts = set(G.vertices)
    for e in G.edges:
        for x in G.endpoints(e):
            if G.region.contains(x, strict=True):
                pts.add(x)
    return pts


def _margins(n, x):
    return (1 - sum(x),) + tuple(x)


def shrink(offsets) -> tuple:
    """Shrink collar offsets by facet-dependent factors in ``[2/5, 1/2)``.

    Uniform halving would keep the offset ratios, so an edge aimed at a corner
    of the simplex would keep hitting a corner of the collar.
    """
    return tuple(o * Fraction(f + 2, 2 * f + 5) for f, o in enumerate(offsets))


def choose_collar(GK: TropicalCurve) -> tuple:
    """Per-facet inward offsets for the collar simplex (FaceId order 0..n)."""
    n = GK.dim
    K = standard_simplex(n)
    for e in GK.edges:
        p, u, lo, hi = GK.extent(e)
        if K.tight(along(p, u, (lo + hi) / 2)):
            raise DegenerateCurve(f"edge e{e.id} lies inside a facet hyperplane of the simplex")
    pts = _interior_points(GK)
    default = Fraction(1, 4 * (n + 1))
    offsets = []
    for f in range(n + 1):
        if pts:
            offsets.append(min(_margins(n, x)[f] for x in pts) / 2)
        else:
            offsets.append(default)
    offsets = tuple(offsets)
    for _ in range(MAX_RETRIES):
        if _collar_ok(GK, offsets):
            return offsets
        offsets = shrink(offsets)
    raise CollarFailure("no admissible collar found")


def _collar_ok(GK, offsets) -> bool:
    n = GK.dim
    K = GK.region
    inner = collar_simplex(n, offsets)
    try:
        hits = boundary_crossings(GK, inner)
    except (NonTransversal, VertexOnBoundary):
        return False
    if any(h.on_skeleton for h in hits):
        return False
    for e in GK.edges:
        p, u, lo, hi = GK.extent(e)
        w = e.oriented_vector()
        bad = any(
            K.on_boundary(along(p, u, t)) and _qualifies(K, n, along(p, u, t), w) for t in (lo, hi)
        )
        if bad:
            clip = inner.clip(p, u, lo, hi)
            if clip is None or clip[0] == clip[1]:
                return False
    return True


class _Retry(Exception):
    pass


def _operate(GK: TropicalCurve, offsets, log: SurgeryLog) -> TropicalCurve:
    n = GK.dim
    K = GK.region
    inner = collar_simplex(n, offsets)
    vertices = list(GK.vertices)
    taken = set(vertices)
    edges = []
    added = []
    next_id = max((e.id for e in GK.edges), default=-1) + 1
    for e in GK.edges:
        p, u, lo, hi = GK.extent(e)
        w = e.oriented_vector()
        x_lo, x_hi = along(p, u, lo), along(p, u, hi)
        cut_lo = K.on_boundary(x_lo) and _qualifies(K, n, x_lo, w)
        cut_hi = K.on_boundary(x_hi) and _qualifies(K, n, x_hi, w)
        if not (cut_lo or cut_hi):
            edges.append(e)
            continue
        clip = inner.clip(p, u, lo, hi)
        if clip is None or clip[0] == clip[1]:
            raise _Retry
        a, b = clip
        new_lo = a if cut_lo else lo
        new_hi = b if cut_hi else hi
        start, end = along(p, u, new_lo), along(p, u, new_hi)
        if e.is_ray and not cut_hi:
            edges.append(Edge(e.id, start, e.weight, ray_sign=e.ray_sign))
        else:
            edges.append(Edge(e.id, start, e.weight, head=end))
        cuts = []
        if cut_lo:
            cuts.append((start, x_lo, tuple(-c for c in w)))
        if cut_hi:
            cuts.append((end, x_hi, w))
        for P, gone, outward in cuts:
            if len(inner.tight(P)) != 1 or P in taken:
                raise _Retry
            taken.add(P)
            vertices.append(P)
            dec = decompose(outward)
            rays = []
            for idx, mult in enumerate(dec.a):
                if mult == 0:
                    continue
                vec = basis_vector(n, idx)
                weight = canonical_weight(tuple(mult * c for c in vec))
                sign = 1 if weight.direction == vec else -1
                added.append(Edge(next_id, P, weight, ray_sign=sign))
                next_id += 1
                rays.append((idx, mult))
            log.entries.append(SurgeryEntry(e.id, P, (P, gone), outward, tuple(rays)))
    return TropicalCurve(n, K, tuple(vertices), tuple(edges + added), dict(GK.metadata))


@dataclass
class SaturationResult:
    curve: TropicalCurve
    log: SurgeryLog
    restricted: TropicalCurve

    def __iter__(self):
        return iter((self.curve, self.log))


def saturate(G: TropicalCurve, delta=None) -> SaturationResult:
    """Saturate the restriction of ``G`` to the open standard simplex.

    ``delta`` is only recorded; the construction itself depends on the
    collar offsets picked by :func:`choose_collar`.
    """
    n = G.dim
    K = standard_simplex(n)
    GK = restrict(G, K)
    offsets = choose_collar(GK)
    log = SurgeryLog()
    if delta is not None:
        log.notes.append(f"DELTA {Fraction(delta)}")
    for attempt in range(1, MAX_RETRIES + 1):
        log.entries.clear()
        log.offsets = offsets
        log.attempts = attempt
        try:
            out = _operate(GK, offsets, log)
        except _Retry:
            offsets = shrink(offsets)
            continue
        if is_saturated(out).saturated:
            return SaturationResult(out, log, GK)
        offsets = shrink(offsets)
    raise SkeletonRay("surgery output stayed unsaturated after all retries")


def area_inflation_bound(n: int, A, delta) -> Fraction:
    """``n * (A / delta)^2``."""
    q = Fraction(A) / Fraction(delta)
    return n * q * q


def surgery_report(result: SaturationResult, A=None, delta=None) -> dict:
    """Postconditions of the construction as exact values."""
    Gp, GK = result.curve, result.restricted
    out = {
        "saturated": is_saturated(Gp).saturated,
        "vertices_before": GK.vertex_count,
        "vertices_after": Gp.vertex_count,
        "area_restricted": curve_area(GK),
        "area_saturated": curve_area(Gp),
    }
    if A is not None and delta is not None:
        out["area_bound"] = out["area_restricted"] + area_inflation_bound(Gp.dim, A, delta)
    return out

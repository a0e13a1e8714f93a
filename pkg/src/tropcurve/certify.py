"""Vertex-count certificates for curves around the standard simplex.

The pipeline restricts a curve to the open simplex, saturates it, and then
compares the vertex count against ``2(n-1)^2 d^2`` where ``d`` is the degree of
the saturated curve.  Every comparison is recorded as a :class:`Check` with
exact left and right hand sides.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import TropicalCurve, curve_area, restrict
from .errors import BadDimension, NotContained
from .geometry import boundary_crossings, face_degrees, is_saturated
from .paths import families_for_directions, v0_set, cover_check
from .polytope import standard_simplex
from .saturation import area_inflation_bound, saturate

_OPS = {
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
}


@dataclass(frozen=True)
class Check:
    name: str
    lhs: object
    op: str
    rhs: object

    @property
    def passed(self) -> bool:
        return _OPS[self.op](self.lhs, self.rhs)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"CHECK {self.name} {self.lhs} {self.op} {self.rhs} {verdict}"

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": str(self.lhs), "op": self.op, "rhs": str(self.rhs), "pass": self.passed}


@dataclass(frozen=True)
class WeightReport:
    max_weight: int
    intersections: int
    bound: Fraction
    checks: tuple


def weight_bounds(G: TropicalCurve, delta, A) -> WeightReport:
    """``|w_e^i| <= A/delta`` on the restriction to the open simplex and ``I <= A/delta``.

    ``I`` counts the distinct points where ``G`` meets the simplex boundary.
    """
    bound = Fraction(A) / Fraction(delta)
    K = standard_simplex(G.dim)
    GK = restrict(G, K)
    top = max((e.weight.component(i) for e in GK.edges for i in range(1, G.dim + 1)), default=0)
    points = {h.point for h in boundary_crossings(G, K)}
    checks = (
        Check("weight_bound", top, "<=", bound),
        Check("crossing_count", len(points), "<=", bound),
    )
    return WeightReport(top, len(points), bound, checks)


@dataclass(frozen=True)
class Betti:
    components: int
    b1: int
    internal_edges: int
    vertex_count: int
    per_component: tuple = ()


def first_betti(G: TropicalCurve) -> Betti:
    """Cycle rank of the graph formed by declared vertices and edges joining two of them."""
    index = G.vertex_index
    parent = list(range(len(G.vertices)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    internal = []
    for e in G.edges:
        a, b = G.endpoints(e)
        if a in index and b in index:
            internal.append((index[a], index[b]))
            ra, rb = find(index[a]), find(index[b])
            if ra != rb:
                parent[ra] = rb
    comps = {}
    for k in range(len(G.vertices)):
        comps.setdefault(find(k), [0, 0])[0] += 1
    for a, _ in internal:
        comps[find(a)][1] += 1
    per = []
    for root in sorted(comps):
        v, e = comps[root]
        b = e - v + 1
        # the Euler relation 1 - b1 = V - E holds on each component by construction of b
        assert 1 - b == v - e
        per.append((v, e, b))
    c = len(comps)
    return Betti(c, len(internal) - len(G.vertices) + c, len(internal), len(G.vertices), tuple(per))


def castelnuovo_bound(d: int, n: int) -> int:
    """Conjectural maximum vertex count ``2 pi(d, n) + (n+1) d - 2``."""
    if n < 2:
        raise BadDimension(f"dimension must be at least 2, got {n}")
    if d < 1:
        raise ValueError("degree must be at least 1")
    m = (d - 1) // (n - 1)
    eps = d - 1 - m * (n - 1)
    pi = m * (m - 1) // 2 * (n - 1) + m * eps
    return 2 * pi + (n + 1) * d - 2


def vertex_bound(n: int, d) -> Fraction:
    return 2 * (n - 1) ** 2 * Fraction(d) ** 2


@dataclass
class Certificate:
    n: int
    delta: Fraction
    A: Fraction
    area_total: Fraction
    restricted_vertex_count: int
    d: int
    saturated_area: Fraction
    saturated_vertex_count: int
    directions: list
    checks: list
    final_bound: int
    a_priori_bound: Fraction
    cover_misses: tuple
    surgery_cuts: int
    conjectural_bound: int | None = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def lines(self) -> list:
        out = [c.line() for c in self.checks]
        for s in self.directions:
            out.append(f"DIRECTION {s['direction']} paths {s['paths']} v0_max {s['v0_max']} bound {s['bound']}")
        misses = " ".join(f"v{k}" for k in self.cover_misses) or "none"
        out.append(f"COVER misses {misses}")
        if self.conjectural_bound is not None:
            out.append(f"CONJECTURAL castelnuovo {self.conjectural_bound}")
        out.extend(self.notes)
        out.append(f"#V={self.restricted_vertex_count} <= {self.final_bound}")
        return out

    def to_dict(self) -> dict:
        return {
            "inputs": {"n": self.n, "delta": str(self.delta), "A": str(self.A)},
            "area_total": str(self.area_total),
            "restricted_vertex_count": self.restricted_vertex_count,
            "saturated": {
                "d": self.d,
                "area": str(self.saturated_area),
                "vertex_count": self.saturated_vertex_count,
                "surgery_cuts": self.surgery_cuts,
            },
            "directions": [dict(s, bound=str(s["bound"])) for s in self.directions],
            "checks": [c.to_dict() for c in self.checks],
            "cover_misses": list(self.cover_misses),
            "final_bound": self.final_bound,
            "a_priori_bound": str(self.a_priori_bound),
            "conjectural": {"castelnuovo_bound": self.conjectural_bound},
            "pass": self.passed,
        }


def certify(G: TropicalCurve, delta, A, tie_rule="id") -> Certificate:
    n = G.dim
    delta, A = Fraction(delta), Fraction(A)
    K = standard_simplex(n)
    if not G.region.contains_region(K):
        raise NotContained("the curve's region must contain the standard simplex")
    area = curve_area(G)
    checks = [Check("area_budget", area, "<=", A)]
    wb = weight_bounds(G, delta, A)
    checks.extend(wb.checks)

    result = saturate(G, delta)
    Gp, GK = result.curve, result.restricted
    checks.append(Check("saturated", int(is_saturated(Gp).saturated), "==", 1))
    degs = face_degrees(Gp)
    d = degs[-1]
    checks.append(Check("face_degrees_equal", min(degs), "==", max(degs)))
    area_p = curve_area(Gp)
    checks.append(Check("saturated_area", area_p, "==", d))
    inflation = area_inflation_bound(n, A, delta)
    checks.append(Check("surgery_area", area_p, "<=", curve_area(GK) + inflation))
    checks.append(Check("surgery_area_budget", area_p, "<=", A + inflation))

    families = families_for_directions(Gp, tie_rule)
    stats = []
    v0_top = 0
    for F in families:
        counts = [len(v0_set(P, Gp, F.direction)) for P in F.paths]
        top = max(counts, default=0)
        v0_top = max(v0_top, top)
        stats.append({"direction": F.direction, "paths": len(F.paths), "v0_max": top, "bound": 2 * d * (n - 1)})
    checks.append(Check("v0_bound", v0_top, "<=", 2 * d * (n - 1)))
    cover = cover_check(Gp, families)

    final = 2 * (n - 1) ** 2 * d * d
    a_priori = vertex_bound(n, A + inflation)
    checks.append(Check("vertex_monotone", GK.vertex_count, "<=", Gp.vertex_count))
    checks.append(Check("vertex_bound", Gp.vertex_count, "<=", final))
    checks.append(Check("restricted_vertex_bound", GK.vertex_count, "<=", final))
    checks.append(Check("a_priori_bound", GK.vertex_count, "<=", a_priori))

    return Certificate(
        n=n,
        delta=delta,
        A=A,
        area_total=area,
        restricted_vertex_count=GK.vertex_count,
        d=d,
        saturated_area=area_p,
        saturated_vertex_count=Gp.vertex_count,
        directions=stats,
        checks=checks,
        final_bound=final,
        a_priori_bound=a_priori,
        cover_misses=tuple(sorted(cover.misses)),
        surgery_cuts=len(result.log.entries),
        conjectural_bound=castelnuovo_bound(d, n) if d >= 1 else None,
    )

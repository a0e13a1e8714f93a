"""Deterministic curve generators: tropical lines, the self-similar example,
random superpositions, honeycomb plane curves and unsaturated trees."""
from __future__ import annotations

import random
from fractions import Fraction

from .core import LENIENT, STRICT, Edge, TropicalCurve, canonical_weight, restrict, subdivide_crossings, union, validate
from .errors import ApexOutside, BadDimension, OverlappingEdges, PreconditionViolated
from .exact import add, point, scale, solve
from .geometry import is_saturated
from .polytope import box, dilated_simplex, standard_simplex
from .saturation import basis_vector

MAX_TRIES = 200


def _ray(id, tail, vec, mult=1):
    """Ray from ``tail`` along the integer vector ``mult * vec``."""
    w = canonical_weight(tuple(mult * c for c in vec))
    sign = 1 if tuple(w.multiplicity * c for c in w.direction) == tuple(mult * c for c in vec) else -1
    return Edge(id, tail, w, ray_sign=sign)


def _segment(id, tail, head, vec, mult=1):
    return Edge(id, tail, canonical_weight(tuple(mult * c for c in vec)), head=head)


def gen_tropical_line(n: int, apex, multiplicity: int = 1, region=None) -> TropicalCurve:
    """Vertex at ``apex`` with rays ``-e_1, ..., -e_n`` and ``(1, ..., 1)``."""
    if n < 2:
        raise BadDimension(f"dimension must be at least 2, got {n}")
    apex = point(apex)
    if len(apex) != n:
        raise BadDimension(f"apex has {len(apex)} coordinates, expected {n}")
    if not standard_simplex(n).contains(apex, strict=True):
        raise ApexOutside(f"apex {apex} is not inside the open simplex")
    R = standard_simplex(n) if region is None else region
    edges = [_ray(k - 1, apex, basis_vector(n, k), multiplicity) for k in range(1, n + 1)]
    edges.append(_ray(n, apex, basis_vector(n, 0), multiplicity))
    return TropicalCurve(n, R, (apex,), tuple(edges), {"generator": "line"})


def gen_example7(levels: int) -> TropicalCurve:
    """Levels ``1..N`` of the self-similar curve accumulating at the origin of ``[0,1]^2``.

    The deepest vertex misses its lower diagonal segment, so it is unbalanced
    by ``2^N (1,1)``; its index is listed under ``metadata["unbalanced"]``.
    """
    if levels < 1:
        raise ValueError("levels must be at least 1")
    verts = []
    edges = []
    for k in range(1, levels + 1):
        a = Fraction(1, 4 ** k)
        v = (a, a)
        verts.append(v)
        up = (4 * a, 4 * a)
        half, full = 2 ** (k - 1), 2 ** k
        edges.append(_segment(len(edges), v, up, (1, 1), half))
        edges.append(_ray(len(edges), v, (-1, 0), half))
        edges.append(_ray(len(edges), v, (0, -1), half))
        edges.append(_ray(len(edges), v, (-1, 2), full))
        edges.append(_ray(len(edges), v, (2, -1), full))
    meta = {"generator": "example7", "levels": levels, "unbalanced": [levels - 1]}
    return TropicalCurve(2, box((0, 0), (1, 1)), tuple(verts), tuple(edges), meta)


def example7_area(levels: int) -> Fraction:
    return 14 * (1 - Fraction(1, 2 ** levels))


def _random_apex(rng, n, lo_den=6, hi_den=60):
    while True:
        D = rng.randint(lo_den, hi_den)
        ks = [rng.randint(1, D) for _ in range(n)]
        if sum(ks) < D:
            return tuple(Fraction(k, D) for k in ks)


def _tree_line(rng, n, mult, first_id):
    """A degree-one curve with two vertices joined by one bounded edge (n >= 3)."""
    K = standard_simplex(n)
    leaves = [basis_vector(n, k) for k in range(n + 1)]
    rng.shuffle(leaves)
    cut = rng.randint(2, n - 1)
    S, T = leaves[:cut], leaves[cut:]
    bridge = tuple(sum(c) for c in zip(*T))
    v1 = _random_apex(rng, n)
    t = Fraction(rng.randint(1, 8), 16)
    v2 = add(v1, scale(t, bridge))
    while not K.contains(v2, strict=True):
        t /= 2
        v2 = add(v1, scale(t, bridge))
    edges = [_segment(first_id, v1, v2, bridge, mult)]
    for vec in S:
        edges.append(_ray(first_id + len(edges), v1, vec, mult))
    for vec in T:
        edges.append(_ray(first_id + len(edges), v2, vec, mult))
    return (v1, v2), edges


def _distinct_coordinates(verts):
    for i in range(len(verts[0])):
        col = [v[i] for v in verts]
        if len(set(col)) != len(col):
            return False
    sums = [sum(v) for v in verts]
    return len(set(sums)) == len(sums)


def gen_random_balanced(n: int, seed: int, complexity: int, trees: bool = False, max_multiplicity: int = 2):
    """Superposition of ``complexity`` random tropical lines (saturated, Strict-valid).

    Crossing points of different components are declared as vertices.  With
    ``trees`` (and ``n >= 3``) some components are two-vertex lines.
    """
    if complexity < 1:
        raise ValueError("complexity must be at least 1")
    rng = random.Random(f"balanced:{n}:{seed}:{complexity}:{int(trees)}")
    K = standard_simplex(n)
    for _ in range(MAX_TRIES):
        verts = []
        edges = []
        mults = []
        for _ in range(complexity):
            m = rng.randint(1, max_multiplicity)
            mults.append(m)
            if trees and n >= 3 and rng.random() < 0.5:
                vs, es = _tree_line(rng, n, m, len(edges))
                verts.extend(vs)
                edges.extend(es)
            else:
                apex = _random_apex(rng, n)
                verts.append(apex)
                for k in list(range(1, n + 1)) + [0]:
                    edges.append(_ray(len(edges), apex, basis_vector(n, k), m))
        if not _distinct_coordinates(verts):
            continue
        G = TropicalCurve(n, K, tuple(verts), tuple(edges))
        try:
            G = subdivide_crossings(G)
        except OverlappingEdges:
            continue
        if not validate(G, STRICT).ok or not is_saturated(G).saturated:
            continue
        meta = {"generator": "random", "n": n, "seed": seed, "complexity": complexity, "degree": sum(mults)}
        return TropicalCurve(n, K, G.vertices, G.edges, meta)
    raise RuntimeError("could not generate a curve in general position")


def _plane_vertex(c, tri):
    (a, b, d) = tri
    rows = [(b[0] - a[0], b[1] - a[1]), (d[0] - a[0], d[1] - a[1])]
    rhs = [c[a] - c[b], c[a] - c[d]]
    return solve(rows, rhs)


def gen_plane_curve(degree: int, seed: int | None = None) -> TropicalCurve:
    """Smooth plane curve of the given degree dual to the unimodular triangulation of ``d * simplex``.

    Coefficients are ``-(a1^2 + a1 a2 + a2^2)`` plus, with a seed, a small
    random perturbation.  The result is scaled into ``[1/6, 1/2]^2``; it has
    ``d^2`` vertices and first Betti number ``(d-1)(d-2)/2``.
    """
    d = degree
    if d < 1:
        raise ValueError("degree must be at least 1")
    pts = [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]
    tris = []
    for i in range(d):
        for j in range(d - i):
            tris.append(((i, j), (i + 1, j), (i, j + 1)))
            if i + j + 2 <= d:
                tris.append(((i + 1, j), (i, j + 1), (i + 1, j + 1)))
    rng = random.Random(f"plane:{d}:{seed}")
    noise = Fraction(1, 8) if seed is not None else Fraction(0)
    for _ in range(MAX_TRIES):
        c = {a: -(a[0] ** 2 + a[0] * a[1] + a[1] ** 2) + noise * Fraction(rng.randint(-100, 100), 100) for a in pts}
        vert = {t: _plane_vertex(c, t) for t in tris}
        if _honeycomb_ok(c, vert, pts):
            break
        noise /= 2
    else:
        raise RuntimeError("perturbation kept breaking the triangulation")
    raw = list(vert.values())
    lo = [min(v[k] for v in raw) for k in range(2)]
    hi = [max(v[k] for v in raw) for k in range(2)]
    span = max(hi[0] - lo[0], hi[1] - lo[1]) or Fraction(1)
    s = Fraction(1, 3) / span

    def place(x):
        return (Fraction(1, 6) + s * (x[0] - lo[0]), Fraction(1, 6) + s * (x[1] - lo[1]))

    owners = {}
    for t in tris:
        for k in range(3):
            e = tuple(sorted((t[k], t[(k + 1) % 3])))
            owners.setdefault(e, []).append(t)
    verts = tuple(place(vert[t]) for t in tris)
    where = {t: place(vert[t]) for t in tris}
    edges = []
    for (a, b), ts in sorted(owners.items()):
        normal = (b[1] - a[1], a[0] - b[0])
        if len(ts) == 2:
            edges.append(_segment(len(edges), where[ts[0]], where[ts[1]], normal))
        else:
            t = ts[0]
            other = next(p for p in t if p not in (a, b))
            # rays point away from the opposite lattice point of the triangle
            out = normal if normal[0] * (other[0] - a[0]) + normal[1] * (other[1] - a[1]) > 0 else (-normal[0], -normal[1])
            out = tuple(-x for x in out)
            edges.append(_ray(len(edges), where[t], out))
    meta = {"generator": "plane", "degree": d}
    if seed is not None:
        meta["seed"] = seed
    return TropicalCurve(2, standard_simplex(2), verts, tuple(edges), meta)


def _honeycomb_ok(c, vert, pts):
    """Every triangle vertex must be a strict maximum of exactly its three monomials."""
    for t, x in vert.items():
        if x is None:
            return False
        val = c[t[0]] + t[0][0] * x[0] + t[0][1] * x[1]
        for a in pts:
            if a in t:
                continue
            if c[a] + a[0] * x[0] + a[1] * x[1] >= val:
                return False
    return True


def _random_vector(rng, n, bound=2):
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(n))
        if any(v):
            return v


def _balanced_star(rng, n, total, k):
    """``k`` nonzero integer vectors with pairwise distinct directions summing to ``total``."""
    for _ in range(MAX_TRIES):
        vecs = [_random_vector(rng, n) for _ in range(k - 1)]
        last = tuple(t - sum(c) for t, c in zip(total, zip(*vecs)))
        if not any(last):
            continue
        vecs.append(last)
        dirs = []
        for v in vecs:
            w = canonical_weight(v)
            dirs.append((w.direction, 1 if tuple(w.multiplicity * c for c in w.direction) == v else -1))
        if len(set(dirs)) == len(dirs):
            return vecs
    raise RuntimeError("could not draw a balanced star")


def gen_random_tree(n: int, seed: int, delta=Fraction(1, 8)) -> TropicalCurve:
    """A random balanced curve in the dilated simplex whose restriction is not saturated.

    One or two vertices inside the open simplex with rays in random integer
    directions.  The restriction to the simplex is Lenient-valid.
    """
    rng = random.Random(f"tree:{n}:{seed}:{delta}")
    U = dilated_simplex(n, delta)
    K = standard_simplex(n)
    zero = (0,) * n
    for _ in range(MAX_TRIES):
        v1 = _random_apex(rng, n, 8, 40)
        vecs = _balanced_star(rng, n, zero, rng.randint(3, 4))
        verts = [v1]
        edges = []
        if rng.random() < 0.5:
            w = vecs.pop()
            t = Fraction(rng.randint(1, 6), 12)
            v2 = add(v1, scale(t, w))
            while not K.contains(v2, strict=True):
                t /= 2
                v2 = add(v1, scale(t, w))
            verts.append(v2)
            edges.append(_segment(0, v1, v2, w))
            for vec in _balanced_star(rng, n, w, rng.randint(2, 3)):
                edges.append(_ray(len(edges), v2, vec))
        for vec in vecs:
            edges.append(_ray(len(edges), v1, vec))
        G = TropicalCurve(n, U, tuple(verts), tuple(edges), {"generator": "tree", "n": n, "seed": seed, "delta": str(delta)})
        if not validate(G, LENIENT).ok:
            continue
        try:
            GK = restrict(G, K)
        except PreconditionViolated:
            continue
        if is_saturated(GK).saturated:
            continue
        return G
    raise RuntimeError("could not draw an unsaturated tree")


def embed(G: TropicalCurve, delta) -> TropicalCurve:
    """The same vertices and edges with rays extended to the dilated simplex."""
    return G.with_region(dilated_simplex(G.dim, delta))


def vertices_in(G: TropicalCurve, R) -> int:
    """Declared vertices in the closed region ``R``."""
    return sum(1 for v in G.vertices if R.contains(v))


def superposition(*curves: TropicalCurve) -> TropicalCurve:
    return subdivide_crossings(union(*curves))


def saturated_corpus(count: int = 200, seed: int = 0, dims=(2, 3, 4)) -> list:
    """Random saturated curves with degree at most 6, cycling through ``dims``."""
    out = []
    k = 0
    while len(out) < count:
        n = dims[k % len(dims)]
        complexity = 1 + (k // len(dims)) % 3
        out.append(gen_random_balanced(n, seed * 100003 + k, complexity, trees=(k % 2 == 1)))
        k += 1
    return out


def unsaturated_corpus(count: int = 100, seed: int = 0, dims=(2, 3, 4), delta=Fraction(1, 8)) -> list:
    return [gen_random_tree(dims[k % len(dims)], seed * 100003 + k, delta) for k in range(count)]


def named_corpus() -> dict:
    """Small hand-picked gallery used by docs and round-trip tests."""
    return {
        "line2": gen_tropical_line(2, (Fraction(1, 3), Fraction(1, 3))),
        "line3": gen_tropical_line(3, (Fraction(1, 4),) * 3),
        "example7": gen_example7(4),
        "random2": gen_random_balanced(2, 1, 3),
        "random3": gen_random_balanced(3, 2, 2, trees=True),
        "plane3": gen_plane_curve(3),
        "plane4": gen_plane_curve(4, seed=7),
        "tree2": gen_random_tree(2, 5),
        "tree3": gen_random_tree(3, 6),
    }

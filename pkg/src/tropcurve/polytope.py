"""Bounded rational polytopes in H-representation.

A :class:`Region` is the closed polytope ``{x : normal_k . x <= offset_k}``;
curves live in its interior and may end on its boundary.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import lcm

from .errors import BadDimension
from .exact import dot, kernel_vector, point, rank, solve, sub


@dataclass(frozen=True)
class Region:
    dim: int
    halfspaces: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        hs = []
        for normal, offset in self.halfspaces:
            normal = tuple(int(c) for c in normal)
            if len(normal) != self.dim:
                raise BadDimension(f"normal {normal} has length {len(normal)} != {self.dim}")
            if all(c == 0 for c in normal):
                raise ValueError("zero normal in half-space")
            hs.append((normal, Fraction(offset)))
        object.__setattr__(self, "halfspaces", tuple(hs))

    def __repr__(self):
        return f"Region({self.name or 'dim=' + str(self.dim)}, {len(self.halfspaces)} facets)"

    @cached_property
    def _rows(self):
        return tuple((a, b.numerator, b.denominator) for a, b in self.halfspaces)

    def slacks(self, x):
        return tuple(b - dot(a, x) for a, b in self.halfspaces)

    def _signs(self, x):
        """Signs of the slacks, computed over a common denominator of ``x``."""
        nums, D = _scaled(x)
        out = []
        for a, bn, bd in self._rows:
            s = bn * D - bd * sum(c * m for c, m in zip(a, nums))
            out.append((s > 0) - (s < 0))
        return out

    def contains(self, x, strict=False) -> bool:
        if strict:
            return all(s > 0 for s in self._signs(x))
        return all(s >= 0 for s in self._signs(x))

    def tight(self, x) -> tuple:
        """Indices of the half-spaces whose hyperplane contains ``x``."""
        return tuple(k for k, s in enumerate(self._signs(x)) if s == 0)

    def on_boundary(self, x) -> bool:
        s = self._signs(x)
        return all(v >= 0 for v in s) and any(v == 0 for v in s)

    def clip(self, p, u, lo, hi):
        """Clip the parameter interval of ``p + t*u`` to the region.

        ``lo``/``hi`` may be ``None`` (unbounded).  Returns ``(lo, hi)`` with
        possibly-``None`` ends, or ``None`` if the clipped set is empty.
        """
        pn, Dp = _scaled(p)
        un, Du = _scaled(u)
        for a, bn, bd in self._rows:
            au = sum(c * m for c, m in zip(a, un))
            # slack at p, scaled by bd * Dp
            gap = bn * Dp - bd * sum(c * m for c, m in zip(a, pn))
            if au == 0:
                if gap < 0:
                    return None
                continue
            t = Fraction(gap * Du, bd * Dp * au)
            if au > 0:
                if hi is None or t < hi:
                    hi = t
            elif lo is None or t > lo:
                lo = t
        if lo is not None and hi is not None and lo > hi:
            return None
        return lo, hi

    @cached_property
    def vertices(self) -> tuple:
        normals = [a for a, _ in self.halfspaces]
        found = []
        seen = set()
        for combo in combinations(range(len(self.halfspaces)), self.dim):
            x = solve([normals[k] for k in combo], [self.halfspaces[k][1] for k in combo])
            if x is None or x in seen or not self.contains(x):
                continue
            seen.add(x)
            found.append(x)
        return tuple(sorted(found))

    def is_bounded(self) -> bool:
        normals = [a for a, _ in self.halfspaces]
        if rank(normals) < self.dim:
            return False
        # a pointed recession cone is trivial iff none of its candidate extreme rays survive
        for combo in combinations(normals, self.dim - 1):
            d = kernel_vector(list(combo)) if self.dim > 1 else (Fraction(1),)
            if d is None:
                continue
            for s in (1, -1):
                if all(s * dot(a, d) <= 0 for a in normals):
                    return False
        return True

    def problems(self) -> list:
        """Reasons the region is not a bounded, full-dimensional, irredundant polytope."""
        out = []
        if not self.is_bounded():
            return ["unbounded"]
        verts = self.vertices
        if not verts:
            return ["empty"]
        centre = tuple(sum(c) / len(verts) for c in zip(*verts))
        if not self.contains(centre, strict=True):
            return ["not full-dimensional"]
        for k, (a, b) in enumerate(self.halfspaces):
            on = [v for v in verts if dot(a, v) == b]
            if len(on) < self.dim or rank([sub(v, on[0]) for v in on[1:]]) < self.dim - 1:
                out.append(f"half-space {k} is redundant")
        return out

    def contains_region(self, other: "Region") -> bool:
        return all(self.contains(v) for v in other.vertices)

    def intersect(self, other: "Region", prune=False) -> "Region":
        r = Region(self.dim, self.halfspaces + other.halfspaces)
        return r.pruned() if prune else r

    def pruned(self) -> "Region":
        verts = self.vertices
        keep = []
        for a, b in self.halfspaces:
            on = [v for v in verts if dot(a, v) == b]
            if len(on) >= self.dim and rank([sub(v, on[0]) for v in on[1:]]) == self.dim - 1:
                if (a, b) not in keep:
                    keep.append((a, b))
        return Region(self.dim, tuple(keep), self.name)

    def translated(self, shift) -> "Region":
        """The region moved by ``-shift`` (points ``x`` become ``x - shift``)."""
        return Region(self.dim, tuple((a, b - dot(a, shift)) for a, b in self.halfspaces), self.name)


def _scaled(x):
    """Integer numerators of ``x`` over a common denominator ``D``."""
    D = 1
    for c in x:
        D = lcm(D, c.denominator)
    return [c.numerator * (D // c.denominator) for c in x], D


def _check_dim(n):
    if not isinstance(n, int) or n < 2:
        raise BadDimension(f"dimension must be an integer >= 2, got {n!r}")


def standard_simplex(n: int) -> Region:
    """K = {x_i >= 0, sum x_i <= 1}; half-space 0 is the sum facet, half-space i is x_i = 0."""
    _check_dim(n)
    hs = [((1,) * n, Fraction(1))]
    for i in range(n):
        hs.append((tuple(-1 if j == i else 0 for j in range(n)), Fraction(0)))
    return Region(n, tuple(hs), "K")


def dilated_simplex_vertices(n: int, delta) -> tuple:
    delta = Fraction(delta)
    verts = [point([-delta] * n)]
    for i in range(n):
        verts.append(point([1 + 3 * delta if j == i else -delta for j in range(n)]))
    return tuple(verts)


def dilated_simplex(n: int, delta) -> Region:
    """Convex hull of (-d,...,-d) and the points (1+3d, -d, ..., -d) permuted.

    Facets are indexed like :func:`standard_simplex`.  The sum-facet offset is
    read off the listed vertices, giving ``1 + (4 - n) * delta``.
    """
    _check_dim(n)
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    verts = dilated_simplex_vertices(n, delta)
    top = max(sum(v) for v in verts[1:])
    assert all(sum(v) == top for v in verts[1:])
    hs = [((1,) * n, top)]
    for i in range(n):
        hs.append((tuple(-1 if j == i else 0 for j in range(n)), delta))
    return Region(n, tuple(hs), f"U'({delta})")


def box(lo, hi) -> Region:
    """Axis-aligned box; half-spaces ordered (-x_1, x_1, -x_2, x_2, ...)."""
    lo, hi = point(lo), point(hi)
    n = len(lo)
    if n != len(hi):
        raise BadDimension("box corners differ in dimension")
    if any(a >= b for a, b in zip(lo, hi)):
        raise ValueError("box must have positive extent in every coordinate")
    hs = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        hs.append((tuple(-c for c in e), -lo[i]))
        hs.append((e, hi[i]))
    return Region(n, tuple(hs), "box")


def collar_simplex(n: int, offsets) -> Region:
    """The inner simplex {x_i >= o_i, sum x_i <= 1 - o_0} with per-facet offsets."""
    offsets = [Fraction(o) for o in offsets]
    hs = [((1,) * n, 1 - offsets[0])]
    for i in range(n):
        hs.append((tuple(-1 if j == i else 0 for j in range(n)), -offsets[i + 1]))
    return Region(n, tuple(hs), "collar")


def is_standard_simplex(region: Region) -> bool:
    return region.dim >= 2 and region.halfspaces == standard_simplex(region.dim).halfspaces


def facet_normal(n: int, face: int) -> tuple:
    """Outward normal direction of FaceId ``face`` of the standard simplex."""
    if face == 0:
        return (1,) * n
    return tuple(-1 if j == face - 1 else 0 for j in range(n))

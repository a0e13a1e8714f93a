"""Exact rational vectors, small dense linear algebra and segment predicates.

Everything here works on ``fractions.Fraction`` and plain ``int``; no floats
ever enter a computation.
"""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Rat = Fraction
RatVec = tuple  # tuple[Fraction, ...]

_RAT_RE = re.compile(r"-?\d+(?:/\d+)?\Z")


def parse_rat(text) -> Fraction:
    """Parse the canonical ``"p/q"`` / ``"p"`` notation (no floats, no spaces)."""
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ValueError(f"expected a rational string, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not _RAT_RE.match(text):
        raise ValueError(f"malformed rational {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rat(x) -> str:
    return str(Fraction(x))


def format_vec(v: Iterable) -> str:
    return "(" + ",".join(format_rat(c) for c in v) + ")"


def point(coords: Iterable) -> tuple:
    return tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coords)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(t, u):
    return tuple(t * a for a in u)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def along(p, u, t):
    """The point ``p + t*u``."""
    return tuple(a + t * b for a, b in zip(p, u))


def is_zero(u) -> bool:
    return all(a == 0 for a in u)


def ratio(u, w):
    """Return ``lam`` with ``u == lam * w`` or ``None`` when no such scalar exists.

    ``w`` must be nonzero.
    """
    k = next(j for j, c in enumerate(w) if c != 0)
    lam = Fraction(u[k]) / w[k]
    if all(a == lam * b for a, b in zip(u, w)):
        return lam
    return None


def parallel(u, v) -> bool:
    if is_zero(u) or is_zero(v):
        return False
    return ratio(u, v) is not None


def _eliminate(rows):
    """Row-reduce a copy of ``rows`` in place; return (reduced rows, pivot columns)."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(_eliminate(rows)[1])


def solve(matrix: Sequence[Sequence], rhs: Sequence):
    """Solve a square system exactly; ``None`` if singular."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    m, pivots = _eliminate(aug)
    if pivots != list(range(n)):
        return None
    return tuple(m[k][n] for k in range(n))


def kernel_vector(rows: Sequence[Sequence]):
    """A nonzero vector spanning the kernel of an (n-1) x n matrix of rank n-1."""
    n = len(rows[0])
    m, pivots = _eliminate(rows)
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        return None
    f = free[0]
    v = [Fraction(0)] * n
    v[f] = Fraction(1)
    for r, c in enumerate(pivots):
        v[c] = -m[r][f]
    return tuple(v)


def segment_intersection(p, u, lo1, hi1, q, v, lo2, hi2):
    """Intersect ``{p + s*u : lo1 <= s <= hi1}`` with ``{q + t*v : lo2 <= t <= hi2}``.

    Returns ``None``, ``("point", x, s, t)`` or ``("overlap", (s0, s1))`` where
    the overlap is expressed in the first segment's parameter.
    """
    k = ratio(v, u) if not is_zero(u) else None
    if k is not None:
        d = sub(q, p)
        r = Fraction(0) if is_zero(d) else ratio(d, u)
        if r is None:
            return None
        a, b = sorted((r + k * lo2, r + k * hi2))
        a, b = max(a, lo1), min(b, hi1)
        if a > b:
            return None
        if a == b:
            return ("point", along(p, u, a), a, (a - r) / k)
        return ("overlap", (a, b))
    n = len(p)
    d = sub(q, p)
    for i, j in combinations(range(n), 2):
        det = -u[i] * v[j] + u[j] * v[i]
        if det != 0:
            # s*u - t*v = d on coordinates i, j
            s = (-d[i] * v[j] + d[j] * v[i]) / det
            t = (u[i] * d[j] - u[j] * d[i]) / det
            break
    else:  # pragma: no cover - u, v nonparallel guarantees a nonzero minor
        return None
    x = along(p, u, s)
    if x != along(q, v, t):
        return None
    if lo1 <= s <= hi1 and lo2 <= t <= hi2:
        return ("point", x, s, t)
    return None

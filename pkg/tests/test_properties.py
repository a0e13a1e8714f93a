from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from tropcurve import io
from tropcurve.core import LENIENT, STRICT, Edge, TropicalCurve, canonical_weight, check_balancing, curve_area, validate
from tropcurve.gallery import gen_random_balanced, gen_tropical_line
from tropcurve.geometry import measure_density, slice_midpoints
from tropcurve.polytope import box, standard_simplex
from tropcurve.saturation import decompose

vectors = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.integers(-30, 30), min_size=n, max_size=n).filter(any).map(tuple)
)
rats = st.fractions(min_value=F(1, 20), max_value=F(1, 3), max_denominator=60)


@given(vectors)
def test_canonical_weight_sign_invariant(v):
    w = canonical_weight(v)
    assert w == canonical_weight(tuple(-c for c in v))
    assert canonical_weight(w.vector) == w
    assert w.vector in (v, tuple(-c for c in v))


@given(vectors)
def test_decompose_properties(w):
    a = decompose(w).a
    assert min(a) == 0 and all(c >= 0 for c in a)
    assert decompose(w).reconstruct() == w


@given(st.fractions(min_value=F(1, 10), max_value=3, max_denominator=50), st.integers(1, 4))
def test_area_scales_linearly(t, m):
    R = box((-10, -10), (10, 10))
    w = canonical_weight((1, 2))
    G = TropicalCurve(2, R, (), (Edge.segment(0, (0, 0), (1, 2), w),))
    H = TropicalCurve(2, R, (), (Edge.segment(0, (0, 0), (t, 2 * t), canonical_weight((m, 2 * m))),))
    assert curve_area(H) == t * m * curve_area(G)


@given(st.fractions(min_value=F(1, 100), max_value=F(99, 100), max_denominator=500))
def test_area_subdivision_invariant(s):
    R = box((-5, -5), (5, 5))
    w = canonical_weight((3, -1))
    a, b = (F(-3), F(1)), (F(3), F(-1))
    mid = tuple(x + s * (y - x) for x, y in zip(a, b))
    whole = TropicalCurve(2, R, (), (Edge.segment(0, a, b, w),))
    split = TropicalCurve(2, R, (), (Edge.segment(0, a, mid, w), Edge.segment(1, mid, b, w)))
    assert curve_area(whole) == curve_area(split)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 3), st.integers(0, 10_000), st.integers(1, 2))
def test_strict_implies_lenient_and_order_free(n, seed, complexity):
    G = gen_random_balanced(n, seed, complexity)
    assert validate(G, STRICT).ok
    assert validate(G, LENIENT).ok
    flipped = TropicalCurve(n, G.region, G.vertices, tuple(reversed(G.edges)))
    for k in range(len(G.vertices)):
        assert check_balancing(G, k) == check_balancing(flipped, k) == (0,) * n


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_density_non_increasing(seed):
    G = gen_random_balanced(2, seed, 2)
    for i in (1, 2):
        values = [measure_density(G, i, z) for z in slice_midpoints(G, i)]
        assert all(a >= b for a, b in zip(values, values[1:]))


@settings(max_examples=25, deadline=None)
@given(rats, rats)
def test_line_roundtrip(x, y):
    G = gen_tropical_line(2, (x, y))
    assert io.loads(io.dumps(G)) == G
    assert G.region == standard_simplex(2)
    assert curve_area(G) == 1

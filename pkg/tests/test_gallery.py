from fractions import Fraction as F

import pytest

from tropcurve.core import LENIENT, STRICT, check_balancing, curve_area, edge_area, restrict, validate
from tropcurve.errors import ApexOutside
from tropcurve.gallery import (
    example7_area,
    gen_example7,
    gen_plane_curve,
    gen_random_balanced,
    gen_random_tree,
    gen_tropical_line,
    named_corpus,
    vertices_in,
)
from tropcurve.geometry import face_degrees, is_saturated, saturated_area_check
from tropcurve.polytope import box, standard_simplex


def test_line_examples():
    G = gen_tropical_line(2, (F(1, 3), F(1, 3)))
    assert is_saturated(G).saturated and curve_area(G) == 1
    G = gen_tropical_line(3, (F(1, 4),) * 3)
    assert is_saturated(G).saturated and curve_area(G) == 1
    with pytest.raises(ApexOutside):
        gen_tropical_line(2, (1, 1))


def test_example7_level_one():
    G = gen_example7(1)
    assert G.vertices == ((F(1, 4), F(1, 4)),)
    assert curve_area(G) == 7
    assert check_balancing(G, 0) == (2, 2)
    assert G.metadata["unbalanced"] == [0]


def test_example7_balanced_except_flagged():
    G = gen_example7(6)
    flagged = set(G.metadata["unbalanced"])
    for k in range(G.vertex_count):
        assert (check_balancing(G, k) == (0, 0)) == (k not in flagged)
    assert {v.kind for v in validate(G, LENIENT).violations} == {"UNBALANCED"}


def test_example7_per_level_areas():
    # per level: 3*2^-n, 2^-(n+1), 2^-(n+1), 5*2^-n, 5*2^-n
    G = gen_example7(3)
    for n in (1, 2, 3):
        got = [edge_area(e, G.region) for e in G.edges[5 * (n - 1) : 5 * n]]
        h = F(1, 2**n)
        assert got == [3 * h, h / 2, h / 2, 5 * h, 5 * h]


@pytest.mark.parametrize("M", [1, 2, 3, 5])
def test_example7_vertices_in_box(M):
    G = gen_example7(M + 3)
    a = F(1, 4**M)
    assert vertices_in(G, box((a, a), (1, 1))) == M


def test_example7_big_levels():
    assert curve_area(gen_example7(32)) == example7_area(32)


def test_random_determinism():
    a = gen_random_balanced(3, 5, 3, trees=True)
    b = gen_random_balanced(3, 5, 3, trees=True)
    assert a == b and a.metadata == b.metadata


def test_random_seed1():
    G = gen_random_balanced(2, 1, 3)
    d = G.metadata["degree"]
    assert face_degrees(G) == (d, d, d)
    assert saturated_area_check(G) == (d, d, True)
    assert validate(G, STRICT).ok


def test_random_complexity_one_is_line():
    G = gen_random_balanced(3, 9, 1)
    assert G.vertex_count == 1 and len(G.edges) == 4
    m = G.edges[0].weight.multiplicity
    assert all(e.weight.multiplicity == m for e in G.edges)
    assert curve_area(G) == m


def test_plane_curve_honeycomb():
    for d in (1, 2, 3, 5):
        G = gen_plane_curve(d)
        assert validate(G, STRICT).ok
        assert G.vertex_count == d * d
        assert saturated_area_check(G) == (d, d, True)


def test_tree_not_saturated():
    for n in (2, 3, 4):
        G = gen_random_tree(n, 3)
        assert validate(G, LENIENT).ok
        assert not is_saturated(restrict(G, standard_simplex(n))).saturated


def test_named_corpus_valid():
    for name, G in named_corpus().items():
        level = LENIENT if name.startswith("tree") else STRICT
        rep = validate(G, level)
        if name == "example7":
            assert rep.kinds() == {"UNBALANCED"}
        else:
            assert rep.ok, (name, rep.lines())

from fractions import Fraction as F

import pytest

from tropcurve.core import Edge, TropicalCurve, Weight, union
from tropcurve.errors import PreconditionViolated
from tropcurve.gallery import gen_plane_curve, gen_tropical_line
from tropcurve.paths import (
    Path,
    cover_check,
    extract_paths,
    families_for_directions,
    flow_lower_bound,
    path_family_for_face,
    union_weights,
    v0_bound_check,
    v0_set,
)
from tropcurve.polytope import box, standard_simplex


def branching():
    """A multiplicity-2 edge along e_1 that splits into (1,1) and (1,-1)."""
    v = (F(1, 2), F(1, 2))
    edges = (
        Edge.segment(0, (0, F(1, 2)), v, Weight((1, 0), 2)),
        Edge.ray(1, v, Weight((1, 1))),
        Edge.ray(2, v, Weight((1, -1))),
    )
    return TropicalCurve(2, box((0, 0), (1, 1)), (v,), edges)


def test_line_single_path(line2):
    fam = extract_paths(line2, line2.region, 0, 1)
    assert len(fam.paths) == 1
    P = fam.paths[0]
    assert P.edge_ids == (0, 2)
    assert P.segments[0].start == (0, F(1, 3))
    assert P.junctions == ((F(1, 3), F(1, 3)),)
    assert P.exit_point == (F(1, 2), F(1, 2))


def test_branch_split():
    H = branching()
    fam = extract_paths(H, H.region, 0, 1)
    assert len(fam.paths) == 2
    assert {P.edge_ids for P in fam.paths} == {(0, 1), (0, 2)}
    assert all(fam.usage[e] <= fam.capacity[e] for e in fam.usage)
    assert fam.usage == {0: 2, 1: 1, 2: 1}


def test_zero_component_rejected(line2):
    with pytest.raises(PreconditionViolated):
        extract_paths(line2, line2.region, 1, 1)


def test_union_weights():
    H = branching()
    fam = extract_paths(H, H.region, 0, 1)
    uw = union_weights(fam)
    # all paths use the entry edge, so its union weight is the edge weight itself
    assert uw[0].vector == (2, 0)
    assert uw[1].vector == (1, 1)


def test_union_weights_single(line2):
    uw = union_weights(extract_paths(line2, line2.region, 0, 1))
    assert set(uw) == {0, 2}
    assert uw[2].vector == (1, 1)


def test_face_family_counts(line2):
    assert len(path_family_for_face(line2, 1).paths) == 1
    two = union(gen_tropical_line(2, (F(1, 10), F(1, 10))), gen_tropical_line(2, (F(1, 2), F(1, 3))))
    assert len(path_family_for_face(two, 1).paths) == 2
    empty = TropicalCurve(2, standard_simplex(2))
    assert path_family_for_face(empty, 1).paths == ()


def test_v0_line(line2):
    P = path_family_for_face(line2, 1).paths[0]
    assert v0_set(P, line2) == {0}
    assert tuple(v0_bound_check(P, line2, 1)) == (1, 2, True)
    assert v0_bound_check(None, line2, 1).count == 0


def test_v0_excludes_axis_parallel():
    v = (F(1, 4), F(1, 2))
    edges = (
        Edge.segment(0, (0, F(1, 4)), v, Weight((1, 1))),
        Edge.ray(1, v, Weight((2, 1))),
        Edge.ray(2, v, Weight((1, 0)), -1),
    )
    H = TropicalCurve(2, box((0, 0), (1, 1)), (v,), edges)
    P = extract_paths(H, H.region, 0, 1).paths[0]
    assert P.edge_ids == (0, 1)
    assert v0_set(P, H) == set()


def test_cover_line(line2):
    fams = families_for_directions(line2)
    assert cover_check(line2, fams).covered


def test_cover_plane_curves():
    for d in (2, 3, 4):
        G = gen_plane_curve(d)
        for rule in ("id", "lex"):
            rep = cover_check(G, families_for_directions(G, rule))
            assert rep.covered, (d, rule, rep.misses)


def test_path_monotone_plane():
    G = gen_plane_curve(4, seed=3)
    for i in (1, 2):
        for rule in ("id", "lex"):
            fam = path_family_for_face(G, i, rule)
            assert len(fam.paths) == 4
            for P in fam.paths:
                xs = [P.segments[0].start[i - 1]] + [s.end[i - 1] for s in P.segments]
                assert all(a < b for a, b in zip(xs, xs[1:]))


def test_flow_equality_witness():
    for n in (2, 3):
        for m in (1, 3):
            R = box((-2,) * n, (2,) * n)
            tail = (0,) * (n - 1) + (-2,)
            head = (0,) * (n - 1) + (2,)
            H = TropicalCurve(n, R, (), (Edge.segment(0, tail, head, Weight((0,) * (n - 1) + (1,), m)),))
            fb = flow_lower_bound(H, 0, n, at=(0,) * n)
            assert (fb.area, fb.m, fb.passed) == (m, m, True)
            assert fb.path_area == m


def test_flow_zero_component():
    R = box((-2, -2), (2, 2))
    H = TropicalCurve(2, R, (), (Edge.segment(0, (-2, 0), (2, 0), Weight((1, 0))),))
    fb = flow_lower_bound(H, 0, 2, at=(0, 0))
    assert fb.m == 0 and fb.passed


def test_flow_translated_line():
    G = gen_tropical_line(2, (F(1, 3), F(1, 3)), region=box((-3, -3), (3, 3)))
    fb = flow_lower_bound(G, 2, 1, at=(F(5, 6), F(5, 6)))
    assert fb.passed and fb.area == 2 and fb.m == 1


def test_flow_point_not_on_edge(line2):
    with pytest.raises(PreconditionViolated):
        flow_lower_bound(line2, 2, 1, at=(F(1, 10), F(1, 2)))


def test_path_determinism():
    G = gen_plane_curve(3, seed=11)
    a = path_family_for_face(G, 1, "lex")
    b = path_family_for_face(G, 1, "lex")
    assert a == b
    assert isinstance(a.paths[0], Path)

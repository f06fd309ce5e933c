import random
from fractions import Fraction as Fr
from math import floor

import pytest
from hypothesis import given, strategies as st

from btquot import _exact
from btquot.apartment import (
    corner_set, enclosure, in_sector, is_special, local_roots, normalize_fixed_point, parse_point,
    polytope_denominator, polytope_vertices, sector_enclosure, subsector_special, subsector_tip, theta_split,
    weyl_denominator,
)
from btquot.checks import random_affine_instance
from btquot.rootsys import parse_type, root_value, weyl_word

small = st.fractions(-3, 3, max_denominator=5)


def test_special_points_are_integral():
    rs = parse_type("G2")
    assert is_special(rs, (1, -2))
    assert not is_special(rs, (Fr(1, 2), 0))
    assert local_roots(rs, (Fr(1, 2), 0)) == {a for a in rs.roots if a[0] % 2 == 0}


def test_theta_split_b2():
    plus, zero = theta_split(parse_type("B2"), [1])
    assert sorted(zero) == [(0, -1), (0, 1)]
    assert sorted(plus) == [(1, 0), (1, 1), (1, 2)]


@given(st.sampled_from(["A2", "B2", "G2"]), st.lists(st.tuples(small, small), min_size=1, max_size=3), st.data())
def test_enclosure_contains_convex_hull(spec, pts, data):
    rs = parse_type(spec)
    region = enclosure(rs, pts)
    ws = data.draw(st.lists(st.integers(0, 4), min_size=len(pts), max_size=len(pts)))
    if sum(ws):
        z = tuple(sum(w * p[i] for w, p in zip(ws, pts)) / sum(ws) for i in range(2))
        assert z in region
    assert region.normalized().thresholds == enclosure(rs, region.vertices()).thresholds


def test_enclosure_of_segment_a1():
    rs = parse_type("A1")
    region = enclosure(rs, [(Fr(1, 3),), (Fr(5, 2),)])
    assert region.vertices() == [(0,), (3,)]
    assert region.to_json() == {"-1": -3, "1": 0}


@pytest.mark.parametrize("spec,tip,theta,corners", [
    ("A1", "1/2", [0], [(0,), (1,)]),
    ("A2", "1/2,1/2", [], [(0, 1), (1, 0)]),
    ("A2", "2,-1", [], [(2, -1)]),
    ("B2", "0,0", [0, 1], [(0, 0)]),
])
def test_corner_sets(spec, tip, theta, corners):
    assert corner_set(parse_type(spec), parse_point(tip), theta) == [tuple(map(Fr, c)) for c in corners]


@given(st.sampled_from([("A2", ()), ("B2", (0,)), ("G2", ()), ("A3", (1,))]), st.randoms(use_true_random=False))
def test_corners_lie_in_sector_enclosure(case, rnd):
    spec, theta = case
    rs = parse_type(spec)
    x = tuple(Fr(rnd.randint(-4, 4), rnd.randint(1, 3)) for _ in range(rs.rank))
    region = sector_enclosure(rs, x, theta)
    corners = corner_set(rs, x, theta)
    assert corners
    assert all(is_special(rs, c) and c in region for c in corners)


@given(st.sampled_from([("A2", ()), ("B2", ()), ("G2", (0,)), ("A3", (0,))]), st.randoms(use_true_random=False))
def test_subsector_tip_clears_thresholds(case, rnd):
    spec, theta = case
    rs = parse_type(spec)
    plus, _ = theta_split(rs, theta)
    w0 = tuple(rnd.randint(-2, 2) for _ in range(rs.rank))
    thresholds = {a: rnd.randint(-3, 6) for a in rnd.sample(plus, min(3, len(plus)))}
    w1 = subsector_tip(rs, w0, theta, thresholds)
    for _ in range(20):
        z = tuple(w + Fr(rnd.randint(0, 6), rnd.randint(1, 3)) for w in w1)
        if in_sector(rs, w1, theta, z, closed=True):
            assert all(root_value(a, z) > n for a, n in thresholds.items())
    w2 = subsector_special(rs, w0, theta, w1)
    assert is_special(rs, w2) and in_sector(rs, w1, theta, w2, closed=True)


def test_polytope_unit_square():
    M = [[1, 0], [-1, 0], [0, 1], [0, -1]]
    assert polytope_vertices(M, [1, 0, 1, 0]) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert polytope_denominator(M) == 1
    assert polytope_denominator([[2, 1], [1, -1]]) == 3


@given(st.randoms(use_true_random=False))
def test_polytope_vertices_are_tight_and_feasible(rnd):
    n = rnd.randint(1, 3)
    M = [[rnd.randint(-3, 3) for _ in range(n)] for _ in range(n + 3)]
    b = [rnd.randint(-4, 4) for _ in M]
    d = polytope_denominator(M)
    for z in polytope_vertices(M, b):
        tight = [row for row, bi in zip(M, b) if sum(c * v for c, v in zip(row, z)) == bi]
        assert _exact.rank(tight) == n
        assert all(sum(c * v for c, v in zip(row, z)) <= bi for row, bi in zip(M, b))
        assert all((v * d).denominator == 1 for v in z)


@pytest.mark.parametrize("spec,e", [("A1", 2), ("A2", 6), ("B2", 4), ("G2", 12)])
def test_weyl_denominator(spec, e):
    assert weyl_denominator(parse_type(spec)) == e


def test_fixed_point_worked_case():
    rs = parse_type("A2")
    z, e = normalize_fixed_point(rs, weyl_word(rs, [0]), [0, 0], (0, Fr(1, 3)))
    assert z == (0, Fr(2, 3)) and e == 6


@given(st.sampled_from(["A1", "A2", "B2", "G2", "C3"]), st.randoms(use_true_random=False))
def test_fixed_point_postconditions(spec, rnd):
    rs = parse_type(spec)
    inst = random_affine_instance(rs, random.Random(rnd.random()))
    if inst is None:
        return
    w, v, x = inst
    z, e = normalize_fixed_point(rs, w, v, x)
    y = [a + b for a, b in zip(x, z)]
    n = rs.rank
    assert [sum(w.matrix[i][j] * z[j] for j in range(n)) for i in range(n)] == list(z)
    assert all(root_value(a, y) >= floor(root_value(a, x)) for a in rs.roots)
    assert all((c * e).denominator == 1 for c in y)


def test_fixed_point_rejects_nonfixed():
    rs = parse_type("A1")
    with pytest.raises(ValueError):
        normalize_fixed_point(rs, weyl_word(rs, [0]), [0], (Fr(1, 2),))

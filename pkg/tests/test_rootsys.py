from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from btquot.rootsys import (
    build_root_system, highest_root, parse_type, root_string, root_value, weyl_group, weyl_orbit, weyl_word,
)

# number of positive roots, from the classification tables
POSITIVE = {("A", 1): 1, ("A", 4): 10, ("B", 3): 9, ("C", 4): 16, ("D", 5): 20,
            ("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}


@pytest.mark.parametrize("fam,rank", sorted(POSITIVE))
def test_positive_root_count(fam, rank):
    assert len(build_root_system(fam, rank).positive_roots) == POSITIVE[(fam, rank)]


@pytest.mark.parametrize("fam,rank,h", [
    ("A", 3, (1, 1, 1)), ("B", 3, (1, 2, 2)), ("C", 3, (2, 2, 1)), ("D", 4, (1, 2, 1, 1)),
    ("G", 2, (3, 2)), ("F", 4, (2, 3, 4, 2)), ("E", 8, (2, 3, 4, 6, 5, 4, 3, 2)),
])
def test_highest_root(fam, rank, h):
    assert highest_root(build_root_system(fam, rank)) == h


def test_cartan_matrices():
    assert parse_type("B2").cartan == ((2, -1), (-2, 2))
    assert parse_type("G2").cartan == ((2, -3), (-1, 2))  # alpha_1 short
    assert parse_type("C3").cartan[1:] == ((-1, 2, -2), (0, -1, 2))  # alpha_3 long


def test_reducible_is_block_diagonal():
    rs = parse_type("B2xA1")
    assert rs.rank == 3 and len(rs.positive_roots) == 5
    assert rs.cartan[2][:2] == (0, 0)
    assert highest_root(rs, 1) == (0, 0, 1)


@pytest.mark.parametrize("bad", ["", "Q3", "B1", "E5", "G3", "A2y"])
def test_parse_type_rejects(bad):
    with pytest.raises(ValueError):
        parse_type(bad)


@pytest.mark.parametrize("spec,order", [("A3", 24), ("B3", 48), ("G2", 12), ("A1xA1", 4), ("F4", 1152)])
def test_weyl_group_order(spec, order):
    assert len(weyl_group(parse_type(spec))) == order


def test_root_strings_g2():
    rs = build_root_system("G", 2)
    assert root_string(rs, (1, 0), (0, 1)) == (0, 3)
    assert root_string(rs, (0, 1), (1, 0)) == (0, 1)


@given(st.sampled_from(["A3", "B3", "C3", "G2", "D4"]), st.data())
def test_reflections_permute_roots(spec, data):
    rs = parse_type(spec)
    a = data.draw(st.sampled_from(rs.roots))
    assert {rs.reflect(a, b) for b in rs.roots} == rs.root_set


@given(st.sampled_from(["A2", "B2", "G2", "C3"]), st.data())
def test_weyl_action_preserves_root_values(spec, data):
    # W acts on coweights; alpha(w x) = (w^-1 alpha)(x) keeps the multiset of values
    rs = parse_type(spec)
    w = data.draw(st.sampled_from(weyl_group(rs)))
    x = data.draw(st.lists(st.fractions(-3, 3, max_denominator=4), min_size=rs.rank, max_size=rs.rank))
    wx = [sum(w.matrix[i][j] * x[j] for j in range(rs.rank)) for i in range(rs.rank)]
    assert sorted(root_value(a, x) for a in rs.roots) == sorted(root_value(a, wx) for a in rs.roots)


def test_orbit_of_highest_root_is_long_roots():
    rs = build_root_system("B", 3)
    orbit = weyl_orbit(rs, range(3), highest_root(rs))
    long_len = rs.inner(highest_root(rs), highest_root(rs))
    assert orbit == {a for a in rs.roots if rs.inner(a, a) == long_len}


def test_weyl_word_is_involution():
    rs = build_root_system("A", 2)
    s = weyl_word(rs, [0, 0])
    assert s.matrix == ((1, 0), (0, 1))
    assert root_value((1, 1), (Fraction(1, 2), Fraction(1, 3))) == Fraction(5, 6)

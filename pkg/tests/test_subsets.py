from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from btquot.checks import BASIS_TYPES
from btquot.rootsys import build_root_system, highest_root, parse_type
from btquot.subsets import (
    c3_numbering, check_conditions, extend_numbering, is_weyl_stable, psi_basis, psi_flag, psi_theta,
    restricted_dim, satisfies_c3, subset,
)


@pytest.mark.parametrize("fam,rank", BASIS_TYPES)
def test_psi_basis_conditions(fam, rank):
    psi = psi_basis(build_root_system(fam, rank))
    flags = check_conditions(psi)
    assert flags["C1"] and flags["C2"] and len(psi) == rank


def test_e8_basis_contains_highest_root():
    rs = build_root_system("E", 8)
    assert highest_root(rs) in psi_basis(rs)


def test_psi_theta_empty_theta_is_highest_root():
    for spec in ["A3", "B3", "G2", "E6"]:
        rs = parse_type(spec)
        assert highest_root(rs) in psi_theta(rs, ())


def test_psi_theta_a2():
    rs = parse_type("A2")
    assert psi_theta(rs, [0]).as_set == {(1, 1), (0, 1)}


@pytest.mark.parametrize("spec", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_psi_theta_stability_and_rank(spec):
    rs = parse_type(spec)
    for k in range(rs.rank):
        for theta in combinations(range(rs.rank), k):
            psi = psi_theta(rs, theta)
            assert is_weyl_stable(psi, theta)
            assert restricted_dim(rs, theta, psi) >= 1


def test_flag_is_increasing():
    rs = parse_type("B3")
    flag = psi_flag(rs, ())
    for a, b in zip(flag, flag[1:]):
        assert a.as_set < b.as_set
    assert check_conditions(flag[-1])["C1"]


def test_known_equivalence_failure_a2():
    # all of Phi+ in A2 meets C1'' but is not commutative
    rs = parse_type("A2")
    c = check_conditions(subset(rs, rs.positive_roots))
    assert c["C1''"] and c["C1"] and not c["C2"]


@given(st.sampled_from(["A2", "B2", "G2"]), st.data())
def test_condition_equivalences(spec, data):
    rs = parse_type(spec)
    mask = data.draw(st.lists(st.booleans(), min_size=len(rs.positive_roots), max_size=len(rs.positive_roots)))
    c = check_conditions(subset(rs, [a for a, m in zip(rs.positive_roots, mask) if m]))
    assert c["C1"] == c["C1'"]
    assert c["C2"] == c["C2'"]
    if c["C2"]:
        assert c["C1"] == c["C1''"]


def test_c3_numbering():
    rs = parse_type("B3")
    psi = psi_theta(rs, (1,))
    order = c3_numbering(psi)
    assert satisfies_c3(rs, order.elements)
    ext = extend_numbering(psi)
    assert len(ext) == len(rs.positive_roots) and ext[: len(psi)] == order.elements


def test_subset_rejects_negative_and_duplicates():
    rs = parse_type("A2")
    with pytest.raises(ValueError):
        subset(rs, [(-1, 0)])
    with pytest.raises(ValueError):
        subset(rs, [(1, 0), (1, 0)])

import random

import pytest
from hypothesis import given, strategies as st

from btquot.chevalley import (
    collect, commutator, conjugate_via_table, conjugation_polynomials, structure_constants, word,
)
from btquot.oracles import closed_form_constant, type_a_signs, word_matrix
from btquot.rootsys import add, neg, parse_type, root_string
from btquot.subsets import psi_theta, subset

TYPES = ["A3", "B2", "B3", "C3", "D4", "G2", "F4"]


@pytest.mark.parametrize("spec", TYPES)
def test_lie_algebra_identities(spec):
    sc = structure_constants(parse_type(spec))
    rs = sc.rs
    for a in rs.roots:
        for b in rs.roots:
            g = add(a, b)
            if g not in rs.root_set:
                assert sc.n(a, b) == 0
                continue
            p, _ = root_string(rs, a, b)
            assert abs(sc.n(a, b)) == p + 1
            assert sc.n(b, a) == -sc.n(a, b)
            assert sc.n(neg(a), neg(b)) == -sc.n(a, b)
            # cyclic identity for a + b + c = 0
            c = neg(g)
            ia, ib, ic = rs.inner(a, a), rs.inner(b, b), rs.inner(c, c)
            assert sc.n(a, b) * ia * ib == sc.n(b, c) * ic * ib == sc.n(c, a) * ia * ic


@pytest.mark.parametrize("spec", TYPES)
def test_commutator_constants_match_closed_formulas(spec):
    sc = structure_constants(parse_type(spec))
    assert sc.C
    for (a, b, r, s), c in sc.C.items():
        assert closed_form_constant(sc, a, b, r, s) == c


def test_exceptional_constants():
    b2 = structure_constants(parse_type("B2"))
    assert {abs(c) for (_, _, r, s), c in b2.C.items() if (r, s) == (1, 1)} == {1, 2}
    g2 = structure_constants(parse_type("G2"))
    assert abs(g2.c((1, 0), (0, 1), 3, 1)) == 1
    assert abs(g2.c((1, 0), (1, 1), 2, 1)) == 3
    assert abs(g2.c((1, 0), (2, 1), 1, 1)) == 3


@given(st.sampled_from([2, 3, 4]), st.randoms(use_true_random=False))
def test_collection_matches_matrices(l, rnd):
    p = 7
    sc = structure_constants(parse_type(f"A{l}"))
    eps = type_a_signs(sc)
    letters = [(rnd.choice(sc.rs.positive_roots), rnd.randrange(1, p)) for _ in range(5)]
    collected = collect(sc, word(sc.rs, letters))
    assert word_matrix(eps, letters, l + 1, p) == word_matrix(eps, collected.letters, l + 1, p)


@given(st.sampled_from(["B2", "G2", "B3", "C3"]), st.randoms(use_true_random=False))
def test_word_times_inverse_collects_to_identity(spec, rnd):
    sc = structure_constants(parse_type(spec))
    w = word(sc.rs, [(rnd.choice(sc.rs.positive_roots), rnd.randint(-3, 3)) for _ in range(4)])
    assert collect(sc, w * w.inverse()).letters == ()


def test_collect_to_target_order():
    sc = structure_constants(parse_type("G2"))
    order = list(reversed(sc.rs.positive_roots))
    w = word(sc.rs, [((1, 0), 2), ((0, 1), 1)])
    out = collect(sc, w, order)
    assert [a for a, _ in out.letters] == [a for a in order if a in out.coords()]
    assert collect(sc, out).letters == collect(sc, w).letters


@pytest.mark.parametrize("spec,theta", [("B2", ()), ("G2", ()), ("G2", (0,)), ("B3", (1,)), ("C3", ()), ("A3", (0, 2))])
def test_conjugation_table_against_collection(spec, theta):
    # integer arithmetic, so no modular oracle is involved
    sc = structure_constants(parse_type(spec))
    psi = psi_theta(sc.rs, theta)
    table = conjugation_polynomials(sc, psi)
    assert table.is_triangular()
    rnd = random.Random(11)
    for _ in range(10):
        xs = [rnd.randint(-2, 2) for _ in table.order]
        ys = [rnd.randint(-2, 2) for _ in table.psi]
        u = word(sc.rs, list(zip(table.order, xs))[::-1])
        v = word(sc.rs, list(zip(table.psi, ys)))
        got = collect(sc, u * v * u.inverse()).coords()
        want = dict(zip(table.psi, conjugate_via_table(table, xs, ys)))
        assert {a: c for a, c in want.items() if c} == got


def test_conjugation_requires_conditions():
    sc = structure_constants(parse_type("A2"))
    with pytest.raises(ValueError):
        conjugation_polynomials(sc, subset(sc.rs, sc.rs.positive_roots))


def test_commutator_rejects_opposite_roots():
    sc = structure_constants(parse_type("A2"))
    with pytest.raises(ValueError):
        commutator(sc, (1, 0), 1, (-1, 0), 1)

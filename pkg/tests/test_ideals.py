import random

import pytest
from hypothesis import given, settings, strategies as st

from btquot.ffield import GF, FracIdeal, Poly, RationalFunction, identity, mat, mat_det
from btquot.ideals import (
    ConjContext, eval_poly, is_member, lower_ideal, m_alpha, m_psi_bruteforce, poly_ideal_lower, random_h, sandwich,
    sl2_example, sl3_example, upper_ideals, v_dim,
)


def _t(F):
    return RationalFunction.t_power(F, 1)


@given(st.sampled_from([2, 3]), st.sampled_from([2, 3]), st.randoms(use_true_random=False))
def test_random_h_has_det_one(q, n, rnd):
    F = GF(q)
    assert mat_det(random_h(F, n, rnd)) == RationalFunction.const(F, 1)


def test_identity_context():
    F = GF(3)
    ctx = ConjContext(F, identity(F, 3))
    assert m_alpha(ctx, (0, 2)) == FracIdeal.unit(F)
    assert all(J == FracIdeal.unit(F) for J in upper_ideals(ctx).values())
    # {x in A : deg x <= 2} has dimension 3
    assert v_dim(ctx, [(0, 1)], [-2]) == 3


def test_context_rejects_det_not_one():
    F = GF(2)
    with pytest.raises(ValueError):
        ConjContext(F, mat(F, [[_t(F), 0], [0, 1]]))


@settings(max_examples=15)
@given(st.sampled_from([2, 3]), st.randoms(use_true_random=False))
def test_kernel_method_matches_enumeration(q, rnd):
    F = GF(q)
    ctx = ConjContext(F, random_h(F, 2, rnd, height=1))
    for pair in [(0, 1), (1, 0)]:
        window = (-2, 2) if q == 2 else (-1, 2)
        assert m_psi_bruteforce(ctx, [pair], window) == m_psi_bruteforce(ctx, [pair], window, method="enumerate")


@settings(max_examples=15)
@given(st.randoms(use_true_random=False))
def test_m_alpha_is_exact_on_window(rnd):
    F = GF(2)
    ctx = ConjContext(F, random_h(F, 3, rnd, height=1))
    pair = (0, 2)
    M = m_alpha(ctx, pair)
    for y in m_psi_bruteforce(ctx, [pair], (-3, 3), method="enumerate"):
        assert y[0] in M
    for _ in range(20):
        y = RationalFunction.laurent(F, {e: rnd.randrange(2) for e in range(-3, 4)})
        assert (y in M) == is_member(ctx, [pair], [y])


@settings(max_examples=10)
@given(st.sampled_from([2, 3]), st.sampled_from([2, 3]), st.randoms(use_true_random=False))
def test_sandwich(q, n, rnd):
    F = GF(q)
    ctx = ConjContext(F, random_h(F, n, rnd))
    ups = upper_ideals(ctx)
    for i in range(n):
        for j in range(i + 1, n):
            rep = sandwich(ctx, (i, j))
            assert rep.lower_ok and rep.upper_ok
            assert lower_ideal(ctx, (i, j)) <= m_alpha(ctx, (i, j)) <= ups[(i, j)]


@pytest.mark.parametrize("q", [2, 3])
def test_sl2_examples(q):
    F = GF(q)
    t = _t(F)
    # x = t: every bound collapses to A
    assert lower_ideal(sl2_example(F, t), (0, 1)) == FracIdeal.unit(F)
    # x = 1/t: A cap A t cap A t^2 = (t^2)
    ctx = sl2_example(F, t.inverse())
    assert lower_ideal(ctx, (0, 1)) == FracIdeal(t * t)
    assert {y[0] for y in m_psi_bruteforce(ctx, [(0, 1)], (0, 3))} == {
        y[0] for y in m_psi_bruteforce(ctx, [(0, 1)], (0, 3), method="enumerate")}


@pytest.mark.parametrize("q", [2, 3])
def test_sl3_example(q):
    F = GF(q)
    t = _t(F)
    ctx = sl3_example(F)
    psi = [(0, 1), (0, 2)]
    assert is_member(ctx, psi, (t, t))
    assert is_member(ctx, psi, (t * (t + 1), t * (t + 1)))
    assert not is_member(ctx, psi, (t * (t + 1), t * t))
    assert not is_member(ctx, psi, (t, RationalFunction.const(F, 0)))


def test_poly_ideal_lower():
    F = GF(3)
    t = _t(F)
    P1 = [0, t.inverse(), t]          # y/t + t y^2
    P2 = [0, 0, 0, RationalFunction(Poly.const(F, 1), Poly.t(F) + 1)]  # y^3/(t+1)
    I1, I2 = FracIdeal(t), FracIdeal.unit(F)
    J = poly_ideal_lower([P1, P2], [I1, I2])
    rnd = random.Random(3)
    for _ in range(30):
        y = J.gen * RationalFunction(Poly(F, [rnd.randrange(3) for _ in range(3)]))
        assert eval_poly(P1, y) in I1 and eval_poly(P2, y) in I2
    with pytest.raises(ValueError):
        poly_ideal_lower([[1, t]], [I1])

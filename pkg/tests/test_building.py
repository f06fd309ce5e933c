import pytest
from hypothesis import given, settings, strategies as st

from btquot.building import (
    CurveSpec, birkhoff, coweight_form, cusp_count, neighbors, normalize_type, pic_order, quotient_ball,
    ray_stab_membership, sector_chamber_types, sl2_box, stab_membership, stabilizer_order_sl2, standard_vertex,
    type_of, vertex_from_matrix, vertex_lift,
)
from btquot.ffield import GF, Poly, RationalFunction, identity, mat, mat_det, mat_mul, val_inf
from btquot.oracles import point_count_by_characters


def _t(F, k=1):
    return RationalFunction.t_power(F, k)


def _elementary(F, n, rnd, steps=4):
    """Random product of elementary matrices in SL_n(F_q[t])."""
    g = identity(F, n)
    for _ in range(steps):
        i, j = rnd.sample(range(n), 2)
        e = identity(F, n)
        e[i][j] = RationalFunction(Poly(F, [rnd.randrange(F.q) for _ in range(3)]))
        g = mat_mul(e, g)
    return g


@pytest.mark.parametrize("n,q,count", [(2, 2, 3), (2, 3, 4), (2, 5, 6), (3, 2, 14)])
def test_neighbor_counts(n, q, count):
    v = standard_vertex(GF(q), n)
    nb = neighbors(v)
    assert len(nb) == len(set(nb)) == count and v not in nb


def test_neighbor_relation_is_symmetric():
    F = GF(3)
    v = standard_vertex(F, 2)
    for w in neighbors(v):
        assert v in neighbors(w)


def test_birkhoff_worked_case():
    F = GF(2)
    t = _t(F)
    g = mat(F, [[1, t * t], [t.inverse(), 1]])
    B = birkhoff(g)
    assert B.exponents == (1, 0)
    assert mat_mul(B.u, mat_mul(B.D, B.v)) == g


def test_birkhoff_rejects_singular():
    F = GF(2)
    t = _t(F)
    with pytest.raises(ValueError):
        birkhoff(mat(F, [[t, t], [1, 1]]))


@settings(max_examples=25)
@given(st.sampled_from([2, 3]), st.sampled_from([2, 3]), st.randoms(use_true_random=False))
def test_type_invariant_under_integral_left_action(q, n, rnd):
    F = GF(q)
    c = sorted((rnd.randint(0, 3) for _ in range(n)), reverse=True)
    D = [[_t(F, c[i]) if i == j else RationalFunction(Poly(F)) for j in range(n)] for i in range(n)]
    g = mat_mul(_elementary(F, n, rnd), D)
    assert type_of(D) == normalize_type(c)
    assert type_of(g) == type_of(D)
    # the exponents record the degree of the determinant
    assert sum(birkhoff(g).exponents) == -val_inf(mat_det(g))


def test_vertex_type_along_apartment():
    F = GF(2)
    for c in [(0, 0), (3, 0), (2, 5)]:
        D = mat(F, [[_t(F, c[0]), 0], [0, _t(F, c[1])]])
        assert vertex_from_matrix(F, D).type == normalize_type(c)
    assert coweight_form((2, 1, 0)) == (1, 0, -1)


@pytest.mark.parametrize("q,R", [(2, 4), (3, 3)])
def test_sl2_quotient_is_ray(q, R):
    Q = quotient_ball(2, q, R)
    assert Q.is_path() and Q.nodes == [(k, 0) for k in range(R + 1)]
    assert Q.ball_size == 1 + (q + 1) * (q ** R - 1) // (q - 1)


def test_sl3_quotient_sector():
    Q = quotient_ball(3, 2, 2)
    assert sorted(Q.nodes) == sorted(sector_chamber_types(3, 2))
    assert len(Q.nodes) == 6 and Q.is_connected()


def test_quotient_scale_guard():
    with pytest.raises(ValueError):
        quotient_ball(3, 3, 2)


@pytest.mark.parametrize("q", [2, 3])
def test_stabilizer_orders_closed_form(q):
    # SL_2(F_q) at the origin, then upper triangular a, a^-1, b with deg b <= m
    assert stabilizer_order_sl2(0, q) == q ** 3 - q
    for m in range(1, 5):
        assert stabilizer_order_sl2(m, q) == (q - 1) * q ** (m + 1)


@settings(max_examples=20)
@given(st.sampled_from([2, 3]), st.randoms(use_true_random=False))
def test_stab_membership_matches_lattice_action(n, rnd):
    F = GF(2)
    w = [rnd.randint(0, 2) for _ in range(n - 1)]
    D = vertex_lift(F, w)
    g = _elementary(F, n, rnd, steps=2)
    fixed = vertex_from_matrix(F, mat_mul(g, D)) == vertex_from_matrix(F, D)
    assert stab_membership(w, g) == fixed
    if ray_stab_membership(w, [1] * (n - 1), g):
        assert fixed


def test_sl2_box_elements_have_det_one():
    F = GF(3)
    one = RationalFunction.const(F, 1)
    assert all(mat_det(g) == one for g in sl2_box(F, (1, 1, 0, 0)))


@pytest.mark.parametrize("q,coeffs", [(5, (0, 0, 0, 1, 0)), (7, (0, 0, 0, 0, 1)), (4, (1, 0, 1, 0, 1)),
                                      (2, (1, 0, 0, 0, 1)), (9, (0, 0, 0, 1, 1))])
def test_pic_order_matches_character_sums(q, coeffs):
    E = CurveSpec(1, q, coeffs)
    n = pic_order(E)
    assert n == point_count_by_characters(q, coeffs)
    assert abs(n - q - 1) <= 2 * q ** 0.5  # Hasse bound
    assert cusp_count(E, 3) == n ** 3


def test_cusps_genus_zero_and_guards():
    assert all(cusp_count(CurveSpec(0, 3), r) == 1 for r in range(1, 6))
    with pytest.raises(ValueError):
        CurveSpec(1, 5, (0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        cusp_count(CurveSpec(0, 2), 0)

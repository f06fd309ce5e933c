from itertools import product

import pytest
from hypothesis import given, strategies as st

from btquot.ffield import (
    GF, FracIdeal, Poly, RationalFunction, factor, identity, irreducibles, is_irreducible, laurent_coeffs, mat,
    mat_det, mat_inv, mat_mul, monomial_bound, polys_up_to, rr_dim, truncated_basis, val_inf,
)

QS = [2, 3, 4, 5, 7, 8, 9, 16, 25]


def polys(F, max_deg=4):
    return st.lists(st.integers(0, F.q - 1), max_size=max_deg + 1).map(lambda c: Poly(F, c))


@given(st.sampled_from(QS), st.data())
def test_field_axioms(q, data):
    F = GF(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
    # Frobenius is additive
    fr = lambda x: F.mul(*(x, x)) if F.p == 2 else _power(F, x, F.p)
    assert fr(F.add(a, b)) == F.add(fr(a), fr(b))


def _power(F, x, k):
    out = 1
    for _ in range(k):
        out = F.mul(out, x)
    return out


@pytest.mark.parametrize("q", QS)
def test_multiplicative_group_is_cyclic(q):
    F = GF(q)
    orders = []
    for a in range(1, q):
        k, x = 1, a
        while x != 1:
            x, k = F.mul(x, a), k + 1
        assert (q - 1) % k == 0
        orders.append(k)
    assert max(orders) == q - 1


def _mobius(n):
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


@pytest.mark.parametrize("q,d", [(2, 1), (2, 4), (2, 6), (3, 3), (4, 2), (5, 2)])
def test_irreducible_count_matches_necklace_formula(q, d):
    expect = sum(_mobius(d // k) * q ** k for k in range(1, d + 1) if d % k == 0) // d
    assert len(irreducibles(q, d)) == expect


@given(st.sampled_from([2, 3, 4, 5]), st.data())
def test_divmod(q, data):
    F = GF(q)
    a = data.draw(polys(F, 6))
    b = data.draw(polys(F, 3))
    if not b:
        return
    quo, rem = divmod(a, b)
    assert quo * b + rem == a and rem.degree < b.degree


@given(st.sampled_from([2, 3, 4, 5, 9]), st.data())
def test_factor_roundtrip(q, data):
    F = GF(q)
    f = data.draw(polys(F, 6))
    if f.degree < 1:
        return
    prod = Poly.const(F, 1)
    for g, k in factor(f):
        assert is_irreducible(g) and g.lead == 1
        prod = prod * g ** k
    assert prod == f.monic()


def test_small_irreducibility_by_roots():
    # degree <= 3 is irreducible iff there is no root
    F = GF(3)
    for f in polys_up_to(F, 3):
        if f.degree in (2, 3):
            assert is_irreducible(f) == all(f(x) != 0 for x in F.elements)


def test_valuation_at_infinity():
    F = GF(5)
    t = Poly.t(F)
    assert val_inf(RationalFunction(t + 1, t ** 3)) == 2
    assert val_inf(RationalFunction(t ** 4)) == -4
    assert laurent_coeffs(RationalFunction(t + 2, t), -1, 0) == [2, 1]


@given(st.sampled_from([2, 3, 5]), st.data())
def test_ideal_degree_additivity(q, data):
    F = GF(q)
    a, b, c, d = (data.draw(polys(F, 3)) for _ in range(4))
    if not (a and b and c and d):
        return
    I, J = FracIdeal(RationalFunction(a, c.monic())), FracIdeal(RationalFunction(b, d.monic()))
    assert (I + J).degree + (I & J).degree == I.degree + J.degree
    assert I & J <= I <= I + J
    assert (I * I.inverse()) == FracIdeal.unit(F)


@pytest.mark.parametrize("q", [2, 3])
def test_monomial_bound_is_exact(q):
    F = GF(q)
    t = Poly.t(F)
    J = FracIdeal(RationalFunction(t ** 5 * (t + 1) ** 2))
    z = RationalFunction(t, t + 1)
    for n in (1, 2, 3):
        Q = monomial_bound(J, z, n)
        for x in polys_up_to(F, 3):
            if x:
                assert (x in Q) == (z * RationalFunction(x) ** n in J)


@pytest.mark.parametrize("q", [2, 3])
def test_truncated_basis_by_enumeration(q):
    # count every element of J[m] directly and compare with q^|basis|
    F = GF(q)
    t = Poly.t(F)
    for gen in [RationalFunction(t * t + 1), RationalFunction(t + 1, t * t), RationalFunction(Poly.const(F, 1), t + 1)]:
        J = FracIdeal(gen)
        for m in range(max(0, J.degree - 1), 4):
            d = gen.den
            top = m + int(d.degree)
            count = 0
            for cs in product(range(q), repeat=top + 1):
                y = RationalFunction(Poly(F, cs), d)
                if y in J:
                    count += 1
            assert count == q ** len(truncated_basis(J, m)) == q ** rr_dim(J.degree, m, 0, 1)


def test_rr_regime():
    assert rr_dim(2, 5, 0, 1) == 4
    assert rr_dim(0, 3, 1, 2) == 6
    with pytest.raises(ValueError):
        rr_dim(5, 2, 0, 1)


def test_matrix_inverse():
    F = GF(3)
    t = RationalFunction.t_power(F, 1)
    g = mat(F, [[t, 1], [t * t + 1, t + 2]])
    assert mat_mul(g, mat_inv(g)) == identity(F, 2)
    assert mat_det(g) == t * (t + 2) - (t * t + 1)


def test_gf_rejects_non_prime_power():
    with pytest.raises(ValueError):
        GF(6)

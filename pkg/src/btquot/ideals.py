"""Arithmetic unipotent subgroups of SL_n over A = F_q[t].

For h in SL_n(F_q(t)) and a set Psi of roots (pairs (i, j), i != j,
0-based, root group I + y E_ij), the set M_Psi(h) collects coordinate
vectors whose unipotent matrix lies in h SL_n(A) h^-1.  It is squeezed
between two families of ideals:

* lower: for a single root, M_alpha(h) is the fractional ideal of y with
  y (h^-1 E_ij h)_pq in A for all p, q; its intersection with A is J_alpha(h);
* upper: I'_i = sum_l h_il A, I_ij = sum_l h'_lj I'_i with h' = h^-1, and
  J_ij = I_ij + sum_{i<k<j} J_ik J_kj bounds every coordinate.

Membership for a commutative Psi is F_q-linear in the coordinates, so the
exact member set inside a window is the kernel of the map sending a
coordinate vector to the principal parts of h^-1 u h.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Sequence

from .ffield import (
    GF, FracIdeal, Matrix, Poly, RationalFunction, _rf, identity, ideal_intersection, ideal_sum,
    is_integral, mat, mat_det, mat_inv, mat_mul, plcm, span_dim,
)

Pair = tuple[int, int]
MAX_CANDIDATES = 200_000


@dataclass
class ConjContext:
    """h in SL_n(F_q(t)) with its cached inverse."""

    F: GF
    h: Matrix
    hinv: Matrix = field(init=False)

    def __post_init__(self):
        self.h = mat(self.F, self.h)
        if mat_det(self.h) != RationalFunction.const(self.F, 1):
            raise ValueError("h must have determinant 1")
        self.hinv = mat_inv(self.h)

    @property
    def n(self) -> int:
        return len(self.h)

    def conj_entries(self, pair: Pair) -> Matrix:
        """h^-1 E_ij h, the rank-one matrix (column i of h^-1)(row j of h)."""
        i, j = pair
        return [[self.hinv[p][i] * self.h[j][q] for q in range(self.n)] for p in range(self.n)]

    def to_json(self) -> dict:
        return {"q": self.F.q, "h": [[repr(x) for x in row] for row in self.h]}


def unipotent(F: GF, n: int, psi: Sequence[Pair], coords: Sequence) -> Matrix:
    """Ordered product of root-group elements I + x E_ij."""
    out = identity(F, n)
    for (i, j), x in zip(psi, coords):
        e = identity(F, n)
        e[i][j] = _rf(F, x)
        out = mat_mul(out, e)
    return out


def is_member(ctx: ConjContext, psi: Sequence[Pair], coords: Sequence) -> bool:
    """Exact test: h^-1 u h in SL_n(A)."""
    u = unipotent(ctx.F, ctx.n, psi, coords)
    return is_integral(mat_mul(mat_mul(ctx.hinv, u), ctx.h))


def _pairs_commute(psi: Sequence[Pair]) -> bool:
    return all(a[1] != b[0] for a in psi for b in psi)


# ------------------------------------------------------------- lower ideals

def m_alpha(ctx: ConjContext, pair: Pair) -> FracIdeal:
    """Exact M_alpha(h) = intersection of c^-1 A over nonzero entries c of h^-1 E_ij h."""
    ids = [FracIdeal(c.inverse()) for row in ctx.conj_entries(pair) for c in row if c]
    return ideal_intersection(*ids)


def lower_ideal(ctx: ConjContext, pair: Pair) -> FracIdeal:
    """J_alpha(h) = M_alpha(h) intersected with A, an ideal of A."""
    return m_alpha(ctx, pair) & FracIdeal.unit(ctx.F)


# ------------------------------------------------------------- upper ideals

def upper_ideals(ctx: ConjContext) -> dict[Pair, FracIdeal]:
    n, h, hp = ctx.n, ctx.h, ctx.hinv
    row_ideal = [ideal_sum(*[FracIdeal(x) for x in h[i] if x]) for i in range(n)]
    I = {}
    for i in range(n):
        for j in range(i + 1, n):
            I[(i, j)] = ideal_sum(*[FracIdeal(hp[l][j]) * row_ideal[i] for l in range(n) if hp[l][j]])
    J: dict[Pair, FracIdeal] = {}
    for height in range(1, n):
        for i in range(n - height):
            j = i + height
            J[(i, j)] = ideal_sum(I[(i, j)], *[J[(i, k)] * J[(k, j)] for k in range(i + 1, j)])
    return J


# ----------------------------------------------------------- exact windows

def _residues(ctx: ConjContext, psi: Sequence[Pair], basis: Sequence[tuple[int, RationalFunction]]) -> list[list[int]]:
    """Row r = coefficients of the non-polynomial part of h^-1 (b_r E_alpha) h.

    The map is F_q-linear, and a combination of basis vectors is a member
    iff its image is zero (valid when the roots of Psi commute).
    """
    F = ctx.F
    C = [ctx.conj_entries(p) for p in psi]
    out: list[list[int]] = [[] for _ in basis]
    for p in range(ctx.n):
        for q in range(ctx.n):
            vals = [C[k][p][q] * b for k, b in basis]
            L = Poly.const(F, 1)
            for v in vals:
                if v:
                    L = plcm(L, v.den)
            d = int(L.degree)
            if d == 0:
                continue
            for r, v in enumerate(vals):
                if not v:
                    out[r].extend([0] * d)
                    continue
                res = (v.num * (L // v.den)) % L
                out[r].extend(list(res.c) + [0] * (d - len(res.c)))
    return out


def _kernel(F: GF, rows: list[list[int]]) -> list[list[int]]:
    """Basis of {a in F_q^k : sum a_r rows[r] = 0}."""
    k = len(rows)
    width = len(rows[0]) if rows else 0
    # transpose system: columns are the unknowns a_r
    mtx = [[rows[r][c] for r in range(k)] for c in range(width)]
    piv_cols = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, len(mtx)) if mtx[i][c]), None)
        if piv is None:
            continue
        mtx[r], mtx[piv] = mtx[piv], mtx[r]
        inv = F.inv(mtx[r][c])
        mtx[r] = [F.mul(inv, x) for x in mtx[r]]
        for i in range(len(mtx)):
            if i != r and mtx[i][c]:
                f = mtx[i][c]
                mtx[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(mtx[i], mtx[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(k) if c not in piv_cols]
    basis = []
    for f in free:
        v = [0] * k
        v[f] = 1
        for i, pc in enumerate(piv_cols):
            v[pc] = F.neg(mtx[i][f])
        basis.append(v)
    return basis


def _combine(F: GF, basis, coeffs: Sequence[int], m: int) -> tuple[RationalFunction, ...]:
    out = [RationalFunction(Poly(F)) for _ in range(m)]
    for (k, b), a in zip(basis, coeffs):
        if a:
            out[k] = out[k] + b * RationalFunction.const(F, a)
    return tuple(out)


def _window_basis(F: GF, m: int, lo: int, hi: int) -> list[tuple[int, RationalFunction]]:
    return [(k, RationalFunction.t_power(F, e)) for k in range(m) for e in range(lo, hi + 1)]


def m_psi_bruteforce(ctx: ConjContext, psi: Sequence[Pair], window: tuple[int, int],
                     method: str = "kernel") -> set[tuple[RationalFunction, ...]]:
    """All members of M_Psi(h) whose coordinates are supported on t^lo..t^hi.

    ``method="enumerate"`` tests every candidate by exact conjugation;
    ``"kernel"`` solves the linear membership condition (commuting Psi only).
    """
    lo, hi = window
    F = ctx.F
    basis = _window_basis(F, len(psi), lo, hi)
    if method == "enumerate" or not _pairs_commute(psi):
        size = F.q ** len(basis)
        if size > MAX_CANDIDATES:
            raise ValueError(f"search too large: {size} candidates (limit {MAX_CANDIDATES})")
        return {x for cs in product(range(F.q), repeat=len(basis))
                for x in [_combine(F, basis, cs, len(psi))] if is_member(ctx, psi, x)}
    ker = _kernel(F, _residues(ctx, psi, basis))
    size = F.q ** len(ker)
    if size > MAX_CANDIDATES:
        raise ValueError(f"member set too large: {size} elements (limit {MAX_CANDIDATES})")
    out = set()
    for cs in product(range(F.q), repeat=len(ker)):
        full = [0] * len(basis)
        for a, v in zip(cs, ker):
            if a:
                full = [F.add(x, F.mul(a, y)) for x, y in zip(full, v)]
        out.add(_combine(F, basis, full, len(psi)))
    return out


def sandwich_window(ctx: ConjContext, pair: Pair, slack: int = 2) -> tuple[int, int]:
    """t-support window from the generator degrees of the sandwich ideals plus slack."""
    lo_id = lower_ideal(ctx, pair)
    degs = [lo_id.degree]
    if pair[0] < pair[1]:
        up = upper_ideals(ctx)[pair]
        degs += [up.degree, -int(up.gen.den.degree)]
    return min(0, min(degs)) - slack, max(degs) + slack


@dataclass
class SandwichReport:
    pair: Pair
    lower: FracIdeal
    upper: FracIdeal | None
    window: tuple[int, int]
    brute: set
    lower_ok: bool
    upper_ok: bool

    def to_json(self) -> dict:
        return {
            "alpha": list(self.pair),
            "lower": repr(self.lower.gen),
            "upper": None if self.upper is None else repr(self.upper.gen),
            "window": list(self.window),
            "brute_size": len(self.brute),
            "lower_ok": self.lower_ok,
            "upper_ok": self.upper_ok,
        }


def sandwich(ctx: ConjContext, pair: Pair, window: tuple[int, int] | None = None) -> SandwichReport:
    """Lower samples conjugate into SL_n(A); brute members lie in the upper ideal."""
    window = window or sandwich_window(ctx, pair)
    low = lower_ideal(ctx, pair)
    g = low.gen.num
    samples = [RationalFunction(g.shift(i)) for i in range(max(0, window[1] - int(g.degree)) + 1)]
    lower_ok = all(is_member(ctx, [pair], [y]) for y in samples)
    brute = m_psi_bruteforce(ctx, [pair], window)
    upper = upper_ideals(ctx)[pair] if pair[0] < pair[1] else None
    upper_ok = upper is None or all(x[0] in upper for x in brute)
    lower_ok = lower_ok and all(x[0] in m_alpha(ctx, pair) for x in brute)
    return SandwichReport(pair, low, upper, window, brute, lower_ok, upper_ok)


# ------------------------------------------------------- finite dimensional V

def v_dim(ctx: ConjContext, psi: Sequence[Pair], z: dict[Pair, int] | Sequence[int]) -> int:
    """dim over F_q of the span of {x in M_Psi(h) : val_inf(x_alpha) >= z_alpha}.

    Coordinates are confined to upper-ideal generator times polynomials of
    bounded degree, which is exhaustive by the upper bound.
    """
    F = ctx.F
    zs = [z[p] for p in psi] if isinstance(z, dict) else list(z)
    ups = upper_ideals(ctx)
    basis = []
    for k, p in enumerate(psi):
        gen = ups[p].gen if p[0] < p[1] else m_alpha(ctx, p).gen
        top = -zs[k] - (int(gen.num.degree) - int(gen.den.degree))
        basis += [(k, gen * RationalFunction.t_power(F, i)) for i in range(top + 1)]
    if not basis:
        return 0
    if _pairs_commute(psi):
        return len(_kernel(F, _residues(ctx, psi, basis)))
    size = F.q ** len(basis)
    if size > MAX_CANDIDATES:
        raise ValueError(f"search too large: {size} candidates (limit {MAX_CANDIDATES})")
    members = [cs for cs in product(range(F.q), repeat=len(basis))
               if is_member(ctx, psi, _combine(F, basis, cs, len(psi)))]
    return span_dim(F, members)


# ------------------------------------------------------- polynomial ideals

def poly_ideal_lower(P_list: Sequence[Sequence], I_list: Sequence[FracIdeal], F: GF | None = None) -> FracIdeal:
    """Ideal J of A with P_i(y) in I_i for every y in J and every i.

    P_i is given by its coefficient list [0, a_1, a_2, ...] over F_q(t).
    With b_i in A clearing the denominators of the a_k, J = cap b_i (I_i cap A).
    """
    if len(P_list) != len(I_list):
        raise ValueError("P_list and I_list must have the same length")
    if not P_list:
        if F is None:
            raise ValueError("pass F for empty lists")
        return FracIdeal.unit(F)
    F = F or I_list[0].F
    out = []
    for P, I in zip(P_list, I_list):
        coeffs = [_rf(F, a) for a in P]
        if coeffs and coeffs[0]:
            raise ValueError("P(0) must be 0")
        b = Poly.const(F, 1)
        for a in coeffs:
            if a:
                b = plcm(b, a.den)
        out.append((I & FracIdeal.unit(F)) * RationalFunction(b))
    return ideal_intersection(*out)


def eval_poly(P: Sequence, y: RationalFunction) -> RationalFunction:
    F = y.F
    acc = RationalFunction(Poly(F))
    for a in reversed(list(P)):
        acc = acc * y + _rf(F, a)
    return acc


# --------------------------------------------------------------- sampling

def signed_permutation(F: GF, perm: Sequence[int]) -> Matrix:
    """Permutation matrix with the first row negated when needed for det 1."""
    n = len(perm)
    m = [[int(perm[i] == j) for j in range(n)] for i in range(n)]
    inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
    if inv % 2:
        m[0] = [-x for x in m[0]]
    return mat(F, m)


def random_h(F: GF, n: int, rng: random.Random, height: int = 2) -> Matrix:
    """n_w u with u upper unitriangular, entries Laurent with t-support in [-height, height]."""
    perm = rng.choice(list(permutations(range(n))))
    u = identity(F, n)
    for i in range(n):
        for j in range(i + 1, n):
            u[i][j] = RationalFunction.laurent(F, {e: rng.randrange(F.q) for e in range(-height, height + 1)})
    return mat_mul(signed_permutation(F, perm), u)


def sl2_example(F: GF, x) -> ConjContext:
    """h = [[0, -1], [1, -x]]."""
    return ConjContext(F, mat(F, [[0, -1], [1, -_rf(F, x)]]))


def sl3_example(F: GF) -> ConjContext:
    """h = n_w u with n_w the antidiagonal signed permutation and u = I + (E_13 + E_23)/t."""
    t = RationalFunction.t_power(F, 1)
    nw = mat(F, [[0, 0, 1], [0, -1, 0], [1, 0, 0]])
    u = mat(F, [[1, 0, t.inverse()], [0, 1, t.inverse()], [0, 0, 1]])
    return ConjContext(F, mat_mul(nw, u))

"""Desk-scale Bruhat-Tits buildings of SL_n over K = F_q((1/t)).

Vertices are homothety classes of O-lattices, O = F_q[[pi]], pi = 1/t.  A
class is stored by a basis matrix whose entries are polynomials in pi
(columns span the lattice), scaled so the lattice sits in O^n but not in
pi O^n.  Equality of classes is decided by a canonical key: the reduced
row echelon form over F_q of the image of the lattice in (O / pi^T)^n,
with T the pi-valuation of the determinant.

The SL_n(F_q[t]) orbit of a vertex is labelled by its Birkhoff type: the
exponents a_1 >= ... >= a_n of g = u diag(t^a) v, u in GL_n(F_q[t]) and v
in GL_n(O), taken modulo a common shift (normalized with a_n = 0).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .ffield import (
    GF, Matrix, Poly, RationalFunction, mat_det, mat_inv, mat_mul, plcm, val_inf,
)

Type = tuple[int, ...]


# -------------------------------------------------------------- F_q helpers

def rref_fq(F: GF, rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Canonical reduced row echelon form over F_q (zero rows dropped)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return ()
    r = 0
    for c in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r])


def subspaces(F: GF, n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every proper nonzero subspace of F_q^n, as its RREF basis."""
    seen = set()
    for k in range(1, n):
        for vecs in product(product(range(F.q), repeat=n), repeat=k):
            key = rref_fq(F, vecs)
            if len(key) == k and key not in seen:
                seen.add(key)
                yield key


def _complete_basis(F: GF, basis: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """Extend an RREF basis by standard vectors on the non-pivot columns."""
    pivots = [next(c for c, x in enumerate(row) if x) for row in basis]
    extra = [tuple(int(i == c) for i in range(n)) for c in range(n) if c not in pivots]
    return [tuple(r) for r in basis] + extra


# ------------------------------------------------------------ lattice classes

@dataclass(frozen=True)
class LatticeVertex:
    """Homothety class of the O-lattice spanned by the columns of ``cols``.

    ``cols[k][i]`` is entry (i, k) as a polynomial in pi.
    """

    F: GF
    cols: tuple[tuple[Poly, ...], ...]
    key: tuple = field(compare=True)

    @property
    def n(self) -> int:
        return len(self.cols)

    def matrix_t(self) -> Matrix:
        """The basis matrix with entries as Laurent polynomials in t."""
        F = self.F
        out = [[None] * self.n for _ in range(self.n)]
        for k, col in enumerate(self.cols):
            for i, p in enumerate(col):
                out[i][k] = _pi_to_t(F, p)
        return out

    @property
    def type(self) -> Type:
        return birkhoff(self.matrix_t()).type

    def __hash__(self):
        return hash(self.key)

    def __eq__(self, other):
        return isinstance(other, LatticeVertex) and self.key == other.key


def _pi_to_t(F: GF, p: Poly) -> RationalFunction:
    if not p:
        return RationalFunction(Poly(F))
    d = int(p.degree)
    return RationalFunction(Poly(F, tuple(reversed(p.c))), Poly.const(F, 1).shift(d))


def _pi_det_valuation(F: GF, cols) -> int:
    m = [[RationalFunction(cols[k][i]) for k in range(len(cols))] for i in range(len(cols))]
    d = mat_det(m)
    if not d:
        raise ValueError("singular lattice basis")
    return int(d.num.valuation_t())


def make_vertex(F: GF, cols: Sequence[Sequence[Poly]]) -> LatticeVertex:
    """Normalize (divide out the common power of pi) and compute the key."""
    cols = [list(c) for c in cols]
    shift = min(p.valuation_t() for c in cols for p in c if p)
    if shift:
        cols = [[Poly(F, p.c[shift:]) if p else p for p in c] for c in cols]
    n = len(cols)
    T = _pi_det_valuation(F, cols)
    rows = []
    for c in cols:
        for j in range(T):
            vec = []
            for p in c:
                coeffs = (0,) * j + p.c
                vec.extend((coeffs + (0,) * T)[:T])
            rows.append(vec)
    key = (n, T, rref_fq(F, rows))
    return LatticeVertex(F, tuple(tuple(c) for c in cols), key)


def standard_vertex(F: GF, n: int) -> LatticeVertex:
    one, zero = Poly.const(F, 1), Poly(F)
    return make_vertex(F, [[one if i == k else zero for i in range(n)] for k in range(n)])


def vertex_from_matrix(F: GF, g: Matrix) -> LatticeVertex:
    """Vertex of the lattice spanned by the columns of g (entries Laurent in t)."""
    n = len(g)
    shift = max(int(x.den.degree) for row in g for x in row if x) if any(x for row in g for x in row) else 0
    top = max(int(x.num.degree) - int(x.den.degree) for row in g for x in row if x)
    cols = []
    for k in range(n):
        col = []
        for i in range(n):
            x = g[i][k]
            if x and x.den.c != (0,) * int(x.den.degree) + (1,):
                raise ValueError("entries must be Laurent polynomials in t")
            # x * t^-top has nonpositive t-degrees: coefficient of t^e goes to pi^(top - e)
            coeffs = [0] * (top + shift + 1)
            if x:
                dd = int(x.den.degree)
                for e0, a in enumerate(x.num.c):
                    coeffs[top - (e0 - dd)] = a
            col.append(Poly(F, coeffs))
        cols.append(col)
    return make_vertex(F, cols)


def neighbors(vx: LatticeVertex) -> list[LatticeVertex]:
    """Lattices L > L' > pi L, one per proper nonzero subspace of L / pi L."""
    F, n = vx.F, vx.n
    out = []
    for W in subspaces(F, n):
        P = _complete_basis(F, W, n)
        k = len(W)
        new_cols = []
        for idx, coeffs in enumerate(P):
            col = [Poly(F) for _ in range(n)]
            for j, a in enumerate(coeffs):
                if a:
                    col = [x + y.scale(a) for x, y in zip(col, vx.cols[j])]
            if idx >= k:
                col = [x.shift(1) for x in col]
            new_cols.append(col)
        out.append(make_vertex(F, new_cols))
    return out


# ---------------------------------------------------------------- Birkhoff

@dataclass(frozen=True)
class Birkhoff:
    u: Matrix
    D: Matrix
    v: Matrix
    exponents: tuple[int, ...]

    @property
    def type(self) -> Type:
        """Exponents shifted so the last one is 0."""
        return normalize_type(self.exponents)


def normalize_type(a: Sequence[int]) -> Type:
    a = sorted(a, reverse=True)
    return tuple(x - a[-1] for x in a)


def coweight_form(a: Sequence[int]) -> tuple[Fraction, ...]:
    """The sum-zero representative of a type (rational entries)."""
    mean = Fraction(sum(a), len(a))
    return tuple(Fraction(x) - mean for x in a)


def _row_degree(row: Sequence[Poly]) -> int:
    return int(max(p.degree for p in row))


def _row_reduce(F: GF, M: list[list[Poly]]) -> tuple[list[list[Poly]], list[list[Poly]], list[int]]:
    """U M = R with R row reduced (invertible leading row coefficient matrix)."""
    n = len(M)
    R = [row[:] for row in M]
    U = [[Poly.const(F, int(i == j)) for j in range(n)] for i in range(n)]
    while True:
        d = [_row_degree(r) for r in R]
        lead = [[(p.c[d[i]] if p.degree == d[i] else 0) for p in R[i]] for i in range(n)]
        dep = _left_dependency(F, lead)
        if dep is None:
            return U, R, d
        i0 = max((i for i in range(n) if dep[i]), key=lambda i: (d[i], i))
        inv = F.inv(dep[i0])
        new_r = [Poly(F) for _ in range(n)]
        new_u = [Poly(F) for _ in range(n)]
        for i in range(n):
            if dep[i]:
                c = F.mul(dep[i], inv)
                s = d[i0] - d[i]
                new_r = [x + y.shift(s).scale(c) for x, y in zip(new_r, R[i])]
                new_u = [x + y.shift(s).scale(c) for x, y in zip(new_u, U[i])]
        R[i0], U[i0] = new_r, new_u
        if not any(R[i0]):
            raise ValueError("singular matrix")


def _left_dependency(F: GF, rows: list[list[int]]) -> list[int] | None:
    """Nonzero c with sum c_i rows_i = 0, or None."""
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    width = len(rows[0])
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, n) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = F.inv(aug[r][c])
        aug[r] = [F.mul(inv, x) for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(aug[i], aug[r])]
        r += 1
    if r == n:
        return None
    return aug[r][width:]


def birkhoff(g: Matrix) -> Birkhoff:
    """g = u D v with u in GL_n(F_q[t]), D = diag(t^a) decreasing, v in GL_n(O).

    The factorization is certified: u D v == g, u polynomial with constant
    determinant, v with entries of nonnegative valuation and unit determinant.
    """
    F = g[0][0].F
    n = len(g)
    if not mat_det(g):
        raise ValueError("singular matrix")
    c = Poly.const(F, 1)
    for row in g:
        for x in row:
            if x:
                c = plcm(c, x.den)
    e = int(c.degree)
    M = [[(x * RationalFunction(c)).num for x in row] for row in g]
    U, R, d = _row_reduce(F, M)
    order = sorted(range(n), key=lambda i: (-d[i], i))
    U = [U[i] for i in order]
    a = tuple(d[i] - e for i in order)
    Um = [[RationalFunction(p) for p in row] for row in U]
    u = mat_inv(Um)
    D = [[RationalFunction.t_power(F, a[i]) if i == j else RationalFunction(Poly(F)) for j in range(n)] for i in range(n)]
    Dinv = [[RationalFunction.t_power(F, -a[i]) if i == j else RationalFunction(Poly(F)) for j in range(n)] for i in range(n)]
    v = mat_mul(Dinv, mat_mul(Um, g))
    _certify(u, D, v, g)
    return Birkhoff(u, D, v, a)


def _certify(u, D, v, g) -> None:
    if mat_mul(u, mat_mul(D, v)) != g:
        raise RuntimeError("Birkhoff reconstruction failed")
    if not all(x.is_polynomial() for row in u for x in row) or mat_det(u).num.degree != 0:
        raise RuntimeError("u is not in GL_n(F_q[t])")
    if any(val_inf(x) < 0 for row in v for x in row) or val_inf(mat_det(v)) != 0:
        raise RuntimeError("v is not in GL_n(O)")


def type_of(g: Matrix) -> Type:
    return birkhoff(g).type


# ----------------------------------------------------------------- quotients

@dataclass
class QuotientComplex:
    n: int
    q: int
    radius: int
    nodes: list[Type]
    edges: list[tuple[Type, Type]]
    lifts: dict[Type, LatticeVertex]
    ball_size: int
    stabilizers: dict[Type, int] = field(default_factory=dict)

    def is_path(self) -> bool:
        """Connected, every node of degree <= 2, and exactly len(nodes) - 1 edges."""
        if len(self.edges) != len(self.nodes) - 1:
            return False
        deg = {v: 0 for v in self.nodes}
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return all(x <= 2 for x in deg.values()) and self.is_connected()

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        adj = {v: set() for v in self.nodes}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {self.nodes[0]}
        stack = [self.nodes[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.nodes)

    def to_dot(self) -> str:
        lines = ["graph quotient {"]
        for v in self.nodes:
            lines.append(f'  "{_label(v)}";')
        for a, b in self.edges:
            lines.append(f'  "{_label(a)}" -- "{_label(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "n": self.n, "q": self.q, "radius": self.radius, "ball_size": self.ball_size,
            "nodes": [{"type": list(v), "coweight": [str(x) for x in coweight_form(v)],
                       "lift": [[repr(x) for x in row] for row in self.lifts[v].matrix_t()],
                       **({"stabilizer": self.stabilizers[v]} if v in self.stabilizers else {})}
                      for v in self.nodes],
            "edges": [[list(a), list(b)] for a, b in self.edges],
        }


def _label(v: Type) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _check_scale(n: int, q: int, radius: int) -> None:
    if n == 2 and radius <= 8 and q <= 5:
        return
    if n == 3 and radius <= 3 and q == 2:
        return
    raise ValueError(f"(n, q, radius) = ({n}, {q}, {radius}) is beyond desk scale")


def quotient_ball(n: int, q: int, radius: int) -> QuotientComplex:
    """BFS ball around the standard vertex, folded by Birkhoff type."""
    _check_scale(n, q, radius)
    F = GF(q)
    start = standard_vertex(F, n)
    dist = {start: 0}
    types = {start: start.type}
    frontier = deque([start])
    edges = set()
    while frontier:
        v = frontier.popleft()
        if dist[v] == radius:
            continue
        for w in neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                types[w] = w.type
                frontier.append(w)
            a, b = types[v], types[w]
            if a != b:
                edges.add((min(a, b), max(a, b)))
    lifts: dict[Type, LatticeVertex] = {}
    for v in sorted(dist, key=lambda x: (dist[x], types[x])):
        lifts.setdefault(types[v], v)
    nodes = sorted(lifts, key=lambda a: (a[0] - a[-1], a))
    out = QuotientComplex(n, q, radius, nodes, sorted(edges, key=lambda e: (nodes.index(e[0]), nodes.index(e[1]))),
                          lifts, len(dist))
    if n == 2:
        out.stabilizers = {v: stabilizer_order_sl2(v[0], q) for v in nodes if v[0] <= 6 and q <= 5}
    return out


def sector_chamber_types(n: int, radius: int) -> list[Type]:
    """Dominant integer types a_1 >= ... >= a_n = 0 at apartment distance <= radius."""
    out = []
    for a in product(range(radius + 1), repeat=n - 1):
        t = tuple(a) + (0,)
        if all(t[i] >= t[i + 1] for i in range(n - 1)) and t[0] - t[-1] <= radius:
            out.append(t)
    return sorted(out, key=lambda a: (a[0], a))


# -------------------------------------------------------------- stabilizers

def _pair_value(w: Sequence, i: int, j: int):
    """(a_j - a_i)(w) in the convention where the vertex w is diag(t^c) O^n, c_k - c_{k+1} = w_k."""
    if i < j:
        return sum(Fraction(x) for x in w[i:j])
    return -sum(Fraction(x) for x in w[j:i])


def stab_membership(w: Sequence, g: Matrix) -> bool:
    """nu(g_ij) + (a_j - a_i)(w) >= 0 for every entry."""
    n = len(g)
    return all(val_inf(g[i][j]) + _pair_value(w, i, j) >= 0 for i in range(n) for j in range(n) if i != j) and \
        all(val_inf(g[i][i]) >= 0 for i in range(n))


def ray_stab_membership(w: Sequence, delta: Sequence, g: Matrix) -> bool:
    """Stabilizer of the ray from w in direction delta: also g_ij = 0 where (a_j - a_i)(delta) < 0."""
    n = len(g)
    if not stab_membership(w, g):
        return False
    return all(not g[i][j] for i in range(n) for j in range(n) if i != j and _pair_value(delta, i, j) < 0)


def vertex_lift(F: GF, w: Sequence[int]) -> Matrix:
    """diag(t^c) with c_k - c_{k+1} = w_k and c_n = 0."""
    n = len(w) + 1
    c = [0] * n
    for k in range(n - 2, -1, -1):
        c[k] = c[k + 1] + int(w[k])
    return [[RationalFunction.t_power(F, c[i]) if i == j else RationalFunction(Poly(F)) for j in range(n)]
            for i in range(n)]


def _polys_deg_le(F: GF, d: int) -> list[Poly]:
    if d < 0:
        return [Poly(F)]
    return [Poly(F, cs) for cs in product(range(F.q), repeat=d + 1)]


def sl2_box(F: GF, bounds: tuple[int, int, int, int]) -> Iterator[Matrix]:
    """SL_2(F_q[t]) elements with entry degrees bounded by (a, b, c, d)."""
    A, B, C, D = (_polys_deg_le(F, k) for k in bounds)
    one = Poly.const(F, 1)
    for a in A:
        for d in D:
            ad = a * d
            for b in B:
                for c in C:
                    if ad - b * c == one:
                        yield [[RationalFunction(a), RationalFunction(b)], [RationalFunction(c), RationalFunction(d)]]


def stabilizer_order_sl2(m: int, q: int) -> int:
    """|{g in SL_2(F_q[t]) : stab_membership(m, g)}| by exhaustive enumeration.

    Entry degrees come from the inequalities: diagonal <= 0, upper right <= m,
    lower left <= -m.
    """
    if m < 0 or m > 6 or q > 5:
        raise ValueError("need 0 <= m <= 6 and q <= 5")
    F = GF(q)
    return sum(1 for g in sl2_box(F, (0, m, -m, 0)) if stab_membership([m], g))


# -------------------------------------------------------------------- cusps

@dataclass(frozen=True)
class CurveSpec:
    """genus 0 (A = F_q[t]) or a Weierstrass cubic y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    genus: int
    q: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.genus not in (0, 1):
            raise ValueError("genus must be 0 or 1")
        if self.genus == 1:
            if len(self.coeffs) != 5:
                raise ValueError("need five Weierstrass coefficients a1, a2, a3, a4, a6")
            if discriminant(self) == 0:
                raise ValueError("singular curve")


def _lift(F: GF, a: int) -> int:
    """Integer input to F_q: values below q are taken as field elements."""
    return a % F.q if a >= 0 else F.neg(F.from_int(-a))


def discriminant(curve: CurveSpec) -> int:
    F = GF(curve.q)
    a1, a2, a3, a4, a6 = (_lift(F, a) for a in curve.coeffs)
    add, mul = F.add, F.mul

    def k(n):
        return F.from_int(n) if n >= 0 else F.neg(F.from_int(-n))

    def lin(*terms):
        out = 0
        for coef, val in terms:
            out = add(out, mul(k(coef), val))
        return out

    b2 = lin((1, mul(a1, a1)), (4, a2))
    b4 = lin((2, a4), (1, mul(a1, a3)))
    b6 = lin((1, mul(a3, a3)), (4, a6))
    b8 = lin((1, mul(mul(a1, a1), a6)), (4, mul(a2, a6)), (-1, mul(mul(a1, a3), a4)),
             (1, mul(a2, mul(a3, a3))), (-1, mul(a4, a4)))
    return lin((-1, mul(mul(b2, b2), b8)), (-8, mul(b4, mul(b4, b4))), (-27, mul(b6, b6)),
               (9, mul(b2, mul(b4, b6))))


def pic_order(curve: CurveSpec) -> int:
    """|Pic(A)|: 1 for F_q[t]; the number of F_q-points (with infinity) in genus 1."""
    if curve.genus == 0:
        return 1
    F = GF(curve.q)
    a1, a2, a3, a4, a6 = (_lift(F, a) for a in curve.coeffs)
    add, mul = F.add, F.mul
    count = 1
    for x in F.elements:
        x2 = mul(x, x)
        rhs = add(add(mul(x2, x), mul(a2, x2)), add(mul(a4, x), a6))
        for y in F.elements:
            lhs = add(mul(y, y), add(mul(mul(a1, x), y), mul(a3, y)))
            if lhs == rhs:
                count += 1
    return count


def cusp_count(curve: CurveSpec, t_rank: int) -> int:
    if t_rank < 1:
        raise ValueError("rank must be positive")
    return pic_order(curve) ** t_rank

"""Chevalley basis, commutator constants and unipotent normal forms.

The Lie algebra structure constants ``N(a, b)`` come from the extraspecial
pair algorithm: extraspecial signs are fixed to +1 and every other constant
is forced by the standard Chevalley-basis identities.  Group commutator
constants ``c^{r,s}_{a,b}`` are then read off from the adjoint action, where
``theta_a(x) = exp(x ad e_a)`` is a finite sum.

Commutators use ``[g, h] = g h g^-1 h^-1``, so that

    [theta_a(x), theta_b(y)] = prod theta_{ra+sb}(c^{r,s}_{a,b} x^r y^s).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Iterable, Sequence

from sympy import ZZ
from sympy.polys.rings import ring

from . import _exact
from .rootsys import Root, RootSystem, add, neg, root_string, scale
from .subsets import RootSubset, check_conditions, extend_numbering, satisfies_c3

Letter = tuple[Root, Any]


@dataclass
class StructureConstants:
    rs: RootSystem
    N: dict[tuple[Root, Root], int]
    C: dict[tuple[Root, Root, int, int], int] = field(default_factory=dict)

    def n(self, a: Sequence[int], b: Sequence[int]) -> int:
        return self.N.get((tuple(a), tuple(b)), 0)

    def c(self, a: Sequence[int], b: Sequence[int], r: int, s: int) -> int:
        return self.C.get((tuple(a), tuple(b), r, s), 0)

    def terms(self, a: Sequence[int], b: Sequence[int]) -> list[tuple[int, int, int]]:
        """Nonzero (r, s, c^{r,s}) for the pair, in the product order."""
        a, b = tuple(a), tuple(b)
        out = [(r, s, c) for (x, y, r, s), c in self.C.items() if x == a and y == b]
        return sorted(out, key=lambda t: (t[0] + t[1], sum(add(scale(t[0], a), scale(t[1], b)))))


def _extraspecial_N(rs: RootSystem) -> dict[tuple[Root, Root], int]:
    order = {a: k for k, a in enumerate(rs.positive_roots)}
    roots = rs.root_set
    ip = rs.inner
    npos: dict[tuple[Root, Root], int] = {}

    def N(z: Root, e: Root) -> Fraction:
        if add(z, e) not in roots:
            return Fraction(0)
        zp, ep = z in order, e in order
        if zp and ep:
            return Fraction(npos[(z, e)]) if order[z] < order[e] else -Fraction(npos[(e, z)])
        if not zp and not ep:
            return -N(neg(z), neg(e))
        if not zp:
            return -N(e, z)
        chi = add(z, e)
        if chi in order:
            return Fraction(ip(chi, chi), ip(z, z)) * N(chi, neg(e))
        return -Fraction(ip(chi, chi), ip(e, e)) * N(z, neg(chi))

    by_sum: dict[Root, list[tuple[Root, Root]]] = {}
    for a in rs.positive_roots:
        for b in rs.positive_roots:
            if order[a] < order[b] and add(a, b) in roots:
                by_sum.setdefault(add(a, b), []).append((a, b))
    for xi in rs.positive_roots:
        pairs = sorted(by_sum.get(xi, []), key=lambda p: order[p[0]])
        if not pairs:
            continue
        a0, b0 = pairs[0]
        npos[(a0, b0)] = root_string(rs, a0, b0)[0] + 1
        for a, b in pairs[1:]:
            t = Fraction(0)
            d = add(b, neg(a0))
            if d in roots:
                t += N(b, neg(a0)) * N(a, neg(b0)) / ip(d, d)
            d = add(a, neg(a0))
            if d in roots:
                t += N(neg(a0), a) * N(b, neg(b0)) / ip(d, d)
            val = ip(xi, xi) * t / npos[(a0, b0)]
            assert val.denominator == 1
            npos[(a, b)] = int(val)
    out = {}
    for z in rs.roots:
        for e in rs.roots:
            if add(z, e) in roots:
                v = N(z, e)
                assert v.denominator == 1
                out[(z, e)] = int(v)
    return out


class AdjointAction:
    """ad e_a on the Chevalley basis; Cartan elements are stored by their
    values on the simple roots (key ``("h",)``)."""

    H = ("h",)

    def __init__(self, rs: RootSystem, N: dict[tuple[Root, Root], int]):
        self.rs = rs
        self.N = N

    def coroot(self, a: Root) -> tuple[int, ...]:
        return tuple(self.rs.pairing(s, a) for s in self.rs.simple_roots)

    def ad(self, a: Root, v: dict) -> dict:
        out: dict = {}

        def put(k, c):
            if c:
                out[k] = out.get(k, 0) + c

        for k, c in v.items():
            if k == self.H:  # [e_a, h] = -a(h) e_a
                put(a, -c_dot(a, c))
            elif k == neg(a):
                hv = self.coroot(a)
                cur = out.get(self.H, (0,) * self.rs.rank)
                out[self.H] = tuple(x + c * y for x, y in zip(cur, hv))
            else:
                n = self.N.get((a, k), 0)
                if n:
                    put(add(a, k), n * c)
        return {k: c for k, c in out.items() if (any(c) if k == self.H else c != 0)}

    def exp(self, a: Root, x, v: dict) -> dict:
        out = dict(v)
        term = dict(v)
        k = 0
        while True:
            k += 1
            term = self.ad(a, term)
            if not term:
                return {k: c for k, c in out.items() if (any(c) if k == self.H else c != 0)}
            for key, c in term.items():
                if key == self.H:
                    cur = out.get(self.H, (0,) * self.rs.rank)
                    out[key] = tuple(p + _div(x**k * q, factorial(k)) for p, q in zip(cur, c))
                else:
                    out[key] = out.get(key, 0) + _div(x**k * c, factorial(k))


def _div(a, k: int):
    """a / k, staying in the integers when exact."""
    if isinstance(a, int) and a % k == 0:
        return a // k
    return Fraction(a) / k


def c_dot(a: Sequence[int], h: Sequence) -> Any:
    return sum(x * y for x, y in zip(a, h))


def _grading(rs: RootSystem, a: Root, b: Root) -> tuple[int, ...]:
    """Integral Cartan element (values on simple roots) positive on both a and b.

    Uses g -> (g,a)/(a,a) + w (g,b)/(b,b) with w strictly between
    -(a,b)/(a,a) and -(b,b)/(a,b) when (a,b) < 0; that window is nonempty
    because a and b are not opposite.
    """
    ab, aa, bb = rs.inner(a, b), rs.inner(a, a), rs.inner(b, b)
    w = Fraction(1) if ab >= 0 else (Fraction(-ab, aa) + Fraction(-bb, ab)) / 2
    h = [Fraction(rs.inner(s, a), aa) + w * Fraction(rs.inner(s, b), bb) for s in rs.simple_roots]
    den = _exact.lcm(*(x.denominator for x in h))
    return tuple(int(x * den) for x in h)


def _commutator_constants(rs: RootSystem, N: dict) -> dict[tuple[Root, Root, int, int], int]:
    """Read c^{r,s} from [theta_a(1), theta_b(1)] acting on a Cartan element."""
    ad = AdjointAction(rs, N)
    roots = rs.root_set
    out = {}
    for a in rs.roots:
        for b in rs.roots:
            if a == b or a == neg(b) or add(a, b) not in roots:
                continue
            h = _grading(rs, a, b)
            assert c_dot(a, h) > 0 and c_dot(b, h) > 0
            # apply g h g^-1 h^-1 to H, rightmost factor first
            v = ad.exp(b, -1, {AdjointAction.H: h})
            v = ad.exp(a, -1, v)
            v = ad.exp(b, 1, v)
            v = ad.exp(a, 1, v)
            cands = {}
            for r in range(1, 4):
                for s in range(1, 4):
                    g = add(scale(r, a), scale(s, b))
                    if g in roots:
                        cands[g] = (r, s)
            # the lowest graded root components read off the letters directly
            for g in sorted(cands, key=lambda g: c_dot(g, h)):
                coef = v.get(g, 0)
                if coef:
                    z = -Fraction(coef) / c_dot(g, h)
                    assert z.denominator == 1
                    v = ad.exp(g, -z, v)
                    out[(a, b) + cands[g]] = int(z)
            assert set(v) == {AdjointAction.H}, "commutator not fully accounted for"
    return out


_CACHE: dict[tuple, StructureConstants] = {}


def structure_constants(rs: RootSystem) -> StructureConstants:
    if rs.rank > 8:
        raise ValueError("rank above 8 is outside the supported range")
    key = rs.type_list
    if key not in _CACHE:
        N = _extraspecial_N(rs)
        _CACHE[key] = StructureConstants(rs, N, _commutator_constants(rs, N))
    return _CACHE[key]


# ---------------------------------------------------------------- words

@dataclass(frozen=True)
class UnipotentWord:
    rs: RootSystem
    letters: tuple[Letter, ...]

    def inverse(self) -> "UnipotentWord":
        return UnipotentWord(self.rs, tuple((a, -x) for a, x in reversed(self.letters)))

    def __mul__(self, other: "UnipotentWord") -> "UnipotentWord":
        return UnipotentWord(self.rs, self.letters + other.letters)

    def coords(self) -> dict[Root, Any]:
        out: dict[Root, Any] = {}
        for a, x in self.letters:
            if a in out:
                raise ValueError("word is not in normal form")
            out[a] = x
        return out


def word(rs: RootSystem, letters: Iterable[tuple[Sequence[int], Any]]) -> UnipotentWord:
    return UnipotentWord(rs, tuple((tuple(a), x) for a, x in letters))


def commutator(sc: StructureConstants, a: Sequence[int], x, b: Sequence[int], y) -> UnipotentWord:
    a, b = tuple(a), tuple(b)
    if a == b or a == neg(b):
        raise ValueError("commutator needs a != +-b")
    letters = []
    for r, s, c in sc.terms(a, b):
        letters.append((add(scale(r, a), scale(s, b)), c * x**r * y**s))
    return UnipotentWord(sc.rs, tuple(letters))


def _collect_ascending(sc: StructureConstants, letters: list[Letter]) -> list[Letter]:
    rs = sc.rs
    key = {a: (sum(a), k) for k, a in enumerate(rs.positive_roots)}
    w = [(a, x) for a, x in letters if x != 0]
    i = 0
    while i < len(w) - 1:
        (g, a), (h, b) = w[i], w[i + 1]
        if g == h:
            s = a + b
            w[i:i + 2] = [(g, s)] if s != 0 else []
            i = max(i - 1, 0)
        elif key[g] > key[h]:
            # g h = h g [g^-1, h^-1]
            comm = [(r, c) for r, c in commutator(sc, g, -a, h, -b).letters if c != 0]
            w[i:i + 2] = [(h, b), (g, a)] + comm
            i = max(i - 1, 0)
        else:
            i += 1
    return w


def collect(sc: StructureConstants, w: UnipotentWord, target_order: Sequence[Sequence[int]] | None = None) -> UnipotentWord:
    """Rewrite a word of positive-root letters as prod over target_order of theta_a(z_a)."""
    rs = sc.rs
    for a, _ in w.letters:
        if not rs.is_positive(a):
            raise ValueError("collect needs positive roots")
    asc = _collect_ascending(sc, list(w.letters))
    if target_order is None:
        return UnipotentWord(rs, tuple(asc))
    target = [tuple(a) for a in target_order]
    if sorted(target) != sorted(rs.positive_roots):
        raise ValueError("target_order must number all positive roots")
    goal = dict(asc)
    z: dict[Root, Any] = {}
    for k in sorted({sum(a) for a in target}):
        cur = dict(_collect_ascending(sc, [(a, z[a]) for a in target if a in z]))
        for a in target:
            if sum(a) == k:
                d = goal.get(a, 0) - cur.get(a, 0)
                if d != 0:
                    z[a] = z.get(a, 0) + d
    return UnipotentWord(rs, tuple((a, z[a]) for a in target if a in z and z[a] != 0))


# ------------------------------------------------- conjugation polynomials

@dataclass
class ConjPolyTable:
    psi: tuple[Root, ...]
    order: tuple[Root, ...]
    P: list[list[Any]]  # P[i][j], entries of ``ring``
    ring: Any
    gens: tuple

    def is_triangular(self) -> bool:
        m = len(self.psi)
        return all(self.P[i][j] == 0 for i in range(m) for j in range(i + 1, m)) and all(
            self.P[i][i] == 1 for i in range(m)
        )

    def evaluate(self, xs: Sequence) -> list[list[Any]]:
        return [[p(*xs) if p != 0 else 0 for p in row] for row in self.P]


def conjugation_polynomials(sc: StructureConstants, psi: RootSubset, order: Sequence[Sequence[int]] | None = None) -> ConjPolyTable:
    """Triangular table P_{i,j} built by the induction over N = 1..M.

    With u = theta_{a_M}(x_M) ... theta_{a_1}(x_1) and v = prod theta_{a_i}(y_i)
    over Psi, the table satisfies u v u^-1 = prod_j theta_{a_j}(sum_i P_{i,j}(x) y_i).
    """
    rs = sc.rs
    flags = check_conditions(psi)
    if not (flags["C1"] and flags["C2"]):
        raise ValueError("Psi must satisfy C1 and C2")
    order = tuple(tuple(a) for a in order) if order is not None else extend_numbering(psi)
    m = len(psi)
    head = order[:m]
    if set(head) != psi.as_set or sorted(order) != sorted(rs.positive_roots):
        raise ValueError("numbering must list Psi first and then the remaining positive roots")
    if not satisfies_c3(rs, head):
        raise ValueError("numbering of Psi violates C3")
    M = len(order)
    R, *X = ring(",".join(f"X{k + 1}" for k in range(M)), ZZ)
    pos = {a: k for k, a in enumerate(head)}
    P = [[R(int(i == j)) for j in range(m)] for i in range(m)]
    for N in range(M):
        aN = order[N]
        new = [row[:] for row in P]
        for j, aj in enumerate(head):
            for r in range(1, 4):
                al = add(aj, scale(-r, aN))
                if al in pos:
                    l = pos[al]
                    c = sc.c(aN, al, r, 1)
                    if c:
                        for i in range(m):
                            new[i][j] += c * P[i][l] * X[N] ** r
        P = new
    return ConjPolyTable(head, order, P, R, tuple(X))


def conjugate_via_table(table: ConjPolyTable, xs: Sequence, ys: Sequence) -> list:
    """Coordinates sum_i P_{i,j}(x) y_i for j = 1..m."""
    vals = table.evaluate(xs)
    m = len(table.psi)
    return [sum((vals[i][j] * ys[i] for i in range(m)), 0 * ys[0] if m else 0) for j in range(m)]

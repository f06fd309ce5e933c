"""Exact geometry of the standard apartment.

Points are rational vectors in fundamental-coweight coordinates, so a root
a (integer vector on the simple roots) takes the value a(x) = sum a_i x_i.
Walls are the hyperplanes a = k for a in Phi and k in Z; special vertices
are exactly the integer points.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import ceil, floor
from typing import Iterable, Sequence

from . import _exact
from .rootsys import Root, RootSystem, WeylWord, root_value, weyl_group

Point = tuple[Fraction, ...]


def point(coords: Iterable) -> Point:
    return tuple(Fraction(c) for c in coords)


def parse_point(text: str) -> Point:
    return point(Fraction(c.strip()) for c in text.split(",") if c.strip())


def is_special(rs: RootSystem, x: Sequence) -> bool:
    return all(Fraction(c).denominator == 1 for c in x)


def local_roots(rs: RootSystem, x: Sequence) -> set[Root]:
    """Roots a with a(x) an integer, i.e. the walls through x."""
    return {a for a in rs.roots if root_value(a, x).denominator == 1}


def theta_split(rs: RootSystem, theta: Iterable[int]) -> tuple[list[Root], list[Root]]:
    """(Phi_Theta^+, Phi_Theta^0): positive roots outside the span of Theta,
    and all roots inside it."""
    th = set(theta)
    plus = [a for a in rs.positive_roots if any(a[i] for i in range(rs.rank) if i not in th)]
    zero = [a for a in rs.roots if all(a[i] == 0 for i in range(rs.rank) if i not in th)]
    return plus, zero


def in_sector(rs: RootSystem, tip: Sequence, theta: Iterable[int], z: Sequence, closed: bool = False) -> bool:
    """z in Q(tip, D_0^Theta), or in its topological closure when ``closed``."""
    th = set(theta)
    for i in range(rs.rank):
        d = Fraction(z[i]) - Fraction(tip[i])
        if i in th:
            if d != 0:
                return False
        elif d < 0 or (d == 0 and not closed):
            return False
    return True


@dataclass(frozen=True)
class EnclosedRegion:
    """Intersection of the half-apartments a >= r_a over the listed roots."""

    rs: RootSystem
    thresholds: dict

    def __contains__(self, z) -> bool:
        return all(root_value(a, z) >= r for a, r in self.thresholds.items())

    def as_inequalities(self) -> tuple[list[list[int]], list[int]]:
        """(M, b) with the region equal to {z : M z <= b}."""
        rows = sorted(self.thresholds)
        return [[-c for c in a] for a in rows], [-self.thresholds[a] for a in rows]

    def vertices(self) -> list[Point]:
        M, b = self.as_inequalities()
        return polytope_vertices(M, b)

    def normalized(self) -> "EnclosedRegion":
        """Tightest integer thresholds for the same (bounded) region."""
        vs = self.vertices()
        return EnclosedRegion(self.rs, {a: floor(min(root_value(a, v) for v in vs)) for a in self.rs.roots})

    def to_json(self) -> dict:
        return {",".join(map(str, a)): r for a, r in sorted(self.thresholds.items())}


def enclosure(rs: RootSystem, points: Iterable[Sequence]) -> EnclosedRegion:
    pts = [point(p) for p in points]
    if not pts:
        raise ValueError("enclosure of an empty set")
    return EnclosedRegion(rs, {a: floor(min(root_value(a, p) for p in pts)) for a in rs.roots})


def sector_enclosure(rs: RootSystem, x: Sequence, theta: Iterable[int]) -> EnclosedRegion:
    """Enclosure of the sector face Q(x, D_0^Theta).

    Roots of Phi_Theta^+ are bounded below by floor a(x); roots in the span
    of Theta are constant on the face; the remaining roots are unbounded.
    """
    plus, zero = theta_split(rs, theta)
    x = point(x)
    return EnclosedRegion(rs, {a: floor(root_value(a, x)) for a in plus + zero})


# ------------------------------------------------------------ subsectors

def subsector_tip(rs: RootSystem, w0: Sequence, theta: Iterable[int], thresholds: dict, integral: bool = False) -> Point:
    """Tip w1 = w0 + v* with a(v) > n_a on Q(w1, D_0^Theta) for every a in the map.

    n*_b is the least admissible value: the least integer above max(m_b, 0)
    (so always an integer, which part (2) of the construction needs).
    """
    th = set(theta)
    w0 = point(w0)
    _, zero = theta_split(rs, th)
    zero = set(zero)
    psi = {tuple(a): Fraction(n) for a, n in thresholds.items()}
    for a in psi:
        if a in zero or not rs.is_positive(a):
            raise ValueError(f"{a} is not in Phi_Theta^+")
    c = {a: sum(a[i] for i in range(rs.rank) if i not in th and a[i]) for a in psi}
    nstar = []
    for b in range(rs.rank):
        if b in th:
            nstar.append(Fraction(0))
            continue
        vals = [(psi[a] - root_value(a, w0)) / c[a] for a in psi if a[b] > 0]
        m = max(vals) if vals else None
        lo = max(m, Fraction(0)) if m is not None else Fraction(0)
        nstar.append(Fraction(floor(lo) + 1))
    return tuple(w + n for w, n in zip(w0, nstar))


def subsector_special(rs: RootSystem, w0: Sequence, theta: Iterable[int], w1: Sequence) -> Point:
    """Special w2 in Q(w1, D_0^Theta) whose enclosed sector face sits inside Q(w1, D_0^Theta)."""
    if not is_special(rs, w0):
        raise ValueError("w0 must be a special vertex")
    plus, _ = theta_split(rs, theta)
    w1 = point(w1)
    return subsector_tip(rs, w0, theta, {a: root_value(a, w1) for a in plus})


def corner_set(rs: RootSystem, x: Sequence, theta: Iterable[int]) -> list[Point]:
    """Minimal special vertices of the enclosure of Q(x, D_0^Theta).

    omega' <= omega when omega lies in the closed face from omega'.
    Theta coordinates are pinned between floor and ceil of a(x); free
    coordinates run from floor(x_i) up to the largest value any minimal
    element can take, which is where every constraint through that
    coordinate already holds with the other free coordinates at their floor.
    """
    th = sorted(set(theta))
    x = point(x)
    region = sector_enclosure(rs, x, th)
    free = [i for i in range(rs.rank) if i not in th]
    lo = {i: floor(x[i]) for i in free}
    out: list[Point] = []
    for tvals in product(*[range(floor(x[i]), ceil(x[i]) + 1) for i in th]):
        base = {i: v for i, v in zip(th, tvals)}
        hi = {}
        for i in free:
            top = lo[i]
            for a, r in region.thresholds.items():
                if a[i] > 0 and all(a[j] >= 0 for j in range(rs.rank)):
                    rest = sum(a[j] * (base[j] if j in base else lo[j]) for j in range(rs.rank) if j != i)
                    top = max(top, ceil(Fraction(r - rest, a[i])))
            hi[i] = top
        cands = []
        for fv in product(*[range(lo[i], hi[i] + 1) for i in free]):
            z = [0] * rs.rank
            for i, v in base.items():
                z[i] = v
            for i, v in zip(free, fv):
                z[i] = v
            if z in region:
                cands.append(tuple(z))
        for z in cands:
            if not any(w != z and all(w[i] <= z[i] for i in free) for w in cands):
                out.append(point(z))
    return sorted(out)


# ---------------------------------------------------------------- polytopes

def polytope_denominator(M: Sequence[Sequence[int]]) -> int:
    """lcm of |det| over nonsingular n x n row submatrices (1 if rank < n)."""
    rows = [tuple(int(c) for c in r) for r in M]
    if not rows:
        return 1
    n = len(rows[0])
    uniq = sorted({r if r >= tuple(-c for c in r) else tuple(-c for c in r) for r in rows})
    d = 1
    for sub in combinations(uniq, n):
        dt = _exact.det_int(sub)
        if dt:
            d = _exact.lcm(d, dt)
    return d


def polytope_vertices(M: Sequence[Sequence[int]], b: Sequence[int]) -> list[Point]:
    """Vertices of {z : M z <= b} by solving every n x n subsystem."""
    if not M:
        return []
    n = len(M[0])
    found = set()
    for idx in combinations(range(len(M)), n):
        sub = [M[i] for i in idx]
        if _exact.det_int(sub) == 0:
            continue
        z = _exact.solve(sub, [b[i] for i in idx])
        if all(sum(Fraction(c) * v for c, v in zip(row, z)) <= bi for row, bi in zip(M, b)):
            found.add(tuple(z))
    return sorted(found)


# ------------------------------------------------------ affine Weyl fixed points

def _fixed_system(rs: RootSystem, w: WeylWord) -> list[list[int]]:
    n = rs.rank
    wm = [[w.matrix[i][j] - int(i == j) for j in range(n)] for i in range(n)]
    return wm + [[-c for c in r] for r in wm] + [[-c for c in a] for a in rs.roots]


@lru_cache(maxsize=None)
def weyl_denominator(rs: RootSystem) -> int:
    """e = lcm of d_w over W, d_w the denominator bound of the fixed-point polytope system."""
    return _exact.lcm(*(polytope_denominator(_fixed_system(rs, w)) for w in weyl_group(rs)))


def _vertex_by_pivoting(eqs: list[list[Fraction]], ineqs: list[tuple[Sequence[int], Fraction]], start: Point) -> Point:
    """Walk from a feasible point to a vertex of {E y = const, a.y >= r}.

    Each step moves along a direction killing E and every tight inequality
    until a new inequality becomes tight; boundedness guarantees a hit.
    """
    y = list(start)
    n = len(y)
    while True:
        tight = [list(a) for a, r in ineqs if sum(c * v for c, v in zip(a, y)) == r]
        dirs = _exact.nullspace(eqs + tight, n)
        if not dirs:
            return tuple(y)
        d = dirs[0]
        best = None
        for sign in (1, -1):
            for a, r in ineqs:
                ad = sign * sum(c * v for c, v in zip(a, d))
                if ad < 0:
                    step = (sum(c * v for c, v in zip(a, y)) - r) / -ad
                    if best is None or step < best[0]:
                        best = (step, sign)
            if best is not None:
                break
        if best is None:
            raise ValueError("fixed-point polytope is unbounded")
        step, sign = best
        y = [v + sign * step * dv for v, dv in zip(y, d)]


def normalize_fixed_point(rs: RootSystem, w: WeylWord, v: Sequence[int], x: Sequence) -> tuple[Point, int]:
    """z in Fix(w) with x + z a vertex of {y in cl({x}) : w y + v = y}.

    Returns (z, e); x + z has coordinates in (1/e) Z.
    """
    x = point(x)
    n = rs.rank
    wx = [sum(w.matrix[i][j] * x[j] for j in range(n)) + v[i] for i in range(n)]
    if tuple(wx) != x:
        raise ValueError("x is not fixed by (w, v)")
    eqs = [[Fraction(w.matrix[i][j] - int(i == j)) for j in range(n)] for i in range(n)]
    ineqs = [(a, Fraction(floor(root_value(a, x)))) for a in rs.roots]
    y = _vertex_by_pivoting(eqs, ineqs, x)
    return tuple(a - b for a, b in zip(y, x)), weyl_denominator(rs)

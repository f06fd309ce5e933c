"""Crystallographic root systems in the simple-root basis.

Roots are integer tuples of coordinates on the simple roots, numbered as in
Bourbaki's plates.  All pairings come from a symmetric integer form on the
simple roots, so nothing here touches floating point.

>>> rs = build_root_system("G", 2)
>>> len(rs.roots), len(rs.positive_roots)
(12, 6)
>>> highest_root(rs)
(3, 2)
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import _exact

Root = tuple[int, ...]

VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 3,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def _dynkin(family: str, rank: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Half squared lengths of the simple roots and the Dynkin edges (0-based)."""
    chain = [(i, i + 1) for i in range(rank - 1)]
    if family == "A":
        return [1] * rank, chain
    if family == "B":
        return [2] * (rank - 1) + [1], chain
    if family == "C":
        return [1] * (rank - 1) + [2], chain
    if family == "D":
        return [1] * rank, [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    if family == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, rank - 1)]
        return [1] * rank, edges
    if family == "F":
        return [2, 2, 1, 1], chain
    if family == "G":
        return [1, 3], chain
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class RootSystem:
    """A (possibly reducible) reduced root system.

    ``form[i][j]`` is the symmetric pairing (alpha_i, alpha_j) on simple
    roots; the Cartan matrix is ``cartan[i][j] = <alpha_i^vee, alpha_j>``.
    """

    type_list: tuple[tuple[str, int], ...]
    form: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    components: tuple[tuple[int, ...], ...]  # simple-root indices per component
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.form)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(neg(a) for a in self.positive_roots)

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    @cached_property
    def positive_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        f = self.form
        n = self.rank
        return tuple(tuple(2 * f[i][j] // f[i][i] for j in range(n)) for i in range(n))

    @cached_property
    def coweight_basis(self) -> list[list[Fraction]]:
        """Row i expresses the fundamental coweight varpi_i on the simple coroots."""
        return _exact.inverse(self.cartan)

    @property
    def name(self) -> str:
        return "x".join(f"{f}{r}" for f, r in self.type_list)

    def __contains__(self, a) -> bool:
        return tuple(a) in self.root_set

    def inner(self, a: Sequence, b: Sequence) -> Fraction | int:
        f = self.form
        return sum(a[i] * f[i][j] * b[j] for i in range(self.rank) if a[i] for j in range(self.rank) if b[j])

    def pairing(self, beta: Sequence, alpha: Sequence) -> int:
        """<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)."""
        num = 2 * self.inner(beta, alpha)
        den = self.inner(alpha, alpha)
        if num % den:
            raise ValueError("pairing is not integral")
        return num // den

    def is_positive(self, a: Sequence) -> bool:
        return tuple(a) in self.positive_set

    def height(self, a: Sequence) -> int:
        return sum(a)

    def reflect(self, alpha: Sequence, v: Sequence) -> tuple:
        """r_alpha applied to a vector in the simple-root basis."""
        c = 2 * self.inner(v, alpha) / Fraction(self.inner(alpha, alpha))
        out = tuple(x - c * a for x, a in zip(v, alpha))
        return tuple(int(x) if Fraction(x).denominator == 1 else x for x in out)

    def coroot_coweight_coords(self, alpha: Sequence) -> tuple[int, ...]:
        """alpha^vee as a vector in fundamental coweight coordinates."""
        return tuple(self.pairing(s, alpha) for s in self.simple_roots)

    def simple_reflection_coweight(self, i: int) -> list[list[int]]:
        """Matrix of r_{alpha_i} on coweight coordinates: x -> x - x_i alpha_i^vee."""
        n = self.rank
        cr = self.cartan[i]
        return [[int(r == c) - (cr[r] if c == i else 0) for c in range(n)] for r in range(n)]

    def index(self, a: Sequence) -> int:
        """Position of a positive root in ``positive_roots``."""
        if not self._index:
            self._index.update({r: k for k, r in enumerate(self.positive_roots)})
        return self._index[tuple(a)]

    def component_of(self, a: Sequence) -> int:
        for k, comp in enumerate(self.components):
            if any(a[i] for i in comp):
                return k
        raise ValueError("zero vector")

    def fundamental_weight(self, i: int) -> tuple[Fraction, ...]:
        """varpi_i as a vector in the simple-root basis (so <varpi_i, alpha_j^vee> = delta)."""
        # <sum_k c_k alpha_k, alpha_j^vee> = sum_k A[j][k] c_k, so solve A c = e_i
        e = [int(j == i) for j in range(self.rank)]
        return tuple(_exact.solve([list(r) for r in self.cartan], e))

    def to_json(self) -> dict:
        fam = self.type_list[0][0] if len(self.type_list) == 1 else self.name
        return {
            "family": fam,
            "rank": self.rank,
            "simple_roots": [list(a) for a in self.simple_roots],
            "positive_roots": [list(a) for a in self.positive_roots],
            "cartan": [list(r) for r in self.cartan],
        }


def neg(a: Sequence[int]) -> Root:
    return tuple(-x for x in a)


def add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def scale(k, a: Sequence) -> tuple:
    return tuple(k * x for x in a)


def _positive_roots(form: list[list[int]]) -> list[Root]:
    """Generate positive roots by simple-root strings, layer by height."""
    n = len(form)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]

    def ip(a, b):
        return sum(a[i] * form[i][j] * b[j] for i in range(n) for j in range(n))

    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for b in layer:
            for i, a in enumerate(simple):
                p = 0
                while tuple(x - (p + 1) * y for x, y in zip(b, a)) in found:
                    p += 1
                q = p - 2 * ip(b, a) // ip(a, a)
                c = tuple(x + y for x, y in zip(b, a))
                if q > 0 and c not in found:
                    found.add(c)
                    nxt.append(c)
        layer = nxt
    return sorted(found, key=lambda r: (sum(r), tuple(-x for x in r)))


def from_types(types: Iterable[tuple[str, int]]) -> RootSystem:
    types = tuple((f.upper(), int(r)) for f, r in types)
    if not types:
        raise ValueError("empty type list")
    total = 0
    blocks = []
    for fam, r in types:
        if fam not in VALID_RANKS or not VALID_RANKS[fam](r):
            raise ValueError(f"invalid root system type {fam}{r}")
        blocks.append((fam, r, total))
        total += r
    form = [[0] * total for _ in range(total)]
    comps = []
    for fam, r, off in blocks:
        d, edges = _dynkin(fam, r)
        for i in range(r):
            form[off + i][off + i] = 2 * d[i]
        for i, j in edges:
            v = -max(d[i], d[j])
            form[off + i][off + j] = form[off + j][off + i] = v
        comps.append(tuple(range(off, off + r)))
    pos = _positive_roots(form)
    return RootSystem(types, tuple(tuple(r) for r in form), tuple(pos), tuple(comps))


def build_root_system(family: str, rank: int) -> RootSystem:
    """Irreducible root system of the given Bourbaki type."""
    return from_types([(family, rank)])


def parse_type(spec: str) -> RootSystem:
    """Parse names such as ``"G2"``, ``"B2xA1"`` or ``"B2 A1"``."""
    parts = re.findall(r"([A-Ga-g])\s*(\d+)", spec)
    rest = re.sub(r"[A-Ga-g]\s*\d+|[x\s,*]", "", spec)
    if not parts or rest:
        raise ValueError(f"cannot parse root system type {spec!r}")
    return from_types([(f, int(r)) for f, r in parts])


def highest_root(rs: RootSystem, component: int = 0) -> Root:
    comp = rs.components[component]
    cands = [a for a in rs.positive_roots if all(a[i] == 0 for i in range(rs.rank) if i not in comp)]
    return max(cands, key=sum)


def root_string(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> tuple[int, int]:
    """(p, q) with beta - p alpha, ..., beta + q alpha the alpha-string through beta."""
    alpha, beta = tuple(alpha), tuple(beta)
    if alpha == beta or alpha == neg(beta):
        raise ValueError("root_string needs alpha != +-beta")
    p = 0
    while add(beta, scale(-(p + 1), alpha)) in rs.root_set:
        p += 1
    q = 0
    while add(beta, scale(q + 1, alpha)) in rs.root_set:
        q += 1
    return p, q


@dataclass(frozen=True)
class WeylWord:
    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]  # action on coweight coordinates


def weyl_word(rs: RootSystem, word: Sequence[int]) -> WeylWord:
    n = rs.rank
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in word:
        m = _exact.matmul(m, rs.simple_reflection_coweight(i))
    return WeylWord(tuple(word), tuple(tuple(int(x) for x in r) for r in m))


def weyl_group(rs: RootSystem, limit: int = 100_000) -> list[WeylWord]:
    """All elements of W as shortest words (breadth-first), for small ranks."""
    n = rs.rank
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    gens = [rs.simple_reflection_coweight(i) for i in range(n)]
    seen = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for i, g in enumerate(gens):
                p = tuple(tuple(int(x) for x in r) for r in _exact.matmul(m, g))
                if p not in seen:
                    seen[p] = seen[m] + (i,)
                    nxt.append(p)
                    if len(seen) > limit:
                        raise ValueError("Weyl group too large for enumeration")
        frontier = nxt
    return [WeylWord(w, m) for m, w in seen.items()]


def weyl_orbit(rs: RootSystem, generators: Iterable[int], v: Sequence, space: str = "root") -> set[tuple]:
    """Orbit of v under the reflections in ``generators`` (simple-root indices).

    ``space="root"`` acts on the simple-root basis; ``space="coweight"``
    acts on fundamental-coweight coordinates.
    """
    gens = list(generators)
    start = tuple(Fraction(x) for x in v)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for i in gens:
            if space == "root":
                c = sum(x[k] * rs.cartan[i][k] for k in range(rs.rank))
                y = tuple(x[k] - (c if k == i else 0) for k in range(rs.rank))
            else:
                y = tuple(x[k] - x[i] * rs.cartan[i][k] for k in range(rs.rank))
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return {tuple(int(c) if c.denominator == 1 else c for c in x) for x in seen}


def root_value(alpha: Sequence[int], x: Sequence) -> Fraction:
    """alpha(x) for x in fundamental-coweight coordinates."""
    return sum((Fraction(a) * Fraction(c) for a, c in zip(alpha, x)), Fraction(0))

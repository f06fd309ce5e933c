"""Subsets of positive roots: the closure and commutativity conditions,
the sets Psi(Theta) cut out by the highest root, their increasing flags,
and explicit linearly independent bases for every irreducible type.

Conditions, for Psi inside the positive roots:

* C0: Psi is closed under addition inside Phi.
* C1: a + b in Phi with a positive and b in Psi forces a + b in Psi.
* C2: no sum of two elements of Psi is a root.
* C1', C2': the same with r a + s b for all r, s >= 1.
* C1'': like C1' but additionally only s = 1 may occur.
* C3 (a property of a numbering): a_i < a_j in the root poset implies i > j.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import _exact
from .rootsys import Root, RootSystem, add, highest_root, scale


@dataclass(frozen=True)
class RootSubset:
    rs: RootSystem
    elements: tuple[Root, ...]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate roots in subset")
        for a in self.elements:
            if not self.rs.is_positive(a):
                raise ValueError(f"{a} is not a positive root")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return tuple(a) in set(self.elements)

    @property
    def as_set(self) -> frozenset[Root]:
        return frozenset(self.elements)

    @property
    def flags(self) -> dict[str, bool]:
        return check_conditions(self)

    @property
    def numbering_ok(self) -> bool:
        return satisfies_c3(self.rs, self.elements)


def subset(rs: RootSystem, roots: Iterable[Sequence[int]]) -> RootSubset:
    return RootSubset(rs, tuple(tuple(a) for a in roots))


def _max_mult(rs: RootSystem) -> int:
    # r a + s b with r or s above 3 is never a root in a reduced system
    return 3


def check_conditions(psi: RootSubset) -> dict[str, bool]:
    """Evaluate every condition by direct quantification over the roots."""
    rs = psi.rs
    roots = rs.root_set
    S = psi.as_set
    pos = rs.positive_roots
    k = _max_mult(rs)
    c0 = all(add(a, b) not in roots or add(a, b) in S for a in S for b in S)
    c1 = all(add(a, b) not in roots or add(a, b) in S for a in pos for b in S)
    c2 = all(add(a, b) not in roots for a in S for b in S)
    c1p = c1pp = True
    for a in pos:
        for b in S:
            for r in range(1, k + 1):
                for s in range(1, k + 1):
                    v = add(scale(r, a), scale(s, b))
                    if v in roots:
                        if v not in S:
                            c1p = c1pp = False
                        elif s != 1:
                            c1pp = False
    c2p = all(
        add(scale(r, a), scale(s, b)) not in roots
        for a in S for b in S for r in range(1, k + 1) for s in range(1, k + 1)
    )
    return {"C0": c0, "C1": c1, "C2": c2, "C1'": c1p, "C2'": c2p, "C1''": c1pp}


def _theta_set(rs: RootSystem, theta: Iterable[int]) -> frozenset[int]:
    th = frozenset(int(i) for i in theta)
    if any(i < 0 or i >= rs.rank for i in th):
        raise ValueError("Theta must index simple roots")
    return th


def psi_theta(rs: RootSystem, theta: Iterable[int], component: int = 0) -> RootSubset:
    """Roots agreeing with the highest root on every simple root outside Theta.

    For reducible systems the construction runs inside one irreducible
    component (``component``), with Theta restricted to it.
    """
    th = _theta_set(rs, theta)
    comp = rs.components[component]
    free = [i for i in comp if i not in th]
    if not free:
        raise ValueError("Theta contains the whole component: Psi(Theta) is not defined")
    h = highest_root(rs, component)
    out = [a for a in rs.positive_roots if rs.component_of(a) == component and all(a[i] == h[i] for i in free)]
    return RootSubset(rs, tuple(out))


def _component_flag(rs: RootSystem, th: frozenset[int], component: int) -> list[RootSubset]:
    comp = rs.components[component]
    cur = set(th) & set(comp)
    missing = [i for i in comp if i not in cur]
    if not missing:
        return []
    flag = [psi_theta(rs, cur, component)]
    while len([i for i in comp if i not in cur]) > 1:
        base = flag[-1].as_set
        for i in comp:
            if i in cur:
                continue
            nxt = psi_theta(rs, cur | {i}, component)
            if nxt.as_set > base:
                cur.add(i)
                flag.append(nxt)
                break
        else:  # pragma: no cover - excluded by the strict enlargement property
            raise RuntimeError("no enlarging simple root found")
    return flag


def psi_flag(rs: RootSystem, theta: Iterable[int]) -> list[RootSubset]:
    """Increasing sequence Psi_1 < ... < Psi_m, concatenated over components."""
    th = _theta_set(rs, theta)
    out: list[RootSubset] = []
    done: tuple[Root, ...] = ()
    for c in range(len(rs.components)):
        cflag = _component_flag(rs, th, c)
        for s in cflag:
            out.append(RootSubset(rs, done + s.elements))
        if cflag:
            done = done + cflag[-1].elements
    return out


def restricted_dim(rs: RootSystem, theta: Iterable[int], roots: Iterable[Sequence[int]]) -> int:
    """dim of the span of the roots restricted to the orthogonal of Theta."""
    th = sorted(_theta_set(rs, theta))
    rows = [list(a) for a in roots]
    basis = [list(rs.simple_roots[i]) for i in th]
    return _exact.rank(rows + basis) - len(basis)


def _basis_irreducible(family: str, l: int) -> list[list[int]]:
    def ones(lo, hi):  # alpha_lo + ... + alpha_hi, 1-based inclusive
        return [int(lo <= k + 1 <= hi) for k in range(l)]

    def plus(*vs):
        return [sum(t) for t in zip(*vs)]

    if family == "A":
        return [ones(i, l) for i in range(1, l + 1)]
    if family == "B":
        return [plus(ones(1, l), ones(i, l)) for i in range(2, l + 2)]
    if family == "C":
        return [plus(ones(1, l), ones(i, l - 1)) for i in range(1, l + 1)]
    if family == "D":
        out = [ones(1, l - 1)]
        out += [plus(ones(1, l), ones(i, l - 2)) for i in range(2, l)]
        out.append(plus(ones(1, l - 2), ones(l, l)))
        return out
    tables = {
        ("E", 6): ["011221", "112211", "111221", "112221", "112321", "122321"],
        ("E", 7): ["1223211", "1123321", "1223221", "1223321", "1224321", "1234321", "2234321"],
        ("E", 8): ["23354321", "22454321", "23454321", "23464321", "23465321", "23465421",
                   "23465431", "23465432"],
        ("F", 4): ["1232", "1242", "1342", "2342"],
        ("G", 2): ["31", "32"],
    }
    return [[int(c) for c in s] for s in tables[(family, l)]]


def psi_basis(rs: RootSystem) -> RootSubset:
    """Explicit C1/C2 subset forming a basis of the root span, per component."""
    out: list[Root] = []
    for (fam, l), comp in zip(rs.type_list, rs.components):
        for v in _basis_irreducible(fam, l):
            full = [0] * rs.rank
            for k, i in enumerate(comp):
                full[i] = v[k]
            out.append(tuple(full))
    return RootSubset(rs, tuple(out))


@lru_cache(maxsize=None)
def _poset_above(rs: RootSystem) -> dict[Root, frozenset[Root]]:
    """For each positive root b, the set of c with b < c (chains of simple additions)."""
    above: dict[Root, set[Root]] = {}
    for b in sorted(rs.positive_roots, key=sum, reverse=True):
        acc: set[Root] = set()
        for s in rs.simple_roots:
            c = add(b, s)
            if c in rs.positive_set:
                acc.add(c)
                acc |= above[c]
        above[b] = acc
    return {b: frozenset(v) for b, v in above.items()}


def root_less(rs: RootSystem, b: Sequence[int], c: Sequence[int]) -> bool:
    return tuple(c) in _poset_above(rs)[tuple(b)]


def satisfies_c3(rs: RootSystem, ordered: Sequence[Sequence[int]]) -> bool:
    ordered = [tuple(a) for a in ordered]
    return not any(root_less(rs, ordered[i], ordered[j]) for i in range(len(ordered)) for j in range(i + 1, len(ordered)))


def c3_numbering(psi: RootSubset) -> RootSubset:
    """Order by height descending, ties lexicographic on coordinates."""
    order = sorted(psi.elements, key=lambda a: (-sum(a), a))
    return RootSubset(psi.rs, tuple(order))


def extend_numbering(psi: RootSubset) -> tuple[Root, ...]:
    """C3 numbering of Psi followed by the other positive roots."""
    head = c3_numbering(psi).elements
    rest = tuple(a for a in psi.rs.positive_roots if a not in set(head))
    return head + rest


def is_weyl_stable(psi: RootSubset, theta: Iterable[int]) -> bool:
    S = psi.as_set
    rs = psi.rs
    return all(rs.reflect(rs.simple_roots[i], a) in S for i in theta for a in S)


def sign_constant_on_flag(rs: RootSystem, theta: Iterable[int], flag: Sequence[RootSubset], samples: int = 4) -> bool:
    """Check the constant-sign property of each new layer on (Theta u Psi_{i-1})-orthogonal points.

    Points z live in coweight coordinates; alpha(z) = sum alpha_k z_k.
    """
    th = sorted(_theta_set(rs, theta))
    prev: tuple[Root, ...] = ()
    for step in flag:
        rows = [list(rs.simple_roots[i]) for i in th] + [list(a) for a in prev]
        basis = _exact.nullspace(rows, rs.rank)
        new = [a for a in step.elements if a not in set(prev)]
        points = list(basis)
        for k in range(samples):  # a few deterministic combinations
            points.append([sum(Fraction((k + 1) * (j + 2) * (-1) ** (j + k), 1) * b[c] for j, b in enumerate(basis))
                           for c in range(rs.rank)])
        for z in points:
            vals = [sum(a[c] * z[c] for c in range(rs.rank)) for a in new]
            signs = {(v > 0) - (v < 0) for v in vals}
            if len(signs) > 1:
                return False
        prev = step.elements
    return True

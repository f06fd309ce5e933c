"""Independent second routes for values computed elsewhere in the package.

Nothing here is used by the main algorithms; these functions exist to
cross-check them.

* Type A: the group SL_{l+1} with theta_a(x) = I + eps_a x E_ij, where the
  signs eps_a align the matrix Chevalley basis with ours.
* Commutator constants from their closed formulas in N(a, b).
* Elliptic curve point counts by character sums instead of a double loop.
"""
from __future__ import annotations

from math import factorial
from typing import Sequence

from .ffield import GF
from .rootsys import Root, add, scale


# ------------------------------------------------------------ type A matrices

def root_pair(a: Sequence[int]) -> tuple[int, int]:
    """Positive root a_i + ... + a_{j-1} of A_l as the matrix position (i, j), 0-based."""
    nz = [k for k, c in enumerate(a) if c]
    if not nz or any(a[k] != 1 for k in nz) or nz != list(range(nz[0], nz[-1] + 1)):
        raise ValueError(f"{tuple(a)} is not a positive root of type A")
    return nz[0], nz[-1] + 1


def _n_matrix(a: Root, b: Root) -> int:
    """[E_a, E_b] = N E_{a+b} for the elementary matrices."""
    (i, j), (k, l) = root_pair(a), root_pair(b)
    if j == k:
        return 1
    if l == i:
        return -1
    return 0


def type_a_signs(sc) -> dict[Root, int]:
    """eps with eps_simple = 1 and N(a, b) = eps_a eps_b N_mat(a, b) / eps_{a+b} on positive roots."""
    rs = sc.rs
    if any(f != "A" for f, _ in rs.type_list) or len(rs.type_list) != 1:
        raise ValueError("type A only")
    eps: dict[Root, int] = {s: 1 for s in rs.simple_roots}
    for g in sorted(rs.positive_roots, key=sum):
        if g in eps:
            continue
        for s in rs.simple_roots:
            b = add(g, scale(-1, s))
            if b in eps:
                eps[g] = eps[s] * eps[b] * _n_matrix(s, b) * sc.n(s, b)
                break
    for a in rs.positive_roots:
        for b in rs.positive_roots:
            g = add(a, b)
            if g in eps and sc.n(a, b) != eps[a] * eps[b] * _n_matrix(a, b) * eps[g]:
                raise AssertionError("no consistent sign map")
    return eps


def _matmul(a, b, p):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)] for i in range(n)]


def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def theta_matrix(eps: dict[Root, int], a: Root, x: int, n: int, p: int) -> list[list[int]]:
    i, j = root_pair(a)
    m = _eye(n)
    m[i][j] = (eps[a] * x) % p
    return m


def word_matrix(eps: dict[Root, int], letters, n: int, p: int) -> list[list[int]]:
    out = _eye(n)
    for a, x in letters:
        out = _matmul(out, theta_matrix(eps, tuple(a), int(x), n, p), p)
    return out


def matrix_commutator(eps, a, x, b, y, n, p):
    g = theta_matrix(eps, a, x, n, p)
    h = theta_matrix(eps, b, y, n, p)
    gi = theta_matrix(eps, a, -x, n, p)
    hi = theta_matrix(eps, b, -y, n, p)
    return _matmul(_matmul(g, h, p), _matmul(gi, hi, p), p)


# ------------------------------------------------- closed-form constants

def closed_form_constant(sc, a: Root, b: Root, r: int, s: int):
    """c^{r,s}_{a,b} from N alone, or None when the formula does not give an integer."""
    def M(x, y, i):
        prod = 1
        for k in range(i):
            prod *= sc.n(x, add(scale(k, x), y))
        return prod // factorial(i) if prod % factorial(i) == 0 else None

    if s == 1:
        return M(a, b, r)
    if r == 1:
        m = M(b, a, s)
        return None if m is None else -m
    if (r, s) == (3, 2):
        # (2/3) M(a + b, a, 2)
        num = 2 * sc.n(add(a, b), a) * sc.n(add(a, b), add(scale(2, a), b))
        return num // 6 if num % 6 == 0 else None
    if (r, s) == (2, 3):
        # (1/3) M(a + b, b, 2)
        num = sc.n(add(a, b), b) * sc.n(add(a, b), add(a, scale(2, b)))
        return num // 6 if num % 6 == 0 else None
    return None


# ------------------------------------------------------------- point counts

def chi(F: GF, a: int) -> int:
    """Quadratic character of F_q, q odd."""
    if a == 0:
        return 0
    return 1 if F.is_square(a) else -1


def _trace_f2(F: GF, c: int) -> int:
    acc, x = 0, c
    for _ in range(F.e):
        acc = F.add(acc, x)
        x = F.mul(x, x)
    return acc


def point_count_by_characters(q: int, coeffs: Sequence[int]) -> int:
    """#E(F_q) counting the solutions in y for each x by a closed rule.

    Odd q: complete the square, 1 + chi(disc) solutions.
    Even q: y^2 + b y = c has 1 solution if b = 0, else 2 or 0 by the trace of c/b^2.
    """
    F = GF(q)
    a1, a2, a3, a4, a6 = (c % q if c >= 0 else F.neg(F.from_int(-c)) for c in coeffs)
    add, mul = F.add, F.mul
    total = 1
    for x in F.elements:
        x2 = mul(x, x)
        f = add(add(mul(x2, x), mul(a2, x2)), add(mul(a4, x), a6))
        b = add(mul(a1, x), a3)
        if F.p == 2:
            if b == 0:
                total += 1
            else:
                c = mul(f, F.inv(mul(b, b)))
                total += 2 if _trace_f2(F, c) == 0 else 0
        else:
            four = F.from_int(4)
            disc = add(mul(b, b), mul(four, f))
            total += 1 + chi(F, disc)
    return total

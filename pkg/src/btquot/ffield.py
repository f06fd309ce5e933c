"""Exact arithmetic over F_q, F_q[t] and F_q(t), with the valuation at infinity.

F_q is F_p[x] modulo the lexicographically least monic irreducible of
degree e; its elements are the integers 0..q-1 read as base-p digit
vectors (least significant digit = constant coefficient).

>>> F = GF(4)
>>> t = Poly.t(F)
>>> f = RationalFunction(t + 1, t * t)
>>> val_inf(f)
1
>>> rr_dim(0, 2, 0, 1)
3
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import inf
from typing import Iterable, Iterator, Sequence


def _is_prime(p: int) -> bool:
    return p > 1 and all(p % k for k in range(2, int(p ** 0.5) + 1))


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not _is_prime(p):
                break
            return p, e
    raise ValueError(f"{q} is not a prime power")


# ----------------------------------------------------------------- F_q

def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = a[:]
    while len(a) >= len(m):
        c = a[-1]
        if c:
            shift = len(a) - len(m)
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
    return a


def _least_irreducible(p: int, e: int) -> list[int]:
    """Monic irreducible of degree e over F_p, least in lexicographic order of
    the coefficient list read from the top."""
    if e == 1:
        return [0, 1]
    for tail in product(range(p), repeat=e):
        m = list(reversed(tail)) + [1]
        if m[0] == 0:
            continue
        # no factor of degree <= e/2
        ok = True
        for d in range(1, e // 2 + 1):
            for lower in product(range(p), repeat=d):
                f = list(lower) + [1]
                if not any(_pmod(m, f, p)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return m
    raise RuntimeError("no irreducible found")  # pragma: no cover


class GF:
    """The finite field with q elements, as lookup tables."""

    _cache: dict[int, "GF"] = {}

    def __new__(cls, q: int):
        if q in cls._cache:
            return cls._cache[q]
        self = super().__new__(cls)
        p, e = _prime_power(q)
        self.q, self.p, self.e = q, p, e
        self.modulus = tuple(_least_irreducible(p, e))

        def digits(a):
            return [(a // p ** i) % p for i in range(e)]

        def number(ds):
            return sum(d * p ** i for i, d in enumerate(ds))

        self._add = [[number([(x + y) % p for x, y in zip(digits(a), digits(b))]) for b in range(q)] for a in range(q)]
        self._neg = [number([(-x) % p for x in digits(a)]) for a in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                da, db = digits(a), digits(b)
                prod_ = [0] * (2 * e - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        prod_[i + j] = (prod_[i + j] + x * y) % p
                r = _pmod(prod_, list(self.modulus), p) if e > 1 else prod_
                r = (r + [0] * e)[:e]
                mul[a][b] = mul[b][a] = number(r)
        self._mul = mul
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = next(b for b in range(1, q) if mul[a][b] == 1)
        cls._cache[q] = self
        return self

    def __reduce__(self):
        return (GF, (self.q,))

    def __repr__(self):
        return f"GF({self.q})"

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF")
        return self._inv[a]

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_q."""
        return n % self.p

    @property
    def elements(self) -> range:
        return range(self.q)

    def is_square(self, a: int) -> bool:
        return any(self.mul(b, b) == a for b in range(self.q))


# -------------------------------------------------------------- F_q[t]

class Poly:
    """Polynomial in t over F_q; coefficients low degree first, trimmed."""

    __slots__ = ("F", "c")

    def __init__(self, F: GF, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.F = F
        self.c = tuple(c)

    @classmethod
    def t(cls, F: GF) -> "Poly":
        return cls(F, (0, 1))

    @classmethod
    def const(cls, F: GF, a: int) -> "Poly":
        return cls(F, (a,))

    @classmethod
    def monomial(cls, F: GF, a: int, k: int) -> "Poly":
        return cls(F, [0] * k + [a])

    @property
    def degree(self) -> float:
        return len(self.c) - 1 if self.c else -inf

    @property
    def lead(self) -> int:
        return self.c[-1] if self.c else 0

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.F, other)
        return isinstance(other, Poly) and self.c == other.c and self.F is other.F

    def __hash__(self):
        return hash((self.F.q, self.c))

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for k, a in reversed(list(enumerate(self.c))):
            if a == 0:
                continue
            mon = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mon:
                terms.append(str(a))
            elif a == 1:
                terms.append(mon)
            else:
                terms.append(f"{a}*{mon}")
        return " + ".join(terms)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(self.F, self.F.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        F = self.F
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        return Poly(F, [F.add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.F, [self.F.neg(x) for x in self.c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        F = self.F
        if not self.c or not other.c:
            return Poly(F)
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(self.F, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, a: int) -> "Poly":
        return Poly(self.F, [self.F.mul(a, x) for x in self.c])

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k (k >= 0)."""
        return Poly(self.F, [0] * k + list(self.c)) if self.c else self

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.F
        r = list(self.c)
        dq = len(r) - len(other.c) + 1
        if dq <= 0:
            return Poly(F), self
        q = [0] * dq
        inv = F.inv(other.c[-1])
        for k in range(dq - 1, -1, -1):
            coef = F.mul(r[k + len(other.c) - 1], inv)
            q[k] = coef
            if coef:
                for i, y in enumerate(other.c):
                    r[k + i] = F.sub(r[k + i], F.mul(coef, y))
        return Poly(F, q), Poly(F, r[: len(other.c) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        return self.scale(self.F.inv(self.lead)) if self.c else self

    def __call__(self, x: int) -> int:
        F = self.F
        acc = 0
        for a in reversed(self.c):
            acc = F.add(F.mul(acc, x), a)
        return acc

    def valuation_t(self) -> float:
        """Order of vanishing at t = 0."""
        for k, a in enumerate(self.c):
            if a:
                return k
        return inf


def pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic()


def plcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return Poly(a.F)
    return (a * b // pgcd(a, b)).monic()


def polys_of_degree(F: GF, d: int, monic: bool = False) -> Iterator[Poly]:
    """All polynomials of exact degree d (d >= 0)."""
    leads = [1] if monic else range(1, F.q)
    for lead in leads:
        for lower in product(range(F.q), repeat=d):
            yield Poly(F, list(lower) + [lead])


def polys_up_to(F: GF, d: int) -> Iterator[Poly]:
    """All polynomials of degree <= d, zero included."""
    for cs in product(range(F.q), repeat=d + 1):
        yield Poly(F, cs)


@lru_cache(maxsize=None)
def irreducibles(q: int, d: int) -> tuple[Poly, ...]:
    """Monic irreducibles of degree d over F_q, by sieving products."""
    F = GF(q)
    reducible = set()
    for d1 in range(1, d // 2 + 1):
        for f in _monic_up(F, d1):
            for g in polys_of_degree(F, d - d1, monic=True):
                reducible.add((f * g).c)
    return tuple(f for f in polys_of_degree(F, d, monic=True) if f.c not in reducible)


def _monic_up(F: GF, d: int) -> Iterator[Poly]:
    return polys_of_degree(F, d, monic=True)


def factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicity, by trial division."""
    if not f:
        raise ValueError("cannot factor zero")
    out = []
    rest = f.monic()
    d = 1
    while rest.degree > 0:
        if 2 * d > rest.degree:
            out.append((rest, 1))
            break
        for p in irreducibles(f.F.q, d):
            k = 0
            while True:
                qt, r = divmod(rest, p)
                if r:
                    break
                rest, k = qt, k + 1
            if k:
                out.append((p, k))
        d += 1
    merged: dict = {}
    for p, k in out:
        merged[p] = merged.get(p, 0) + k
    return sorted(merged.items(), key=lambda pk: (pk[0].degree, pk[0].c))


def is_irreducible(f: Poly) -> bool:
    return f.degree >= 1 and all(f % g for d in range(1, int(f.degree) // 2 + 1) for g in polys_of_degree(f.F, d, True))


# -------------------------------------------------------------- F_q(t)

class RationalFunction:
    """num/den with gcd 1 and den monic; zero is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        F = num.F
        if den is None:
            den = Poly.const(F, 1)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = Poly(F), Poly.const(F, 1)
            return
        g = pgcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = F.inv(den.lead)
        self.num, self.den = num.scale(lead), den.scale(lead)

    @classmethod
    def const(cls, F: GF, a: int) -> "RationalFunction":
        return cls(Poly.const(F, a))

    @classmethod
    def t_power(cls, F: GF, k: int) -> "RationalFunction":
        one = Poly.const(F, 1)
        return cls(one.shift(k)) if k >= 0 else cls(one, one.shift(-k))

    @classmethod
    def laurent(cls, F: GF, coeffs: dict) -> "RationalFunction":
        """sum a_k t^k over a finite dict {k: a_k}."""
        if not coeffs:
            return cls(Poly(F))
        low = min(min(coeffs), 0)
        num = Poly(F, [coeffs.get(k + low, 0) for k in range(max(coeffs) - low + 1)])
        return cls(num, Poly.const(F, 1).shift(-low))

    @property
    def F(self) -> GF:
        return self.num.F

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, (int, Poly)):
            other = _rf(self.F, other)
        return isinstance(other, RationalFunction) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree == 0:
            return repr(self.num)
        return f"({self.num})/({self.den})"

    def __add__(self, other):
        other = _rf(self.F, other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_rf(self.F, other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _rf(self.F, other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * _rf(self.F, other).inverse()

    def __rtruediv__(self, other):
        return _rf(self.F, other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)


def _rf(F: GF, x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Poly):
        return RationalFunction(x)
    if isinstance(x, int):
        return RationalFunction.const(F, F.from_int(x))
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational function")


def val_inf(f) -> float:
    """Valuation at infinity, deg den - deg num (+inf for zero)."""
    if isinstance(f, Poly):
        return -f.degree if f else inf
    if not f.num:
        return inf
    return int(f.den.degree - f.num.degree)


# ------------------------------------------------------------ fractional ideals

class FracIdeal:
    """Nonzero fractional ideal of F_q[t], kept as a normalized generator.

    Normalized means num and den monic, so equal ideals have equal generators.
    """

    __slots__ = ("gen",)

    def __init__(self, gen):
        if isinstance(gen, (Poly, int)):
            raise TypeError("pass a RationalFunction (use FracIdeal.of)")
        if not gen:
            raise ValueError("the zero ideal is not a fractional ideal")
        self.gen = RationalFunction(gen.num.monic(), gen.den)

    @classmethod
    def of(cls, F: GF, x) -> "FracIdeal":
        return cls(_rf(F, x))

    @classmethod
    def unit(cls, F: GF) -> "FracIdeal":
        return cls(RationalFunction.const(F, 1))

    @property
    def F(self) -> GF:
        return self.gen.F

    @property
    def degree(self) -> int:
        """deg J = deg num - deg den of the generator, so deg (f) = deg_t f."""
        return int(self.gen.num.degree - self.gen.den.degree)

    def __eq__(self, other):
        return isinstance(other, FracIdeal) and self.gen == other.gen

    def __hash__(self):
        return hash(self.gen)

    def __repr__(self):
        return f"({self.gen})"

    def __add__(self, other: "FracIdeal") -> "FracIdeal":
        a, b = self.gen, other.gen
        return FracIdeal(RationalFunction(pgcd(a.num, b.num), plcm(a.den, b.den)))

    def __and__(self, other: "FracIdeal") -> "FracIdeal":
        a, b = self.gen, other.gen
        return FracIdeal(RationalFunction(plcm(a.num, b.num), pgcd(a.den, b.den)))

    intersection = __and__

    def __mul__(self, other):
        if isinstance(other, FracIdeal):
            return FracIdeal(self.gen * other.gen)
        return FracIdeal(self.gen * _rf(self.F, other))

    __rmul__ = __mul__

    def inverse(self) -> "FracIdeal":
        return FracIdeal(self.gen.inverse())

    def __contains__(self, x) -> bool:
        x = _rf(self.F, x)
        if not x:
            return True
        return (x / self.gen).is_polynomial()

    def __le__(self, other: "FracIdeal") -> bool:
        return self.gen in other

    def is_integral(self) -> bool:
        return self.gen.is_polynomial()

    def to_str(self) -> str:
        return repr(self.gen)


def ideal_sum(*ideals: FracIdeal) -> FracIdeal:
    out = ideals[0]
    for J in ideals[1:]:
        out = out + J
    return out


def ideal_intersection(*ideals: FracIdeal) -> FracIdeal:
    out = ideals[0]
    for J in ideals[1:]:
        out = out & J
    return out


# ------------------------------------------------------------- Riemann-Roch

def rr_dim(degJ: int, m: int, g: int, d: int) -> int:
    """-deg J + m d + 1 - g, valid once m d >= deg J + 2g - 1."""
    if g < 0 or d <= 0:
        raise ValueError("need g >= 0 and d >= 1")
    if m * d < degJ + 2 * g - 1:
        raise ValueError("outside the Riemann-Roch regime: m d < deg J + 2g - 1")
    return -degJ + m * d + 1 - g


def truncated_basis(J: FracIdeal, m: int) -> list[RationalFunction]:
    """Basis of J[m] = {x in J : val_inf(x) >= -m}: the g t^i with deg g + i <= m."""
    F = J.F
    top = m - J.degree
    return [J.gen * RationalFunction.t_power(F, i) for i in range(0, top + 1)]


def span_dim(F: GF, vectors: Sequence[Sequence[int]]) -> int:
    """Rank over F_q of integer-coded vectors."""
    rows = [list(v) for v in vectors if any(v)]
    r = 0
    if not rows:
        return 0
    ncols = len(rows[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def laurent_coeffs(x: RationalFunction, lo: int, hi: int) -> list[int] | None:
    """Coefficients of t^lo..t^hi when x is a Laurent polynomial supported there."""
    den = x.den
    k = int(den.degree)
    if den.c != (0,) * k + (1,):
        return None
    num = x.num
    out = [0] * (hi - lo + 1)
    for i, a in enumerate(num.c):
        e = i - k
        if a:
            if e < lo or e > hi:
                return None
            out[e - lo] = a
    return out


# --------------------------------------------------------- monomial bound

def ideal_factorization(J: FracIdeal) -> dict[Poly, int]:
    """Exponents of the monic primes in the generator of J."""
    out: dict[Poly, int] = {}
    if J.gen.num.degree > 0:
        for p, k in factor(J.gen.num):
            out[p] = out.get(p, 0) + k
    if J.gen.den.degree > 0:
        for p, k in factor(J.gen.den):
            out[p] = out.get(p, 0) - k
    return out


def monomial_bound(J: FracIdeal, z, n: int) -> FracIdeal:
    """q = prod p^ceil(a_p / n) where J (z)^-1 = prod p^a_p; z x^n in J forces x in q."""
    if n <= 0:
        raise ValueError("n must be positive")
    F = J.F
    z = _rf(F, z)
    if not z:
        raise ValueError("z must be nonzero")
    K = J * FracIdeal(z).inverse()
    gen = RationalFunction.const(F, 1)
    for p, a in ideal_factorization(K).items():
        e = -((-a) // n)
        gen = gen * RationalFunction(p) ** e
    return FracIdeal(gen)


# ---------------------------------------------------------------- matrices

Matrix = list[list[RationalFunction]]


def mat(F: GF, rows) -> Matrix:
    return [[_rf(F, x) for x in row] for row in rows]


def identity(F: GF, n: int) -> Matrix:
    return [[RationalFunction.const(F, int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    F = a[0][0].F
    out = []
    for row in a:
        new = []
        for col in zip(*b):
            acc = RationalFunction(Poly(F))
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def mat_det(a: Matrix) -> RationalFunction:
    m = [row[:] for row in a]
    n = len(m)
    F = m[0][0].F
    d = RationalFunction.const(F, 1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return RationalFunction(Poly(F))
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d = d * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def mat_inv(a: Matrix) -> Matrix:
    n = len(a)
    F = a[0][0].F
    m = [row[:] + identity(F, n)[i] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = m[c][c].inverse()
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def is_integral(a: Matrix) -> bool:
    """All entries in F_q[t]."""
    return all(x.is_polynomial() for row in a for x in row)

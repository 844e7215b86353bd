"""Exact elementary number theory: prime powers, integer polynomials,
cyclotomic polynomials, residue symbols and p-adic Newton polygons.

Everything here is pure integer/rational arithmetic; no floats anywhere.
Polynomials are dense coefficient tuples, constant term first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


# ---------------------------------------------------------------------------
# primes and factorization

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            return True
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs here are small)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def squarefree_part(d: int) -> int:
    """The squarefree integer with the same square class as d."""
    if d == 0:
        raise ValueError("0 has no square class")
    sign = -1 if d < 0 else 1
    out = 1
    for p, e in factorize(abs(d)).items():
        if e % 2:
            out *= p
    return sign * out


# ---------------------------------------------------------------------------
# prime powers

@dataclass(frozen=True)
class PrimePower:
    """A finite-field size q = p**n."""

    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.n < 1:
            raise ValueError("exponent must be >= 1")

    @property
    def q(self) -> int:
        return self.p ** self.n

    @property
    def degree_is_odd(self) -> bool:
        return self.n % 2 == 1

    @classmethod
    def from_q(cls, q: int) -> "PrimePower":
        fac = factorize(q)
        if len(fac) != 1:
            raise ValueError(f"{q} is not a prime power")
        ((p, n),) = fac.items()
        return cls(p, n)

    def __str__(self):
        return f"{self.p}^{self.n}" if self.n > 1 else str(self.p)


# ---------------------------------------------------------------------------
# integer polynomials

class IntPolynomial:
    """Dense integer polynomial, coefficients constant-term first.

    Immutable; the coefficient tuple never has a trailing zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def x_pow(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_roots_free(cls, *coeffs: int) -> "IntPolynomial":
        return cls(coeffs)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact polynomial division over Z; raises if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        if dq < 0:
            if self.is_zero():
                return IntPolynomial()
            raise ValueError("not divisible")
        quot = [0] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[other.degree + k]
            if c % lead:
                raise ValueError("not divisible over Z")
            q = c // lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[j + k] -= q * b
        if any(rem):
            raise ValueError("not divisible (nonzero remainder)")
        return IntPolynomial(quot)

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    # -- transforms --------------------------------------------------------

    def reciprocal(self) -> "IntPolynomial":
        """t^deg * f(1/t): coefficients reversed."""
        return IntPolynomial(self.coeffs[::-1])

    def scale_arg(self, c: int) -> "IntPolynomial":
        """f(c*t)."""
        return IntPolynomial([a * c ** i for i, a in enumerate(self.coeffs)])

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            a = self[i]
            if a == 0:
                continue
            if i == 0:
                term = str(abs(a))
            else:
                mag = "" if abs(a) == 1 else str(abs(a))
                term = f"{mag}t" if i == 1 else f"{mag}t^{i}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, term))
        sign0, term0 = parts[0]
        out = ("-" if sign0 == "-" else "") + term0
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    def __repr__(self):
        return f"IntPolynomial({self})"


# common short forms
ZERO = IntPolynomial()
ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])


# ---------------------------------------------------------------------------
# multiplicative functions

@lru_cache(maxsize=None)
def euler_phi(r: int) -> int:
    if r < 1:
        raise ValueError("euler_phi expects r >= 1")
    out = r
    for p in factorize(r):
        out = out // p * (p - 1)
    return out


@lru_cache(maxsize=None)
def moebius(r: int) -> int:
    if r < 1:
        raise ValueError("moebius expects r >= 1")
    fac = factorize(r)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=None)
def cyclotomic(r: int) -> IntPolynomial:
    """The r-th cyclotomic polynomial, by recursive exact division."""
    if r < 1:
        raise ValueError("cyclotomic expects r >= 1")
    f = IntPolynomial.x_pow(r) - ONE
    for d in divisors(r):
        if d < r:
            f = f.exact_div(cyclotomic(d))
    return f


def mult_order(a: int, m: int) -> int:
    """Least k >= 1 with a^k = 1 mod m."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1: no multiplicative order")
    if m == 1:
        return 1
    a %= m
    k, x = 1, a
    while x != 1:
        x = x * a % m
        k += 1
    return k


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    s = pow(a, (p - 1) // 2, p)
    return 1 if s == 1 else -1


def splitting_in_quadratic(p: int, d: int) -> str:
    """Decomposition of a prime p in Q(sqrt(d)): 'split', 'inert' or 'ramified'.

    At p = 2 this is decided by d mod 8, where Legendre is undefined.
    """
    d = squarefree_part(d)
    if d == 1:
        raise ValueError("Q(sqrt(1)) is not a quadratic field")
    if p == 2:
        r = d % 8
        if r == 1:
            return "split"
        if r == 5:
            return "inert"
        return "ramified"
    if d % p == 0:
        return "ramified"
    return "split" if legendre(d, p) == 1 else "inert"


def splitting_in_cyclotomic(p: int, m: int) -> tuple[int, int, int]:
    """(e, f, g) for the primes over p in Q(zeta_m).

    Unramified case p | m excluded: e = 1, f = ord_m(p), g = phi(m)/f.
    If p | m, write m = p^a * m' and e = phi(p^a), f = ord_{m'}(p).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = 0
    m1 = m
    while m1 % p == 0:
        m1 //= p
        a += 1
    e = euler_phi(p ** a) if a else 1
    f = mult_order(p, m1)
    g = euler_phi(m1) // f
    return e, f, g


def splitting_in_real_cyclotomic(p: int, m: int) -> tuple[int, int, int]:
    """(e, f, g) for p unramified in the totally real subfield of Q(zeta_m)."""
    if m % p == 0:
        raise ValueError("ramified case not supported for real cyclotomic fields")
    half = euler_phi(m) // 2
    k, x = 1, p % m
    while x != 1 and x != m - 1:
        x = x * p % m
        k += 1
    return 1, k, half // k


# ---------------------------------------------------------------------------
# Newton polygons

def newton_slopes(f: IntPolynomial, q: PrimePower) -> tuple[Fraction, ...]:
    """Slopes of the p-adic Newton polygon of f, normalized so v(q) = 1.

    Returns one entry per root (with multiplicity), sorted ascending.
    """
    if not f.is_monic():
        raise ValueError("newton_slopes expects a monic polynomial")
    if f[0] == 0:
        raise ValueError("newton_slopes expects a nonzero constant term")
    pts = [(i, valuation(c, q.p)) for i, c in enumerate(f.coeffs) if c != 0]
    hull = _lower_hull(pts)
    out: list[Fraction] = []
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        s = Fraction(v1 - v2, i2 - i1) / q.n
        out.extend([s] * (i2 - i1))
    return tuple(sorted(out))


def _lower_hull(pts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


# ---------------------------------------------------------------------------
# resultants (Sylvester matrix, fraction-free Bareiss determinant)

def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) over Z."""
    m, n = f.degree, g.degree
    if f.is_zero() or g.is_zero():
        return 0
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    rows = []
    fr = f.coeffs[::-1]
    gr = g.coeffs[::-1]
    for i in range(n):
        rows.append([0] * i + list(fr) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(gr) + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def _bareiss_det(mat: list[list[int]]) -> int:
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]

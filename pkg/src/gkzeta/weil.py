"""Weil polynomials of abelian varieties of dimension 1 and 2 over F_q:
validation, enumeration, Newton-type classification, point counts and
zeta functions, all in exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt

from .numtheory import (
    IntPolynomial,
    ONE,
    PrimePower,
    newton_slopes,
    resultant,
    valuation,
)


class Rejected(ValueError):
    """A candidate polynomial fails some validity condition.

    Carries the first condition that failed, as a short human-readable string.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NewtonType(Enum):
    ORDINARY = "ordinary"
    SUPERSINGULAR = "supersingular"
    MIXED = "mixed"


@dataclass(frozen=True)
class EndoDescriptor:
    """Shape of the endomorphism algebra of the corresponding isogeny class.

    kind is one of 'field', 'quaternion-Hp', 'quaternion-Hinfty',
    'quaternion-over-field'; detail is a printable refinement.
    """

    kind: str
    detail: str = ""

    def __str__(self):
        return f"{self.kind}({self.detail})" if self.detail else self.kind


@dataclass(frozen=True)
class WeilDescriptor:
    """A validated isogeny class: q, dimension, char. polynomial f = P^e."""

    q: PrimePower
    dim: int
    poly: IntPolynomial
    e: int
    newton: NewtonType
    endo: EndoDescriptor
    case: str

    def slopes(self) -> tuple[Fraction, ...]:
        return newton_slopes(self.poly, self.q)


# ---------------------------------------------------------------------------
# dimension 1

def validate_elliptic(q: PrimePower, b: int) -> WeilDescriptor:
    """Validate the trace b of Frobenius for an elliptic curve over F_q.

    Accepts exactly the realizable values and raises Rejected otherwise.
    """
    p, qq = q.p, q.q
    if b * b > 4 * qq:
        raise Rejected(f"|b| exceeds the Weil bound: b^2 = {b * b} > 4q = {4 * qq}")
    r = isqrt(qq)
    sq_integral = r * r == qq

    f = IntPolynomial([qq, -b, 1])
    if b * b == 4 * qq:
        # b = +-2*sqrt(q), so q must be a square; f = (t -+ sqrt(q))^2
        endo = EndoDescriptor("quaternion-Hp", f"p={p}")
        return WeilDescriptor(q, 1, f, 2, NewtonType.SUPERSINGULAR, endo, "ss-inseparable")

    if b % p != 0:
        endo = EndoDescriptor("field", f"Q[t]/({f})")
        return WeilDescriptor(q, 1, f, 1, NewtonType.ORDINARY, endo, "ordinary")

    case = None
    if b == 0:
        if not sq_integral:
            case = "ss-a"
        elif p % 4 != 1:
            case = "ss-b"
    elif sq_integral and abs(b) == r and p % 3 != 1:
        case = "ss-c"
    elif p in (2, 3) and not sq_integral and b * b == p * qq:
        case = "ss-d"
    if case is None:
        raise Rejected(f"b = {b} is divisible by p but matches no supersingular case over F_{qq}")
    endo = EndoDescriptor("field", f"Q[t]/({f})")
    return WeilDescriptor(q, 1, f, 1, NewtonType.SUPERSINGULAR, endo, case)


def enumerate_elliptic(q: PrimePower) -> list[WeilDescriptor]:
    """All isogeny classes of elliptic curves over F_q, ascending in b."""
    bound = isqrt(4 * q.q)
    out = []
    for b in range(-bound, bound + 1):
        try:
            out.append(validate_elliptic(q, b))
        except Rejected:
            pass
    return out


# ---------------------------------------------------------------------------
# dimension 2, simple isogeny classes

_SS_QUARTIC_CASES = (
    # (case, test(a1, a2, q, r, sq_integral, parity_odd, p))
    ("ss-i", lambda a1, a2, qq, r, sq, odd, p: a1 == 0 and a2 == 0 and odd and p != 2),
    ("ss-ii", lambda a1, a2, qq, r, sq, odd, p: a1 == 0 and a2 == 0 and not odd and p % 8 != 1),
    ("ss-iii", lambda a1, a2, qq, r, sq, odd, p: a1 == 0 and a2 == qq and odd),
    ("ss-iv", lambda a1, a2, qq, r, sq, odd, p: a1 == 0 and a2 == -qq and odd and p != 3),
    ("ss-v", lambda a1, a2, qq, r, sq, odd, p: a1 == 0 and a2 == -qq and not odd and p % 12 != 1),
    ("ss-vi", lambda a1, a2, qq, r, sq, odd, p: sq and abs(a1) == r and a2 == qq and not odd and p % 5 != 1),
    ("ss-vii", lambda a1, a2, qq, r, sq, odd, p: p == 5 and odd and a1 * a1 == 5 * qq and a2 == 3 * qq),
    ("ss-viii", lambda a1, a2, qq, r, sq, odd, p: p == 2 and odd and a1 * a1 == 2 * qq and a2 == qq),
)


def _quartic_from_pair(qq: int, a1: int, a2: int) -> IntPolynomial:
    return IntPolynomial([qq * qq, a1 * qq, a2, a1, 1])


def _quartic_is_irreducible(f: IntPolynomial) -> bool:
    """Irreducibility over Q of a monic quartic with nonzero constant term."""
    c0 = f[0]
    # rational roots would be integer divisors of the constant term
    d = 1
    while d * d <= abs(c0):
        if abs(c0) % d == 0:
            for root in {d, -d, abs(c0) // d, -abs(c0) // d}:
                if f(root) == 0:
                    return False
        d += 1
    # quadratic factor t^2 + u t + v with integer u, v
    a1, a2 = f[3], f[2]
    vs = set()
    d = 1
    while d * d <= abs(c0):
        if abs(c0) % d == 0:
            vs.update({d, -d, abs(c0) // d, -abs(c0) // d})
        d += 1
    for v in vs:
        v2, rem = divmod(c0, v)
        if rem:
            continue
        # u + u2 = a1 and u*v2 + u2*v = f[1]
        if v2 == v:
            # u*v + u2*v = f[1] forces v | f[1]
            if f[1] % v:
                continue
            u_sum, u_cross = a1, f[1] // v
            if u_sum != u_cross:
                continue
            # u + u2 = a1, u*u2 = a2 - v - v2
            disc = a1 * a1 - 4 * (a2 - v - v2)
            if disc >= 0 and isqrt(disc) ** 2 == disc and (a1 + isqrt(disc)) % 2 == 0:
                return False
            continue
        num = f[1] - a1 * v
        den = v2 - v
        u, rem = divmod(num, den)
        if rem:
            continue
        u2 = a1 - u
        if v + v2 + u * u2 == a2:
            return False
    return True


def validate_surface_simple(q: PrimePower, a1: int = None, a2: int = None,
                            square_of: IntPolynomial = None) -> WeilDescriptor:
    """Validate a simple abelian surface isogeny class over F_q.

    Either give (a1, a2) for an irreducible quartic
    f = t^4 + a1 t^3 + a2 t^2 + a1 q t + q^2, or give square_of = P, a monic
    quadratic, for the classes with f = P^2.
    """
    if square_of is not None:
        return _validate_surface_square(q, square_of)
    if a1 is None or a2 is None:
        raise Rejected("need either (a1, a2) or square_of")
    return _validate_surface_quartic(q, a1, a2)


def _validate_surface_quartic(q: PrimePower, a1: int, a2: int) -> WeilDescriptor:
    p, qq = q.p, q.q
    r = isqrt(qq)
    sq = r * r == qq
    odd = q.degree_is_odd
    f = _quartic_from_pair(qq, a1, a2)

    for case, test in _SS_QUARTIC_CASES:
        if test(a1, a2, qq, r, sq, odd, p):
            endo = EndoDescriptor("field", f"Q[t]/({f})")
            return WeilDescriptor(q, 2, f, 1, NewtonType.SUPERSINGULAR, endo, case)

    # not in the supersingular list: must be ordinary or mixed
    if a1 * a1 > 16 * qq:
        raise Rejected(f"a1^2 = {a1 * a1} > 16q = {16 * qq}")
    if 4 * a2 > a1 * a1 + 8 * qq:
        raise Rejected(f"4a2 = {4 * a2} > a1^2 + 8q = {a1 * a1 + 8 * qq}")
    if a2 + 2 * qq < 0 or (a2 + 2 * qq) ** 2 < 4 * a1 * a1 * qq:
        raise Rejected("roots are not Weil numbers: (a2 + 2q)^2 < 4 a1^2 q")
    if not _quartic_is_irreducible(f):
        raise Rejected(f"{f} is reducible over Q")

    slopes = sorted(newton_slopes(f, q))
    half = Fraction(1, 2)
    if slopes == [0, 0, 1, 1]:
        nt, case = NewtonType.ORDINARY, "ordinary"
    elif slopes == [0, half, half, 1]:
        nt, case = NewtonType.MIXED, "mixed"
    elif slopes == [half] * 4:
        raise Rejected("supersingular quartic outside the classified list")
    else:
        raise Rejected(f"unexpected Newton polygon {slopes}")
    endo = EndoDescriptor("field", f"Q[t]/({f})")
    return WeilDescriptor(q, 2, f, 1, nt, endo, case)


def _validate_surface_square(q: PrimePower, P: IntPolynomial) -> WeilDescriptor:
    p, qq = q.p, q.q
    if P.degree != 2 or not P.is_monic():
        raise Rejected("square_of must be a monic quadratic")
    if P[0] != qq and P[0] != -qq:
        raise Rejected("quadratic constant term must be +-q")
    b = -P[1]
    f = P * P
    if q.degree_is_odd:
        if P == IntPolynomial([-qq, 0, 1]):
            endo = EndoDescriptor("quaternion-Hinfty", f"Q(sqrt({p}))")
            return WeilDescriptor(q, 2, f, 2, NewtonType.SUPERSINGULAR, endo, "ss-square-odd")
        raise Rejected("odd-degree square classes require P = t^2 - q")
    r = isqrt(qq)
    if P[0] != qq:
        raise Rejected("even-degree square classes require P = t^2 - b t + q")
    if b == 0 and p % 4 == 1:
        case = "ss-square-even-b0"
    elif abs(b) == r and p % 3 == 1:
        case = "ss-square-even-bsqrt"
    else:
        raise Rejected("b and p match no even-degree square class")
    endo = EndoDescriptor("quaternion-over-field", f"Q[t]/({P})")
    return WeilDescriptor(q, 2, f, 2, NewtonType.SUPERSINGULAR, endo, case)


# ---------------------------------------------------------------------------
# Newton classification, point counts, zeta

def classify_newton(w: WeilDescriptor) -> NewtonType:
    """Newton type recomputed from the slope multiset of the polynomial."""
    slopes = sorted(w.slopes())
    half = Fraction(1, 2)
    if all(s == half for s in slopes):
        return NewtonType.SUPERSINGULAR
    if w.dim == 1 and slopes == [0, 1]:
        return NewtonType.ORDINARY
    if w.dim == 2 and slopes == [0, 0, 1, 1]:
        return NewtonType.ORDINARY
    if w.dim == 2 and slopes == [0, half, half, 1]:
        return NewtonType.MIXED
    raise Rejected(f"slope multiset {slopes} is not admissible for dim {w.dim}")


def abelian_point_count(w: WeilDescriptor, r: int) -> int:
    """|A(F_{q^r})| = |Res(f, t^r - 1)| where f is the full char. polynomial."""
    if r < 1:
        raise ValueError("r must be >= 1")
    tr = IntPolynomial.x_pow(r) - ONE
    n = abs(resultant(w.poly, tr))
    if n == 0:
        raise Rejected("characteristic polynomial shares a root with t^r - 1")
    return n


def _power_sums(f: IntPolynomial, upto: int) -> list[int]:
    """Power sums s_1..s_upto of the roots of a monic f, by Newton's identity."""
    d = f.degree
    # elementary symmetric functions with sign: f = sum (-1)^i e_i t^(d-i)
    e = [(-1) ** i * f[d - i] for i in range(d + 1)]
    s = [0] * (upto + 1)
    for k in range(1, upto + 1):
        acc = 0
        for i in range(1, min(k, d) + 1):
            acc += (-1) ** (i - 1) * e[i] * s[k - i]
        if k <= d:
            acc += (-1) ** (k - 1) * e[k] * k
        s[k] = acc
    return s


def _poly_from_power_sums(t: list[int], deg: int) -> IntPolynomial:
    """Monic-reversed product prod(1 - mu_j x) from power sums t_1..t_deg."""
    e = [Fraction(1)]
    for m in range(1, deg + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            acc += (-1) ** (i - 1) * e[m - i] * t[i]
        e.append(acc / m)
    coeffs = []
    for m, em in enumerate(e):
        if em.denominator != 1:
            raise ValueError("power sums do not come from an integral polynomial")
        coeffs.append((-1) ** m * int(em))
    return IntPolynomial(coeffs)


def abelian_zeta(w: WeilDescriptor) -> list[IntPolynomial]:
    """The factors P_0, ..., P_{2 dim} of the zeta function of A/F_q.

    P_i(t) = det(1 - t F | H^i); the zeta function is the alternating product.
    """
    qq = w.q.q
    f = w.poly
    p0 = IntPolynomial([1, -1])
    p1 = f.reciprocal()
    if w.dim == 1:
        return [p0, p1, IntPolynomial([1, -qq])]
    s = _power_sums(f, 12)
    pair = [0] * 7
    for k in range(1, 7):
        num = s[k] * s[k] - s[2 * k]
        assert num % 2 == 0
        pair[k] = num // 2
    p2 = _poly_from_power_sums(pair, 6)
    # products of three roots are q^2 / (single root): P3(t) = f(q^2 t)/q^2
    p3 = IntPolynomial([c * qq ** (2 * i) for i, c in enumerate(f.coeffs)]).exact_div(
        IntPolynomial([qq * qq]))
    p4 = IntPolynomial([1, -qq * qq])
    return [p0, p1, p2, p3, p4]

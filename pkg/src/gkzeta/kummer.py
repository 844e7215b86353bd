"""Singularity configurations of generalized Kummer surfaces and the exact
arithmetic of their Neron-Severi Frobenius action: ADE orbit data, rank
bounds, Frobenius action on resolution graphs, assembly of the degree-22
characteristic polynomial in cyclotomic notation, traces, point counts and
zeta functions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .groups import CONFIG_GROUPS, GroupId, facts, is_cyclic, subgroup_order
from .numtheory import (
    IntPolynomial,
    PrimePower,
    cyclotomic,
    divisors,
    euler_phi,
    factorize,
    moebius,
)

G = GroupId


class Rejected(ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


# ---------------------------------------------------------------------------
# ADE types

@dataclass(frozen=True)
class ADEType:
    """A rational double point type: A_m (m>=1), D_m (m>=4) or E_m (m in 6..8)."""

    kind: str
    m: int

    def __post_init__(self):
        if self.kind == "A":
            ok = self.m >= 1
        elif self.kind == "D":
            ok = self.m >= 4
        elif self.kind == "E":
            ok = self.m in (6, 7, 8)
        else:
            ok = False
        if not ok:
            raise ValueError(f"invalid ADE type {self.kind}{self.m}")

    @property
    def nodes(self) -> int:
        return self.m

    def __str__(self):
        return f"{self.kind}{self.m}"


def A(m):
    return ADEType("A", m)


def D(m):
    return ADEType("D", m)


def E(m):
    return ADEType("E", m)


# stabilizer subgroup -> singularity type of its image point
def ade_of_stabilizer(h: GroupId) -> ADEType:
    if is_cyclic(h):
        return A(subgroup_order(h) - 1)
    if h.value.startswith("Q"):
        return D(subgroup_order(h) // 4 + 2)
    if h == G.SL2F3:
        return E(6)
    if h == G.ESL2F3:
        return E(7)
    if h == G.SL2F5:
        return E(8)
    raise ValueError(f"{h} cannot stabilize a point")


# ---------------------------------------------------------------------------
# singular configurations

@dataclass(frozen=True)
class SingularOrbit:
    """A Galois orbit of singular points sharing an ADE type.

    count is the number of geometric points in the orbit; degree and
    graph_action describe the Frobenius action when known ('trivial',
    'chain-flip' or 'unknown').
    """

    ade: ADEType
    count: int = 1
    degree: int = 1
    graph_action: str = "unknown"

    def __post_init__(self):
        if self.count < 1 or self.degree < 1:
            raise ValueError("count and degree must be >= 1")
        if self.count % self.degree:
            raise ValueError("orbit degree must divide the point count")
        if self.graph_action not in ("trivial", "chain-flip", "unknown"):
            raise ValueError(f"bad graph action {self.graph_action!r}")

    @property
    def nodes(self) -> int:
        return self.count * self.ade.nodes

    def __str__(self):
        head = f"{self.count}{self.ade}" if self.count > 1 else str(self.ade)
        return head


@dataclass(frozen=True)
class SingularConfig:
    """The full geometric singularity configuration of a quotient surface."""

    group: GroupId
    case: str
    orbits: tuple  # of SingularOrbit, sorted by descending node count

    @property
    def total_nodes(self) -> int:
        return sum(o.nodes for o in self.orbits)

    @property
    def total_points(self) -> int:
        return sum(o.count for o in self.orbits)

    def __str__(self):
        body = " + ".join(str(o) for o in self.orbits)
        tag = f" (case {self.case})" if self.case else ""
        return f"{self.group}{tag}: {body}"


def singular_configs(g: GroupId) -> tuple[SingularConfig, ...]:
    """All singularity configurations for G, derived from the stabilizer
    tables by orbit counting: a stabilizer class H with N points gives
    N * |H| / |G| singular points of the ADE type attached to H."""
    if g not in CONFIG_GROUPS:
        raise Rejected(f"{g} has no recorded singularity configuration")
    out = []
    n = subgroup_order(g)
    for tab in facts(g).stabilizer_tables:
        orbits = []
        for h, pts in tab.entries:
            num, rem = divmod(pts * subgroup_order(h), n)
            if rem:
                raise AssertionError(f"stabilizer table for {g} is not orbit-consistent")
            orbits.append(SingularOrbit(ade_of_stabilizer(h), num))
        orbits.sort(key=lambda o: (-o.ade.nodes, -ord(o.ade.kind)))
        out.append(SingularConfig(g, tab.case, tuple(orbits)))
    return tuple(out)


def singular_config(g: GroupId, case: str = "") -> SingularConfig:
    for cfg in singular_configs(g):
        if cfg.case == case:
            return cfg
    raise Rejected(f"{g} has no configuration case {case!r}")


def ns_rank_bound(cfg: SingularConfig) -> tuple[int, bool]:
    """(bound, exact): rank of NS is exactly 22 when the exceptional locus
    has 20 nodes, otherwise at least nodes + 1."""
    n = cfg.total_nodes
    if n > 20:
        raise Rejected(f"{cfg.group} configuration has {n} > 20 exceptional nodes")
    if n == 20:
        return 22, True
    return n + 1, False


def cyclic_fixed_points(n: int) -> int:
    """Number of fixed points of a small-order cyclic action, n = l^r:
    l^(4 / ((l-1) l^(r-1))) when the exponent is integral."""
    fac = factorize(n)
    if len(fac) != 1:
        raise Rejected(f"{n} is not a prime power")
    ((l, r),) = fac.items()
    denom = (l - 1) * l ** (r - 1)
    if 4 % denom:
        raise Rejected(f"order {n} admits no fixed points: (l-1)l^(r-1) = {denom} does not divide 4")
    return l ** (4 // denom)


# ---------------------------------------------------------------------------
# Frobenius on resolution graphs

def graph_frobenius(n: int, r: int, q: PrimePower) -> str:
    """Action of Frobenius on the chain of a cyclic-quotient A_{n/r... } point
    whose residue field has degree r: 'chain-flip' when n/r does not divide
    q^r - 1, else 'trivial'."""
    if gcd(n, q.p) != 1:
        raise Rejected(f"order {n} not coprime to p = {q.p}")
    if r < 1 or n % r:
        raise Rejected(f"residue degree {r} does not divide {n}")
    m = n // r
    if m < 2:
        raise Rejected("trivial stabilizer quotient: no chain to act on")
    return "chain-flip" if (q.q ** r - 1) % m else "trivial"


def default_graph_action(ade: ADEType, degree: int, at_origin: bool = False) -> str:
    """Conservative default for D/E orbits: the action is known to be
    trivial on a D4 graph over the origin, unknown otherwise unless the
    orbit is rational (degree 1) at the origin."""
    if ade.kind == "A":
        return "unknown"
    if at_origin and degree == 1:
        return "trivial"
    return "unknown"


# ---------------------------------------------------------------------------
# the degree-22 characteristic polynomial in cyclotomic notation

@dataclass(frozen=True)
class NSCharPoly:
    """det(t - F/q | NS) encoded as {r: d_r} with d_r the total degree of the
    cyclotomic factor Phi_r^(d_r / phi(r))."""

    parts: tuple  # sorted ((r, d_r), ...)

    def __post_init__(self):
        items = tuple(sorted((int(r), int(d)) for r, d in dict(self.parts).items()))
        object.__setattr__(self, "parts", items)
        for r, d in items:
            if r < 1 or d < 1:
                raise ValueError("orders and degrees must be positive")
            if d % euler_phi(r):
                raise ValueError(f"degree {d} at order {r} is not a multiple of phi({r})")
        if sum(d for _, d in items) != 22:
            raise ValueError(f"total degree {sum(d for _, d in items)} != 22")

    def degree_at(self, r: int) -> int:
        return dict(self.parts).get(r, 0)

    def multiplicity(self, r: int) -> int:
        return self.degree_at(r) // euler_phi(r)

    def polynomial(self) -> IntPolynomial:
        out = IntPolynomial([1])
        for r, d in self.parts:
            out = out * cyclotomic(r) ** (d // euler_phi(r))
        return out

    def __str__(self):
        return format_zeta_notation(dict(self.parts))


def parse_zeta_notation(s: str) -> NSCharPoly:
    """Parse '1^20,2^2' style notation: comma-separated r^d terms with d the
    total degree contributed at order r (omitted exponent means d = 1)."""
    parts: dict[int, int] = {}
    for term in s.split(","):
        term = term.strip()
        if not term:
            raise ValueError("empty term in notation")
        if "^" in term:
            r_s, d_s = term.split("^", 1)
            r, d = int(r_s), int(d_s)
        else:
            r, d = int(term), 1
        if r in parts:
            raise ValueError(f"order {r} repeated in notation")
        parts[r] = d
    return NSCharPoly(tuple(parts.items()))


def format_zeta_notation(parts: dict) -> str:
    items = sorted((r, d) for r, d in parts.items() if d)
    return ",".join(f"{r}^{d}" if d > 1 else str(r) for r, d in items)


# ---------------------------------------------------------------------------
# contributions of exceptional divisors and the invariant part

def exceptional_charpoly(orbit: SingularOrbit) -> dict[int, int]:
    """Cyclotomic degree contribution {r: d_r} of one exceptional orbit.

    A trivial-action orbit of degree d contributes phi(r) at each r | d for
    every node of one fiber; a rational chain-flip on A_m splits into
    ceil(m/2) invariant classes and floor(m/2) swapped pairs.
    """
    out: dict[int, int] = {}
    if orbit.graph_action == "trivial":
        for r in divisors(orbit.degree):
            out[r] = out.get(r, 0) + euler_phi(r) * orbit.ade.nodes * (orbit.count // orbit.degree)
        return out
    if orbit.graph_action == "chain-flip":
        if orbit.ade.kind != "A":
            raise Rejected("chain-flip is only defined on A-type graphs")
        if orbit.degree != 1:
            raise Rejected("chain-flip contribution only implemented for rational points")
        m = orbit.ade.nodes
        out[1] = (m + 1) // 2 * orbit.count
        if m // 2:
            out[2] = m // 2 * orbit.count
        return out
    raise Rejected("cannot assemble an orbit with unknown graph action")


def invariant_h_poly(g: GroupId, eps: int, q: PrimePower = None) -> dict[int, int]:
    """Contribution {r: d_r} of the rank-4 invariant sublattice, for the
    square Weil classes f = (t^2 + eps q)^2.

    Cyclic groups of order 3, 4, 6 give (t-q)^2 (t+q)^2; the quaternionic
    groups give (t + eps q)^2 (t - eps q).
    """
    if eps not in (1, -1):
        raise Rejected("eps must be +-1")
    if g in (G.C3, G.C4, G.C6):
        return {1: 2, 2: 2}
    if g in (G.Q8, G.Q12, G.SL2F3):
        if eps == -1:
            return {1: 2, 2: 1}
        return {1: 1, 2: 2}
    raise Rejected(f"no invariant-part polynomial recorded for {g}")


def assemble_ns(orbits, h_part: dict) -> NSCharPoly:
    """Sum the contributions of all exceptional orbits and the invariant
    part into a full degree-22 characteristic polynomial."""
    total: dict[int, int] = {}
    for r, d in h_part.items():
        total[r] = total.get(r, 0) + d
    for orbit in orbits:
        for r, d in exceptional_charpoly(orbit).items():
            total[r] = total.get(r, 0) + d
    return NSCharPoly(tuple(total.items()))


# ---------------------------------------------------------------------------
# traces, point counts, zeta

def trace_of(cp: NSCharPoly) -> int:
    """Trace of the normalized Frobenius on NS: sum of mu(r) d_r / phi(r)."""
    return sum(moebius(r) * d // euler_phi(r) for r, d in cp.parts)


def k3_point_count(q: PrimePower, cp: NSCharPoly) -> int:
    """|X(F_q)| = 1 + q * Tr + q^2 for a surface whose cohomology is
    spanned by divisor classes."""
    return 1 + q.q * trace_of(cp) + q.q * q.q


@dataclass(frozen=True)
class ZetaFunction:
    """1 / prod of the listed (polynomial, multiplicity) factors."""

    q: PrimePower
    denominator: tuple  # of (IntPolynomial, int)

    def __str__(self):
        def fmt(f, m):
            s = f"({_ascending(f)})"
            return s if m == 1 else f"{s}^{m}"

        return "1/(" + " ".join(fmt(f, m) for f, m in self.denominator) + ")"


def _ascending(f: IntPolynomial) -> str:
    """Print a polynomial constant term first, the usual zeta convention."""
    parts = []
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        if i == 0:
            term = str(abs(a))
        else:
            mag = "" if abs(a) == 1 else str(abs(a))
            term = f"{mag}t" if i == 1 else f"{mag}t^{i}"
        parts.append(("-" if a < 0 else "+", term))
    if not parts:
        return "0"
    sign0, term0 = parts[0]
    out = ("-" if sign0 == "-" else "") + term0
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


def k3_zeta(q: PrimePower, cp: NSCharPoly) -> ZetaFunction:
    """Zeta function 1 / ((1-t) P2(t) (1-q^2 t)) where P2 collects, for each
    cyclotomic order r, the factor with roots q * zeta_r."""
    qq = q.q
    factors = [(IntPolynomial([1, -1]), 1)]
    for r, d in cp.parts:
        phi = cyclotomic(r)
        rev = phi.reciprocal()
        if rev[0] < 0:
            rev = -rev
        factors.append((rev.scale_arg(qq), d // euler_phi(r)))
    factors.append((IntPolynomial([1, -qq * qq]), 1))
    return ZetaFunction(q, tuple(factors))


def artin_check(q: PrimePower, cp: NSCharPoly) -> bool:
    """Reject characteristic polynomials impossible over odd-degree fields:
    the full-rank lattice cannot be entirely Frobenius-invariant, and some
    even cyclotomic order must appear."""
    if not q.degree_is_odd:
        return True
    if cp.parts == ((1, 22),):
        return False
    if all(r % 2 for r, _ in cp.parts):
        return False
    return True


# ---------------------------------------------------------------------------
# trace tables

@dataclass(frozen=True)
class TraceRow:
    trace: int
    notation: str
    group: GroupId
    p_condition: str
    weil_shape: str

    def condition_holds(self, p: int) -> bool:
        return _TRACE_CONDS[self.p_condition](p)


_TRACE_CONDS = {
    "p > 2": lambda p: p > 2,
    "p != 1 mod 12": lambda p: p > 2 and p % 12 != 1,
    "p = 1 mod 4": lambda p: p % 4 == 1,
    "p = 3 mod 4": lambda p: p % 4 == 3,
}

_EVEN_ROWS = (
    TraceRow(22, "1^22", G.C2, "p > 2", "(t +- sqrt(q))^4"),
    TraceRow(18, "1^20,2^2", G.C4, "p > 2", "(t^2 - q)^2"),
    TraceRow(14, "1^18,2^4", G.C2, "p > 2", "(t^2 - q)^2"),
    TraceRow(10, "1^14,2^4,4^4", G.C2, "p > 2", "(t^2 + q)(t +- sqrt(q))^2"),
    TraceRow(8, "1^15,2^7", G.C4, "p > 2", "(t^2 - q)^2"),
    TraceRow(6, "1^14,2^8", G.C2, "p > 2", "(t^2 +- q)^2"),
    TraceRow(4, "1^10,3^12", G.C2, "p > 2", "(t^2 +- sqrt(q) t + q)^2"),
    TraceRow(2, "1^12,2^10", G.C2, "p > 2", "(t^2 - q)^2"),
    TraceRow(0, "1^6,2^4,3^8,6^4", G.C2, "p != 1 mod 12", "t^4 - q t^2 + q^2"),
)

_ODD_ROWS = (
    TraceRow(20, "1^21,2", G.Q8, "p = 3 mod 4", "(t^2 - q)^2"),
    TraceRow(18, "1^20,2^2", G.C4, "p = 1 mod 4", "(t^2 - q)^2"),
    TraceRow(18, "1^20,2^2", G.C2, "p = 3 mod 4", "(t^2 + q)^2"),
    TraceRow(14, "1^18,2^4", G.C2, "p = 1 mod 4", "(t^2 - q)^2"),
    TraceRow(10, "1^16,2^6", G.C2, "p = 3 mod 4", "(t^2 + q)^2"),
    TraceRow(8, "1^15,2^7", G.C4, "p = 1 mod 4", "(t^2 - q)^2"),
    TraceRow(6, "1^14,2^8", G.C2, "p > 2", "(t^2 + q)^2"),
    TraceRow(2, "1^12,2^10", G.C2, "p > 2", "(t^2 - q)^2"),
    TraceRow(0, "1^6,2^4,3^8,6^4", G.C2, "p > 2", "t^4 - q t^2 + q^2"),
)


def trace_table(parity: str, p: int = None) -> tuple[TraceRow, ...]:
    """Realizable (trace, char. polynomial) pairs for supersingular quotient
    surfaces over fields of the given degree parity, optionally filtered by
    the row conditions at p."""
    if parity == "even":
        rows = _EVEN_ROWS
    elif parity == "odd":
        rows = _ODD_ROWS
    else:
        raise ValueError("parity must be 'even' or 'odd'")
    if p is None:
        return rows
    return tuple(row for row in rows if row.condition_holds(p))

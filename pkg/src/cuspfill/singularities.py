"""Numerical invariants of cuspidal plane curve singularities.

A cusp is a locally irreducible singularity modeled on {x^p = y^q} with
2 <= p < q and gcd(p, q) = 1; its link is the torus knot T(p, q).  The
multiplicity sequence of the cusp under the blow-ups of the minimal
resolution is computed by the Euclidean remainder process on (q, p) with the
trailing 1-entries dropped, and it drives everything else here: the delta
invariant, the Milnor number, the arithmetic genus of a curve with
prescribed cusps, and the fillability bound for the contact boundary of a
concave neighborhood of such a curve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from .errors import InputError


@dataclass(frozen=True, order=True)
class Cusp:
    """Singularity {x^p = y^q}; link T(p, q)."""

    p: int
    q: int

    def __post_init__(self):
        if not (2 <= self.p < self.q):
            raise InputError(f"cusp requires 2 <= p < q, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise InputError(f"cusp exponents must be coprime, got ({self.p}, {self.q})")


def multiplicity_sequence(cusp):
    """Blow-up multiplicities of the cusp down to the minimal resolution.

    Euclidean process on (q, p): the smaller number m appears floor(a/m)
    times, then recurse on (m, a mod m).  Trailing 1s (the normal-crossing
    tail) are dropped, so every entry is >= 2 and the sequence is
    non-increasing.
    """
    a, b = cusp.q, cusp.p
    seq = []
    while b >= 2:
        seq.extend([b] * (a // b))
        a, b = b, a % b
    return tuple(seq)


def _check_sequence(seq):
    seq = tuple(int(m) for m in seq)
    if not seq:
        raise InputError("multiplicity sequence must be non-empty")
    if any(m < 2 for m in seq):
        raise InputError("multiplicity sequence entries must be >= 2")
    if any(a < b for a, b in zip(seq, seq[1:])):
        raise InputError("multiplicity sequence must be non-increasing")
    return seq


def delta(seq):
    """Delta invariant: half the sum of m(m-1) over the sequence."""
    seq = _check_sequence(seq)
    total = sum(m * (m - 1) for m in seq)
    return total // 2


def big_m(seq):
    """Sum of the squares of the multiplicities (the resolution defect M)."""
    return sum(m * m for m in _check_sequence(seq))


def ell(seq):
    """Last (and smallest) entry of the multiplicity sequence; always >= 2."""
    return _check_sequence(seq)[-1]


def milnor_number(seq):
    """Milnor number of a one-branch singularity: 2*delta."""
    return 2 * delta(seq)


def seifert_genus(cusp):
    """Genus of the Milnor fiber of T(p, q); equals delta of the cusp."""
    return (cusp.p - 1) * (cusp.q - 1) // 2


@dataclass(frozen=True)
class CurveData:
    """A (rational) cuspidal curve germ: genus, cusps, self-intersection."""

    geometric_genus: int
    cusps: tuple[Cusp, ...]
    self_intersection: int

    def __post_init__(self):
        if self.geometric_genus < 0:
            raise InputError("geometric genus must be >= 0")
        object.__setattr__(self, "cusps", tuple(self.cusps))


def arithmetic_genus(curve):
    """Geometric genus plus the delta contributions of all cusps."""
    return curve.geometric_genus + sum(delta(multiplicity_sequence(c)) for c in curve.cusps)


class Fillability(Enum):
    OBSTRUCTED = "Obstructed"
    KNOWN_FILLABLE = "KnownFillable"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class FillabilityVerdict:
    status: Fillability
    reason: str
    bound: int = field(default=0)


# citation tags carried on verdicts
REASON_DEFECT_BOUND = "defect-bound"
REASON_DEFECT_BOUND_SHARED_MIN = "defect-bound-shared-min"
REASON_DEGREE_CONSTRUCTION = "torus-knot-curve-construction"
REASON_BETWEEN_BOUNDS = "between-known-bounds"


def fillability_verdict(curve):
    """Classify (cusps, self-intersection) as Obstructed / KnownFillable / Unknown.

    Obstructed when s exceeds the defect bound sum(M) + 2*min(ell) + 1, or
    reaches it while at least two cusps attain the minimal ell.  Known
    fillable only in the unicuspidal case for s <= p*q, where an explicit
    curve exists and fillability is monotone downward in s.
    """
    if curve.self_intersection <= 0:
        raise InputError("self-intersection must be positive")
    if curve.geometric_genus != 0:
        raise InputError("verdict applies to rational curves only")
    if not curve.cusps:
        raise InputError("at least one cusp required")
    seqs = [multiplicity_sequence(c) for c in curve.cusps]
    total_m = sum(big_m(s) for s in seqs)
    ells = [ell(s) for s in seqs]
    min_ell = min(ells)
    shared = ells.count(min_ell) >= 2
    bound = total_m + 2 * min_ell + 1
    s = curve.self_intersection
    if s >= bound + 1:
        return FillabilityVerdict(Fillability.OBSTRUCTED, REASON_DEFECT_BOUND, bound)
    if shared and s >= bound:
        return FillabilityVerdict(Fillability.OBSTRUCTED, REASON_DEFECT_BOUND_SHARED_MIN, bound)
    if len(curve.cusps) == 1:
        c = curve.cusps[0]
        if s <= c.p * c.q:
            return FillabilityVerdict(
                Fillability.KNOWN_FILLABLE, REASON_DEGREE_CONSTRUCTION, bound
            )
    return FillabilityVerdict(Fillability.UNKNOWN, REASON_BETWEEN_BOUNDS, bound)


def _fibonacci(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


NOT_ON_LIST = "NOT_ON_LIST"


def classify_unicuspidal(p, q, d, fib_bound=25):
    """Match (p, q; d) against the classified list of degree-d unicuspidal
    rational plane curves with torus-knot cusp T(p, q).

    Families: (p, p+1; p+1), (p, 4p-1; 2p), the two Fibonacci families
    (F_{j-2}, F_{j+2}; F_j) and (F_j^2, F_{j+2}^2; F_j F_{j+2}) for odd j up
    to `fib_bound`, and the two sporadic cases (3, 22; 8) and (6, 43; 16).
    Returns a family tag like "A_3", "B_2", "FIB_5", "FIBSQ_3", "E3", "E6",
    or NOT_ON_LIST.

    Even Fibonacci indices are excluded: the Catalan identity
    F_{j-2} F_{j+2} - F_j^2 = (-1)^{j-1} makes the degree-genus relation
    delta = (d-1)(d-2)/2 fail for even j.
    """
    cusp = Cusp(p, q)
    if d < 1:
        raise InputError("degree must be >= 1")
    if (p, q, d) == (3, 22, 8):
        return "E3"
    if (p, q, d) == (6, 43, 16):
        return "E6"
    if q == p + 1 and d == p + 1:
        return f"A_{p}"
    if q == 4 * p - 1 and d == 2 * p:
        return f"B_{p}"
    for j in range(3, fib_bound + 1, 2):
        fm2, fj, fp2 = _fibonacci(j - 2), _fibonacci(j), _fibonacci(j + 2)
        if (p, q, d) == (fm2, fp2, fj):
            return f"FIB_{j}"
        if (p, q, d) == (fj * fj, fp2 * fp2, fj * fp2):
            return f"FIBSQ_{j}"
    return NOT_ON_LIST


def family_triples(p_max=10, j_max=12):
    """Generate (tag, p, q, d) for every classified family member in range."""
    out = []
    for p in range(2, p_max + 1):
        out.append((f"A_{p}", p, p + 1, p + 1))
        out.append((f"B_{p}", p, 4 * p - 1, 2 * p))
    for j in range(3, j_max + 1, 2):
        fm2, fj, fp2 = _fibonacci(j - 2), _fibonacci(j), _fibonacci(j + 2)
        if fm2 >= 2:
            out.append((f"FIB_{j}", fm2, fp2, fj))
        out.append((f"FIBSQ_{j}", fj * fj, fp2 * fp2, fj * fp2))
    out.append(("E3", 3, 22, 8))
    out.append(("E6", 6, 43, 16))
    return out

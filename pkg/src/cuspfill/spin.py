"""Characteristic sublinks, the Gompf-type rotation invariant of a surgery
diagram, and grading minimization over rotation lattices of plumbings.

A spin structure on an integral surgery presentation is encoded by a
characteristic sublink L': a sublink with lk(K_i, L') = framing(K_i) mod 2
for every component.  Over GF(2) these are exactly the solutions x of
B x = diag(B), where B is the linking matrix, and the diagonal of a
symmetric matrix over GF(2) always lies in its column space, so at least one
solution exists.

For a diagram whose 1-handles have been traded for 0-framed circles (the
`zset` components), the invariant of the induced plane field relative to the
spin structure of a characteristic sublink L' is

    Gamma = sum_i rho_i [mu_i],   rho_i = (rot_i + lk(K_i, L' xor Z)) / 2,

an element of H_1 = coker(B) written in the meridian basis; the symmetric
difference with Z implements the rule that 1-handle circles are dropped from
(or added to) the sublink before linking numbers are taken, and self-linking
means framing.  Non-integral rho flags a rotation number incompatible with
the diagram.

The grading function on a negative-definite plumbing with rotation vector v
is theta = (v Q^{-1} v^T - 2 #vertices - 3 sign(Q)) / 4, computed exactly;
minimizing it over the rotation lattice picks out the distinguished plane
fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import InputError
from .lattices import (
    Residue,
    express_in_generator,
    inverse_rational,
    signature,
)
from .plumbing import intersection_matrix
from .singularities import arithmetic_genus


class ParityError(InputError):
    """A rho value came out non-integral for the given characteristic sublink."""


class NotCharacteristicError(InputError):
    """The proposed sublink is not characteristic for the linking matrix."""


@dataclass(frozen=True)
class SurgeryDiagram:
    """Integral surgery diagram: linking matrix (framings on the diagonal),
    rotation numbers, and the set of components standing in for 1-handles."""

    linking: tuple[tuple[int, ...], ...]
    rot: tuple[int, ...]
    zset: frozenset[int]

    def __post_init__(self):
        linking = tuple(tuple(int(x) for x in row) for row in self.linking)
        n = len(linking)
        if any(len(row) != n for row in linking):
            raise InputError("linking matrix must be square")
        for i in range(n):
            for j in range(i):
                if linking[i][j] != linking[j][i]:
                    raise InputError("linking matrix must be symmetric")
        rot = tuple(int(r) for r in self.rot)
        if len(rot) != n:
            raise InputError("one rotation number per component required")
        zset = frozenset(int(z) for z in self.zset)
        if any(not 0 <= z < n for z in zset):
            raise InputError("zset indices out of range")
        for z in zset:
            if linking[z][z] != 0 or rot[z] != 0:
                raise InputError("1-handle surrogate components need framing 0 and rot 0")
        object.__setattr__(self, "linking", linking)
        object.__setattr__(self, "rot", rot)
        object.__setattr__(self, "zset", zset)

    @property
    def size(self):
        return len(self.linking)


def _gf2_solutions(matrix, rhs):
    """All solutions of matrix * x = rhs over GF(2), as bitmask-free lists."""
    n = len(rhs)
    rows = [sum((matrix[i][j] & 1) << j for j in range(n)) | ((rhs[i] & 1) << n) for i in range(n)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if rows[i] >> col & 1), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(n):
            if i != r and rows[i] >> col & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
    for i in range(r, n):
        if rows[i] >> n & 1:
            return []
    particular = 0
    for i, col in enumerate(pivots):
        if rows[i] >> n & 1:
            particular |= 1 << col
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = 1 << f
        for i, col in enumerate(pivots):
            if rows[i] >> f & 1:
                vec |= 1 << col
        basis.append(vec)
    sols = []
    for combo in product((0, 1), repeat=len(basis)):
        x = particular
        for bit, vec in zip(combo, basis):
            if bit:
                x ^= vec
        sols.append(x)
    return sols


def characteristic_sublinks(linking):
    """All characteristic sublinks of the linking matrix, as frozensets.

    Solves B x = diag(B) over GF(2).  The count is a power of two and never
    zero: the diagonal of a symmetric GF(2) matrix lies in its column space.
    """
    linking = [list(map(int, row)) for row in linking]
    n = len(linking)
    diag = [linking[i][i] for i in range(n)]
    masks = _gf2_solutions(linking, diag)
    subs = sorted(
        (frozenset(j for j in range(n) if m >> j & 1) for m in masks),
        key=lambda s: sorted(s),
    )
    return subs


def is_characteristic(linking, sublink):
    n = len(linking)
    sub = set(sublink)
    for i in range(n):
        lk = sum(linking[i][j] for j in sub)
        if (lk - linking[i][i]) % 2 != 0:
            return False
    return True


def gamma_invariant(diagram, sublink, generator=0):
    """Rotation invariant of the diagram relative to a characteristic sublink,
    expressed as a multiple of the chosen meridian in H_1 = coker(B)."""
    b = diagram.linking
    n = diagram.size
    sub = frozenset(int(i) for i in sublink)
    if any(not 0 <= i < n for i in sub):
        raise InputError("sublink indices out of range")
    if not 0 <= generator < n:
        raise InputError("generator index out of range")
    if not is_characteristic(b, sub):
        raise NotCharacteristicError(f"sublink {sorted(sub)} is not characteristic")
    effective = sub ^ diagram.zset
    rho = []
    for i in range(n):
        lk = sum(b[i][j] for j in effective)
        num = diagram.rot[i] + lk
        if num % 2 != 0:
            raise ParityError(
                f"component {i}: rho = ({diagram.rot[i]} + {lk})/2 is not an integer"
            )
        rho.append(num // 2)
    gen_vec = [int(i == generator) for i in range(n)]
    return express_in_generator(b, rho, gen_vec)


def gamma_theoretical(curve):
    """(1 - arithmetic genus) times the meridian class, mod self-intersection.

    The concave-boundary invariant of a rational cuspidal curve germ with
    respect to the spin structure of the non-empty characteristic sublink.
    """
    n = curve.self_intersection
    if n <= 0:
        raise InputError("self-intersection must be positive")
    if curve.geometric_genus != 0:
        raise InputError("theoretical value applies to rational curves")
    return Residue(1 - arithmetic_genus(curve), n)


def rotation_range(weight):
    """Admissible rotation numbers of a Legendrian unknot with tb = weight + 1:
    weight + 2, weight + 4, ..., -weight - 2."""
    w = int(weight)
    if w > -2:
        raise InputError("rotation ranges are defined for weights <= -2")
    return tuple(range(w + 2, -w - 1, 2))


def rotation_lattice(graph):
    """All rotation vectors of a plumbing, one entry per vertex."""
    ranges = [rotation_range(w) for w in graph.weights]
    return [tuple(v) for v in product(*ranges)]


def theta(graph, rot, q_inverse=None):
    """Exact grading (v Q^{-1} v^T - 2 #vertices - 3 sign Q) / 4."""
    q = intersection_matrix(graph)
    n = graph.size
    if len(rot) != n:
        raise InputError("one rotation number per vertex required")
    qinv = inverse_rational(q) if q_inverse is None else q_inverse
    v = [Fraction(int(r)) for r in rot]
    c1_sq = sum(v[i] * qinv[i][j] * v[j] for i in range(n) for j in range(n))
    return (c1_sq - 2 * n - 3 * signature(q)) / 4


def minimize_theta(graph):
    """Exact minimum of theta over the rotation lattice and its full argmin set."""
    q = intersection_matrix(graph)
    qinv = inverse_rational(q)
    best = None
    argmin = []
    for v in rotation_lattice(graph):
        val = theta(graph, v, q_inverse=qinv)
        if best is None or val < best:
            best = val
            argmin = [v]
        elif val == best:
            argmin.append(v)
    return best, tuple(sorted(argmin))

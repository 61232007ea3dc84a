"""Exact integer and rational linear algebra over intersection lattices.

Everything here runs on arbitrary-precision Python integers and
:class:`fractions.Fraction`; no floating point appears anywhere.  The main
consumers are intersection forms of plumbings (determinants, inverses,
definiteness), first-homology computations presented by linking matrices
(Smith normal form, cokernels), and orthogonal complements inside the
standard lattice Z<h, e_0, ..., e_{N-1}> with form diag(1, -1, ..., -1).

Conventions: matrices are sequences of equal-length rows.  Exceptional-class
indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import ContractError, InputError


class SingularMatrixError(InputError):
    """Matrix has determinant zero where an inverse was required."""


class InfiniteCokernelError(InputError):
    """Cokernel has a free part, so residues modulo the group order make no sense."""


class GeneratorError(InputError):
    """The proposed generator does not generate the cokernel."""


def _as_rows(m):
    rows = [list(map(int, row)) for row in m]
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise InputError("ragged matrix")
    return rows


def _require_square(rows):
    if rows and len(rows[0]) != len(rows):
        raise InputError("square matrix required")


def _require_symmetric(rows):
    _require_square(rows)
    n = len(rows)
    for i in range(n):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise InputError("symmetric matrix required")


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m = len(a), len(b[0]) if b else 0
    k = len(b)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mat_vec(a, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def determinant(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = _as_rows(m)
    _require_square(a)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse_rational(m):
    """Exact inverse as a matrix of Fractions.  Raises on singular input."""
    a = [[Fraction(x) for x in row] for row in _as_rows(m)]
    _require_square(a)
    n = len(a)
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def smith_normal_form(m):
    """Smith normal form with transition matrices.

    Returns (U, D, V) with U*m*V = D, U and V unimodular, and the diagonal of
    D a non-negative divisibility chain d_1 | d_2 | ...
    """
    a = _as_rows(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, c):
        # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, c):
        # col_i += c * col_j
        for row in a:
            row[i] += c * row[j]
        for row in v:
            row[i] += c * row[j]

    t = 0
    while t < min(rows, cols):
        # move a nonzero entry of minimal absolute value into the pivot slot
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != t:
            swap_rows(t, piv[0])
        if piv[1] != t:
            swap_cols(t, piv[1])
        while True:
            p = a[t][t]
            i = next((r for r in range(t + 1, rows) if a[r][t] != 0), None)
            if i is not None:
                q = a[i][t] // p
                add_row(i, t, -q)
                if a[i][t] != 0:  # remainder is smaller; make it the pivot
                    swap_rows(t, i)
                continue
            j = next((c for c in range(t + 1, cols) if a[t][c] != 0), None)
            if j is not None:
                q = a[t][j] // p
                add_col(j, t, -q)
                if a[t][j] != 0:
                    swap_cols(t, j)
                continue
            bad = next(
                ((r, c) for r in range(t + 1, rows) for c in range(t + 1, cols) if a[r][c] % p != 0),
                None,
            )
            if bad is None:
                break
            # pull a row with a non-divisible entry into the pivot row and re-reduce
            add_row(t, bad[0], 1)
        t += 1

    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return u, a, v


def elementary_divisors(m):
    """Diagonal of the Smith normal form (including 1s and trailing 0s)."""
    _, d, _ = smith_normal_form(m)
    n = min(len(d), len(d[0]) if d else 0)
    return tuple(d[i][i] for i in range(n))


def cokernel(m):
    """Elementary divisor list of Z^n / (column span of m).

    Square presentation matrices only; entry 0 marks a free summand.
    """
    a = _as_rows(m)
    _require_square(a)
    return elementary_divisors(a)


@dataclass(frozen=True)
class Residue:
    """An element of Z/modulus, stored with a canonical representative."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus <= 0:
            raise InputError("modulus must be positive")
        object.__setattr__(self, "value", self.value % self.modulus)

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


def _crt_merge(t1, m1, t2, m2):
    g = gcd(m1, m2)
    if (t2 - t1) % g != 0:
        return None
    lcm = m1 // g * m2
    k = ((t2 - t1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g) if m2 // g > 1 else 0
    return ((t1 + m1 * k) % lcm, lcm)


def express_in_generator(m, element, generator):
    """Write `element` as an integer multiple of `generator` in coker(m).

    Here coker(m) = Z^n / m Z^n with m square.  Raises if the cokernel is
    infinite or the generator does not generate.  Returns a Residue modulo
    the group order.
    """
    a = _as_rows(m)
    _require_square(a)
    u, d, _ = smith_normal_form(a)
    n = len(a)
    divisors = [d[i][i] for i in range(n)]
    if any(di == 0 for di in divisors):
        raise InfiniteCokernelError("cokernel is infinite")
    order = 1
    for di in divisors:
        order *= di
    gen = mat_vec(u, list(map(int, generator)))
    elem = mat_vec(u, list(map(int, element)))
    # order of the generator: lcm of d_i / gcd(gen_i, d_i)
    gen_order = 1
    for gi, di in zip(gen, divisors):
        oi = di // gcd(gi, di)
        gen_order = gen_order // gcd(gen_order, oi) * oi
    if gen_order != order:
        raise GeneratorError("generator does not generate the cokernel")
    t, mod = 0, 1
    for gi, ei, di in zip(gen, elem, divisors):
        if di == 1:
            continue
        g = gcd(gi, di)
        if ei % g != 0:
            raise ContractError("element not a multiple of a generating element")
        di2 = di // g
        ti = (ei // g) * pow(gi // g, -1, di2) % di2 if di2 > 1 else 0
        merged = _crt_merge(t, mod, ti, di2)
        if merged is None:
            raise ContractError("inconsistent congruences for a generating element")
        t, mod = merged
    if mod != order:
        raise ContractError("congruences did not pin the residue modulo the group order")
    return Residue(t, order)


def is_negative_definite(m):
    """Sylvester test: leading principal minors alternate sign starting negative."""
    a = _as_rows(m)
    _require_symmetric(a)
    for k in range(1, len(a) + 1):
        minor = determinant([row[:k] for row in a[:k]])
        if (-1) ** k * minor <= 0:
            return False
    return True


def signature(m):
    """Exact signature of a symmetric matrix via congruence diagonalization."""
    a = [[Fraction(x) for x in row] for row in _as_rows(m)]
    _require_symmetric(a)
    n = len(a)

    def sym_add(i, j):
        # basis change x_i -> x_i + x_j; row then column
        a[i] = [x + y for x, y in zip(a[i], a[j])]
        for row in a:
            row[i] += row[j]

    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                off = next(
                    ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0),
                    None,
                )
                if off is None:
                    break  # remaining block is zero
                sym_add(off[0], off[1])
                if off[0] != k:
                    a[k], a[off[0]] = a[off[0]], a[k]
                    for row in a:
                        row[k], row[off[0]] = row[off[0]], row[k]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for r in range(k + 1, n):
            if a[r][k] != 0:
                f = a[r][k] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
                for row in a:
                    row[r] -= f * row[k]
    return pos - neg


class HomologyClass:
    """A class a0*h + sum c_i e_i with h^2 = 1 and e_i^2 = -1.

    Only nonzero exceptional coefficients are stored; indices are arbitrary
    non-negative integers.
    """

    __slots__ = ("a0", "_e")

    def __init__(self, a0, coeffs=None):
        self.a0 = int(a0)
        items = {}
        if coeffs:
            for i, c in dict(coeffs).items():
                if int(i) < 0:
                    raise InputError("exceptional indices must be non-negative")
                if int(c) != 0:
                    items[int(i)] = int(c)
        self._e = items

    def coeff(self, i):
        return self._e.get(i, 0)

    @property
    def coeffs(self):
        return dict(self._e)

    @property
    def support(self):
        return frozenset(self._e)

    def dot(self, other):
        s = self.a0 * other.a0
        small, big = (self._e, other._e) if len(self._e) <= len(other._e) else (other._e, self._e)
        for i, c in small.items():
            s -= c * big.get(i, 0)
        return s

    @property
    def square(self):
        return self.dot(self)

    def key(self):
        return (self.a0, tuple(sorted(self._e.items())))

    def __eq__(self, other):
        return isinstance(other, HomologyClass) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __neg__(self):
        return HomologyClass(-self.a0, {i: -c for i, c in self._e.items()})

    def __repr__(self):
        parts = []
        if self.a0 != 0:
            parts.append(f"{self.a0}h" if self.a0 != 1 else "h")
        for i, c in sorted(self._e.items()):
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            term = f"e{i}" if mag == 1 else f"{mag}e{i}"
            parts.append(f"{sign}{term}")
        if not parts:
            return "0"
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out


H = HomologyClass(1)


def e_class(i):
    return HomologyClass(0, {i: 1})


def class_from_vector(vec):
    """Build a HomologyClass from the dense row [a0, c_0, ..., c_{n-1}]."""
    return HomologyClass(vec[0], {i: c for i, c in enumerate(vec[1:])})


def class_to_vector(cls, n):
    if any(i >= n for i in cls.support):
        raise InputError("class uses an exceptional index outside the given range")
    return [cls.a0] + [cls.coeff(i) for i in range(n)]


def orthogonal_complement(classes, n_exceptional=None):
    """Saturated integral basis of the sublattice orthogonal to the classes.

    The ambient lattice is Z<h, e_0, ..., e_{n-1}> with the blow-up form
    diag(1, -1, ..., -1).  Kernels of integer matrices are automatically
    saturated, so the basis generates the full orthogonal sublattice.
    """
    classes = list(classes)
    used = set()
    for c in classes:
        used |= c.support
    n = (max(used) + 1 if used else 0) if n_exceptional is None else int(n_exceptional)
    # v is orthogonal to c iff  c.a0*v_h - sum c_i v_i = 0
    rows = [[c.a0] + [-c.coeff(i) for i in range(n)] for c in classes]
    if not rows:
        basis_vecs = [tuple(int(i == j) for i in range(n + 1)) for j in range(n + 1)]
    else:
        u, d, v = smith_normal_form(rows)
        k = len(rows)
        dim = n + 1
        basis_vecs = []
        for j in range(dim):
            dj = d[j][j] if j < min(k, dim) else 0
            if dj == 0:
                basis_vecs.append(tuple(v[i][j] for i in range(dim)))
    out = []
    for vec in basis_vecs:
        lead = next((x for x in vec if x != 0), 1)
        if lead < 0:
            vec = tuple(-x for x in vec)
        out.append(class_from_vector(vec))
    return out


def gram_matrix(classes):
    cl = list(classes)
    return [[a.dot(b) for b in cl] for a in cl]


def isqrt_exact(n):
    """Integer square root, raising unless n is a perfect square."""
    if n < 0:
        raise InputError("negative number has no integer square root")
    r = isqrt(n)
    if r * r != n:
        raise InputError(f"{n} is not a perfect square")
    return r

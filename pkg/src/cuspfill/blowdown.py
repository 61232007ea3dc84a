"""Linear rational blow-down recognition and homological obstruction search
inside filling complements.

A linear plumbing of spheres can be rationally blown down exactly when its
weight chain arises from (-4) by iterated 2-expansions, the move taking
(-a_1, ..., -a_{n-1}) to (-a_1 - 1, ..., -a_{n-1}, -2) or to
(-2, -a_1, ..., -a_{n-1} - 1); the boundaries are the lens spaces
L(p^2, pq-1) and the chain is the negative continued fraction of
p^2/(pq-1).  Recognition runs the moves backwards: strip a terminal -2 and
soften the opposite end.

Whether such a plumbing embeds in a given filling is tested homologically:
the candidate sphere classes in the filling are the classes of the ambient
blow-up lattice orthogonal to the configuration (one coefficient +1, the
rest 0 or -1), and an embedding is an assignment of those classes to the
plumbing vertices matching weights and adjacency.  An empty search result
certifies a homological obstruction; it never certifies existence of a
geometric embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError
from .lattices import (
    HomologyClass,
    determinant,
    elementary_divisors,
    gram_matrix,
    isqrt_exact,
    orthogonal_complement,
    smith_normal_form,
)
from .plumbing import PlumbingGraph, intersection_matrix


def _check_chain(weights):
    w = tuple(int(x) for x in weights)
    if not w:
        raise InputError("chain must be non-empty")
    if any(x > -2 for x in w):
        raise InputError("chain weights must be <= -2")
    return w


@lru_cache(maxsize=None)
def _reducible(w):
    if w == (-4,):
        return True
    if len(w) < 2:
        return False
    if w[-1] == -2 and w[0] <= -3 and _reducible((w[0] + 1,) + w[1:-1]):
        return True
    if w[0] == -2 and w[-1] <= -3 and _reducible(w[1:-1] + (w[-1] + 1,)):
        return True
    return False


def is_linear_blowdownable(weights):
    """True iff the chain is an iterated 2-expansion of (-4)."""
    return _reducible(_check_chain(weights))


def expand_chains(max_length):
    """Forward generation of every 2-expansion of (-4) up to the given length."""
    out = {(-4,)}
    frontier = {(-4,)}
    while frontier:
        nxt = set()
        for w in frontier:
            if len(w) >= max_length:
                continue
            a = (w[0] - 1,) + w[1:] + (-2,)
            b = (-2,) + w[:-1] + (w[-1] - 1,)
            for c in (a, b):
                if c not in out:
                    out.add(c)
                    nxt.add(c)
        frontier = nxt
    return out


def chain_determinant_p(weights):
    """The p with |det| = p^2 for a blow-downable chain (boundary L(p^2, pq-1))."""
    w = _check_chain(weights)
    if not is_linear_blowdownable(w):
        raise InputError("chain is not an iterated 2-expansion of (-4)")
    n = len(w)
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = w[i]
        if i + 1 < n:
            mat[i][i + 1] = 1
            mat[i + 1][i] = 1
    return isqrt_exact(abs(determinant(mat)))


def complement_sphere_classes(config_classes, n_exceptional=None):
    """All candidate symplectic sphere classes in the complement of the
    configuration: lattice vectors orthogonal to every configuration class
    whose coefficients are one +1 and otherwise 0 or -1 (h-coefficient zero,
    forced by orthogonality to the line class).

    The configuration must contain the line class h; squares of the output
    classes are always <= -1.
    """
    classes = list(config_classes)
    if not any(c.a0 == 1 and not c.support for c in classes):
        raise InputError("configuration must contain the line class h")
    used = set()
    for c in classes:
        used |= c.support
    n = (max(used) + 1 if used else 0) if n_exceptional is None else int(n_exceptional)
    cols = [[c.coeff(s) for s in range(n)] for c in classes]
    m = len(classes)
    # orthogonality: sum_s v_s * c_s = 0 for every configuration class
    lo = [[0] * (n + 1) for _ in range(m)]
    hi = [[0] * (n + 1) for _ in range(m)]
    for j in range(m):
        for s in range(n - 1, -1, -1):
            c = cols[j][s]
            lo[j][s] = lo[j][s + 1] + min(0, c, -c)
            hi[j][s] = hi[j][s + 1] + max(0, c, -c)

    out = []
    coeffs = [0] * n

    def rec(s, plus_used, sums):
        for j in range(m):
            if not sums[j] + lo[j][s] <= 0 <= sums[j] + hi[j][s]:
                return
        if s == n:
            if plus_used and all(x == 0 for x in sums):
                out.append(HomologyClass(0, dict(enumerate(coeffs))))
            return
        choices = [0, -1] if plus_used else [0, -1, 1]
        for v in choices:
            coeffs[s] = v
            rec(s + 1, plus_used or v == 1, [t + v * cols[j][s] for j, t in enumerate(sums)])
            coeffs[s] = 0

    rec(0, False, [0] * m)
    return sorted(out, key=lambda c: (-c.square, c.key()))


def classes_by_square(classes):
    groups = {}
    for c in classes:
        groups.setdefault(c.square, []).append(c)
    return groups


def find_plumbing_in_complement(config_classes, target, n_exceptional=None):
    """All assignments of complement sphere classes to the vertices of the
    target plumbing matching weights and adjacency.  An empty list certifies
    that the plumbing does not embed homologically."""
    if not isinstance(target, PlumbingGraph):
        raise InputError("target must be a PlumbingGraph")
    spheres = complement_sphere_classes(config_classes, n_exceptional)
    by_square = classes_by_square(spheres)
    n = target.size
    adj = [[False] * n for _ in range(n)]
    for i, j in target.edges:
        adj[i][j] = adj[j][i] = True
    degs = target.degrees()
    start = max(range(n), key=lambda i: (degs[i], -i))
    order = [start]
    seen = {start}
    while len(order) < n:
        nxt = next(
            i for i in range(n) if i not in seen and any(adj[i][j] for j in order)
        )
        order.append(nxt)
        seen.add(nxt)

    assign = [None] * n
    results = []

    def rec(idx):
        if idx == n:
            results.append(tuple(assign))
            return
        v = order[idx]
        for cand in by_square.get(target.weights[v], ()):
            ok = True
            for w in order[:idx]:
                want = 1 if adj[v][w] else 0
                if cand.dot(assign[w]) != want:
                    ok = False
                    break
            if ok:
                assign[v] = cand
                rec(idx + 1)
                assign[v] = None

    rec(0)
    return sorted(results, key=lambda sol: tuple(c.key() for c in sol))


@dataclass(frozen=True)
class FillingHomology:
    b2: int
    gram: tuple[tuple[int, ...], ...]
    divisors: tuple[int, ...]


def filling_homology(config_classes, n_exceptional=None):
    """Second homology data of the filling complementary to the configuration:
    b2, the Gram matrix of the saturated orthogonal complement, and the
    elementary divisors of that Gram matrix."""
    classes = list(config_classes)
    used = set()
    for c in classes:
        used |= c.support
    n = (max(used) + 1 if used else 0) if n_exceptional is None else int(n_exceptional)
    rows = [[c.a0] + [c.coeff(s) for s in range(n)] for c in classes]
    _, d, _ = smith_normal_form(rows)
    rank = sum(1 for i in range(min(len(rows), n + 1)) if d[i][i] != 0)
    if rank != len(classes):
        raise InputError("configuration classes are linearly dependent")
    basis = orthogonal_complement(classes, n)
    b2 = (n + 1) - len(classes)
    if len(basis) != b2:
        raise InputError("complement rank does not match n + 1 - k")
    gram = gram_matrix(basis)
    divisors = elementary_divisors(gram) if basis else ()
    return FillingHomology(
        b2, tuple(tuple(row) for row in gram), tuple(divisors)
    )

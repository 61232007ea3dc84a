"""Plumbing trees, negative continued fractions, and Seifert invariants of
torus-knot surgeries.

The 3-manifolds of interest are Y = -S^3_n(T(p,q)) for n > 0, n != pq.
These are small Seifert fibered spaces over S^2 with three exceptional
fibers whose orders are p, q and |n - pq|.  Expanding the three rational
surgery coefficients of the Seifert presentation as negative continued
fractions produces a star-shaped plumbing tree with central weight e0 and
one leg per exceptional fiber; the absolute value of the determinant of its
intersection matrix recovers n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ContractError, InputError
from .lattices import determinant
from .singularities import Cusp


@dataclass(frozen=True)
class PlumbingGraph:
    """Weighted tree: vertex weights plus edges between vertex indices."""

    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = len(self.weights)
        if n == 0:
            raise InputError("plumbing graph needs at least one vertex")
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        norm = []
        for i, j in self.edges:
            i, j = int(i), int(j)
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise InputError(f"bad edge ({i}, {j})")
            norm.append((min(i, j), max(i, j)))
        if len(set(norm)) != len(norm):
            raise InputError("duplicate edges")
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if len(norm) != n - 1:
            raise InputError("plumbing graph must be a tree")
        # connectivity check
        adj = {i: set() for i in range(n)}
        for i, j in norm:
            adj[i].add(j)
            adj[j].add(i)
        seen = {0}
        stack = [0]
        while stack:
            for k in adj[stack.pop()]:
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
        if len(seen) != n:
            raise InputError("plumbing graph must be connected")

    @property
    def size(self):
        return len(self.weights)

    def degrees(self):
        deg = [0] * self.size
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


def linear_chain(weights):
    """Linear plumbing with the given weight sequence."""
    w = tuple(weights)
    return PlumbingGraph(w, tuple((i, i + 1) for i in range(len(w) - 1)))


def intersection_matrix(graph):
    """Weights on the diagonal, 1 for each edge, 0 elsewhere."""
    n = graph.size
    q = [[0] * n for _ in range(n)]
    for i, w in enumerate(graph.weights):
        q[i][i] = w
    for i, j in graph.edges:
        q[i][j] = 1
        q[j][i] = 1
    return q


def neg_continued_fraction(num, den):
    """Coefficients [a_1, ..., a_k], all >= 2, with
    num/den = a_1 - 1/(a_2 - 1/(...)).  Requires num > den >= 1 coprime."""
    num, den = int(num), int(den)
    if not (num > den >= 1):
        raise InputError("need num > den >= 1")
    if gcd(num, den) != 1:
        raise InputError("num and den must be coprime")
    out = []
    while den > 0:
        a = -((-num) // den)  # ceiling division
        out.append(a)
        num, den = den, a * den - num
    if any(a < 2 for a in out):
        raise ContractError("continued fraction produced a coefficient < 2")
    return out


def eval_neg_continued_fraction(coeffs):
    """Evaluate [a_1, ..., a_k] back to a Fraction."""
    val = None
    for a in reversed(list(coeffs)):
        val = Fraction(a) if val is None else a - 1 / val
    if val is None:
        raise InputError("empty coefficient list")
    return val


@dataclass(frozen=True)
class SeifertData:
    """Small Seifert fibered space (e0; r1, r2, r3), ratios normalized to
    (0, 1) and stored in descending order."""

    e0: int
    ratios: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        ratios = tuple(sorted((Fraction(r) for r in self.ratios), reverse=True))
        if len(ratios) != 3:
            raise InputError("exactly three exceptional fibers expected")
        if any(not (0 < r < 1) for r in ratios):
            raise InputError("normalized ratios must lie strictly between 0 and 1")
        object.__setattr__(self, "ratios", ratios)
        object.__setattr__(self, "e0", int(self.e0))


def euler_number(seifert):
    return seifert.e0 + sum(seifert.ratios, Fraction(0))


def seifert_from_torus_surgery(p, q, n):
    """Seifert data of Y = -S^3_n(T(p,q)).

    The fibration of S^3 with T(p,q) as a regular fiber has unnormalized
    Seifert pairs (p, p') and (q, q') with p'q + q'p = 1; n-surgery on the
    fiber adds the pair (n - pq, 1).  Reversing orientation and normalizing
    each ratio into (0, 1) yields the data returned here.  The three ratio
    denominators are p, q and |n - pq|, and e0 + r1 + r2 + r3 equals
    n / (pq(n - pq)).
    """
    cusp = Cusp(p, q)
    p, q = cusp.p, cusp.q
    n = int(n)
    if n <= 0:
        raise InputError("surgery coefficient must be positive")
    if n == p * q:
        raise InputError("n = pq does not give a Seifert space over S^2 in this form")
    if abs(n - p * q) == 1:
        raise InputError("|n - pq| = 1 gives a lens space, not three exceptional fibers")
    p_prime = pow(q, -1, p)
    q_prime = (1 - p_prime * q) // p
    pairs = [(p, p_prime), (q, q_prime), (n - p * q, 1)]
    ratios = []
    for alpha, beta in pairs:
        if alpha < 0:
            alpha, beta = -alpha, -beta
        ratios.append(Fraction(beta % alpha, alpha))
    target = Fraction(n, p * q * (n - p * q))
    e0 = target - sum(ratios)
    if e0.denominator != 1:
        raise ContractError("Euler number bookkeeping failed to produce an integer e0")
    return SeifertData(int(e0), tuple(ratios))


def plumbing_from_seifert(seifert):
    """Star-shaped plumbing: central vertex e0, one leg per ratio.

    The leg for ratio r carries the negated negative-continued-fraction
    coefficients of 1/r, attached center-outward.
    """
    weights = [seifert.e0]
    edges = []
    for r in seifert.ratios:
        leg = neg_continued_fraction(r.denominator, r.numerator)
        prev = 0
        for a in leg:
            weights.append(-a)
            edges.append((prev, len(weights) - 1))
            prev = len(weights) - 1
    return PlumbingGraph(tuple(weights), tuple(edges))


def _leg_weights(graph, start, seen):
    leg = []
    adj = {i: [] for i in range(graph.size)}
    for i, j in graph.edges:
        adj[i].append(j)
        adj[j].append(i)
    cur = start
    while True:
        leg.append(graph.weights[cur])
        seen.add(cur)
        nxt = [k for k in adj[cur] if k not in seen]
        if not nxt:
            return leg
        if len(nxt) > 1:
            raise InputError("not a star-shaped graph")
        cur = nxt[0]


def star_form(graph):
    """Canonical form of a star-shaped or linear plumbing tree.

    Stars with one branch vertex become (center weight, sorted legs); chains
    become their weight sequence up to reversal.  Raises on anything else.
    """
    degs = graph.degrees()
    centers = [i for i, d in enumerate(degs) if d >= 3]
    if len(centers) > 1:
        raise InputError("graph has more than one branch vertex")
    adj = {i: [] for i in range(graph.size)}
    for i, j in graph.edges:
        adj[i].append(j)
        adj[j].append(i)
    if centers:
        c = centers[0]
        seen = {c}
        legs = sorted(tuple(_leg_weights(graph, k, set(seen))) for k in adj[c])
        return ("star", graph.weights[c], tuple(legs))
    if graph.size == 1:
        return ("chain", (graph.weights[0],))
    ends = [i for i, d in enumerate(degs) if d == 1]
    seq = tuple(_leg_weights(graph, ends[0], set()))
    return ("chain", min(seq, tuple(reversed(seq))))


def star_isomorphic(g1, g2):
    """Isomorphism test restricted to star-shaped / linear trees."""
    return star_form(g1) == star_form(g2)

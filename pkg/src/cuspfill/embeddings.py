"""Enumeration of homological embeddings of curve configurations into
blow-ups of the projective plane.

A configuration spec prescribes pairwise algebraic intersection numbers for
k spherical components, one of which is required to represent the line class
h.  Each remaining component must be represented by a class allowed by the
adjunction constraints for embedded symplectic spheres:

    a0 = 0:  exactly one coefficient +1, all others in {0, -1};
    a0 = 1, 2:  all exceptional coefficients in {0, -1};
    a0 = 3:  one coefficient -2, all others in {0, -1};

with the count of -1s pinned by the required self-intersection (classes with
a0 > 3 never arise here and are rejected).  On top of the pattern shapes the
search enforces all pairwise products and the positivity rule that no
exceptional class appears with coefficient +1 in two distinct components.

Solutions are reported up to relabeling of the exceptional classes: the
search only ever allocates fresh indices in packed order, and every recorded
solution is put into a canonical form by sorting exceptional indices by
their coefficient column across the components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .lattices import HomologyClass

H_CLASS = HomologyClass(1)


@dataclass(frozen=True)
class ConfigurationSpec:
    """Required pairwise intersections T (self-intersections on the diagonal)
    plus the index of the component representing the line."""

    intersections: tuple[tuple[int, ...], ...]
    line: int

    def __post_init__(self):
        t = tuple(tuple(int(x) for x in row) for row in self.intersections)
        k = len(t)
        if k == 0 or any(len(row) != k for row in t):
            raise InputError("intersection matrix must be square and non-empty")
        for i in range(k):
            for j in range(i):
                if t[i][j] != t[j][i]:
                    raise InputError("intersection matrix must be symmetric")
                if t[i][j] < 0:
                    raise InputError("off-diagonal intersection numbers must be >= 0")
        if not 0 <= self.line < k:
            raise InputError("line index out of range")
        if t[self.line][self.line] != 1:
            raise InputError("line component must have self-intersection +1")
        object.__setattr__(self, "intersections", t)

    @property
    def size(self):
        return len(self.intersections)


@dataclass(frozen=True)
class SpherePattern:
    """Coefficient pattern of a sphere class up to index permutation."""

    a0: int
    special: int | None  # +1 for a0 = 0, -2 for a0 = 3, else None
    minus_ones: int

    @property
    def slots(self):
        return self.minus_ones + (1 if self.special is not None else 0)


def _pattern_params(a0, self_int):
    if a0 < 0:
        raise InputError("a0 must be non-negative")
    if a0 > 3:
        raise InputError(f"classes with a0 = {a0} > 3 are not supported")
    if a0 == 0:
        special, k = 1, -1 - self_int
    elif a0 == 3:
        special, k = -2, 5 - self_int
    else:
        special, k = None, a0 * a0 - self_int
    return (special, k) if k >= 0 else None


def sphere_class_candidates(a0, self_int, n_max):
    """Sphere patterns with the given h-degree and self-intersection, as a
    list (empty or a single pattern; empty when no pattern fits in n_max)."""
    params = _pattern_params(a0, self_int)
    if params is None:
        return []
    special, k = params
    pat = SpherePattern(a0, special, k)
    if pat.slots > n_max:
        return []
    return [pat]


class EmbeddingSolution:
    """An assignment of homology classes to the components of a spec."""

    __slots__ = ("classes",)

    def __init__(self, classes):
        self.classes = tuple(classes)

    @property
    def n_used(self):
        used = set()
        for c in self.classes:
            used |= c.support
        return len(used)

    def key(self):
        return tuple(c.key() for c in self.classes)

    def __eq__(self, other):
        return isinstance(other, EmbeddingSolution) and self.classes == other.classes

    def __hash__(self):
        return hash(self.classes)

    def __repr__(self):
        return "EmbeddingSolution[" + ", ".join(repr(c) for c in self.classes) + "]"


def canonical_form(solution):
    """Relabel exceptional indices by the lexicographic signature of their
    coefficient column across the components.  Two solutions differ by an
    index relabeling iff their canonical forms coincide."""
    classes = solution.classes
    used = set()
    for c in classes:
        used |= c.support
    columns = {s: tuple(c.coeff(s) for c in classes) for s in used}
    ordered = sorted(used, key=lambda s: columns[s], reverse=True)
    relabel = {s: i for i, s in enumerate(ordered)}
    new_classes = [
        HomologyClass(c.a0, {relabel[i]: v for i, v in c.coeffs.items()}) for c in classes
    ]
    return EmbeddingSolution(new_classes)


def _component_order(spec):
    t = spec.intersections
    k = spec.size
    order = [spec.line]
    remaining = set(range(k)) - {spec.line}
    while remaining:
        def rank(i):
            links = sum(1 for j in order if t[i][j] != 0)
            return (-t[i][spec.line], -links, i)

        nxt = min(remaining, key=rank)
        order.append(nxt)
        remaining.remove(nxt)
    return order


def _placements(pattern, targets, assigned, used, n_max, plus_slots):
    """Concrete coefficient vectors for a new component.

    `assigned` holds the already-placed vectors (length n_max) in the same
    order as `targets`, the required products against them.  Coefficients on
    the `used` slots are enumerated with exact product checks; leftover -1s
    and an unplaced special coefficient go onto fresh slots in packed order.

    Slots whose coefficient columns agree across all assigned classes are
    interchangeable, so assignments are canonically restricted to be
    non-increasing within each such block; residual orbit duplicates are
    collapsed later by canonical_form.  Yields (vector, new_used, plus_slot).
    """
    special = pattern.special
    k_minus = pattern.minus_ones
    a0 = pattern.a0
    m = len(assigned)
    base = [a0 * vec[0] for vec in assigned]  # vec[0] stores the partner's a0
    cols = [vec[1] for vec in assigned]  # slot coefficient lists

    # symmetry breaking: latest earlier slot with an identical column
    prev_in_block = [None] * used
    last_seen = {}
    for s in range(used):
        col = tuple(cols[j][s] for j in range(m))
        prev_in_block[s] = last_seen.get(col)
        last_seen[col] = s

    # per-slot contribution options to each running product
    lo = [[0] * (used + 1) for _ in range(m)]
    hi = [[0] * (used + 1) for _ in range(m)]
    for j in range(m):
        for s in range(used - 1, -1, -1):
            c = cols[j][s]
            opts = [0, c]
            if special is not None:
                opts.append(-special * c)
            lo[j][s] = lo[j][s + 1] + min(opts)
            hi[j][s] = hi[j][s + 1] + max(opts)

    coeffs = [0] * used
    out = []

    def rec(s, minus_left, special_left, dots):
        for j in range(m):
            if not dots[j] + lo[j][s] <= targets[j] <= dots[j] + hi[j][s]:
                return
        if s == used:
            fresh = minus_left + (1 if special_left else 0)
            if used + fresh > n_max:
                return
            vec = coeffs + [0] * fresh
            nxt = used
            plus_slot = None
            if special_left:
                vec[nxt] = special
                if special == 1:
                    plus_slot = nxt
                nxt += 1
            elif special == 1:
                plus_slot = coeffs.index(1)
            for _ in range(minus_left):
                vec[nxt] = -1
                nxt += 1
            out.append((vec, used + fresh, plus_slot))
            return
        choices = [0]
        if minus_left:
            choices.append(-1)
        if special_left and not (special == 1 and s in plus_slots):
            choices.append(special)
        cap = coeffs[prev_in_block[s]] if prev_in_block[s] is not None else None
        for v in choices:
            if cap is not None and v > cap:
                continue
            coeffs[s] = v
            rec(
                s + 1,
                minus_left - (v == -1),
                special_left and v != special,
                [d - v * cols[j][s] for j, d in enumerate(dots)],
            )
            coeffs[s] = 0

    rec(0, k_minus, special is not None, base)
    return out


def enumerate_embeddings(spec, n_max=None):
    """All solutions of the configuration spec up to index relabeling,
    canonicalized and sorted (by number of exceptional classes used, then by
    the class tuples).  An empty list is a definite answer: no homological
    embedding exists within n_max exceptional classes."""
    t = spec.intersections
    k = spec.size
    params = []
    for i in range(k):
        p = _pattern_params(t[i][spec.line], t[i][i])
        if p is None:
            return []
        params.append(SpherePattern(t[i][spec.line], p[0], p[1]))
    if n_max is None:
        n_max = sum(p.slots for p in params)
    patterns = []
    for i in range(k):
        cands = sphere_class_candidates(t[i][spec.line], t[i][i], n_max)
        if not cands:
            return []
        patterns.append(cands[0])

    order = _component_order(spec)
    vecs = [None] * k
    found = {}

    def rec(idx, used, plus_slots):
        if idx == k:
            classes = [
                HomologyClass(patterns[i].a0, dict(enumerate(vecs[i][1]))) for i in range(k)
            ]
            sol = canonical_form(EmbeddingSolution(classes))
            found[sol.key()] = sol
            return
        i = order[idx]
        targets = [t[i][j] for j in order[:idx]]
        assigned = [vecs[j] for j in order[:idx]]
        for vec, new_used, plus_slot in _placements(
            patterns[i], targets, assigned, used, n_max, plus_slots
        ):
            vecs[i] = (patterns[i].a0, vec + [0] * (n_max - len(vec)))
            new_plus = plus_slots | {plus_slot} if plus_slot is not None else plus_slots
            rec(idx + 1, new_used, new_plus)
            vecs[i] = None

    rec(0, 0, frozenset())
    sols = sorted(found.values(), key=lambda s: (s.n_used, s.key()))
    return sols


def solutions_by_n_used(solutions):
    groups = {}
    for sol in solutions:
        groups.setdefault(sol.n_used, []).append(sol)
    return groups


def verify_solution(spec, solution):
    """Recheck every constraint of the spec against a proposed solution.

    Returns (True, None) or (False, message) naming the first violation.
    """
    t = spec.intersections
    k = spec.size
    classes = solution.classes
    if len(classes) != k:
        return False, f"expected {k} classes, got {len(classes)}"
    if classes[spec.line] != H_CLASS:
        return False, f"component {spec.line} must be the line class h"
    for i, c in enumerate(classes):
        if c.a0 < 0 or c.a0 > 3:
            return False, f"component {i}: a0 = {c.a0} out of range"
        vals = sorted(c.coeffs.values())
        plus = [v for v in vals if v > 0]
        if c.a0 == 0:
            if plus != [1] or any(v not in (1, -1) for v in vals):
                return False, f"component {i}: not of the form e_i - sum e_j"
        elif c.a0 == 3:
            if vals.count(-2) != 1 or any(v not in (-1, -2) for v in vals):
                return False, f"component {i}: a0 = 3 class needs a single -2"
        else:
            if any(v != -1 for v in vals):
                return False, f"component {i}: coefficients must be 0 or -1"
        adj = sum(v * v + v for v in vals)
        if adj != 2 + c.a0 * c.a0 - 3 * c.a0:
            return False, f"component {i}: adjunction count violated"
    for i in range(k):
        for j in range(i + 1):
            got = classes[i].dot(classes[j])
            if got != t[i][j]:
                return False, f"product of components {j} and {i}: {got} != {t[i][j]}"
    for i in range(k):
        for j in range(i):
            shared = classes[i].support & classes[j].support
            for s in shared:
                if classes[i].coeff(s) == 1 and classes[j].coeff(s) == 1:
                    return False, (
                        f"exceptional class {s} has coefficient +1 in components {j} and {i}"
                    )
    return True, None

"""Fixture registry: the configurations, plumbings, and expected results
that pin down the toolkit against published values.

Everything here is data.  The registry also carries the annotations that the
algorithms themselves cannot derive: which homological embeddings are known
to be geometrically realizable, which nonlinear plumbings admit rational
blow-downs (per the Bhupal-Stipsicz catalog), and literature notes for the
classified unicuspidal families.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .embeddings import ConfigurationSpec, EmbeddingSolution, canonical_form
from .errors import InputError
from .lattices import HomologyClass, class_from_vector
from .plumbing import PlumbingGraph


def _load(name):
    ref = resources.files("cuspfill").joinpath("data").joinpath(name)
    return json.loads(ref.read_text())


def load_plumbing(name):
    raw = _load(name)
    return PlumbingGraph(tuple(raw["weights"]), tuple(tuple(e) for e in raw["edges"]))


def surgery_plumbing(tag):
    """The negative-definite star plumbing bounding -S^3_{d^2}(T(p,q)) for
    the sporadic cases tag = 'e3' (64-surgery) or 'e6' (256-surgery)."""
    if tag not in ("e3", "e6"):
        raise InputError("tag must be 'e3' or 'e6'")
    return load_plumbing(f"plumbing_{tag}.json")


def resolution_config(tag):
    """Configuration spec of the resolved sporadic curve, tag 'e3' or 'e6'."""
    if tag not in ("e3", "e6"):
        raise InputError("tag must be 'e3' or 'e6'")
    raw = _load(f"config_{tag}.json")
    return ConfigurationSpec(tuple(tuple(r) for r in raw["T"]), raw["line"])


@dataclass(frozen=True)
class ExpectedEmbedding:
    label: str
    solution: EmbeddingSolution


def expected_embeddings(tag):
    """Published homological embedding lists for 'e3' or 'e6', canonicalized."""
    raw = _load("expected_embeddings.json")[tag]
    out = []
    for rec in raw:
        classes = [class_from_vector(row) for row in rec["classes"]]
        out.append(
            ExpectedEmbedding(rec["label"], canonical_form(EmbeddingSolution(classes)))
        )
    return out


def _chain_spec(base_entries, k_base, line, s, chain_start_self=-1):
    """Append a chain of `s`-dependent extra components: one sphere of
    self-intersection -1 through the line, then -2 spheres."""
    entries = dict(base_entries)
    k = k_base
    prev = None
    for step in range(s):
        idx = k
        k += 1
        if step == 0:
            entries[(idx, idx)] = chain_start_self
            entries[(line, idx)] = 1
        else:
            entries[(idx, idx)] = -2
            entries[(prev, idx)] = 1
        prev = idx
    t = [[0] * k for _ in range(k)]
    for (i, j), v in entries.items():
        t[i][j] = v
        t[j][i] = v
    return ConfigurationSpec(tuple(tuple(r) for r in t), line)


def low_genus_config(kind, s):
    """Resolved configuration of a low-genus rational cuspidal curve of
    self-intersection s, blown up until the proper transform is a +1 sphere.

    Kinds: genus1 (one (2,3) cusp, s >= 5); genus2_two_2_3 and genus2_2_5
    (s >= 9); genus3_3_4 (s >= 10); genus3_2_7, genus3_2_3_2_5 and
    genus3_three_2_3 (s >= 13).
    """
    if kind == "genus1":
        if s < 5:
            raise InputError("genus1 configurations need s >= 5")
        base = {(0, 0): 1, (1, 1): -1, (0, 1): 2}
        return _chain_spec(base, 2, 0, s - 5)
    if kind == "genus2_two_2_3":
        if s < 9:
            raise InputError("genus2 configurations need s >= 9")
        base = {(0, 0): 1, (1, 1): -1, (0, 1): 2, (2, 2): -1, (0, 2): 2}
        return _chain_spec(base, 3, 0, s - 9)
    if kind == "genus2_2_5":
        if s < 9:
            raise InputError("genus2 configurations need s >= 9")
        base = {(0, 0): 1, (1, 1): -1, (0, 1): 2, (2, 2): -2, (1, 2): 1}
        return _chain_spec(base, 3, 0, s - 9)
    if kind == "genus3_3_4":
        if s < 10:
            raise InputError("genus3_3_4 configurations need s >= 10")
        base = {(0, 0): 1, (1, 1): -1, (0, 1): 3}
        return _chain_spec(base, 2, 0, s - 10)
    if kind == "genus3_2_7":
        if s < 13:
            raise InputError("genus3 configurations need s >= 13")
        base = {
            (0, 0): 1,
            (1, 1): -1,
            (0, 1): 2,
            (2, 2): -2,
            (1, 2): 1,
            (3, 3): -2,
            (2, 3): 1,
        }
        return _chain_spec(base, 4, 0, s - 13)
    if kind == "genus3_2_3_2_5":
        if s < 13:
            raise InputError("genus3 configurations need s >= 13")
        base = {
            (0, 0): 1,
            (1, 1): -1,
            (0, 1): 2,
            (2, 2): -1,
            (0, 2): 2,
            (3, 3): -2,
            (2, 3): 1,
        }
        return _chain_spec(base, 4, 0, s - 13)
    if kind == "genus3_three_2_3":
        if s < 13:
            raise InputError("genus3 configurations need s >= 13")
        base = {
            (0, 0): 1,
            (1, 1): -1,
            (0, 1): 2,
            (2, 2): -1,
            (0, 2): 2,
            (3, 3): -1,
            (0, 3): 2,
        }
        return _chain_spec(base, 4, 0, s - 13)
    raise InputError(f"unknown configuration kind {kind!r}")


LOW_GENUS_KINDS = (
    "genus1",
    "genus2_two_2_3",
    "genus2_2_5",
    "genus3_3_4",
    "genus3_2_7",
    "genus3_2_3_2_5",
    "genus3_three_2_3",
)


def embedding_count_fixtures():
    """Expected homological embedding counts per (kind, s), with known
    geometric realizability annotations where they differ."""
    return _load("embedding_counts.json")


def geometric_annotation(kind, solution):
    """Registry verdict on whether a canonical homological embedding is known
    to be geometrically realizable.  Returns 'geometric', 'not-geometric',
    or 'unknown'; the only non-realizable case on record is the triple-cusp
    genus-3 family whose three conics share four exceptional classes."""
    if kind not in LOW_GENUS_KINDS and kind not in ("e3", "e6"):
        return "unknown"
    if kind == "genus3_three_2_3":
        conics = [c for c in solution.classes if c.a0 == 2]
        common = None
        for c in conics:
            common = c.support if common is None else common & c.support
        if common is not None and len(common) >= 4:
            return "not-geometric"
    return "geometric"


@dataclass(frozen=True)
class BlowdownRegistryEntry:
    name: str
    graph: PlumbingGraph
    citation: str


def nonlinear_blowdown_registry():
    """The two nonlinear plumbings used here that admit symplectic rational
    blow-downs, with their catalog citations."""
    out = []
    for rec in _load("blowdown_registry.json"):
        out.append(
            BlowdownRegistryEntry(rec["name"], load_plumbing(rec["plumbing"]), rec["citation"])
        )
    return out


FAMILY_NOTES = {
    "A": "unique minimal filling; contact boundary of a degree-(p+1) unicuspidal curve",
    "B": "two minimal fillings related by rationally blowing down a -4 sphere",
    "FIB": "lens-space boundary; fillings classified in the lens space literature",
    "FIBSQ": "connected sum of lens spaces; fillings classified in the lens space literature",
    "E3": "canonical contact boundary of the determinant-64 star plumbing",
    "E6": "canonical contact boundary of the determinant-256 star plumbing",
}


def family_note(tag):
    head = tag.split("_")[0]
    return FAMILY_NOTES.get(head, "")

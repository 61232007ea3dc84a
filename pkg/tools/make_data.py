"""Regenerate the JSON fixture data shipped in cuspfill/data/.

Run from the repository root:  python tools/make_data.py
"""

import json
import re
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "cuspfill" / "data"

TERM = re.compile(r"([+-]?)(\d*)(h|e(\d+))")


def parse_class(text):
    """Parse '3h-2e0-e1' into (a0, {index: coeff})."""
    a0 = 0
    coeffs = {}
    for sign, mag, sym, idx in TERM.findall(text.replace(" ", "")):
        val = int(mag) if mag else 1
        if sign == "-":
            val = -val
        if sym == "h":
            a0 += val
        else:
            coeffs[int(idx)] = coeffs.get(int(idx), 0) + val
    return a0, coeffs


def dense(text, n):
    a0, coeffs = parse_class(text)
    return [a0] + [coeffs.get(i, 0) for i in range(n)]


def chain_edges(indices):
    return [[a, b] for a, b in zip(indices, indices[1:])]


def write(name, obj):
    path = DATA / name
    path.write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")
    print("wrote", path)


# ---------------------------------------------------------------------------
# the two negative-definite star plumbings bounding -S^3_64(T(3,22)) and
# -S^3_256(T(6,43)), vertex order matching the published intersection matrices
write(
    "plumbing_e3.json",
    {
        "weights": [-2, -2, -3, -2, -2, -8],
        "edges": [[0, 1], [0, 2], [0, 3], [3, 4], [4, 5]],
    },
)
write(
    "plumbing_e6.json",
    {
        "weights": [-2, -2, -6, -2, -2, -2, -2, -2, -8],
        "edges": [[0, 1], [0, 2], [0, 3], [3, 4], [4, 5], [5, 6], [6, 7], [7, 8]],
    },
)


def symmetric_config(k, line, entries):
    t = [[0] * k for _ in range(k)]
    for (i, j), v in entries.items():
        t[i][j] = v
        t[j][i] = v
    return {"T": t, "line": line}


# E3 resolution: line, a -1 sphere meeting it with multiplicity 3, and a
# chain of six -2 spheres hanging off the -1 sphere.
e3_entries = {(0, 0): 1, (1, 1): -1, (0, 1): 3}
for c in range(2, 8):
    e3_entries[(c, c)] = -2
    e3_entries[(c - 1, c)] = 1
e3_entries[(0, 2)] = 0  # chain starts at the -1 sphere, not the line
e3_entries[(1, 2)] = 1
write("config_e3.json", symmetric_config(8, 0, e3_entries))

# E6 resolution: line, a -4 sphere meeting it with multiplicity 3, a -1
# sphere meeting both once, a 2-chain of -2s off the -1, a 6-chain off the -4.
e6_entries = {
    (0, 0): 1,
    (1, 1): -4,
    (0, 1): 3,
    (2, 2): -1,
    (0, 2): 1,
    (1, 2): 1,
    (3, 3): -2,
    (2, 3): 1,
    (4, 4): -2,
    (3, 4): 1,
    (5, 5): -2,
    (1, 5): 1,
}
for c in range(6, 11):
    e6_entries[(c, c)] = -2
    e6_entries[(c - 1, c)] = 1
write("config_e6.json", symmetric_config(11, 0, e6_entries))

# expected homological embeddings, in the component order of the configs
e3_expected = [
    {
        "label": "b6",
        "n": 13,
        "classes": [
            "h",
            "3h-2e0-e1-e2-e3-e4-e5-e6",
            "e1-e7",
            "e7-e8",
            "e8-e9",
            "e9-e10",
            "e10-e11",
            "e11-e12",
        ],
    },
    {
        "label": "b1",
        "n": 8,
        "classes": [
            "h",
            "3h-2e0-e1-e2-e3-e4-e5-e6",
            "e1-e7",
            "e2-e1",
            "e3-e2",
            "e4-e3",
            "e5-e4",
            "e6-e5",
        ],
    },
    {
        "label": "b0",
        "n": 7,
        "classes": [
            "h",
            "3h-2e0-e1-e2-e3-e4-e5-e6",
            "e0-e1",
            "e1-e2",
            "e2-e3",
            "e3-e4",
            "e4-e5",
            "e5-e6",
        ],
    },
]

CUBIC10 = "3h-2e0-e1-e2-e3-e4-e5-e6-e7-e8-e9"
CHAIN_FRESH = ["e1-e10", "e10-e11", "e11-e12", "e12-e13", "e13-e14", "e14-e15"]
CHAIN_BACK = ["e1-e10", "e2-e1", "e3-e2", "e4-e3", "e5-e4", "e6-e5"]
CHAIN_DOWN = ["e0-e1", "e1-e2", "e2-e3", "e3-e4", "e4-e5", "e5-e6"]

e6_expected = [
    {
        "label": "b9",
        "n": 19,
        "classes": ["h", CUBIC10, "h-e0-e16", "e16-e17", "e17-e18"] + CHAIN_FRESH,
    },
    {
        "label": "b6_disc64",
        "n": 16,
        "classes": ["h", CUBIC10, "h-e8-e9", "e8-e7", "e9-e8"] + CHAIN_FRESH,
    },
    {
        "label": "b6_disc256",
        "n": 16,
        "classes": ["h", CUBIC10, "h-e8-e9", "e8-e7", "e7-e6"] + CHAIN_FRESH,
    },
    {
        "label": "b4",
        "n": 14,
        "classes": ["h", CUBIC10, "h-e0-e11", "e11-e12", "e12-e13"] + CHAIN_BACK,
    },
    {
        "label": "b1",
        "n": 11,
        "classes": ["h", CUBIC10, "h-e8-e9", "e8-e7", "e9-e8"] + CHAIN_BACK,
    },
    {
        "label": "b0",
        "n": 10,
        "classes": ["h", CUBIC10, "h-e8-e9", "e8-e7", "e9-e8"] + CHAIN_DOWN,
    },
]


def densify(records):
    return [
        {
            "label": r["label"],
            "classes": [dense(c, r["n"]) for c in r["classes"]],
        }
        for r in records
    ]


write(
    "expected_embeddings.json",
    {"e3": densify(e3_expected), "e6": densify(e6_expected)},
)

# homological embedding counts for the low-genus configurations; a
# geometric_count differing from count records a known realizability verdict
counts = []
for s, c in zip(range(5, 11), [1, 1, 1, 2, 1, 0]):
    counts.append({"kind": "genus1", "s": s, "count": c})
for kind in ("genus2_two_2_3", "genus2_2_5"):
    for s, c in zip(range(9, 14), [1, 1, 1, 2, 0]):
        counts.append({"kind": kind, "s": s, "count": c})
for s in range(10, 18):
    counts.append({"kind": "genus3_3_4", "s": s, "count": 1 if s < 17 else 0})
for kind in ("genus3_2_7", "genus3_2_3_2_5"):
    for s, c in zip(range(13, 18), [2, 2, 2, 3, 0]):
        counts.append({"kind": kind, "s": s, "count": c})
for s, c in zip(range(13, 18), [2, 2, 2, 3, 0]):
    counts.append(
        {
            "kind": "genus3_three_2_3",
            "s": s,
            "count": c,
            "geometric_count": 1 if c else 0,
            "note": "conic-pencil configurations with a common tangent line "
            "are not realizable; only the triple-tangency embedding is geometric",
        }
    )
write("embedding_counts.json", counts)

write(
    "blowdown_registry.json",
    [
        {
            "name": "nonlinear_det64",
            "plumbing": "plumbing_e3.json",
            "citation": "Bhupal-Stipsicz nonlinear blow-down catalog, Figure 1(f) with q = 2",
        },
        {
            "name": "nonlinear_det256",
            "plumbing": "plumbing_e6.json",
            "citation": "Bhupal-Stipsicz nonlinear blow-down catalog, Figure 1(j) with q = 4",
        },
    ],
)

# sample CLI inputs
write(
    "diagram_a3.json",
    {"linking": [[0, 4], [4, 1]], "rot": [0, 1], "zset": [0]},
)

"""Shared test helpers: brute-force GF(2) oracles, an index-bounded
reference enumerator, golden output blocks, and output normalization."""

from __future__ import annotations

import math
import re
from collections import Counter
from itertools import combinations_with_replacement, product
from typing import Dict, List, Set, Tuple

from steenrod_ext.catalog import FAMILIES, Generator, internal_degree
from steenrod_ext.gf2 import BitMatrix, BitVector
from steenrod_ext.monomial import Monomial, canonicalize, report_key
from steenrod_ext.relations import c_product_relations, rank5_relations


def normalized_lines(text: str) -> List[str]:
    """Whitespace-insensitive comparison form: spaces stripped, dash and
    equals runs collapsed, blank lines dropped."""
    out = []
    for line in text.splitlines():
        line = re.sub(r"\s+", "", line)
        line = re.sub(r"-{2,}", "--", line)
        line = re.sub(r"={2,}", "==", line)
        if line:
            out.append(line)
    return out


# ---------------------------------------------------------------------------
# brute-force GF(2) oracles

def span_of(m: BitMatrix) -> Set[int]:
    """Every GF(2) combination of the rows."""
    span = {0}
    for row in m.rows:
        span |= {x ^ row for x in span}
    return span


def kernel_set(m: BitMatrix) -> Set[int]:
    """Exhaustive scan of all 2^width vectors for m @ v = 0."""
    return {
        v for v in range(1 << m.width)
        if all((row & v).bit_count() % 2 == 0 for row in m.rows)
    }


def span_set(vectors: List[BitVector], width: int) -> Set[int]:
    return span_of(BitMatrix(width, tuple(v.bits for v in vectors)))


# ---------------------------------------------------------------------------
# index-bounded reference enumerator (heuristic bound, no pruning)

RANK4_NAMES = ("d", "e", "f", "g", "p", "D3", "p_prime")
RANK5_NAMES = ("n", "x", "D1", "H1", "Q3", "K", "J", "T", "V", "V_prime",
               "U", "P1h1", "P1h2")

SLOT_SHAPES: Dict[int, List[Tuple[str, ...]]] = {
    1: [("h",)],
    2: [("h", "h")],
    3: [("h", "h", "h"), ("c",)],
    4: [("h", "h", "h", "h"), ("h", "c")] + [(f,) for f in RANK4_NAMES],
    5: ([("h", "h", "h", "h", "h"), ("h", "h", "c")]
        + [("h", f) for f in RANK4_NAMES]
        + [(f,) for f in RANK5_NAMES]),
}


def reference_max_index(t: int) -> int:
    return int(math.log(t, 2)) + 7 if t > 1 else 7


def reference_enumerate(k: int, t: int) -> List[Monomial]:
    """All-of-a-fixed-shape enumeration with every index below the
    heuristic cap floor(log2 t) + 7; no degree pruning."""
    max_idx = reference_max_index(t)
    degree_cache: Dict[Tuple[str, int], int] = {}
    for name, fam in FAMILIES.items():
        if fam.indexed:
            for i in range(fam.min_index, max_idx):
                degree_cache[(name, i)] = internal_degree(fam, i)
        else:
            degree_cache[(name, 0)] = fam.fixed_degree

    found = set()
    for shape in SLOT_SHAPES[k]:
        runs: List[Tuple[str, int]] = []
        for name in shape:
            if runs and runs[-1][0] == name:
                runs[-1] = (name, runs[-1][1] + 1)
            else:
                runs.append((name, 1))
        choices = []
        for name, count in runs:
            fam = FAMILIES[name]
            if fam.indexed:
                choices.append(list(
                    combinations_with_replacement(range(fam.min_index, max_idx), count)))
            else:
                choices.append([(0,) * count])
        for pick in product(*choices):
            total = 0
            for (name, _), idxs in zip(runs, pick):
                for i in idxs:
                    total += degree_cache[(name, i)]
            if total != t:
                continue
            factors = []
            for (name, _), idxs in zip(runs, pick):
                fam = FAMILIES[name]
                factors.extend(Generator(fam, i) for i in idxs)
            found.add(canonicalize(factors))
    return sorted(found, key=report_key)


# ---------------------------------------------------------------------------
# h-relation variant replacing every complete h_i^3 triple at once

def variant_relation_rows(k: int, monomials, index_of) -> List[int]:
    width = len(monomials)
    rows: List[int] = []
    for col, m in enumerate(monomials):
        counts = Counter(g.index for g in m.factors if g.family.name == "h")
        for i in sorted(counts):
            if counts[i] >= 1 and counts[i + 1] >= 1:
                rows.append(1 << col)
            if counts[i] >= 1 and counts[i + 2] >= 2:
                rows.append(1 << col)
            if counts[i] >= 2 and counts[i + 3] >= 2:
                rows.append(1 << col)
            if i >= 1 and counts[i] >= 3:
                triples = counts[i] // 3
                factors = list(m.factors)
                h_i = Generator(FAMILIES["h"], i)
                for _ in range(3 * triples):
                    factors.remove(h_i)
                for _ in range(triples):
                    factors += [Generator(FAMILIES["h"], i - 1),
                                Generator(FAMILIES["h"], i - 1),
                                Generator(FAMILIES["h"], i + 1)]
                other = index_of.get(canonicalize(factors))
                if other is not None and other != col:
                    rows.append((1 << col) | (1 << other))
    if k >= 4:
        rows.extend(r.vector.bits for r in c_product_relations(monomials, index_of))
    if k == 5:
        rows.extend(r.vector.bits for r in rank5_relations(monomials, index_of))
    return rows


# ---------------------------------------------------------------------------
# golden output blocks (content compared through normalized_lines)

REFERENCE_BASIS_BLOCKS: Dict[Tuple[int, int], str] = {
    (4, 61): """\
--- Calculating basis for Ext_A^(4, 65) ---
Found 2 potential generators (before relations):
  D_3(0)
  h_0h_4^2h_5
Dimension of relation space: 1
Dimension of Ext_A^(4, 65) = 1
Simplified Adem Relations:
  -> h_0h_4^2h_5 = 0
Basis elements:
  D_3(0)
""",
    (4, 126): """\
--- Calculating basis for Ext_A^(4, 130) ---
Found 3 potential generators (before relations):
  D_3(1)
  h_0^2h_6^2
  h_1h_5^2h_6
Dimension of relation space: 1
Dimension of Ext_A^(4, 130) = 2
Simplified Adem Relations:
  -> h_1h_5^2h_6 = 0
Basis elements:
  D_3(1)
  h_0^2h_6^2
""",
    (4, 41): """\
--- Calculating basis for Ext_A^(4, 45) ---
Found 2 potential generators (before relations):
  h_0c_2
  h_0h_2h_3h_5
Dimension of relation space: 1
Dimension of Ext_A^(4, 45) = 1
Simplified Adem Relations:
  -> h_0h_2h_3h_5 = 0
Basis elements:
  h_0c_2
""",
    (5, 62): """\
--- Calculating basis for Ext_A^(5, 67) ---
Found 4 potential generators (before relations):
  H_1(0)
  h_0^3h_5^2
  h_0h_1h_4^2h_5
  h_1D_3(0)
Dimension of relation space: 1
Dimension of Ext_A^(5, 67) = 3
Simplified Adem Relations:
  -> h_0h_1h_4^2h_5 = 0
Basis elements:
  H_1(0)
  h_0^3h_5^2
  h_1D_3(0)
""",
    (5, 128): """\
--- Calculating basis for Ext_A^(5, 133) ---
Found 4 potential generators (before relations):
  J(0)
  h_0^3h_1h_7
  h_0h_1^2h_6^2
  h_0h_2h_5^2h_6
Dimension of relation space: 3
Dimension of Ext_A^(5, 133) = 1
Simplified Adem Relations:
  -> h_0^3h_1h_7 = 0
  -> h_0h_1^2h_6^2 = 0
  -> h_0h_2h_5^2h_6 = 0
Basis elements:
  J(0)
""",
    (5, 256): """\
--- Calculating basis for Ext_A^(5, 261) ---
Found 4 potential generators (before relations):
  h_0D_3(2)
  h_0^3h_1h_8
  h_0 h_1^2h_7^2
  h_0 h_2 h_6^2h_7
Dimension of relation space: 3
Dimension of Ext_A^(5, 261) = 1
Simplified Adem Relations:
  -> h_0^3h_1h_8 = 0
  -> h_0h_1^2h_7^2 = 0
  -> h_0h_2h_6^2h_7 = 0
Basis elements:
  h_0D_3(2)
""",
}

# expected dimensions at the six golden bidegrees
REFERENCE_DIMENSIONS = {
    (4, 61): 1, (4, 126): 2, (4, 41): 1, (5, 62): 3, (5, 128): 1, (5, 256): 1,
}

REFERENCE_THEOREM_ROWS = [
    "  <h_0h_sh_{s+t}h_{s+t+u}>    if s >= 2, t >= 2, u >= 2",
    "  <h_{u+3}c_{0}>              if s = 1, t = 2, u >= 2",
    "  <h_{0}c_{s}>                if s >= 2, t = 1, u = 2",
    "  0" + " " * 27 + "otherwise",
]

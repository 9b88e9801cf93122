"""Relation instances over an enumerated monomial basis.

Three generators produce rows of a GF(2) matrix indexed by monomial columns:

* general h-family relations, valid in every homological degree k >= 2:
  h_i h_{i+1} = 0, h_i h_{i+2}^2 = 0, h_i^2 h_{i+3}^2 = 0, and the rewrite
  h_i^3 = h_{i-1}^2 h_{i+1} for i >= 1 (a single triple is replaced; no
  rewrite exists for h_0^3);
* c-family annihilations for k >= 4: h_j c_i = 0 for j in {i-1, i, i+2, i+3};
* a fixed table of degree-5 products (25 vanishing, 14 equalities),
  instantiated over all shifts j, for k = 5.

Equalities become two-term rows and are emitted only when both sides are
present in the monomial list; vanishing products become one-term rows when
the product is present.  Rows are emitted rule family by rule family, then
by shift, then in monomial column order, so output is deterministic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .catalog import FAMILIES, Generator, gen, internal_degree
from .gf2 import BitMatrix, BitVector
from .monomial import Monomial, canonicalize

__all__ = [
    "RelationOrigin",
    "RelationInstance",
    "TableEntry",
    "RANK5_TABLE",
    "general_h_relations",
    "c_product_relations",
    "rank5_relations",
    "relation_matrix",
]


class RelationOrigin(NamedTuple):
    """Rule family label plus the shift it was instantiated at."""

    rule: str
    shift: int


@dataclass(frozen=True)
class RelationInstance:
    """One matrix row: a vanishing product or a two-term equality."""

    vector: BitVector
    origin: RelationOrigin
    terms: Tuple[Monomial, ...]


class TableEntry(NamedTuple):
    """A product relation pattern, with factor indices relative to a shift j."""

    label: str
    left: Tuple[Tuple[str, int], ...]
    right: Optional[Tuple[Tuple[str, int], ...]]
    min_j: int = 0


# Degree-5 products of a rank-4 generator (or c-family triple product) with
# h-generators.  None on the right marks a vanishing product.
RANK5_TABLE: Tuple[TableEntry, ...] = (
    TableEntry("h_{j+4}^2 c_j = 0", (("h", 4), ("h", 4), ("c", 0)), None),
    TableEntry("h_j h_{j+3} c_{j+2} = 0", (("h", 0), ("h", 3), ("c", 2)), None),
    TableEntry("h_{j+1}^2 c_j = 0", (("h", 1), ("h", 1), ("c", 0)), None),
    TableEntry("h_j d_{j+1} = 0", (("h", 0), ("d", 1)), None),
    TableEntry("h_{j+3} d_j = 0", (("h", 3), ("d", 0)), None),
    TableEntry("h_{j+4} d_j = 0", (("h", 4), ("d", 0)), None),
    TableEntry("h_j e_{j+1} = 0", (("h", 0), ("e", 1)), None),
    TableEntry("h_{j+4} e_j = 0", (("h", 4), ("e", 0)), None),
    TableEntry("h_{j+1} f_j = 0", (("h", 1), ("f", 0)), None),
    TableEntry("h_{j+3} f_j = 0", (("h", 3), ("f", 0)), None),
    TableEntry("h_{j+4} f_j = 0", (("h", 4), ("f", 0)), None),
    TableEntry("h_{j+3} g_{j+1} = 0", (("h", 3), ("g", 1)), None),
    TableEntry("h_j p_{j+1} = 0", (("h", 0), ("p", 1)), None),
    TableEntry("h_{j+1} p_j = 0", (("h", 1), ("p", 0)), None),
    TableEntry("h_{j+2} p_j = 0", (("h", 2), ("p", 0)), None),
    TableEntry("h_{j+4} p_j = 0", (("h", 4), ("p", 0)), None),
    TableEntry("h_{j+5} p_j = 0", (("h", 5), ("p", 0)), None),
    TableEntry("h_j D3_{j+1} = 0", (("h", 0), ("D3", 1)), None),
    TableEntry("h_j D3_j = 0", (("h", 0), ("D3", 0)), None),
    TableEntry("h_{j+5} D3_j = 0", (("h", 5), ("D3", 0)), None),
    TableEntry("h_{j+6} D3_j = 0", (("h", 6), ("D3", 0)), None),
    TableEntry("h_j p'_{j+1} = 0", (("h", 0), ("p_prime", 1)), None),
    TableEntry("h_{j+2} p'_j = 0", (("h", 2), ("p_prime", 0)), None),
    TableEntry("h_{j+3} p'_j = 0", (("h", 3), ("p_prime", 0)), None),
    TableEntry("h_{j+6} p'_j = 0", (("h", 6), ("p_prime", 0)), None),
    TableEntry("h_{j+4} h_{j+1} c_j = h_{j+3} e_j",
               (("h", 4), ("h", 1), ("c", 0)), (("h", 3), ("e", 0))),
    TableEntry("h_{j+4} h_j c_{j+3} = h_{j+5} p'_j",
               (("h", 4), ("h", 0), ("c", 3)), (("h", 5), ("p_prime", 0))),
    TableEntry("h_{j+5}^2 c_j = h_{j+1} p'_j",
               (("h", 5), ("h", 5), ("c", 0)), (("h", 1), ("p_prime", 0))),
    TableEntry("h_j d_{j+2} = h_{j+3} D3_j",
               (("h", 0), ("d", 2)), (("h", 3), ("D3", 0))),
    TableEntry("h_{j+1} d_{j+1} = h_j p_j",
               (("h", 1), ("d", 1)), (("h", 0), ("p", 0))),
    TableEntry("h_{j+2} d_{j+1} = h_{j+4} g_{j+1}",
               (("h", 2), ("d", 1)), (("h", 4), ("g", 1))),
    TableEntry("h_{j+2} d_j = h_j e_j",
               (("h", 2), ("d", 0)), (("h", 0), ("e", 0))),
    TableEntry("h_{j+1} e_j = h_j f_j",
               (("h", 1), ("e", 0)), (("h", 0), ("f", 0))),
    TableEntry("h_{j+1} e_j = h_{j-1}^2 c_{j+1}",
               (("h", 1), ("e", 0)), (("h", -1), ("h", -1), ("c", 1)), 1),
    TableEntry("h_{j+2} e_j = h_j g_{j+1}",
               (("h", 2), ("e", 0)), (("h", 0), ("g", 1))),
    TableEntry("h_j f_{j+2} = h_{j+4} p'_j",
               (("h", 0), ("f", 2)), (("h", 4), ("p_prime", 0))),
    TableEntry("h_j f_{j+1} = h_{j+3} p_j",
               (("h", 0), ("f", 1)), (("h", 3), ("p", 0))),
    TableEntry("h_{j+2} f_j = h_{j+1} g_{j+1}",
               (("h", 2), ("f", 0)), (("h", 1), ("g", 1))),
    TableEntry("h_{j+3} g_{j+2} = h_{j+5} g_{j+1}",
               (("h", 3), ("g", 2)), (("h", 5), ("g", 1))),
)


def _h_index_counts(m: Monomial) -> Counter:
    return Counter(g.index for g in m.factors if g.family.name == "h")


def _unit(width: int, col: int) -> BitVector:
    return BitVector.from_support(width, (col,))


def general_h_relations(monomials: Sequence[Monomial],
                        index_of: Dict[Monomial, int]) -> List[RelationInstance]:
    """h-family rows: three vanishing patterns plus the h_i^3 rewrite."""
    width = len(monomials)
    counts = [_h_index_counts(m) for m in monomials]
    top = max((i for c in counts for i in c), default=-1)
    out: List[RelationInstance] = []

    def vanish(rule: str, i: int, need: Dict[int, int]) -> None:
        for col, c in enumerate(counts):
            if all(c[idx] >= k for idx, k in need.items()):
                out.append(RelationInstance(
                    _unit(width, col), RelationOrigin(rule, i), (monomials[col],)))

    for i in range(top + 1):
        vanish("h_i h_{i+1} = 0", i, {i: 1, i + 1: 1})
    for i in range(top + 1):
        vanish("h_i h_{i+2}^2 = 0", i, {i: 1, i + 2: 2})
    for i in range(top + 1):
        vanish("h_i^2 h_{i+3}^2 = 0", i, {i: 2, i + 3: 2})
    for i in range(1, top + 1):
        for col, c in enumerate(counts):
            if c[i] >= 3:
                replacement = _cube_replacement(monomials[col], i)
                other = index_of.get(replacement)
                if other is None or other == col:
                    continue
                out.append(RelationInstance(
                    BitVector.from_support(width, (col, other)),
                    RelationOrigin("h_i^3 = h_{i-1}^2 h_{i+1}", i),
                    (monomials[col], replacement)))
    return out


def _cube_replacement(m: Monomial, i: int) -> Monomial:
    """Replace one h_i^3 triple by h_{i-1}^2 h_{i+1}; degrees are preserved."""
    factors = list(m.factors)
    for _ in range(3):
        factors.remove(gen("h", i))
    factors += [gen("h", i - 1), gen("h", i - 1), gen("h", i + 1)]
    return canonicalize(factors)


def c_product_relations(monomials: Sequence[Monomial],
                        index_of: Dict[Monomial, int]) -> List[RelationInstance]:
    """Vanishing rows h_j c_i = 0 for j in {i-1, i, i+2, i+3}."""
    width = len(monomials)
    per = [({g.index for g in m.factors if g.family.name == "h"},
            {g.index for g in m.factors if g.family.name == "c"})
           for m in monomials]
    c_present = sorted({i for _, cs in per for i in cs})
    out: List[RelationInstance] = []
    for off, rule in ((-1, "h_{i-1} c_i = 0"), (0, "h_i c_i = 0"),
                      (2, "h_{i+2} c_i = 0"), (3, "h_{i+3} c_i = 0")):
        for i in c_present:
            j = i + off
            if j < 0:
                continue
            for col, (hs, cs) in enumerate(per):
                if i in cs and j in hs:
                    out.append(RelationInstance(
                        _unit(width, col), RelationOrigin(rule, i),
                        (monomials[col],)))
    return out


def _entry_factors(entry: TableEntry) -> Tuple[Tuple[str, int], ...]:
    return entry.left + (entry.right or ())


def _min_factor_degree(entry: TableEntry, j: int) -> int:
    return min(internal_degree(FAMILIES[name], j + off)
               for name, off in _entry_factors(entry))


def _instantiate(side: Tuple[Tuple[str, int], ...], j: int) -> Monomial:
    return canonicalize(Generator(FAMILIES[name], j + off) for name, off in side)


def rank5_relations(monomials: Sequence[Monomial],
                    index_of: Dict[Monomial, int]) -> List[RelationInstance]:
    """Rows from the degree-5 product table, over all shifts that fit."""
    if not monomials:
        return []
    t = monomials[0].internal_degree
    width = len(monomials)
    out: List[RelationInstance] = []
    for entry in RANK5_TABLE:
        j = entry.min_j
        # every factor degree grows with j, so the scan ends
        while _min_factor_degree(entry, j) <= t:
            left = index_of.get(_instantiate(entry.left, j))
            if entry.right is None:
                if left is not None:
                    out.append(RelationInstance(
                        _unit(width, left), RelationOrigin(entry.label, j),
                        (monomials[left],)))
            else:
                right = index_of.get(_instantiate(entry.right, j))
                if left is not None and right is not None and left != right:
                    out.append(RelationInstance(
                        BitVector.from_support(width, (left, right)),
                        RelationOrigin(entry.label, j),
                        (monomials[left], monomials[right])))
            j += 1
    return out


def relation_matrix(k: int, monomials: Sequence[Monomial],
                    index_of: Dict[Monomial, int],
                    paper_compat: bool = False) -> Tuple[BitMatrix, List[RelationInstance]]:
    """Stack all applicable relation rows for homological degree k.

    paper_compat restores the reference behavior of skipping the general
    h-relations at k = 2; results for k >= 3 are unchanged.
    """
    instances: List[RelationInstance] = []
    h_floor = 3 if paper_compat else 2
    if k >= h_floor:
        instances += general_h_relations(monomials, index_of)
    if k >= 4:
        instances += c_product_relations(monomials, index_of)
    if k == 5:
        instances += rank5_relations(monomials, index_of)
    matrix = BitMatrix(len(monomials), tuple(i.vector.bits for i in instances))
    return matrix, instances

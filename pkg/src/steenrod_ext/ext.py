"""Basis computation for Ext_A^{k, k+n}(Z/2, Z/2), k <= 5.

Pipeline: enumerate candidate monomials at the bidegree, stack relation rows
over GF(2), reduce, and read the quotient basis off the non-pivot columns.
A second, kernel-side computation of the same quotient runs on every call
and must agree with the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .gf2 import BitMatrix, right_kernel_basis, rref
from .monomial import Bidegree, Monomial, enumerate_monomials, format_monomial
from .relations import relation_matrix

__all__ = [
    "SimplifiedRelation",
    "BasisElement",
    "ExtBasisReport",
    "compute_ext_basis",
    "equivalence_class",
    "quotient_basis_dual_check",
]


@dataclass(frozen=True)
class SimplifiedRelation:
    """A reduced relation row: lhs = sum of rhs (rhs empty means lhs = 0)."""

    lhs: Monomial
    rhs: Tuple[Monomial, ...]


@dataclass(frozen=True)
class BasisElement:
    """A quotient basis vector named by a representative monomial."""

    representative: Monomial
    equivalents: Tuple[Monomial, ...]  # representative included


@dataclass(frozen=True)
class ExtBasisReport:
    """Everything computed at one bidegree."""

    query: Bidegree
    potential_generators: Tuple[Monomial, ...]
    relation_rank: int
    dimension: int
    simplified_relations: Tuple[SimplifiedRelation, ...]
    basis: Tuple[BasisElement, ...]

    def to_json_dict(self) -> dict:
        return {
            "k": self.query.k,
            "n": self.query.n,
            "t": self.query.t,
            "potential_generators": [format_monomial(m) for m in self.potential_generators],
            "relation_rank": self.relation_rank,
            "dimension": self.dimension,
            "simplified_relations": [
                {"lhs": format_monomial(r.lhs), "rhs": [format_monomial(g) for g in r.rhs]}
                for r in self.simplified_relations
            ],
            "basis": [
                {"representative": format_monomial(b.representative),
                 "equivalents": [format_monomial(g) for g in b.equivalents]}
                for b in self.basis
            ],
        }


def compute_ext_basis(k: int, n: int, paper_compat: bool = False) -> ExtBasisReport:
    """Compute the full basis report at homological degree k and stem n."""
    query = Bidegree.from_stem(k, n)
    monomials = enumerate_monomials(query)
    index_of = {m: i for i, m in enumerate(monomials)}
    matrix, _ = relation_matrix(k, monomials, index_of, paper_compat)
    reduced, pivots = rref(matrix)
    relation_rank = len(pivots)
    dimension = len(monomials) - relation_rank

    kernel_dim, rep_cols = quotient_basis_dual_check(matrix)
    if kernel_dim != dimension:
        raise AssertionError(
            f"rank-nullity violated at (k={k}, t={query.t}): "
            f"{len(monomials)} - {relation_rank} != {kernel_dim}")

    simplified = tuple(
        SimplifiedRelation(monomials[supp[0]],
                           tuple(monomials[c] for c in supp[1:]))
        for supp in (vec.support() for vec in reduced.row_vectors())
    )
    basis = tuple(
        BasisElement(monomials[col],
                     tuple(equivalence_class(monomials[col], monomials, matrix)))
        for col in rep_cols
    )
    return ExtBasisReport(query, tuple(monomials), relation_rank, dimension,
                          simplified, basis)


def quotient_basis_dual_check(matrix: BitMatrix) -> Tuple[int, Tuple[int, ...]]:
    """Quotient dimension and representative columns, computed both ways.

    Kernel side: a kernel basis in echelon order, each vector distinguished
    by its free column (its highest set bit).  Row side: the non-pivot
    columns of the reduced matrix.  The two must coincide.
    """
    reduced, pivots = rref(matrix)
    kernel = right_kernel_basis(matrix)
    for v in kernel:
        for row in matrix.rows:
            if (row & v.bits).bit_count() % 2:
                raise AssertionError("kernel vector fails orthogonality")
    kernel_cols = tuple(max(v.support()) for v in kernel)
    pivot_set = set(pivots)
    non_pivots = tuple(c for c in range(matrix.width) if c not in pivot_set)
    if kernel_cols != non_pivots:
        raise AssertionError(
            f"quotient methods disagree: kernel columns {kernel_cols} "
            f"vs non-pivot columns {non_pivots}")
    return len(kernel), non_pivots


def equivalence_class(rep: Monomial, monomials: Sequence[Monomial],
                      matrix: BitMatrix) -> List[Monomial]:
    """Monomials equal to rep modulo the row space; rep listed first."""
    index_of: Dict[Monomial, int] = {m: i for i, m in enumerate(monomials)}
    if rep not in index_of:
        raise ValueError(f"representative {format_monomial(rep)} not in monomial list")
    reduced, pivots = rref(matrix)
    rep_bit = 1 << index_of[rep]
    members = [rep]
    for i, g in enumerate(monomials):
        if g == rep:
            continue
        bits = rep_bit ^ (1 << i)
        for row, p in zip(reduced.rows, pivots):
            if bits & (1 << p):
                bits ^= row
        if bits == 0:
            members.append(g)
    return members

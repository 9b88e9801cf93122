"""Bidegrees, canonical monomials, and exhaustive monomial enumeration.

A monomial is a multiset of catalog generators, stored as a tuple sorted by
the canonical (sort_rank, index) order.  Report-level lists of monomials use
a different order: plain lexicographic comparison of (family token, index)
sequences, under which capitalized family tokens sort before lowercase ones.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterable, List, Sequence, Tuple

from .catalog import (
    Generator,
    GeneratorFamily,
    display_name,
    families_of_rank,
    internal_degree,
)

__all__ = [
    "UnsupportedRankError",
    "InvalidStemError",
    "Bidegree",
    "Monomial",
    "canonicalize",
    "format_monomial",
    "report_key",
    "enumerate_monomials",
]

MAX_RANK = 5


class UnsupportedRankError(ValueError):
    """Raised for homological degrees outside 1..5."""


class InvalidStemError(ValueError):
    """Raised for a negative stem; carries the offending value."""

    def __init__(self, message: str, stem: int | None = None) -> None:
        super().__init__(message)
        self.stem = stem


@dataclass(frozen=True)
class Bidegree:
    """Homological degree k and internal degree t; the stem is n = t - k."""

    k: int
    t: int

    def __post_init__(self) -> None:
        if self.k > MAX_RANK:
            raise UnsupportedRankError("Calculation for k > 5 is not supported")
        if self.k < 1:
            raise UnsupportedRankError(f"homological degree must be >= 1, got {self.k}")
        if self.t < self.k:
            raise InvalidStemError(f"stem must be >= 0, got {self.t - self.k}",
                                   stem=self.t - self.k)

    @classmethod
    def from_stem(cls, k: int, n: int) -> "Bidegree":
        return cls(k, k + n)

    @property
    def n(self) -> int:
        return self.t - self.k


@dataclass(frozen=True)
class Monomial:
    """A nonempty product of generators in canonical factor order."""

    factors: Tuple[Generator, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("monomial must have at least one factor")
        keys = [g.sort_key for g in self.factors]
        if keys != sorted(keys):
            raise ValueError("factors not in canonical order; use canonicalize()")

    @property
    def homological_degree(self) -> int:
        return sum(g.family.homological_degree for g in self.factors)

    @property
    def internal_degree(self) -> int:
        return sum(g.degree for g in self.factors)

    def __str__(self) -> str:
        return format_monomial(self)


def canonicalize(factors: Iterable[Generator]) -> Monomial:
    """Sort factors into canonical order and build the monomial."""
    ordered = tuple(sorted(factors, key=lambda g: g.sort_key))
    if not ordered:
        raise ValueError("monomial must have at least one factor")
    return Monomial(ordered)


def format_monomial(m: Monomial) -> str:
    """Render with repeated factors collapsed: "h_0^2 h_6^2", "h_0 D_3(2)"."""
    parts: List[str] = []
    run: List[Generator] = []
    for g in m.factors:
        if run and g != run[-1]:
            parts.append(_run_text(run))
            run = []
        run.append(g)
    parts.append(_run_text(run))
    return " ".join(parts)


def _run_text(run: Sequence[Generator]) -> str:
    name = display_name(run[0])
    return name if len(run) == 1 else f"{name}^{len(run)}"


def report_key(m: Monomial) -> Tuple[Tuple[str, int], ...]:
    """Sort key for report-level monomial lists."""
    return tuple(g.report_key for g in m.factors)


def enumerate_monomials(b: Bidegree) -> List[Monomial]:
    """All monomials of total homological degree k and internal degree t.

    Indices within a family are non-decreasing (one representative per
    multiset) and bounded by degree monotonicity: a partial product already
    exceeding the degree budget cannot be completed.
    """
    out: List[Monomial] = []
    for pattern in _rank_patterns(b.k):
        counts = Counter(pattern)
        per_rank = [
            list(combinations_with_replacement(families_of_rank(r), counts[r]))
            for r in sorted(counts, reverse=True)
        ]
        for combo in product(*per_rank):
            slots = _family_slots(f for group in combo for f in group)
            _assign_indices(slots, 0, b.t, [], out)
    out.sort(key=report_key)
    return out


def _rank_patterns(k: int) -> List[Tuple[int, ...]]:
    """Multisets of factor ranks from {1, 3, 4, 5} summing to k."""
    out: List[Tuple[int, ...]] = []

    def rec(remaining: int, max_rank: int, acc: List[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for r in (5, 4, 3, 1):
            if r <= max_rank and r <= remaining:
                acc.append(r)
                rec(remaining - r, r, acc)
                acc.pop()

    rec(k, MAX_RANK, [])
    return out


def _family_slots(families: Iterable[GeneratorFamily]) -> List[Tuple[GeneratorFamily, int]]:
    """Collapse a family multiset into (family, multiplicity) slots."""
    slots: List[Tuple[GeneratorFamily, int]] = []
    for f in families:
        if slots and slots[-1][0] is f:
            slots[-1] = (f, slots[-1][1] + 1)
        else:
            slots.append((f, 1))
    return slots


def _min_degree(fam: GeneratorFamily) -> int:
    return internal_degree(fam, fam.min_index) if fam.indexed else fam.fixed_degree


def _assign_indices(slots: List[Tuple[GeneratorFamily, int]], pos: int,
                    budget: int, acc: List[Generator], out: List[Monomial]) -> None:
    """Extend acc with index choices for slots[pos:] spending exactly budget."""
    if pos == len(slots):
        if budget == 0:
            out.append(canonicalize(acc))
        return
    fam, count = slots[pos]
    tail_min = sum(c * _min_degree(f) for f, c in slots[pos + 1:])
    if not fam.indexed:
        # single non-indexed factor, fixed degree
        if fam.fixed_degree * count + tail_min <= budget:
            acc.extend([Generator(fam, 0)] * count)
            _assign_indices(slots, pos + 1, budget - fam.fixed_degree * count, acc, out)
            del acc[-count:]
        return

    def pick(left: int, lo: int, remaining: int) -> None:
        if left == 0:
            _assign_indices(slots, pos + 1, remaining, acc, out)
            return
        idx = lo
        # the `left` factors still to pick all have degree >= deg(fam, idx)
        while True:
            d = internal_degree(fam, idx)
            if d * left + tail_min > remaining:
                break
            acc.append(Generator(fam, idx))
            pick(left - 1, idx, remaining - d)
            acc.pop()
            idx += 1

    pick(count, fam.min_index, budget)

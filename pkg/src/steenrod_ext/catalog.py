"""Catalog of the indecomposable Ext generators in homological degree <= 5.

Each family carries its homological degree, the valid index range, the
internal-degree formula (a sum of powers of two with fixed offsets from the
index), a canonical sort rank, and display formatting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

__all__ = [
    "InvalidGeneratorError",
    "GeneratorFamily",
    "Generator",
    "FAMILIES",
    "families_of_rank",
    "gen",
    "internal_degree",
    "max_index",
    "display_name",
]


class InvalidGeneratorError(ValueError):
    """Raised for an index outside a family's valid range."""


@dataclass(frozen=True)
class GeneratorFamily:
    """One named family of indecomposable generators."""

    name: str                 # token used for report-level ordering
    homological_degree: int
    sort_rank: int            # within-monomial canonical order
    degree_offsets: Optional[Tuple[int, ...]]  # degree = sum of 2^(index+off)
    fixed_degree: Optional[int] = None         # for the non-indexed families
    min_index: int = 0
    display_base: str = ""
    display_call: bool = False  # True: "D_3(i)" style, else "h_i" style

    @property
    def indexed(self) -> bool:
        return self.degree_offsets is not None


def _fam(name: str, k: int, rank: int, offsets: Optional[Tuple[int, ...]],
         display_base: str, *, fixed: Optional[int] = None, min_index: int = 0,
         call: bool = False) -> GeneratorFamily:
    return GeneratorFamily(name, k, rank, offsets, fixed, min_index,
                           display_base, call)


# sort_rank values keep gaps between the rank-4 and rank-5 blocks; only the
# relative order matters.
_ALL = (
    _fam("h", 1, 0, (0,), "h"),
    _fam("c", 3, 1, (3, 1, 0), "c"),
    _fam("d", 4, 2, (4, 1), "d"),
    _fam("e", 4, 3, (4, 2, 0), "e"),
    _fam("f", 4, 4, (4, 2, 1), "f"),
    _fam("g", 4, 5, (3, 2), "g", min_index=1),
    _fam("p", 4, 6, (5, 2, 0), "p"),
    _fam("D3", 4, 7, (6, 0), "D_3", call=True),
    _fam("p_prime", 4, 8, (6, 3, 0), "p'"),
    _fam("n", 5, 13, (5, 2), "n"),
    _fam("x", 5, 14, (5, 3, 1), "x"),
    _fam("D1", 5, 15, (5, 4, 2, 0), "D_1", call=True),
    _fam("H1", 5, 16, (6, 1, 0), "H_1", call=True),
    _fam("Q3", 5, 17, (6, 3), "Q_3", call=True),
    _fam("K", 5, 18, (7, 1), "K", call=True),
    _fam("J", 5, 19, (7, 2, 0), "J", call=True),
    _fam("T", 5, 20, (7, 4, 1), "T", call=True),
    _fam("V", 5, 21, (7, 5, 0), "V", call=True),
    _fam("V_prime", 5, 22, (8, 0), "V'"),
    _fam("U", 5, 23, (8, 3, 0), "U", call=True),
    _fam("P1h1", 5, -2, None, "P^1h_1", fixed=14),
    _fam("P1h2", 5, -1, None, "P^1h_2", fixed=16),
)

FAMILIES: Dict[str, GeneratorFamily] = {f.name: f for f in _ALL}


def families_of_rank(k: int) -> Tuple[GeneratorFamily, ...]:
    """Families of a given homological degree, in catalog order."""
    return tuple(f for f in _ALL if f.homological_degree == k)


@dataclass(frozen=True)
class Generator:
    """A single generator: a family plus an index."""

    family: GeneratorFamily
    index: int = 0

    def __post_init__(self) -> None:
        if not self.family.indexed:
            if self.index != 0:
                raise InvalidGeneratorError(
                    f"{self.family.name} takes no index, got {self.index}")
        elif self.index < self.family.min_index:
            raise InvalidGeneratorError(
                f"{self.family.name} index must be >= {self.family.min_index}, "
                f"got {self.index}")

    @property
    def degree(self) -> int:
        return internal_degree(self.family, self.index)

    # canonical within-monomial order
    @property
    def sort_key(self) -> Tuple[int, int]:
        return (self.family.sort_rank, self.index)

    # report-level order: plain string comparison on the family token
    @property
    def report_key(self) -> Tuple[str, int]:
        return (self.family.name, self.index)


def gen(name: str, index: int = 0) -> Generator:
    """Generator from a family name, e.g. gen("h", 4) or gen("D3", 1)."""
    try:
        family = FAMILIES[name]
    except KeyError:
        raise InvalidGeneratorError(f"unknown family {name!r}") from None
    return Generator(family, index)


def internal_degree(family: GeneratorFamily, index: int) -> int:
    """Internal degree of the family member at the given index."""
    if not family.indexed:
        assert family.fixed_degree is not None
        return family.fixed_degree
    if index < family.min_index:
        raise InvalidGeneratorError(
            f"{family.name} index must be >= {family.min_index}, got {index}")
    return sum(1 << (index + off) for off in family.degree_offsets)


def max_index(family: GeneratorFamily, degree_cap: int) -> Optional[int]:
    """Largest index whose degree fits under the cap, or None if none does.

    Degrees are strictly increasing in the index, so a linear scan from
    min_index terminates at the first overflow.
    """
    if not family.indexed:
        return 0 if family.fixed_degree <= degree_cap else None
    idx = family.min_index
    if internal_degree(family, idx) > degree_cap:
        return None
    while internal_degree(family, idx + 1) <= degree_cap:
        idx += 1
    return idx


def display_name(g: Generator) -> str:
    """Human-readable name: h_4, c_2, p'_0, D_3(1), J(0), P^1h_1."""
    fam = g.family
    if not fam.indexed:
        return fam.display_base
    if fam.display_call:
        return f"{fam.display_base}({g.index})"
    return f"{fam.display_base}_{g.index}"

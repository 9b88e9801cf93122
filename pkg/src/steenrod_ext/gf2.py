"""Linear algebra over GF(2) with rows packed into Python ints.

Bit i of a row is column i, so adding rows is integer XOR.  Matrices are
immutable; every operation returns fresh values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple

__all__ = [
    "BitVector",
    "BitMatrix",
    "rref",
    "rank",
    "right_kernel_basis",
    "row_space_contains",
]


@dataclass(frozen=True)
class BitVector:
    """A vector over GF(2); bit i of ``bits`` is coordinate i."""

    width: int
    bits: int

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError("width must be non-negative")
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"bits 0b{self.bits:b} do not fit in width {self.width}")

    @classmethod
    def from_support(cls, width: int, support: Iterable[int]) -> "BitVector":
        """Build the vector with ones exactly at the given coordinates."""
        bits = 0
        for i in support:
            if not 0 <= i < width:
                raise ValueError(f"coordinate {i} outside width {width}")
            bits |= 1 << i
        return cls(width, bits)

    def bit(self, i: int) -> int:
        if not 0 <= i < self.width:
            raise ValueError(f"coordinate {i} outside width {self.width}")
        return (self.bits >> i) & 1

    def support(self) -> Tuple[int, ...]:
        """Indices of the nonzero coordinates, ascending."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.width != other.width:
            raise ValueError("width mismatch")
        return BitVector(self.width, self.bits ^ other.bits)


@dataclass(frozen=True)
class BitMatrix:
    """A matrix over GF(2); each row is an int with bit i = column i."""

    width: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError("width must be non-negative")
        for r in self.rows:
            if r < 0 or r >> self.width:
                raise ValueError(f"row 0b{r:b} does not fit in width {self.width}")

    @classmethod
    def from_rows(cls, width: int, rows: Iterable[int]) -> "BitMatrix":
        return cls(width, tuple(rows))

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def row_vectors(self) -> List[BitVector]:
        return [BitVector(self.width, r) for r in self.rows]


def rref(m: BitMatrix) -> Tuple[BitMatrix, Tuple[int, ...]]:
    """Reduced row-echelon form of ``m``.

    Returns ``(reduced, pivot_columns)``.  ``reduced`` keeps one row per
    pivot, ordered by pivot column; zero rows are dropped, so the row count
    equals the rank and the row space equals that of ``m``.
    """
    pending = list(m.rows)
    done: List[int] = []
    pivots: List[int] = []
    for col in range(m.width):
        mask = 1 << col
        hit = next((i for i, r in enumerate(pending) if r & mask), None)
        if hit is None:
            continue
        row = pending.pop(hit)
        pending = [r ^ row if r & mask else r for r in pending]
        done = [r ^ row if r & mask else r for r in done]
        done.append(row)
        pivots.append(col)
    return BitMatrix(m.width, tuple(done)), tuple(pivots)


def rank(m: BitMatrix) -> int:
    return len(rref(m)[1])


def right_kernel_basis(m: BitMatrix) -> List[BitVector]:
    """Basis of {v : m @ v = 0}, one vector per non-pivot column.

    The vector for free column f has bit f set and the rest of its support
    in pivot columns left of f, so f is its highest set bit; vectors are
    returned in increasing free-column order.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis: List[BitVector] = []
    for f in range(m.width):
        if f in pivot_set:
            continue
        fmask = 1 << f
        bits = fmask
        for row, p in zip(reduced.rows, pivots):
            if row & fmask:
                bits |= 1 << p
        basis.append(BitVector(m.width, bits))
    return basis


def row_space_contains(m: BitMatrix, v: BitVector) -> bool:
    """Whether ``v`` is a GF(2) combination of the rows of ``m``."""
    if v.width != m.width:
        raise ValueError("width mismatch")
    reduced, pivots = rref(m)
    bits = v.bits
    for row, p in zip(reduced.rows, pivots):
        if bits & (1 << p):
            bits ^= row
    return bits == 0

"""Parametric stem families and the (s, t, u) grid sweep.

Two stem shapes are supported: n = 2^(s+1) - m for m in {2, 3}, and the
three-parameter n_{s,t,u} = 2^(s+t+u) + 2^(s+t) + 2^s - 3.  The sweep walks
the grid 1..s_max x 1..t_max x 1..u_max in lexicographic order and records
the Ext dimension at k, plus the basis representative when the dimension
is exactly one.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .ext import compute_ext_basis
from .monomial import InvalidStemError, format_monomial

__all__ = [
    "InvalidParameterError",
    "SweepCaseError",
    "StuCase",
    "SweepResult",
    "stem_power",
    "stem_stu",
    "sweep_stu",
]


class InvalidParameterError(ValueError):
    """Raised for out-of-range family parameters."""


class SweepCaseError(RuntimeError):
    """Raised when a single sweep case fails; names the (s, t, u) point."""


def stem_power(s: int, m: int) -> int:
    """n = 2^(s+1) - m for m in {2, 3}.

    A negative result (only s = 0, m = 3) raises InvalidStemError carrying
    the offending stem, so callers can report it and skip.
    """
    if m not in (2, 3):
        raise InvalidParameterError(f"m must be 2 or 3, got {m}")
    if s < 0:
        raise InvalidParameterError(f"s must be >= 0, got {s}")
    n = 2 ** (s + 1) - m
    if n < 0:
        raise InvalidStemError(f"stem must be >= 0, got {n}", stem=n)
    return n


def stem_stu(s: int, t: int, u: int) -> int:
    """n_{s,t,u} = 2^(s+t+u) + 2^(s+t) + 2^s - 3."""
    if s < 0 or t < 0 or u < 0:
        raise InvalidParameterError(
            f"parameters must be >= 0, got (s={s}, t={t}, u={u})")
    return 2 ** (s + t + u) + 2 ** (s + t) + 2 ** s - 3


@dataclass(frozen=True)
class StuCase:
    """One sweep record; generator_pattern is set only when dimension == 1."""

    s: int
    t: int
    u: int
    n: int
    dimension: int
    generator_pattern: Optional[str] = None

    def to_json_dict(self) -> dict:
        out = {"s": self.s, "t": self.t, "u": self.u,
               "n": self.n, "dimension": self.dimension}
        if self.generator_pattern is not None:
            out["generator_pattern"] = self.generator_pattern
        return out


@dataclass(frozen=True)
class SweepResult:
    """All cases of one grid sweep, in lexicographic (s, t, u) order."""

    cases: Tuple[StuCase, ...]

    @property
    def case_count(self) -> int:
        return len(self.cases)

    @property
    def nonzero_count(self) -> int:
        return sum(1 for c in self.cases if c.dimension > 0)

    def to_json_dict(self) -> dict:
        return {
            "cases": [c.to_json_dict() for c in self.cases],
            "totals": {"cases": self.case_count, "nonzero": self.nonzero_count},
        }


def _sweep_case(args: Tuple[int, int, int, int, bool]) -> StuCase:
    k, s, t, u, paper_compat = args
    try:
        n = stem_stu(s, t, u)
        report = compute_ext_basis(k, n, paper_compat)
    except Exception as exc:
        raise SweepCaseError(f"case (s={s}, t={t}, u={u}) failed: {exc}") from exc
    pattern = None
    if report.dimension == 1:
        pattern = format_monomial(report.basis[0].representative)
    return StuCase(s, t, u, n, report.dimension, pattern)


def sweep_stu(k: int, s_max: int, t_max: int, u_max: int,
              paper_compat: bool = False, jobs: Optional[int] = 1) -> SweepResult:
    """Sweep the full grid; jobs > 1 fans cases out to worker processes.

    The result is identical for any jobs value: cases are assembled in grid
    order regardless of completion order.
    """
    for name, bound in (("s_max", s_max), ("t_max", t_max), ("u_max", u_max)):
        if bound < 1:
            raise InvalidParameterError(f"{name} must be >= 1, got {bound}")
    work = [(k, s, t, u, paper_compat)
            for s in range(1, s_max + 1)
            for t in range(1, t_max + 1)
            for u in range(1, u_max + 1)]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise InvalidParameterError(f"jobs must be >= 1, got {jobs}")
    jobs = min(jobs, len(work))
    if jobs == 1:
        cases: List[StuCase] = [_sweep_case(args) for args in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(work) // (jobs * 4))
            cases = list(pool.map(_sweep_case, work, chunksize=chunk))
    return SweepResult(tuple(cases))

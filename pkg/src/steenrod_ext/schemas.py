"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel

__all__ = [
    "BasisRequest",
    "SimplifiedRelationOut",
    "BasisElementOut",
    "BasisReport",
    "SweepSRequest",
    "SweepSResponse",
    "SweepStuRequest",
    "StuCaseOut",
    "TotalsOut",
    "PatternOut",
    "SweepStuResponse",
    "ErrorBody",
]


class BasisRequest(BaseModel):
    k: int
    n: int
    paper_compat: bool = False


class SimplifiedRelationOut(BaseModel):
    lhs: str
    rhs: List[str]


class BasisElementOut(BaseModel):
    representative: str
    equivalents: List[str]


class BasisReport(BaseModel):
    k: int
    n: int
    t: int
    potential_generators: List[str]
    relation_rank: int
    dimension: int
    simplified_relations: List[SimplifiedRelationOut]
    basis: List[BasisElementOut]


class SweepSRequest(BaseModel):
    k: int
    s: int
    m: int
    paper_compat: bool = False


class SweepSResponse(BaseModel):
    k: int
    s: int
    m: int
    n: int
    skipped: bool
    report: Optional[BasisReport] = None


class SweepStuRequest(BaseModel):
    k: int = 4
    s_max: int
    t_max: int
    u_max: int
    discover: bool = False
    paper_compat: bool = False
    jobs: Optional[int] = None


class StuCaseOut(BaseModel):
    s: int
    t: int
    u: int
    n: int
    dimension: int
    generator_pattern: Optional[str] = None


class TotalsOut(BaseModel):
    cases: int
    nonzero: int


class PatternOut(BaseModel):
    pattern: str
    condition: str
    case_count: int


class SweepStuResponse(BaseModel):
    cases: List[StuCaseOut]
    totals: TotalsOut
    patterns: Optional[List[PatternOut]] = None
    theorem: Optional[str] = None


class ErrorBody(BaseModel):
    error: str
    detail: str

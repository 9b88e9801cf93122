"""FastAPI service exposing the Ext basis engine.

Run with: uvicorn steenrod_ext.service:app

Domain errors map to HTTP 400 with a machine-readable body:
{"error": "unsupported_rank" | "invalid_argument", "detail": "..."}.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .catalog import InvalidGeneratorError
from .ext import compute_ext_basis
from .families import InvalidParameterError, stem_power, sweep_stu
from .monomial import InvalidStemError, UnsupportedRankError
from .pattern import discover_patterns, render_theorem
from .schemas import (
    BasisReport,
    BasisRequest,
    ErrorBody,
    SweepSRequest,
    SweepSResponse,
    SweepStuRequest,
    SweepStuResponse,
)

app = FastAPI(
    title="steenrod-ext",
    description="Z/2-bases of Ext_A^{k, k+n}(Z/2, Z/2) for k <= 5",
    version="0.1.0",
)

_ERROR_RESPONSES = {400: {"model": ErrorBody}}


@app.exception_handler(UnsupportedRankError)
async def _unsupported_rank(request: Request, exc: UnsupportedRankError) -> JSONResponse:
    return JSONResponse(status_code=400,
                        content={"error": "unsupported_rank", "detail": str(exc)})


@app.exception_handler(InvalidStemError)
@app.exception_handler(InvalidParameterError)
@app.exception_handler(InvalidGeneratorError)
async def _invalid_argument(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400,
                        content={"error": "invalid_argument", "detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/basis", response_model=BasisReport, responses=_ERROR_RESPONSES)
def basis(req: BasisRequest) -> dict:
    report = compute_ext_basis(req.k, req.n, req.paper_compat)
    return report.to_json_dict()


@app.post("/sweep/s", response_model=SweepSResponse,
          response_model_exclude_none=True, responses=_ERROR_RESPONSES)
def sweep_s(req: SweepSRequest) -> dict:
    base = {"k": req.k, "s": req.s, "m": req.m}
    try:
        n = stem_power(req.s, req.m)
    except InvalidStemError as exc:
        if exc.stem is None:
            raise
        # negative stem: report it as a skipped case, not an error
        return {**base, "n": exc.stem, "skipped": True}
    report = compute_ext_basis(req.k, n, req.paper_compat)
    return {**base, "n": n, "skipped": False, "report": report.to_json_dict()}


@app.post("/sweep/stu", response_model=SweepStuResponse,
          response_model_exclude_none=True, responses=_ERROR_RESPONSES)
def sweep_stu_cases(req: SweepStuRequest) -> dict:
    if req.discover and req.k != 4:
        raise InvalidParameterError(f"pattern discovery requires k = 4, got k = {req.k}")
    result = sweep_stu(req.k, req.s_max, req.t_max, req.u_max,
                       req.paper_compat, jobs=req.jobs or 1)
    out = result.to_json_dict()
    if req.discover:
        patterns = discover_patterns(result.cases)
        out["patterns"] = [p.to_json_dict() for p in patterns]
        out["theorem"] = render_theorem(patterns, result.case_count,
                                        req.s_max, req.t_max, req.u_max)
    return out

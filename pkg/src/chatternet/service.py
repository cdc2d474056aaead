"""HTTP service wrapping the pipeline.

Stages are exposed as POST endpoints taking a full run configuration;
artifacts are written server-side under the configured output directory.
Error categories map onto status codes so thin clients can translate
them into exit codes: config errors are 422, missing upstream artifacts
409, data errors 400.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__
from .pipeline import (
    STAGE_ORDER,
    STAGE_UPSTREAM,
    ConfigError,
    DataError,
    MissingUpstreamError,
    PipelineError,
    RunConfig,
    StageResult,
    run_pipeline,
    run_stage,
)

app = FastAPI(title="chatternet", version=__version__)


class HealthResponse(BaseModel):
    status: str
    version: str


class StageInfo(BaseModel):
    name: str
    upstream: list[str]


class PipelineResponse(BaseModel):
    results: list[StageResult]


@app.exception_handler(PipelineError)
async def _pipeline_error(request: Request, exc: PipelineError):
    if isinstance(exc, ConfigError):
        status, code = 422, "config_error"
        payload = {"code": code, "message": str(exc)}
    elif isinstance(exc, MissingUpstreamError):
        status, code = 409, "missing_upstream"
        payload = {"code": code, "message": str(exc), "run_first": exc.run_first}
    elif isinstance(exc, DataError):
        status, code = 400, "data_error"
        payload = {"code": code, "message": str(exc)}
    else:
        status = 500
        payload = {"code": "internal_error", "message": str(exc)}
    return JSONResponse(status_code=status, content={"detail": payload})


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.get("/stages", response_model=list[StageInfo])
def stages() -> list[StageInfo]:
    return [StageInfo(name=name, upstream=STAGE_UPSTREAM[name]) for name in STAGE_ORDER]


@app.post("/stages/{stage}", response_model=StageResult)
def post_stage(stage: str, cfg: RunConfig) -> StageResult:
    if stage not in STAGE_ORDER:
        return JSONResponse(
            status_code=404,
            content={"detail": {"code": "unknown_stage", "message": f"no stage {stage!r}"}},
        )
    return run_stage(stage, cfg)


@app.post("/pipeline", response_model=PipelineResponse)
def post_pipeline(cfg: RunConfig) -> PipelineResponse:
    return PipelineResponse(results=run_pipeline(cfg))

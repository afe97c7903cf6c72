from __future__ import annotations

from typing import Any, Dict, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field, ValidationError

from .. import checks  # noqa: F401 (registers the std checks)
from ..checks.registry import get_check_class, list_check_specs
from ..engine.executor import EXIT_INPUT, execute
from ..schemas.run import RunConfig

router = APIRouter()


class AnalysisBody(BaseModel):
    source: str = Field(..., description=".quiv algebra document")
    bound: Optional[int] = None
    seed: Optional[int] = None
    field: Optional[str] = None
    sample: Optional[int] = None
    max_dim: Optional[int] = None
    heuristic: bool = False
    settings: Dict[str, Any] = Field(default_factory=dict, description="check settings")


def _run(command: str, body: AnalysisBody, check: Optional[str] = None) -> Dict[str, Any]:
    values: Dict[str, Any] = {"command": command, "heuristic": body.heuristic, "check_settings": body.settings}
    for name in ("bound", "seed", "field", "sample", "max_dim"):
        value = getattr(body, name)
        if value is not None:
            values[name] = value
    if check is not None:
        values["check"] = check
    try:
        config = RunConfig(**values)
    except ValidationError as ex:
        raise HTTPException(status_code=400, detail=ex.errors(include_url=False, include_context=False))
    report, code = execute(body.source, config, source="request")
    if code == EXIT_INPUT:
        raise HTTPException(status_code=400, detail=report.get("error") or {"message": "invalid input"})
    return report


@router.get("/checks")
def get_checks():
    return {"checks": list_check_specs()}


@router.post("/analyze")
def analyze(body: AnalysisBody):
    return _run("analyze", body)


@router.post("/gproj")
def gproj(body: AnalysisBody):
    return _run("gproj", body)


@router.post("/verify/{which}")
def verify(which: str, body: AnalysisBody):
    if get_check_class(which) is None:
        raise HTTPException(status_code=404, detail=f"Unknown check: {which}")
    return _run("verify", body, check=which)


@router.post("/ct-a")
def ct_a(body: AnalysisBody):
    return _run("ct-a", body)

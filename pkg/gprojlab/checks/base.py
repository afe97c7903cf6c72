from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Type

from pydantic import BaseModel

from ..core.gluing import GluedAlgebra
from ..errors import GluingError
from ..qspec.parser import ParsedAlgebra
from ..schemas.reports import Verdict


@dataclass
class CheckContext:
    bound: Optional[int]
    seed: int
    sample: int
    max_dim: int
    logger: Callable[[str, Optional[Dict[str, Any]], Optional[str]], None]

    def step_logger(self, step: str) -> Callable[[str, Optional[Dict[str, Any]]], None]:
        def log(message: str, data: Optional[Dict[str, Any]] = None) -> None:
            self.logger(message, data, step)
        return log


class Check:
    """Class-based verification check with schema support.

    Subclasses set ``type_name`` and implement ``run``. ``settings_model``
    validates the per-check settings; run-wide values (bound, seed, sample)
    arrive through the context.
    """

    type_name: str = ""
    summary: str = ""
    settings_model: Optional[Type[BaseModel]] = None
    output_model: Optional[Type[BaseModel]] = Verdict

    def __init__(self, settings: Dict[str, Any] | None = None) -> None:
        self.settings: Dict[str, Any] = self.validate_settings(settings or {})

    def validate_settings(self, settings: Dict[str, Any]) -> Dict[str, Any]:
        Model = self.settings_model
        if Model is not None:
            return Model.model_validate(settings).model_dump()
        return settings

    @classmethod
    def settings_schema(cls) -> Optional[Dict[str, Any]]:
        if cls.settings_model is None:
            return None
        return cls.settings_model.model_json_schema()

    @classmethod
    def output_schema(cls) -> Optional[Dict[str, Any]]:
        if cls.output_model is None:
            return None
        return cls.output_model.model_json_schema()

    def run(self, parsed: ParsedAlgebra, ctx: CheckContext) -> Verdict:  # pragma: no cover - implemented by subclasses
        raise NotImplementedError


def require_glued(parsed: ParsedAlgebra, check: str) -> GluedAlgebra:
    if parsed.glued is None:
        raise GluingError(f"{check} needs a glue document with at least two components")
    return parsed.glued

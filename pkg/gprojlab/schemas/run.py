from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from ..core.field import BaseField
from ..server.settings import settings

Command = Literal["analyze", "gproj", "verify", "ct-a"]


class RunConfig(BaseModel):
    command: Command
    inputs: List[str] = Field(default_factory=list)
    check: Optional[str] = None
    bound: Optional[int] = Field(default_factory=lambda: settings.GPROJLAB_BOUND)
    seed: int = Field(default_factory=lambda: settings.GPROJLAB_SEED)
    field: Optional[str] = None
    format: Literal["json", "md"] = Field(default_factory=lambda: settings.GPROJLAB_FORMAT)  # type: ignore[arg-type]
    sample: int = Field(default_factory=lambda: settings.GPROJLAB_SAMPLE)
    max_dim: int = Field(default_factory=lambda: settings.GPROJLAB_SAMPLE_DIM)
    heuristic: bool = False
    out: Optional[str] = None
    check_settings: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("bound")
    @classmethod
    def _positive_bound(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError("bound must be >= 1")
        return value

    @field_validator("sample", "max_dim")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be >= 1")
        return value

    @field_validator("field")
    @classmethod
    def _field_label(cls, value: Optional[str]) -> Optional[str]:
        if value is None or value == "rat":
            return value
        if value.isdigit():
            BaseField.prime(int(value))
            return value
        raise ValueError("field is 'rat' or a prime p")

    def base_field(self) -> Optional[BaseField]:
        if self.field is None:
            return None
        if self.field == "rat":
            return BaseField.rational()
        return BaseField.prime(int(self.field))

    def echo(self) -> Dict[str, Any]:
        """Config as it appears in reports; output paths stay out so reports are reproducible."""
        return self.model_dump(exclude={"out", "inputs"})

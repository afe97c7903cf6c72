from __future__ import annotations

from typing import Any, Callable, Dict, List, Type

from .base import Check, CheckContext
from ..qspec.parser import ParsedAlgebra
from ..schemas.reports import Verdict

_CLASS_REGISTRY: Dict[str, Type[Check]] = {}


def register(type_name: str) -> Callable[[Type[Check]], Type[Check]]:
    def decorator(cls: Type[Check]) -> Type[Check]:
        _CLASS_REGISTRY[type_name] = cls
        return cls
    return decorator


def run_check(type_name: str, parsed: ParsedAlgebra, settings: Dict[str, Any] | None, ctx: CheckContext) -> Verdict:
    cls = _CLASS_REGISTRY.get(type_name)
    if cls is None:
        raise KeyError(f"Unknown check: {type_name}")
    instance = cls(settings=settings or {})
    return instance.run(parsed, ctx)


def list_check_specs() -> List[Dict[str, Any]]:
    specs: List[Dict[str, Any]] = []
    for name, cls in sorted(_CLASS_REGISTRY.items(), key=lambda kv: kv[0]):
        # required vs optional from the settings model
        required_fields: List[str] = []
        advanced_fields: List[str] = []
        Model = cls.settings_model
        if Model is not None:
            for field_name, field in Model.model_fields.items():
                if field.is_required():
                    required_fields.append(field_name)
                else:
                    advanced_fields.append(field_name)
        specs.append({
            "type": name,
            "summary": cls.summary,
            "settings_schema": cls.settings_schema(),
            "output_schema": cls.output_schema(),
            "required_fields": required_fields or None,
            "advanced_fields": advanced_fields or None,
        })
    return specs


def get_check_class(type_name: str) -> Type[Check] | None:
    return _CLASS_REGISTRY.get(type_name)


def check_names() -> List[str]:
    return sorted(_CLASS_REGISTRY)

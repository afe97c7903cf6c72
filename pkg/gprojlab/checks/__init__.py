from __future__ import annotations

# importing std registers the checks
from . import std  # noqa: F401
from .base import Check, CheckContext
from .registry import check_names, get_check_class, list_check_specs, register, run_check

__all__ = ["Check", "CheckContext", "check_names", "get_check_class", "list_check_specs", "register", "run_check"]

from .parser import ParsedAlgebra, parse_algebra, parse_module
from .report import SCHEMA_VERSION, emit_report
from .serialize import algebra_to_text, module_to_text

__all__ = [
    "ParsedAlgebra", "SCHEMA_VERSION", "algebra_to_text", "emit_report", "module_to_text",
    "parse_algebra", "parse_module",
]

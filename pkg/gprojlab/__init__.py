from __future__ import annotations

# Ensure the verification checks are registered upon package import
from . import checks  # noqa: F401

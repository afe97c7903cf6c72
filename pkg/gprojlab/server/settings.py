from __future__ import annotations

import logging
import os
from typing import List, Optional

try:
    from dotenv import load_dotenv  # type: ignore
    # Load default .env and optional ENV_FILE override for local runs
    load_dotenv()
    env_file_override = os.getenv("ENV_FILE")
    if env_file_override:
        load_dotenv(env_file_override, override=False)
except Exception:
    # dotenv is optional; ignore if unavailable
    pass

logger = logging.getLogger("gprojlab.settings")


def _int_env(name: str, default: Optional[int], minimum: int = 1) -> Optional[int]:
    """Integer variable; unparsable values and values below ``minimum`` are logged and replaced by the default."""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer; using %s", name, raw, default)
        return default
    if value < minimum:
        logger.warning("%s=%d is below %d; using %s", name, value, minimum, default)
        return default
    return value


def _format_env() -> str:
    raw = os.getenv("GPROJLAB_FORMAT", "json").strip().lower()
    if raw not in ("json", "md"):
        logger.warning("GPROJLAB_FORMAT=%r is not json or md; using json", raw)
        return "json"
    return raw


class Settings:
    def __init__(self) -> None:
        # Computation defaults
        self.GPROJLAB_BOUND: Optional[int] = _int_env("GPROJLAB_BOUND", None)
        self.GPROJLAB_SEED: int = _int_env("GPROJLAB_SEED", 0, minimum=0)
        self.GPROJLAB_SAMPLE: int = _int_env("GPROJLAB_SAMPLE", 20)
        self.GPROJLAB_SAMPLE_DIM: int = _int_env("GPROJLAB_SAMPLE_DIM", 12)
        self.GPROJLAB_DECOMPOSE_LIMIT: int = _int_env("GPROJLAB_DECOMPOSE_LIMIT", 48)
        self.GPROJLAB_FORMAT: str = _format_env()
        self.LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO").upper()

        # HTTP surface
        self.PORT: int = _int_env("PORT", 8000)
        cors_origins_csv = os.getenv("CORS_ORIGINS", "*")
        self.CORS_ORIGINS: List[str] = [origin.strip() for origin in cors_origins_csv.split(",") if origin.strip()]

    def default_bound(self, algebra_dimension: int) -> int:
        if self.GPROJLAB_BOUND is not None:
            return self.GPROJLAB_BOUND
        return 4 * algebra_dimension + 4


settings = Settings()

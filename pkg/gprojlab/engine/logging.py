from __future__ import annotations

import logging
import logging.config
from typing import Any, Dict, List, Optional, Sequence

from ..qspec.report import to_jsonable

FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"


def logging_config(stream: str = "ext://sys.stderr", level: str = "INFO",
                   extra: Sequence[str] = ()) -> Dict[str, Any]:
    """dictConfig for the ``gprojlab`` tree; ``extra`` names further loggers (uvicorn's) sharing the handler at INFO."""
    loggers: Dict[str, Any] = {name: {"handlers": ["default"], "level": "INFO"} for name in extra}
    loggers["gprojlab"] = {"handlers": ["default"], "level": level, "propagate": False}
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {"default": {"format": FORMAT}},
        "handlers": {
            "default": {
                "class": "logging.StreamHandler",
                "formatter": "default",
                "stream": stream,
            }
        },
        "loggers": loggers,
    }


def configure_logging(stream: str = "ext://sys.stderr", level: str = "INFO", extra: Sequence[str] = ()) -> None:
    logging.config.dictConfig(logging_config(stream, level, extra))


class RunLog:
    """Structured log of one run, kept in the report; entries carry no timestamps."""

    def __init__(self, name: str = "gprojlab.engine") -> None:
        self.entries: List[Dict[str, Any]] = []
        self._logger = logging.getLogger(name)

    def __call__(self, message: str, data: Optional[Dict[str, Any]] = None, step: Optional[str] = None) -> None:
        entry: Dict[str, Any] = {"message": message}
        if step is not None:
            entry["step"] = step
        if data:
            entry["data"] = to_jsonable(data)
        self.entries.append(entry)
        self._logger.info("%s%s", f"[{step}] " if step else "", message)

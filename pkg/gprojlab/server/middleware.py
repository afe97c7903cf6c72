from __future__ import annotations

import logging
import time

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware

from .settings import settings

logger = logging.getLogger("gprojlab.server")


def add_cors(app: FastAPI) -> None:
    origins = settings.CORS_ORIGINS or ["*"]
    # no credentials with a wildcard origin
    app.add_middleware(
        CORSMiddleware,
        allow_origins=origins,
        allow_credentials="*" not in origins,
        allow_methods=["GET", "POST"],
        allow_headers=["Content-Type"],
    )


def add_request_logging(app: FastAPI) -> None:
    """Log method, path, status and wall time of every request; the time also goes out as ``X-Elapsed-Ms``."""

    @app.middleware("http")
    async def log_requests(request: Request, call_next):
        started = time.perf_counter()
        response = await call_next(request)
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        response.headers["X-Elapsed-Ms"] = f"{elapsed_ms:.1f}"
        logger.info("%s %s -> %d (%.1f ms)", request.method, request.url.path, response.status_code, elapsed_ms)
        return response

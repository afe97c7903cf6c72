from __future__ import annotations

import uvicorn
from fastapi import FastAPI

from ..engine.logging import configure_logging
from .api import router as api_router
from .middleware import add_cors, add_request_logging
from .settings import settings

UVICORN_LOGGERS = ("uvicorn", "uvicorn.error", "uvicorn.access")

# Service logs go to stdout
configure_logging("ext://sys.stdout", settings.LOG_LEVEL, extra=UVICORN_LOGGERS)


def create_app() -> FastAPI:
    app = FastAPI(title="gprojlab", description="Gorenstein invariants of bound quiver algebras")
    app.include_router(api_router)

    @app.get("/healthz")
    def healthz():
        return {"ok": True}

    add_request_logging(app)
    add_cors(app)
    return app


app = create_app()


if __name__ == "__main__":
    uvicorn.run("gprojlab.server.main:app", host="0.0.0.0", port=settings.PORT)

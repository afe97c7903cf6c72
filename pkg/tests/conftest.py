import os
import pathlib
import sys
from typing import Generator

import pytest
from fastapi.testclient import TestClient

# Ensure project root is on sys.path so `import gprojlab...` works
PROJECT_ROOT = pathlib.Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

# Settings are read once on import; small samples keep the sampled checks quick
os.environ.setdefault("GPROJLAB_SEED", "0")
os.environ.setdefault("GPROJLAB_SAMPLE", "8")
os.environ.setdefault("GPROJLAB_SAMPLE_DIM", "8")
os.environ.setdefault("LOG_LEVEL", "WARNING")


@pytest.fixture(scope="session", autouse=True)
def _set_test_env() -> None:
    # A stray .env must not change bounds under test
    os.environ.pop("GPROJLAB_BOUND", None)
    os.environ.pop("ENV_FILE", None)


@pytest.fixture(scope="session")
def client() -> Generator[TestClient, None, None]:
    from gprojlab.server.main import app

    with TestClient(app) as c:
        yield c


@pytest.fixture()
def fixture_text():
    def read(name: str) -> str:
        return (FIXTURES / name).read_text(encoding="utf-8")
    return read


@pytest.fixture()
def fixture_path():
    def path(name: str) -> str:
        return str(FIXTURES / name)
    return path


@pytest.fixture(scope="session")
def s3():
    from gprojlab.core import nakayama_cyclic

    return nakayama_cyclic(3, 2)


@pytest.fixture(scope="session")
def a2():
    from gprojlab.core import nakayama_linear

    return nakayama_linear(2)


@pytest.fixture(scope="session")
def two_loop():
    from gprojlab.core import build_algebra, make_ideal, make_quiver

    quiver = make_quiver(["1"], [("x", "1", "1"), ("y", "1", "1")])
    return build_algebra(quiver, make_ideal([("x", "x"), ("x", "y"), ("y", "x"), ("y", "y")]))


@pytest.fixture(scope="session")
def glued_s3(s3):
    from gprojlab.core import glue_at_vertex

    return glue_at_vertex(s3, "1", s3, "1", names=("X", "Y"))


@pytest.fixture(scope="session")
def arrow_s3(s3, a2):
    from gprojlab.core import connect_by_arrow

    return connect_by_arrow(s3, "1", a2, "2", names=("B", "A"))

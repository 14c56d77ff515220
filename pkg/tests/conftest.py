import pytest

from tetradgeom.certificates import Context
from tetradgeom.tetrad import build_frame


@pytest.fixture(scope="session")
def frame():
    return build_frame()


@pytest.fixture(scope="session")
def ctx(frame):
    return Context(frame)

import logging

import pytest
from fastapi.testclient import TestClient

from main import app
from src.repositories.workspace import WorkspaceRepository
from src.services.semiring import builtin
from src.services.workbench import WorkbenchService

# Three-element explicit semiring: the boolean semiring with a top added
# above 1 that absorbs sums and products with anything but 0.
CHAIN_SCRIPT = """
semiring C
  elements 0 1 t
  zero 0
  one 1
  add 0 0 = 0
  add 0 1 = 1
  add 0 t = t
  add 1 0 = 1
  add 1 1 = 1
  add 1 t = t
  add t 0 = t
  add t 1 = t
  add t t = t
  mul 0 0 = 0
  mul 0 1 = 0
  mul 0 t = 0
  mul 1 0 = 0
  mul 1 1 = 1
  mul 1 t = t
  mul t 0 = 0
  mul t 1 = t
  mul t t = t
end
"""

ZMOD6_SCRIPT = """
# zmod 6 with its two prime congruences
semiring Z builtin zmod 6 end
congruence even on Z = {0 2 4}{1 3 5}
congruence three on Z = {0 3}{1 4}{2 5}
congruence gen on Z pairs 0~2
equivalence E on Z = {0 1}{2 3 4 5}
ideal J on Z = {0 2 4}
system S over Z in Z vars 1 = "x^2 = x"
points Y over Z in Z vars 1 = (0) (3)
run spectrum
run meet congruences=even,three
run hom-count systems=S congruences=three
"""

NATURALS_SCRIPT = """
semiring N naturals end
congruence r on N = mod 2
system T over N in N vars 1 = "x = 0"
"""


@pytest.fixture(autouse=True)
def reset_workbench_logger():
    yield
    logging.getLogger("workbench").handlers.clear()


@pytest.fixture
def write_script(tmp_path):
    def write(text, name="script.wb"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def chain_script():
    return CHAIN_SCRIPT


@pytest.fixture
def zmod6_script():
    return ZMOD6_SCRIPT


@pytest.fixture
def naturals_script():
    return NATURALS_SCRIPT


@pytest.fixture(scope="module")
def zmod6():
    return builtin("zmod", 6)


@pytest.fixture(scope="module")
def boolean():
    return builtin("boolean")


@pytest.fixture
def workspace():
    return WorkspaceRepository.from_text(ZMOD6_SCRIPT)


@pytest.fixture
def service(workspace):
    return WorkbenchService(workspace)


@pytest.fixture(scope="module")
def client():
    yield TestClient(app)

    app.dependency_overrides.clear()

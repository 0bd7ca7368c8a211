import pytest

from zetasym import tau
from zetasym.config import EvalConfig


@pytest.fixture(scope="session")
def cfg() -> EvalConfig:
    return EvalConfig()


@pytest.fixture(scope="session")
def table_small() -> tau.TauTable:
    return tau.tau_table(200)


@pytest.fixture(scope="session")
def table_10k() -> tau.TauTable:
    return tau.tau_table(10_000)

from __future__ import annotations

import pytest

from symgen.catalog import load_catalog
from symgen.golay import build_golay, m24


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption("--run-slow", action="store_true", default=False, help="run slow catalog checks")
    parser.addoption("--run-heavy", action="store_true", default=False, help="run heavy enumerations")


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    gates = {"slow": "--run-slow", "heavy": "--run-heavy"}
    for item in items:
        for marker, flag in gates.items():
            if marker in item.keywords and not config.getoption(flag):
                item.add_marker(pytest.mark.skip(reason=f"needs {flag}"))


@pytest.fixture(scope="session")
def golay():
    return build_golay("qr")


@pytest.fixture(scope="session")
def mathieu24(golay):
    return m24(golay)


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()

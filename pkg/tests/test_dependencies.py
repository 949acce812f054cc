from __future__ import annotations

import pytest

from symgen import dependencies
from symgen.dependencies import Requirement, check_requirement, ensure_dependencies, missing_dependencies


def test_installed_stack_is_accepted() -> None:
    assert missing_dependencies() == []
    ensure_dependencies()


def test_missing_and_outdated_packages() -> None:
    absent = Requirement("symgen_no_such_module", pip_name="no-such-module")
    assert check_requirement(absent) == "symgen_no_such_module is not installed"
    too_old = Requirement("numpy", (999,))
    assert "older than 999" in check_requirement(too_old)
    assert too_old.install_hint == "numpy>=999"


def test_exit_message_lists_every_problem(monkeypatch: pytest.MonkeyPatch) -> None:
    reqs = (Requirement("symgen_missing_a"), Requirement("symgen_missing_b", (1, 2)))
    monkeypatch.setattr(dependencies, "missing_dependencies", lambda: missing_dependencies(reqs))
    with pytest.raises(SystemExit) as info:
        ensure_dependencies()
    message = str(info.value.code)
    assert "symgen_missing_a is not installed" in message
    assert "pip install symgen_missing_a symgen_missing_b>=1.2" in message

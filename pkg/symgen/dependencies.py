from __future__ import annotations

"""Runtime dependency guard: import names, minimum versions and pip hints."""

import importlib
from dataclasses import dataclass


@dataclass(frozen=True)
class Requirement:
    module: str
    minimum: tuple[int, ...] = ()
    pip_name: str | None = None

    @property
    def install_hint(self) -> str:
        pkg = self.pip_name or self.module
        if self.minimum:
            pkg += ">=" + ".".join(map(str, self.minimum))
        return pkg


# numpy 2 brings np.bitwise_count, used by the Golay code scans
_REQUIRED: tuple[Requirement, ...] = (
    Requirement("numpy", (2, 0)),
    Requirement("networkx", (3, 0)),
    Requirement("tqdm"),
)


def _version_tuple(text: str) -> tuple[int, ...]:
    parts = []
    for piece in text.split("."):
        digits = "".join(ch for ch in piece if ch.isdigit())
        if not digits:
            break
        parts.append(int(digits))
    return tuple(parts)


def check_requirement(req: Requirement) -> str | None:
    """Problem description for one requirement, or None when it is satisfied."""
    try:
        module = importlib.import_module(req.module)
    except ImportError:
        return f"{req.module} is not installed"
    if req.minimum:
        found = getattr(module, "__version__", "")
        if _version_tuple(found) < req.minimum:
            wanted = ".".join(map(str, req.minimum))
            return f"{req.module} {found or '(unknown version)'} is older than {wanted}"
    return None


def missing_dependencies(requirements: tuple[Requirement, ...] = _REQUIRED) -> list[tuple[Requirement, str]]:
    out = []
    for req in requirements:
        problem = check_requirement(req)
        if problem:
            out.append((req, problem))
    return out


def ensure_dependencies() -> None:
    """Exit with one message listing every unmet runtime dependency."""
    problems = missing_dependencies()
    if not problems:
        return
    lines = [f"Missing dependency: {problem}" for _, problem in problems]
    lines.append("Fix with:  pip install " + " ".join(req.install_hint for req, _ in problems))
    raise SystemExit("\n".join(lines) + "\n")

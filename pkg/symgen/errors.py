from __future__ import annotations

"""Exception hierarchy shared by every symgen module."""

from dataclasses import dataclass


class SymgenError(Exception):
    """Base class for all errors raised by symgen."""


class DegreeMismatchError(SymgenError, ValueError):
    pass


class PointOutOfRangeError(SymgenError, ValueError):
    pass


class NotASubgroupError(SymgenError, ValueError):
    pass


class NotInGroupError(SymgenError, ValueError):
    pass


class RecipeError(SymgenError, ValueError):
    pass


class WordError(SymgenError, ValueError):
    """A word refers to undeclared generators or cannot be parsed."""


class PresentationError(SymgenError):
    pass


class IncompleteTableError(SymgenError):
    pass


class IntegrityError(SymgenError):
    """Embedded constants or a certificate failed verification."""


class ContextError(SymgenError):
    pass


class CatalogError(SymgenError):
    pass


class ConfigError(SymgenError, ValueError):
    pass


class ConfigSyntaxError(ConfigError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class EnumerationStats:
    live: int
    defined: int
    merged: int
    seconds: float

    def as_dict(self) -> dict[str, float]:
        return {
            "live": self.live,
            "defined": self.defined,
            "merged": self.merged,
            "seconds": round(self.seconds, 3),
        }


class EnumerationOverflow(SymgenError):
    """The coset table reached ``max_cosets`` live cosets."""

    def __init__(self, max_cosets: int, stats: EnumerationStats) -> None:
        super().__init__(
            f"coset limit {max_cosets} reached "
            f"(live {stats.live}, defined {stats.defined}, merged {stats.merged}); "
            "the index may be infinite or the cap too low"
        )
        self.max_cosets = max_cosets
        self.stats = stats

from __future__ import annotations

"""Words, presentations and their plain-text form.

A word is a tuple of signed generator indices: ``k + 1`` stands for
generator ``k`` and ``-(k + 1)`` for its inverse. The text form of a
presentation is::

    gens: a b; rels: a^2, b^3, (a*b)^7, [a,b]^4; sub: a

Grammar (whitespace is insignificant apart from separating names)::

    presentation := section { ";" section }
    section      := "gens" ":" name { name }
                  | "rels" ":" [ word { "," word } ]
                  | "sub"  ":" [ word { "," word } ]
    word         := term { [ "*" ] term }
    term         := atom [ "^" [ "-" ] integer ]
    atom         := name | "1" | "(" word ")" | "[" word "," word "]"

``[x, y]`` is the commutator ``x^-1 y^-1 x y``.
"""

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import PresentationError, WordError

Word = tuple[int, ...]

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[()\[\],*^\-]))")


def invert_word(word: Sequence[int]) -> Word:
    return tuple(-letter for letter in reversed(word))


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(word: Sequence[int]) -> Word:
    reduced = list(free_reduce(word))
    while len(reduced) >= 2 and reduced[0] == -reduced[-1]:
        reduced = reduced[1:-1]
    return tuple(reduced)


def word_power(word: Sequence[int], exponent: int) -> Word:
    base = tuple(word) if exponent >= 0 else invert_word(word)
    return free_reduce(base * abs(exponent))


def commutator(x: Sequence[int], y: Sequence[int]) -> Word:
    return free_reduce(invert_word(x) + invert_word(y) + tuple(x) + tuple(y))


def canonical_relator(word: Sequence[int]) -> Word:
    """Smallest cyclic conjugate of the word or its inverse (for de-duplication)."""
    reduced = cyclic_reduce(word)
    if not reduced:
        return reduced
    candidates = []
    for w in (reduced, invert_word(reduced)):
        candidates.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(candidates)


def format_word(word: Sequence[int], names: Sequence[str]) -> str:
    """Render a word with runs collapsed into powers, e.g. ``a^2*b^-1``."""
    if not word:
        return "1"
    parts: list[str] = []
    i = 0
    while i < len(word):
        letter = word[i]
        run = 1
        while i + run < len(word) and word[i + run] == letter:
            run += 1
        name = names[abs(letter) - 1]
        exponent = run if letter > 0 else -run
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
        i += run
    return "*".join(parts)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator names")
        for rel in self.relators:
            if not rel:
                raise PresentationError("relators must be non-empty words")
            check_word(rel, len(self.generators))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def involutions(self) -> frozenset[int]:
        """Generators ``k`` with a relator ``x_k^2``."""
        out = set()
        for rel in self.relators:
            if len(rel) == 2 and rel[0] == rel[1]:
                out.add(abs(rel[0]) - 1)
        return frozenset(out)

    def with_relators(self, extra: Iterable[Word]) -> "Presentation":
        return Presentation(self.generators, self.relators + tuple(extra))

    def format(self, subgroup: Sequence[Word] = ()) -> str:
        text = "gens: " + " ".join(self.generators)
        text += "; rels: " + ", ".join(format_word(r, self.generators) for r in self.relators)
        if subgroup:
            text += "; sub: " + ", ".join(format_word(w, self.generators) for w in subgroup)
        return text


def check_word(word: Sequence[int], rank: int) -> None:
    for letter in word:
        if letter == 0 or abs(letter) > rank:
            raise WordError(f"letter {letter} outside generators 1..{rank}")


class _WordParser:
    """Recursive-descent reader for the word grammar above."""

    def __init__(self, text: str, names: Sequence[str], offset: int = 0) -> None:
        self.text = text
        self.index = {name: i for i, name in enumerate(names)}
        self.tokens = self._tokenize(text, offset)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str, offset: int) -> list[tuple[str, str, int]]:
        tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN_RE.match(text, pos)
            if not m:
                col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1 + offset
                raise WordError(f"unexpected character {text[pos:].lstrip()[:1]!r} at column {col}")
            kind = m.lastgroup or "op"
            tokens.append((kind, m.group(kind), m.start(kind) + 1 + offset))
            pos = m.end()
        tokens.append(("end", "", len(text) + 1 + offset))
        return tokens

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self, value: str | None = None) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if value is not None and tok[1] != value:
            raise WordError(f"expected {value!r} at column {tok[2]}, found {tok[1] or 'end'!r}")
        self.pos += 1
        return tok

    def parse(self) -> Word:
        word = self.word()
        kind, value, col = self.peek()
        if kind != "end":
            raise WordError(f"unexpected {value!r} at column {col}")
        return word

    def word(self) -> Word:
        out = self.term()
        while True:
            kind, value, _ = self.peek()
            if value == "*":
                self.take()
                out = out + self.term()
            elif kind in ("name", "int") or value in ("(", "["):
                out = out + self.term()
            else:
                return free_reduce(out)

    def term(self) -> Word:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            kind, value, col = self.take()
            if kind != "int":
                raise WordError(f"expected an exponent at column {col}")
            return word_power(base, sign * int(value))
        return base

    def atom(self) -> Word:
        kind, value, col = self.take()
        if kind == "name":
            if value not in self.index:
                raise WordError(f"unknown generator {value!r} at column {col}")
            return (self.index[value] + 1,)
        if kind == "int":
            if value != "1":
                raise WordError(f"unexpected number {value} at column {col}")
            return ()
        if value == "(":
            inner = self.word()
            self.take(")")
            return inner
        if value == "[":
            left = self.word()
            self.take(",")
            right = self.word()
            self.take("]")
            return commutator(left, right)
        raise WordError(f"unexpected {value or 'end'!r} at column {col}")


def parse_word(text: str, names: Sequence[str]) -> Word:
    return _WordParser(text, names).parse()


def _split_top_level(text: str, sep: str) -> list[tuple[str, int]]:
    """Split on ``sep`` outside brackets; returns (piece, offset) pairs."""
    pieces = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            pieces.append((text[start:i], start))
            start = i + 1
    pieces.append((text[start:], start))
    return pieces


def parse_presentation(text: str) -> tuple[Presentation, tuple[Word, ...]]:
    """Parse ``gens: ...; rels: ...; sub: ...`` into a presentation and subgroup words."""
    sections: dict[str, tuple[str, int]] = {}
    for piece, offset in _split_top_level(text, ";"):
        if not piece.strip():
            continue
        key, colon, body = piece.partition(":")
        key = key.strip()
        if not colon or key not in ("gens", "rels", "sub"):
            raise WordError(f"expected 'gens:', 'rels:' or 'sub:' at column {offset + 1}")
        if key in sections:
            raise WordError(f"section {key!r} given twice")
        sections[key] = (body, offset + len(piece) - len(body))
    if "gens" not in sections:
        raise WordError("missing 'gens:' section")
    names = sections["gens"][0].split()
    if not names:
        raise WordError("no generators declared")

    def words(key: str) -> tuple[Word, ...]:
        if key not in sections:
            return ()
        body, base = sections[key]
        out = []
        for piece, offset in _split_top_level(body, ","):
            if piece.strip():
                out.append(_WordParser(piece, names, base + offset).parse())
        return tuple(out)

    relators = tuple(w for w in words("rels") if w)
    return Presentation(tuple(names), relators), words("sub")


__all__ = [
    "Presentation",
    "Word",
    "canonical_relator",
    "check_word",
    "commutator",
    "cyclic_reduce",
    "format_word",
    "free_reduce",
    "invert_word",
    "parse_presentation",
    "parse_word",
    "word_power",
]

from __future__ import annotations

"""Job and catalog files.

A file is a list of sections. A section header starts in column 1 as
``key: value``; indented lines after it are the section's items. The
grammar is given in EBNF in ``docs/CONFIG.md``. Relations are written like
``((1 2) * t[1])^3`` or ``pi * t[A] * t[B] * t[A] * t[E]``.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol, Union

from .errors import ConfigError, ConfigSyntaxError

logger = logging.getLogger(__name__)

SECTIONS = (
    "entry", "title", "scale", "control", "action", "presentation", "names",
    "relations", "search", "limits", "expect", "oracle", "output", "note",
)
SINGLE = ("entry", "title", "scale", "presentation", "oracle")
PROVENANCE = ("PAPER", "DERIVED-oracle", "DERIVED-frozen")
EXPECT_KEYS = ("index", "order", "abelianization", "degree", "double_cosets", "status")
LIMIT_KEYS = ("max_cosets", "strategy")
SEARCH_KEYS = ("template", "order", "source", "cap")
OUTPUT_KEYS = ("json", "dot")

_HEADER_RE = re.compile(r"^(?P<key>[A-Za-z_][A-Za-z0-9_-]*)\s*:(?P<value>.*)$")
_CYCLE_BODY_RE = re.compile(r"^[\s,0-9xy]*$")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT_RE = re.compile(r"\d+")


# -- relation expressions ----------------------------------------------------


@dataclass(frozen=True)
class Cycles:
    """A control element in 1-based cycle notation; no bodies is the identity."""

    bodies: tuple[str, ...]


@dataclass(frozen=True)
class GenRef:
    """``t[label]`` for a symmetric generator, ``r[label]`` for one of an inner presentation."""

    kind: str
    label: str


@dataclass(frozen=True)
class PiRef:
    pass


@dataclass(frozen=True)
class Product:
    factors: tuple["Node", ...]


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Commutator:
    left: "Node"
    right: "Node"


Node = Union[Cycles, GenRef, PiRef, Product, Power, Commutator]


@dataclass(frozen=True)
class RelationExpr:
    root: Node
    text: str = field(default="", compare=False)

    def emit(self) -> str:
        return emit_node(self.root)

    def has_pi(self) -> bool:
        return _contains_pi(self.root)


def _contains_pi(node: Node) -> bool:
    if isinstance(node, PiRef):
        return True
    if isinstance(node, Product):
        return any(_contains_pi(f) for f in node.factors)
    if isinstance(node, Power):
        return _contains_pi(node.base)
    if isinstance(node, Commutator):
        return _contains_pi(node.left) or _contains_pi(node.right)
    return False


def emit_node(node: Node) -> str:
    if isinstance(node, Cycles):
        return "".join(f"({b})" for b in node.bodies) if node.bodies else "()"
    if isinstance(node, GenRef):
        return f"{node.kind}[{node.label}]"
    if isinstance(node, PiRef):
        return "pi"
    if isinstance(node, Product):
        return " * ".join(emit_node(f) for f in node.factors)
    if isinstance(node, Power):
        inner = emit_node(node.base)
        if isinstance(node.base, (Product, Power)):
            inner = f"({inner})"
        return f"{inner}^{node.exponent}"
    return f"[{emit_node(node.left)}, {emit_node(node.right)}]"


class _ExprParser:
    """Recursive descent over the relation grammar.

    ``(`` opens a cycle when everything up to the matching ``)`` is points,
    otherwise a group.
    """

    def __init__(self, text: str, line: int, offset: int) -> None:
        self.text = text
        self.line = line
        self.offset = offset
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ConfigSyntaxError:
        col = self.offset + (self.pos if pos is None else pos) + 1
        return ConfigSyntaxError(message, self.line, col)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of line"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def parse(self) -> Node:
        node = self.product()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return node

    def product(self) -> Node:
        factors = [self.factor()]
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                factors.append(self.factor())
            elif ch and (ch in "([" or ch.isalpha()):
                factors.append(self.factor())
            else:
                break
        flat: list[Node] = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, Product) else (f,))
        return flat[0] if len(flat) == 1 else Product(tuple(flat))

    def factor(self) -> Node:
        node = self.atom()
        while self.peek() == "^":
            self.pos += 1
            self.skip()
            m = _INT_RE.match(self.text, self.pos)
            if not m:
                raise self.error("expected a positive exponent")
            exponent = int(m.group())
            if exponent < 1:
                raise self.error("exponents must be at least 1")
            self.pos = m.end()
            node = Power(node, exponent)
        return node

    def _cycle_end(self) -> int | None:
        close = self.text.find(")", self.pos + 1)
        if close < 0:
            return None
        body = self.text[self.pos + 1: close]
        return close if _CYCLE_BODY_RE.match(body) else None

    def atom(self) -> Node:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            if self._cycle_end() is not None:
                bodies = []
                while self.peek() == "(" and (close := self._cycle_end()) is not None:
                    body = " ".join(self.text[self.pos + 1: close].split())
                    if body:
                        bodies.append(body)
                    self.pos = close + 1
                    if self.pos < len(self.text) and self.text[self.pos].isspace():
                        break
                return Cycles(tuple(bodies))
            self.pos += 1
            inner = self.product()
            self.expect(")")
            return inner
        if ch == "[":
            self.pos += 1
            left = self.product()
            self.expect(",")
            right = self.product()
            self.expect("]")
            return Commutator(left, right)
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            raise self.error(f"unexpected {ch or 'end of line'!r}")
        name = m.group()
        self.pos = m.end()
        if name == "pi":
            return PiRef()
        if name in ("t", "r"):
            if self.pos >= len(self.text) or self.text[self.pos] != "[":
                raise self.error(f"expected '[' after {name}")
            close = self.text.find("]", self.pos)
            if close < 0 or "[" in self.text[self.pos + 1: close]:
                raise self.error(f"unclosed {name}[", self.pos)
            label = self.text[self.pos + 1: close].strip()
            if not label:
                raise self.error("empty generator label", self.pos)
            self.pos = close + 1
            return GenRef(name, label)
        raise self.error(f"unknown name {name!r}", start)


def parse_relation(text: str, line: int = 1, offset: int = 0) -> RelationExpr:
    """Parse one relation; errors carry the line and column of the fault."""
    return RelationExpr(_ExprParser(text, line, offset).parse(), text.strip())


class Resolver(Protocol):
    def control(self, cycles: Cycles) -> object: ...

    def symmetric(self, label: str) -> int: ...

    def inner(self, label: str) -> object: ...

    def pi(self) -> object: ...


def to_items(node: Node, resolver: Resolver) -> list:
    """Flatten an expression into control elements and symmetric generator points."""
    from .progenitor import invert_items

    if isinstance(node, Cycles):
        return [resolver.control(node)]
    if isinstance(node, GenRef):
        return [resolver.symmetric(node.label)] if node.kind == "t" else [resolver.inner(node.label)]
    if isinstance(node, PiRef):
        return [resolver.pi()]
    if isinstance(node, Product):
        return [item for f in node.factors for item in to_items(f, resolver)]
    if isinstance(node, Power):
        return to_items(node.base, resolver) * node.exponent
    left = to_items(node.left, resolver)
    right = to_items(node.right, resolver)
    return invert_items(left) + invert_items(right) + left + right


# -- job files ----------------------------------------------------------------


@dataclass(frozen=True)
class Tagged:
    """A value with an optional provenance tag such as ``[PAPER]``."""

    value: str
    tag: str = ""

    def emit(self) -> str:
        return f"{self.value} [{self.tag}]" if self.tag else self.value


@dataclass(frozen=True)
class NameDef:
    """``A = 1234`` names an object; ``B = meet(A, 8)`` ranges over objects meeting A in 8 points."""

    name: str
    label: str = ""
    meet: tuple[str, int] | None = None

    def emit(self) -> str:
        if self.meet is not None:
            return f"{self.name} = meet({self.meet[0]}, {self.meet[1]})"
        return f"{self.name} = {self.label}"


@dataclass(frozen=True)
class SearchSpec:
    template: RelationExpr
    order: int | None = None
    source: str = "lemma"
    cap: int | None = None


@dataclass(frozen=True)
class JobConfig:
    entry: str = ""
    title: str = ""
    scale: str = "desk"
    control: tuple[str, ...] = ()
    control_perms: tuple[str, ...] = ()
    action: tuple[str, ...] = ("natural",)
    presentation: str = ""
    names: tuple[NameDef, ...] = ()
    relations: tuple[RelationExpr, ...] = ()
    search: SearchSpec | None = None
    limits: tuple[tuple[str, str], ...] = ()
    expect: tuple[tuple[str, Tagged], ...] = ()
    oracle: tuple[str, ...] = ()
    output: tuple[tuple[str, str], ...] = ()
    note: str = ""

    def expected(self, key: str) -> Tagged | None:
        for k, v in self.expect:
            if k == key:
                return v
        return None

    def limit(self, key: str) -> str | None:
        return dict(self.limits).get(key)

    def emit(self) -> str:
        return emit(self)


def _split_tag(text: str) -> Tagged:
    m = re.match(r"^(?P<value>.*?)\s*\[(?P<tag>[A-Za-z-]+)\]\s*$", text)
    if m:
        return Tagged(m.group("value").strip(), m.group("tag"))
    return Tagged(text.strip())


class _FileParser:
    def __init__(self, text: str) -> None:
        self.lines = text.splitlines()
        self.fields: dict[str, object] = {}
        self.seen: set[str] = set()

    def run(self) -> JobConfig:
        current: str | None = None
        for lineno, raw in enumerate(self.lines, start=1):
            line = raw.rstrip()
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            if line[0].isspace():
                if current is None:
                    raise ConfigSyntaxError("indented item outside a section", lineno, 1)
                col = len(line) - len(line.lstrip()) + 1
                self.item(current, line.strip(), lineno, col)
                continue
            m = _HEADER_RE.match(line)
            if not m:
                raise ConfigSyntaxError("expected 'key: value'", lineno, 1)
            key = m.group("key")
            if key not in SECTIONS:
                raise ConfigSyntaxError(f"unknown key {key!r}", lineno, 1)
            if key in self.seen and key != "note":
                raise ConfigSyntaxError(f"section {key!r} given twice", lineno, 1)
            self.seen.add(key)
            current = key
            value = m.group("value")
            if value.strip():
                col = m.start("value") + len(value) - len(value.lstrip()) + 1
                self.header(key, value.strip(), lineno, col)
        return self.build()

    def header(self, key: str, value: str, line: int, col: int) -> None:
        if key in SINGLE:
            self.fields[key] = value
        elif key == "control":
            self.fields["control"] = tuple(value.split())
        elif key == "action":
            self.fields["action"] = tuple(value.split())
        else:
            self.item(key, value, line, col)

    def item(self, key: str, value: str, line: int, col: int) -> None:
        if key == "relations":
            self.fields.setdefault("relations", []).append(parse_relation(value, line, col - 1))
        elif key == "control":
            self.fields.setdefault("control_perms", []).append(value)
        elif key == "note":
            self.fields.setdefault("note", []).append(value)
        elif key == "names":
            self.fields.setdefault("names", []).append(self.name_def(value, line, col))
        elif key in ("search", "limits", "expect", "output"):
            name, eq, rest = value.partition("=")
            name = name.strip()
            allowed = {"search": SEARCH_KEYS, "limits": LIMIT_KEYS, "expect": EXPECT_KEYS, "output": OUTPUT_KEYS}[key]
            if name not in allowed or not eq:
                raise ConfigSyntaxError(f"unknown {key} key {name!r}", line, col)
            rest_col = col + len(value) - len(rest.lstrip())
            self.fields.setdefault(key, []).append((name, rest.strip(), line, rest_col))
        else:
            raise ConfigSyntaxError(f"section {key!r} takes no items", line, col)

    @staticmethod
    def name_def(value: str, line: int, col: int) -> NameDef:
        name, eq, rest = value.partition("=")
        name, rest = name.strip(), rest.strip()
        if not eq or not _NAME_RE.fullmatch(name) or not rest:
            raise ConfigSyntaxError("expected 'NAME = label' or 'NAME = meet(OTHER, k)'", line, col)
        if name in ("t", "r", "pi"):
            raise ConfigSyntaxError(f"{name!r} is reserved", line, col)
        m = re.fullmatch(r"meet\(\s*([A-Za-z_][A-Za-z0-9_]*)\s*,\s*(\d+)\s*\)", rest)
        if m:
            return NameDef(name, meet=(m.group(1), int(m.group(2))))
        return NameDef(name, label=rest)

    def build(self) -> JobConfig:
        f = self.fields
        kwargs: dict[str, object] = {k: f[k] for k in SINGLE if k in f}
        for key in ("control", "action"):
            if key in f:
                kwargs[key] = f[key]
        kwargs["control_perms"] = tuple(f.get("control_perms", ()))
        kwargs["relations"] = tuple(f.get("relations", ()))
        kwargs["note"] = "\n".join(f.get("note", ()))
        names = tuple(f.get("names", ()))
        declared: set[str] = set()
        for nd in names:
            if nd.name in declared:
                raise ConfigError(f"name {nd.name!r} defined twice")
            if nd.meet is not None and nd.meet[0] not in declared:
                raise ConfigError(f"{nd.name} meets undefined name {nd.meet[0]!r}")
            declared.add(nd.name)
        kwargs["names"] = names
        kwargs["limits"] = tuple((k, v) for k, v, _, _ in f.get("limits", ()))
        kwargs["output"] = tuple((k, v) for k, v, _, _ in f.get("output", ()))
        kwargs["expect"] = tuple((k, _split_tag(v)) for k, v, _, _ in f.get("expect", ()))
        for k, v, line, col in f.get("expect", ()):
            if k in ("index", "order", "abelianization", "degree", "double_cosets"):
                if not _INT_RE.fullmatch(_split_tag(v).value):
                    raise ConfigSyntaxError(f"expected an integer for {k}", line, col)
        for k, v, line, col in f.get("limits", ()):
            if k == "max_cosets" and not _INT_RE.fullmatch(v):
                raise ConfigSyntaxError("max_cosets must be an integer", line, col)
        if "search" in f:
            kwargs["search"] = self.search(f["search"])
        if "oracle" in f:
            kwargs["oracle"] = tuple(str(f["oracle"]).split())
        return JobConfig(**kwargs)

    @staticmethod
    def search(items: list) -> SearchSpec:
        values: dict[str, object] = {}
        for k, v, line, col in items:
            if k in values:
                raise ConfigSyntaxError(f"search key {k!r} given twice", line, col)
            if k == "template":
                expr = parse_relation(v, line, col - 1)
                if not expr.has_pi():
                    raise ConfigSyntaxError("a search template must contain pi", line, col)
                values[k] = expr
            elif k in ("order", "cap"):
                if not _INT_RE.fullmatch(v):
                    raise ConfigSyntaxError(f"{k} must be an integer", line, col)
                values[k] = int(v)
            else:
                if v not in ("lemma", "order"):
                    raise ConfigSyntaxError("source is 'lemma' or 'order'", line, col)
                values[k] = v
        if "template" not in values:
            raise ConfigError("search section needs a template")
        return SearchSpec(**values)


def parse_config(text: str) -> JobConfig:
    """Parse a job file.

    :raises ConfigSyntaxError: with the line and column of the first fault.
    """
    config = _FileParser(text).run()
    logger.debug("parsed config %r with %d relations", config.entry, len(config.relations))
    return config


def load_config(path: str | Path) -> JobConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_config(text)
    except ConfigSyntaxError as exc:
        raise ConfigSyntaxError(f"{path.name}: {exc.message}", exc.line, exc.column) from None


def emit(config: JobConfig) -> str:
    """Canonical text for ``config``; parsing it gives back an equal config."""
    out: list[str] = []
    for key in ("entry", "title", "scale"):
        value = getattr(config, key)
        if value:
            out.append(f"{key}: {value}")
    if config.control:
        out.append("control: " + " ".join(config.control))
        out.extend(f"  {p}" for p in config.control_perms)
    out.append("action: " + " ".join(config.action))
    if config.presentation:
        out.append(f"presentation: {config.presentation}")
    if config.names:
        out.append("names:")
        out.extend(f"  {nd.emit()}" for nd in config.names)
    if config.relations:
        out.append("relations:")
        out.extend(f"  {r.emit()}" for r in config.relations)
    if config.search is not None:
        s = config.search
        out.append("search:")
        out.append(f"  template = {s.template.emit()}")
        if s.order is not None:
            out.append(f"  order = {s.order}")
        out.append(f"  source = {s.source}")
        if s.cap is not None:
            out.append(f"  cap = {s.cap}")
    for key, pairs in (("limits", config.limits), ("output", config.output)):
        if pairs:
            out.append(f"{key}:")
            out.extend(f"  {k} = {v}" for k, v in pairs)
    if config.expect:
        out.append("expect:")
        out.extend(f"  {k} = {v.emit()}" for k, v in config.expect)
    if config.oracle:
        out.append("oracle: " + " ".join(config.oracle))
    if config.note:
        out.append("note:")
        out.extend(f"  {line}" for line in config.note.splitlines())
    return "\n".join(out) + "\n"


__all__ = [
    "Commutator",
    "Cycles",
    "GenRef",
    "JobConfig",
    "NameDef",
    "PiRef",
    "Power",
    "Product",
    "RelationExpr",
    "SearchSpec",
    "Tagged",
    "emit",
    "emit_node",
    "load_config",
    "parse_config",
    "parse_relation",
    "to_items",
]

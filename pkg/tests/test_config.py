from __future__ import annotations

from pathlib import Path

import pytest

from symgen.config import (
    Cycles,
    GenRef,
    PiRef,
    Power,
    Product,
    emit,
    load_config,
    parse_config,
    parse_relation,
)
from symgen.constants import CATALOG_DIR
from symgen.errors import ConfigError, ConfigSyntaxError

JOB = """\
entry: demo
title: S4 over S3
control: S3
action: natural
relations:
  (t[1] * (1 2))^3
limits:
  max_cosets = 1000
expect:
  index = 4 [DERIVED-oracle]
  order = 24
"""


def test_parse_job() -> None:
    config = parse_config(JOB)
    assert config.entry == "demo"
    assert config.control == ("S3",)
    assert config.action == ("natural",)
    assert config.limit("max_cosets") == "1000"
    assert config.expected("index").value == "4"
    assert config.expected("index").tag == "DERIVED-oracle"
    assert config.expected("order").tag == ""
    assert config.expected("degree") is None
    (relation,) = config.relations
    assert relation.root == Power(Product((GenRef("t", "1"), Cycles(("1 2",)))), 3)


@pytest.mark.parametrize("path", sorted(CATALOG_DIR.glob("*.sgp")), ids=lambda p: p.stem)
def test_catalog_files_survive_emit(path: Path) -> None:
    config = load_config(path)
    assert parse_config(emit(config)) == config


@pytest.mark.parametrize(
    "text, root",
    [
        ("pi * t[A]", Product((PiRef(), GenRef("t", "A")))),
        ("(1 2)(3 4)", Cycles(("1 2", "3 4"))),
        ("()", Cycles(())),
        ("t[1] t[2] t[1]", Product((GenRef("t", "1"), GenRef("t", "2"), GenRef("t", "1")))),
    ],
)
def test_relation_expressions(text: str, root) -> None:
    assert parse_relation(text).root == root


def test_nested_products_flatten() -> None:
    expr = parse_relation("(pi * t[1]) * (t[2] * t[3])")
    assert isinstance(expr.root, Product)
    assert len(expr.root.factors) == 4
    assert expr.has_pi()


def test_syntax_error_points_at_the_fault() -> None:
    with pytest.raises(ConfigSyntaxError) as info:
        parse_config("entry: bad\nrelations:\n  (t[1)^3\n")
    assert info.value.line == 3
    assert info.value.column == 5


@pytest.mark.parametrize(
    "text",
    [
        "colour: red\n",
        "entry: a\nentry: b\n",
        "  indented\n",
        "expect:\n  speed = 4\n",
        "expect:\n  index 4\n",
        "expect:\n  index = many\n",
        "limits:\n  max_cosets = lots\n",
        "search:\n  template = t[1]^3\n",
        "search:\n  template = (pi * t[1])^3\n  source = guess\n",
        "relations:\n  (t[1] * (1 2))^0\n",
        "relations:\n  (t[1] * q)^3\n",
        "names:\n  t = 12\n",
    ],
)
def test_syntax_errors(text: str) -> None:
    with pytest.raises(ConfigSyntaxError):
        parse_config(text)


def test_semantic_errors() -> None:
    with pytest.raises(ConfigError):
        parse_config("search:\n  order = 2\n")
    with pytest.raises(ConfigError):
        parse_config("names:\n  B = meet(A, 8)\n")


def test_load_errors_name_the_file(tmp_path: Path) -> None:
    path = tmp_path / "broken.sgp"
    path.write_text("colour: red\n", encoding="utf-8")
    with pytest.raises(ConfigSyntaxError) as info:
        load_config(path)
    assert str(info.value).startswith("line 1, column 1: broken.sgp:")
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.sgp")

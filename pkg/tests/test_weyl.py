from __future__ import annotations

import numpy as np
import pytest

from symgen.weyl import (
    coxeter_relators,
    diagram_violations,
    node_map,
    root_count,
    root_system,
    weyl_oracle,
    weyl_order,
)


@pytest.mark.parametrize(
    "family, rank, roots, order",
    [("A", 3, 12, 24), ("A", 5, 30, 720), ("D", 4, 24, 192), ("D", 5, 40, 1920), ("E", 6, 72, 51840)],
)
def test_root_systems(family: str, rank: int, roots: int, order: int) -> None:
    assert len(root_system(family, rank)) == root_count(family, rank) == roots
    assert weyl_order(family, rank) == order
    assert weyl_oracle(family, rank).group.order() == order


@pytest.mark.slow
@pytest.mark.parametrize("rank, order", [(7, 2_903_040), (8, 696_729_600)])
def test_large_e_types(rank: int, order: int) -> None:
    oracle = weyl_oracle("E", rank)
    assert len(oracle.roots) == root_count("E", rank)
    assert oracle.group.order() == order


@pytest.mark.parametrize("family, rank", [("B", 3), ("D", 3), ("E", 5), ("A", 0)])
def test_unknown_types(family: str, rank: int) -> None:
    with pytest.raises(ValueError):
        root_count(family, rank)


def test_coxeter_matrix_of_a3() -> None:
    matrix = weyl_oracle("A", 3).coxeter_matrix()
    assert np.array_equal(matrix, np.array([[1, 3, 2], [3, 1, 3], [2, 3, 1]]))


def test_node_map_and_relators() -> None:
    assert node_map("A", 3) == {"s1": 1, "s2": 2, "t": 0}
    assert coxeter_relators("A", 3) == ["t^2", "s1^2", "s2^2", "(t*s1)^3", "(t*s2)^2", "(s1*s2)^3"]


def test_diagram_violations() -> None:
    oracle = weyl_oracle("D", 4)
    nodes = node_map("D", 4)
    images = {name: oracle.reflections[k] for name, k in nodes.items()}
    assert diagram_violations(images, "D", 4) == []
    leaves = dict(images)
    leaves["s1"], leaves["t"] = images["t"], images["s1"]
    assert diagram_violations(leaves, "D", 4) == []
    images["s2"], images["t"] = images["t"], images["s2"]
    assert ("s3", "t", 2, 3) in diagram_violations(images, "D", 4)

from symgen.unionfind import DisjointSet


def test_union_and_classes() -> None:
    ds = DisjointSet(6)
    assert ds.union(0, 3)
    assert ds.union(3, 5)
    assert not ds.union(5, 0)
    assert ds.union(1, 2)
    assert ds.count == 3
    assert ds.classes() == [[0, 3, 5], [1, 2], [4]]
    assert ds.find(5) == ds.find(0)

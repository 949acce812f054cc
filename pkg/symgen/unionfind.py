from __future__ import annotations

"""Disjoint sets over ``0..n-1`` with path halving and union by rank."""


class DisjointSet:
    __slots__ = ("parent", "rank", "count")

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while x != parent[x]:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Join the sets of x and y; False if they were already joined."""
        i, j = self.find(x), self.find(y)
        if i == j:
            return False
        if self.rank[i] < self.rank[j]:
            i, j = j, i
        self.parent[j] = i
        if self.rank[i] == self.rank[j]:
            self.rank[i] += 1
        self.count -= 1
        return True

    def classes(self) -> list[list[int]]:
        """Classes sorted by smallest member, members ascending."""
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values(), key=lambda members: members[0])


__all__ = ["DisjointSet"]

"""Feasible-set enumeration and the Hamming-distance-1 solution graph."""

from __future__ import annotations

import bisect
import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ilsconn.matrix import CoeffMatrix, IlsInstance, Point

DEFAULT_ENUM_CAP = 10**7


class EnumerationCapExceeded(RuntimeError):
    pass


def integer_rows(A: CoeffMatrix, rhs: Sequence[Fraction]) -> tuple[list[list[int]], list[int]]:
    """Scale each inequality by a positive integer so all data become integers.

    Positive scaling leaves every row's feasible set unchanged.
    """
    rows, bs = [], []
    for row, b in zip(A.rows, rhs):
        lcm = math.lcm(*(v.denominator for v in row), Fraction(b).denominator)
        rows.append([int(v * lcm) for v in row])
        bs.append(int(Fraction(b) * lcm))
    return rows, bs


def check_cap(n: int, d: int, cap: int) -> int:
    size = (d + 1) ** n
    if size > cap:
        raise EnumerationCapExceeded(
            f"enumeration refused: (d+1)^n = {d + 1}^{n} = {size} exceeds cap {cap}"
        )
    return size


def enumerate_solutions(inst: IlsInstance, cap: int = DEFAULT_ENUM_CAP) -> list[Point]:
    """All feasible points in lexicographic order."""
    A = inst.matrix
    check_cap(A.n, inst.d, cap)
    rows, bs = integer_rows(A, inst.rhs)
    sparse = [[(k, a) for k, a in enumerate(r) if a] for r in rows]
    out = []
    for x in itertools.product(range(inst.d + 1), repeat=A.n):
        if all(sum(a * x[k] for k, a in sr) >= b for sr, b in zip(sparse, bs)):
            out.append(Point(x, A.labels))
    return out


@dataclass(frozen=True)
class SolutionGraph:
    vertices: tuple[Point, ...]
    adjacency: tuple[tuple[int, ...], ...]
    components: tuple[int, ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def n_components(self) -> int:
        return len(set(self.components))

    def index(self, p: Point) -> int:
        k = bisect.bisect_left(self.vertices, p)
        if k == len(self.vertices) or self.vertices[k] != p:
            raise KeyError(p)
        return k

    def component_of(self, p: Point) -> int | None:
        try:
            return self.components[self.index(p)]
        except KeyError:
            return None


def _adjacency(vertices: Sequence[Point]) -> list[list[int]]:
    where = {v.coords: k for k, v in enumerate(vertices)}
    if not vertices:
        return []
    hi = max(max(v.coords, default=0) for v in vertices)
    adj: list[list[int]] = [[] for _ in vertices]
    for k, v in enumerate(vertices):
        c = list(v.coords)
        for pos, orig in enumerate(v.coords):
            for val in range(hi + 1):
                if val == orig:
                    continue
                c[pos] = val
                other = where.get(tuple(c))
                if other is not None:
                    adj[k].append(other)
            c[pos] = orig
        adj[k].sort()
    return adj


def bfs_components(adj: Sequence[Sequence[int]]) -> list[int]:
    comp = [-1] * len(adj)
    label = 0
    for s in range(len(adj)):
        if comp[s] != -1:
            continue
        comp[s] = label
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if comp[v] == -1:
                    comp[v] = label
                    queue.append(v)
        label += 1
    return comp


class DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1


def dsu_components(adj: Sequence[Sequence[int]]) -> list[int]:
    """Component ids via union-find, renumbered by first occurrence."""
    ds = DisjointSet(len(adj))
    for u, nbrs in enumerate(adj):
        for v in nbrs:
            ds.union(u, v)
    renum: dict[int, int] = {}
    return [renum.setdefault(ds.find(u), len(renum)) for u in range(len(adj))]


def build_graph(solutions: Sequence[Point]) -> SolutionGraph:
    verts = sorted(set(solutions))
    if verts and any(v.labels != verts[0].labels for v in verts):
        raise ValueError("points do not share a label set")
    adj = _adjacency(verts)
    return SolutionGraph(tuple(verts), tuple(map(tuple, adj)), tuple(bfs_components(adj)))


def solution_graph(inst: IlsInstance, cap: int = DEFAULT_ENUM_CAP) -> SolutionGraph:
    return build_graph(enumerate_solutions(inst, cap))


def is_connected(g: SolutionGraph) -> bool:
    # the empty graph counts as connected
    return g.n_components <= 1


def export_dot(g: SolutionGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{",".join(map(str, v.coords))}";')
    for u, v in g.edges:
        a = ",".join(map(str, g.vertices[u].coords))
        b = ",".join(map(str, g.vertices[v].coords))
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

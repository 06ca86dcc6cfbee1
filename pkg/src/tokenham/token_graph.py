"""k-token graphs: vertices are k-subsets, adjacency is a one-edge swap.

A token vertex is a strictly increasing tuple of 1-based labels, so Python's
tuple ordering is the lexicographic order used for vertex indexing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from tokenham.graph_core import Graph

TokenVertex = tuple[int, ...]

DEFAULT_MATERIALIZE_LIMIT = 10**6


def canonical(elems: Iterable[int]) -> TokenVertex:
    """Sorted tuple form of a subset; rejects repeated labels."""
    t = tuple(sorted(elems))
    if any(a == b for a, b in zip(t, t[1:])):
        raise ValueError(f"subset {t} has repeated labels")
    return t


def enumerate_k_subsets(n: int, k: int) -> list[TokenVertex]:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return list(combinations(range(1, n + 1), k))


def rank_subset(n: int, subset: Sequence[int]) -> int:
    """Lexicographic rank of a sorted k-subset of ``1..n`` (0-based)."""
    k = len(subset)
    r = 0
    prev = 0
    for pos, a in enumerate(subset):
        # skip every subset whose element at this position lies in (prev, a)
        for c in range(prev + 1, a):
            r += comb(n - c, k - pos - 1)
        prev = a
    return r


def unrank_subset(n: int, k: int, r: int) -> TokenVertex:
    if not 0 <= r < comb(n, k):
        raise ValueError(f"rank {r} out of range for C({n},{k})")
    out = []
    c = 1
    for pos in range(k):
        while True:
            block = comb(n - c, k - pos - 1)
            if r < block:
                break
            r -= block
            c += 1
        out.append(c)
        c += 1
    return tuple(out)


def sym_diff(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Symmetric difference of two sorted sequences, by linear merge."""
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            i += 1
            j += 1
        elif x < y:
            out.append(x)
            i += 1
        else:
            out.append(y)
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


def _check_vertex(g: Graph, a: Sequence[int]) -> None:
    for x, y in zip(a, a[1:]):
        if x >= y:
            raise ValueError(f"token vertex {tuple(a)} is not strictly increasing")
    if a and not (1 <= a[0] and a[-1] <= g.n):
        raise ValueError(f"token vertex {tuple(a)} has labels outside 1..{g.n}")


def token_adjacent(g: Graph, a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise ValueError(f"token vertices differ in size: {len(a)} vs {len(b)}")
    _check_vertex(g, a)
    _check_vertex(g, b)
    d = sym_diff(a, b)
    return len(d) == 2 and g.has_edge(d[0], d[1])


def complement_vertex(n: int, a: Sequence[int]) -> TokenVertex:
    s = set(a)
    if len(s) != len(a) or any(not 1 <= x <= n for x in s):
        raise ValueError(f"{tuple(a)} is not a subset of 1..{n}")
    return tuple(v for v in range(1, n + 1) if v not in s)


@dataclass(frozen=True)
class TokenGraph:
    base: Graph
    k: int
    vertices: tuple[TokenVertex, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return self.base.n

    def index(self, v: Sequence[int]) -> int:
        return rank_subset(self.base.n, v)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for row in adj:
            row.sort()
        return adj

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "k": self.k,
                "vertices": [list(v) for v in self.vertices],
                "edges": [list(e) for e in self.edges],
            }
        )

    def to_dot(self) -> str:
        lines = [f"graph token_{self.n}_{self.k} {{"]
        names = [format_subset(v) for v in self.vertices]
        lines.extend(f'  "{name}";' for name in names)
        lines.extend(f'  "{names[i]}" -- "{names[j]}";' for i, j in self.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"


def format_subset(v: Sequence[int]) -> str:
    return "{" + ",".join(map(str, v)) + "}"


def _neighbors_of(g: Graph, a: TokenVertex) -> Iterable[TokenVertex]:
    members = set(a)
    for x in a:
        for y in g.neighbors[x]:
            if y not in members:
                yield canonical([*members - {x}, y])


def build_token_graph(g: Graph, k: int, limit: int = DEFAULT_MATERIALIZE_LIMIT) -> TokenGraph:
    if not 1 <= k <= g.n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={g.n}, k={k}")
    size = comb(g.n, k)
    if size > limit:
        raise ValueError(f"C({g.n},{k}) = {size} exceeds the materialization limit {limit}")
    verts = enumerate_k_subsets(g.n, k)
    edges = set()
    for i, a in enumerate(verts):
        for b in _neighbors_of(g, a):
            j = rank_subset(g.n, b)
            if i < j:
                edges.add((i, j))
    return TokenGraph(g, k, tuple(verts), tuple(sorted(edges)))


def token_edge_count(g: Graph, k: int) -> int:
    if not 1 <= k <= g.n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={g.n}, k={k}")
    return sum(1 for a in enumerate_k_subsets(g.n, k) for _ in _neighbors_of(g, a)) // 2

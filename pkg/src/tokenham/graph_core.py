"""Simple undirected graphs on vertices 1..n and the base families used here.

Labels are 1-based everywhere. A fan on ``n`` vertices has its path on
``1..n-1`` and its hub at ``n``; the token-graph construction relies on that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence, TextIO

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on ``1..n``.

    ``edges`` holds each edge once as ``(u, v)`` with ``u < v``.
    ``neighbors[v]`` is the sorted neighbor tuple of ``v`` (index 0 unused).
    """

    n: int
    edges: frozenset[Edge]
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        normed = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {{{u},{v}}} has an endpoint outside 1..{n}")
            normed.add(_norm_edge(u, v))
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in normed:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normed))
        object.__setattr__(self, "neighbors", tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(1, n)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(1, n + 1), 2))


def make_complete_bipartite(m: int, m2: int) -> Graph:
    """K_{m,m2} with parts ``1..m`` and ``m+1..m+m2``."""
    if m < 1 or m2 < 1:
        raise ValueError(f"complete bipartite graph needs positive part sizes, got {m}, {m2}")
    return Graph(m + m2, ((u, v) for u in range(1, m + 1) for v in range(m + 1, m + m2 + 1)))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them.

    ``h`` is relabeled to ``g.n+1 .. g.n+h.n``.
    """
    if g.n < 1 or h.n < 1:
        raise ValueError("join needs two nonempty graphs")
    off = g.n
    edges = list(g.edges)
    edges.extend((u + off, v + off) for u, v in h.edges)
    edges.extend((u, v + off) for u in g.vertices() for v in h.vertices())
    return Graph(g.n + h.n, edges)


def make_fan(n: int) -> Graph:
    """Fan F_n: path on ``1..n-1`` with hub ``n`` joined to all of it."""
    if n < 2:
        raise ValueError(f"fan needs n >= 2, got {n}")
    return join(make_path(n - 1), make_complete(1))


def make_wheel(n: int) -> Graph:
    """Wheel W_n: the fan F_n plus the rim-closing edge ``{1, n-1}``."""
    if n < 4:
        raise ValueError(f"wheel needs n >= 4, got {n}")
    return join(make_cycle(n - 1), make_complete(1))


def is_edge(g: Graph, u: int, v: int) -> bool:
    if not (1 <= u <= g.n and 1 <= v <= g.n):
        raise ValueError(f"vertex labels {u}, {v} must lie in 1..{g.n}")
    return u != v and g.has_edge(u, v)


def is_spanning_subgraph(h: Graph, g: Graph) -> bool:
    return h.n == g.n and h.edges <= g.edges


def relabel(g: Graph, sigma: Mapping[int, int] | Sequence[int]) -> Graph:
    """Apply the permutation ``sigma`` of ``1..n`` to the labels of ``g``.

    ``sigma`` is either a mapping ``old -> new`` or a sequence whose
    ``i``-th entry (0-based) is the image of ``i + 1``.
    """
    if isinstance(sigma, Mapping):
        perm = {int(k): int(v) for k, v in sigma.items()}
    else:
        perm = {i + 1: int(v) for i, v in enumerate(sigma)}
    labels = set(g.vertices())
    if set(perm) != labels or set(perm.values()) != labels:
        raise ValueError(f"relabeling is not a permutation of 1..{g.n}")
    return Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def read_edge_list(fh: TextIO) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v``."""
    rows = [line.split() for line in fh if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with a 'n m' header")
    n, m = (int(t) for t in rows[0])
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for row in body:
        if len(row) != 2:
            raise ValueError(f"malformed edge line: {' '.join(row)!r}")
        edges.append((int(row[0]), int(row[1])))
    g = Graph(n, edges)
    if g.m != m:
        raise ValueError("edge list contains duplicate edges")
    return g


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"

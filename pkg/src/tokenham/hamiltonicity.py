"""Cycle validation and an exhaustive Hamiltonian-cycle search.

The validator only needs an adjacency predicate, so constructed cycles are
checked without materializing the token graph. The backtracking search is a
ground-truth oracle for small graphs and is deliberately unrelated to the
fan construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Any, Callable, Hashable, Iterable, Sequence

from tokenham.graph_core import Graph, is_spanning_subgraph, make_fan
from tokenham.token_graph import TokenGraph, token_adjacent

DEFAULT_SEARCH_CAP = 24

DUPLICATE_VERTEX = "duplicate-vertex"
MISSING_VERTEX = "missing-vertex"
NON_ADJACENT_STEP = "non-adjacent-step"
WRONG_CARDINALITY = "wrong-cardinality"
ANCHOR_MISSING = "anchor-missing"


def _plain(x: Any) -> Any:
    if isinstance(x, (tuple, list)):
        return [_plain(v) for v in x]
    return x


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failure_kind: str | None = None
    witness: Any = None

    def __post_init__(self):
        if self.ok != (self.failure_kind is None):
            raise ValueError("ok must be true exactly when failure_kind is absent")

    def to_dict(self) -> dict:
        return {"ok": self.ok, "failure_kind": self.failure_kind, "witness": _plain(self.witness)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass
class SearchOutcome:
    found: bool
    cycle: tuple | None = None
    nodes_explored: int = 0
    vertex_count: int = 0

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "cycle": _plain(self.cycle) if self.cycle is not None else None,
            "nodes_explored": self.nodes_explored,
            "vertex_count": self.vertex_count,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def validate_cycle(
    adjacent: Callable[[Any, Any], bool],
    expected_count: int,
    cycle: Sequence[Hashable],
    anchor: Sequence[Hashable] | None = None,
    vertices: Iterable[Hashable] | None = None,
) -> VerificationReport:
    """Check that ``cycle`` is a Hamiltonian cycle.

    Checks, in order: length equals ``expected_count``, entries are distinct,
    every entry of ``vertices`` (when given) occurs, cyclically consecutive
    entries satisfy ``adjacent``, and the optional ``anchor`` pair occurs as
    consecutive entries. The first failure found is reported. Exceptions
    raised by ``adjacent`` on malformed entries count as non-adjacent steps.
    """
    seq = list(cycle)
    if len(seq) != expected_count:
        return VerificationReport(False, WRONG_CARDINALITY, {"expected": expected_count, "got": len(seq)})

    seen = set()
    for v in seq:
        if v in seen:
            return VerificationReport(False, DUPLICATE_VERTEX, v)
        seen.add(v)

    if vertices is not None:
        for v in vertices:
            if v not in seen:
                return VerificationReport(False, MISSING_VERTEX, v)

    m = len(seq)
    for idx in range(m if m > 1 else 0):
        a, b = seq[idx], seq[(idx + 1) % m]
        try:
            ok = adjacent(a, b)
        except ValueError:
            ok = False
        if not ok:
            return VerificationReport(False, NON_ADJACENT_STEP, (a, b))

    if anchor is not None:
        x, y = anchor
        pos = {v: i for i, v in enumerate(seq)}
        if x not in pos or y not in pos or (pos[x] - pos[y]) % m not in (1, m - 1):
            return VerificationReport(False, ANCHOR_MISSING, (x, y))

    return VerificationReport(True)


def certify_lift(cycle, host: Graph, anchor=None) -> VerificationReport:
    """Re-validate a fan token-graph cycle against the token graph of ``host``.

    ``cycle`` is a :class:`~tokenham.fan_cycle.CycleSeq` (or any sequence of
    k-subsets over ``1..host.n``).
    """
    verts = list(cycle)
    k = len(verts[0]) if verts else 0
    n = getattr(cycle, "n", host.n)
    if n != host.n:
        return VerificationReport(False, WRONG_CARDINALITY, {"expected_order": n, "host_order": host.n})
    return validate_cycle(
        lambda a, b: token_adjacent(host, a, b), comb(host.n, k) if k else 1, verts, anchor
    )


def hosts_fan(host: Graph) -> bool:
    return host.n >= 2 and is_spanning_subgraph(make_fan(host.n), host)


def _connected(adj: list[list[int]]) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def _search(adj: list[list[int]]) -> tuple[list[int] | None, int]:
    """Backtracking from vertex 0 with neighbors tried in ascending order.

    Each undirected cycle is explored in one orientation only: the vertex
    after 0 must be smaller than the vertex before it (its last vertex).
    """
    size = len(adj)
    start_nbrs = set(adj[0])
    visited = [False] * size
    visited[0] = True
    path = [0]
    nodes = 0

    def closing_available() -> bool:
        second = path[1]
        return any(not visited[w] and w > second for w in start_nbrs)

    def extend() -> bool:
        nonlocal nodes
        nodes += 1
        if len(path) == size:
            return path[-1] in start_nbrs and path[1] < path[-1]
        if len(path) >= 2 and not closing_available():
            return False
        for w in adj[path[-1]]:
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            if extend():
                return True
            path.pop()
            visited[w] = False
        return False

    found = extend()
    return (list(path) if found else None), nodes


def brute_force_ham_cycle(g: Graph | TokenGraph, cap: int = DEFAULT_SEARCH_CAP) -> SearchOutcome:
    """Exhaustive Hamiltonian-cycle search on a small graph.

    For a :class:`Graph` the returned cycle lists vertex labels; for a
    :class:`TokenGraph` it lists k-subsets. ``found = False`` means the whole
    search tree was exhausted (or a degree/connectivity pre-check failed).
    """
    if isinstance(g, TokenGraph):
        labels: list = list(g.vertices)
        adj = g.adjacency()
    else:
        labels = list(g.vertices())
        adj = [[w - 1 for w in g.neighbors[v]] for v in labels]
    size = len(labels)
    if size < 3:
        raise ValueError(f"Hamiltonian cycle search needs at least 3 vertices, got {size}")
    if size > cap:
        raise ValueError(f"graph has {size} vertices, above the search cap {cap}")
    if min(len(a) for a in adj) < 2 or not _connected(adj):
        return SearchOutcome(False, None, 0, size)
    found, nodes = _search(adj)
    if found is None:
        return SearchOutcome(False, None, nodes, size)
    return SearchOutcome(True, tuple(labels[i] for i in found), nodes, size)

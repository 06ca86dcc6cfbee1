"""Explicit Hamiltonian cycles in the k-token graph of the fan F_n.

The construction is inductive on k. Every cycle produced for ``(n, k)``
contains the *anchor* edge between

    X = {n-k, ..., n-2, n-1}   and   Y = {n-k, ..., n-2, n},

which is what lets a cycle of ``F_{n-i}^(k-1)`` be cut open into a path and
spliced into the cycle of ``F_n^(k)``.

Vertices with minimum ``i`` (the block ``V_i``) induce a copy of
``F_{n-i}^(k-1)`` on labels ``i+1..n`` once ``i`` is dropped. For
``i = 1..n-k-1`` the recursive cycle on that block is opened at its anchor
into a path ``P_i`` from ``X_i`` to ``Y_i``. The block ``V_{n-k}`` is the
window ``{n-k..n}`` minus one element and is walked directly, and
``V_{n-k+1}`` is the single vertex ``Z = {n-k+1..n}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from tokenham.token_graph import TokenVertex


class AnchorPair(NamedTuple):
    x: TokenVertex
    y: TokenVertex


@dataclass(frozen=True)
class CycleSeq:
    """Closed walk in ``F_n^(k)``; the last vertex is joined back to the first."""

    n: int
    k: int
    verts: tuple[TokenVertex, ...]

    def __len__(self) -> int:
        return len(self.verts)

    def __iter__(self):
        return iter(self.verts)

    def __getitem__(self, i):
        return self.verts[i]


def _check_nk(n: int, k: int) -> None:
    if n < 3 or not 1 <= k <= n - 1:
        raise ValueError(f"need n >= 3 and 1 <= k <= n-1, got n={n}, k={k}")


def x_vertex(n: int, k: int, i: int) -> TokenVertex:
    if k < 2 or not 1 <= i <= n - k:
        raise ValueError(f"X_i needs k >= 2 and 1 <= i <= n-k, got n={n}, k={k}, i={i}")
    return (i, *range(n - k + 1, n))


def y_vertex(n: int, k: int, i: int) -> TokenVertex:
    if k < 2 or not 1 <= i <= n - k:
        raise ValueError(f"Y_i needs k >= 2 and 1 <= i <= n-k, got n={n}, k={k}, i={i}")
    return (i, *range(n - k + 1, n - 1), n)


def d_vertex(n: int, k: int, i: int) -> TokenVertex:
    """The window ``{n-k, ..., n}`` with ``i`` removed."""
    if k < 1 or not n - k + 1 <= i <= n or n - k < 1:
        raise ValueError(f"D_i needs n-k+1 <= i <= n, got n={n}, k={k}, i={i}")
    return tuple(v for v in range(n - k, n + 1) if v != i)


def z_vertex(n: int, k: int) -> TokenVertex:
    if not 2 <= k <= n - 1:
        raise ValueError(f"Z needs 2 <= k <= n-1, got n={n}, k={k}")
    return tuple(range(n - k + 1, n + 1))


def anchor_pair(n: int, k: int) -> AnchorPair:
    """Anchor edge of the cycle for ``(n, k)``; for k = 1 it is ({n-1}, {n})."""
    _check_nk(n, k)
    if k == 1:
        return AnchorPair((n - 1,), (n,))
    return AnchorPair(x_vertex(n, k, n - k), y_vertex(n, k, n - k))


def base_cycle_k1(n: int) -> CycleSeq:
    if n < 3:
        raise ValueError(f"k = 1 base case needs n >= 3, got {n}")
    return CycleSeq(n, 1, tuple((v,) for v in range(1, n + 1)))


def base_cycle_k2(n: int) -> CycleSeq:
    """The row-by-row k = 2 cycle.

    Row 1 runs ``{1,n-1}, {1,n}, {1,n-2}, ..., {1,2}``; every later row ``i``
    runs ``{i,n}, {i,n-1}, ..., {i,i+1}``, ending with the lone ``{n-1,n}``.
    """
    if n < 4:
        raise ValueError(f"k = 2 base case needs n >= 4, got {n}")
    verts: list[TokenVertex] = [(1, n - 1), (1, n)]
    verts.extend((1, b) for b in range(n - 2, 1, -1))
    for i in range(2, n):
        verts.extend((i, b) for b in range(n, i, -1))
    return CycleSeq(n, 2, tuple(verts))


def split_at_anchor(
    cycle: Sequence[TokenVertex], anchor: AnchorPair, start: TokenVertex | None = None
) -> list[TokenVertex]:
    """Remove the anchor edge from ``cycle``, returning the Hamiltonian path.

    The path runs from ``anchor.x`` to ``anchor.y`` unless ``start`` is
    ``anchor.y``, in which case it runs the other way.
    """
    seq = list(cycle)
    m = len(seq)
    try:
        ix = seq.index(anchor.x)
    except ValueError:
        raise ValueError(f"anchor vertex {anchor.x} not on the cycle") from None
    if start is None:
        start = anchor.x
    if start not in anchor:
        raise ValueError(f"path must start at an anchor vertex, got {start}")
    if m == 2 and seq[1 - ix] == anchor.y:
        path = [anchor.x, anchor.y]
    elif seq[(ix + 1) % m] == anchor.y:
        # walk backwards from x so that the anchor edge is the one left out
        path = [seq[(ix - j) % m] for j in range(m)]
    elif seq[(ix - 1) % m] == anchor.y:
        path = [seq[(ix + j) % m] for j in range(m)]
    else:
        raise ValueError(f"anchor {anchor.x} ~ {anchor.y} is not an edge of the cycle")
    if start == anchor.y:
        path.reverse()
    return path


def embed_with_min(
    verts: Sequence[Sequence[int]], i: int, offset: int = 0
) -> list[TokenVertex]:
    """Shift labels by ``offset`` and insert ``i`` as the new minimum.

    With ``offset = i`` this maps a walk in ``F_{n-i}^(k-1)`` on canonical
    labels ``1..n-i`` to the block of ``F_n^(k)`` whose minimum is ``i``.
    """
    out = []
    for v in verts:
        shifted = tuple(a + offset for a in v)
        if shifted and shifted[0] <= i:
            raise ValueError(f"subset {shifted} has a label <= {i}")
        out.append((i, *shifted))
    return out


def _fan_cycle_verts(n: int, k: int) -> list[TokenVertex]:
    if k == 1:
        return list(base_cycle_k1(n).verts)
    if k == 2:
        if n == 3:
            return [(1, 3), (1, 2), (2, 3)]
        return list(base_cycle_k2(n).verts)

    nk = n - k
    out: list[TokenVertex] = []
    for i in range(1, nk):
        # block V_i is F_{n-i}^(k-1) on labels i+1..n, re-based to 1..n-i
        sub = _fan_cycle_verts(n - i, k - 1)
        sub_anchor = anchor_pair(n - i, k - 1)
        embedded = embed_with_min(sub, i, offset=i)
        anchor_i = AnchorPair(x_vertex(n, k, i), y_vertex(n, k, i))
        assert embed_with_min(sub_anchor, i, offset=i) == list(anchor_i)
        # odd blocks are walked X_i -> Y_i, even blocks Y_i -> X_i
        start = anchor_i.x if i % 2 == 1 else anchor_i.y
        out.extend(split_at_anchor(embedded, anchor_i, start=start))

    x_last, y_last = x_vertex(n, k, nk), y_vertex(n, k, nk)
    if nk % 2 == 0:
        out += [y_last, x_last]
    else:
        out += [x_last, y_last]
    out.extend(d_vertex(n, k, j) for j in range(n - 2, nk, -1))
    out.append(z_vertex(n, k))
    return out


def fan_ham_cycle(n: int, k: int) -> tuple[CycleSeq, AnchorPair]:
    """Hamiltonian cycle of ``F_n^(k)`` starting at ``X_1``, with its anchor pair."""
    _check_nk(n, k)
    return CycleSeq(n, k, tuple(_fan_cycle_verts(n, k))), anchor_pair(n, k)

"""Exact k-colorability, the vertex k-partiteness parameter, and class
membership for graphs with bounded k-partiteness.

A graph is k-partite exactly when it is properly k-colorable (parts may be
empty). The partiteness parameter is found by trying deletion sets in order
of increasing size with a backtracking colorability oracle; everything here
is exact, sized for graphs of at most a dozen vertices inside enumeration
loops.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidParamsError
from .graphs import MAX_VERTICES, Graph


@dataclass(frozen=True)
class ClassParams:
    """(n, m, k): graphs on n vertices whose k-partiteness is at most m."""

    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise InvalidParamsError(f"k must be >= 2, got {self.k}")
        if not 2 <= self.n <= MAX_VERTICES:
            raise InvalidParamsError(f"n must be in 2..{MAX_VERTICES}, got {self.n}")
        if not 1 <= self.m <= self.n - self.k:
            raise InvalidParamsError(
                f"m must satisfy 1 <= m <= n - k = {self.n - self.k}, got {self.m}")


def colorable_masked(adj, mask: int, k: int) -> bool:
    """Proper k-colorability of the subgraph induced by the vertex bitset `mask`.

    Backtracking over vertices in descending-degree order (degrees within the
    mask), with used-color symmetry pruning: a vertex may open at most one new
    color class. Pure performance choices; the answer is exact.
    """
    if mask.bit_count() <= k:
        return True
    if k == 2:
        return _bipartite_masked(adj, mask)
    verts = []
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        verts.append(v)
    verts.sort(key=lambda v: (adj[v] & mask).bit_count(), reverse=True)
    color_masks = [0] * k

    def assign(i: int, used: int) -> bool:
        if i == len(verts):
            return True
        v = verts[i]
        row = adj[v]
        bit = 1 << v
        for c in range(used):
            if not color_masks[c] & row:
                color_masks[c] |= bit
                if assign(i + 1, used):
                    return True
                color_masks[c] ^= bit
        if used < k:
            color_masks[used] |= bit
            if assign(i + 1, used + 1):
                return True
            color_masks[used] ^= bit
        return False

    return assign(0, 0)


def _bipartite_masked(adj, mask: int) -> bool:
    # layered BFS 2-coloring, then a one-pass conflict check
    side_a = side_b = 0
    rem = mask
    while rem:
        start = rem & -rem
        side_a |= start
        frontier = start
        on_a = True
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= adj[v]
            nxt &= mask & ~(side_a | side_b)
            if on_a:
                side_b |= nxt
            else:
                side_a |= nxt
            on_a = not on_a
            frontier = nxt
        rem = mask & ~(side_a | side_b)
    for side in (side_a, side_b):
        f = side
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            if adj[v] & side:
                return False
    return True


def is_k_partite(g: Graph, k: int) -> bool:
    """True iff the vertices admit a proper k-coloring (parts may be empty)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return g.edge_count() == 0
    return colorable_masked(g.adj, (1 << g.n) - 1, k)


def partiteness_within(adj, n: int, k: int, cap: int) -> int | None:
    """Smallest deletion count <= cap whose removal leaves a k-partite graph.

    Returns None when more than `cap` deletions are needed. Low-level form
    used inside enumeration loops; adjacency rows are given directly.
    """
    full = (1 << n) - 1
    if colorable_masked(adj, full, k):
        return 0
    for ell in range(1, cap + 1):
        for combo in itertools.combinations(range(n), ell):
            removed = 0
            for v in combo:
                removed |= 1 << v
            if colorable_masked(adj, full ^ removed, k):
                return ell
    return None


def vertex_k_partiteness(g: Graph, k: int) -> int:
    """Fewest vertex deletions after which the rest is k-partite.

    Always at most n - k (any k remaining vertices are k-partite).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if g.n < k:
        raise ValueError(f"need n >= k, got n={g.n} k={k}")
    result = partiteness_within(g.adj, g.n, k, g.n - k)
    assert result is not None, "v_k <= n - k must always be attainable"
    return result


def in_class(g: Graph, params: ClassParams) -> bool:
    """Membership test: right order and k-partiteness at most m."""
    if g.n != params.n:
        return False
    return partiteness_within(g.adj, g.n, params.k, params.m) is not None

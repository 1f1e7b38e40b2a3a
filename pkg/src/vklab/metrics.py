"""All-pairs distances by repeated BFS, plus the per-vertex quantities
(transmission, eccentricity, degree) every index evaluator consumes.

Metrics are computed once per graph and passed around; evaluators never
recompute them. Only connected graphs have metrics: disconnected input is
an error, not an infinity convention.
"""

from __future__ import annotations

from .errors import DisconnectedGraphError
from .graphs import Graph


class DistanceMetrics:
    """Distance matrix (8-bit rows), transmissions D(u), eccentricities, degrees."""

    __slots__ = ("n", "dist", "transmission", "ecc", "degree")

    def __init__(self, n, dist, transmission, ecc, degree):
        self.n = n
        self.dist = dist
        self.transmission = transmission
        self.ecc = ecc
        self.degree = degree


def distance_rows(adj, n: int) -> list[bytearray] | None:
    """BFS distance row per source vertex; None when the graph is disconnected."""
    full = (1 << n) - 1
    rows = []
    for src in range(n):
        row = bytearray(n)
        seen = 1 << src
        frontier = 1 << src
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                row[v] = d
        if seen != full:
            return None
        rows.append(row)
    return rows


def metrics_from_rows(adj, n: int, rows) -> DistanceMetrics:
    return DistanceMetrics(
        n=n,
        dist=rows,
        transmission=[sum(r) for r in rows],
        ecc=[max(r) if n > 1 else 0 for r in rows],
        degree=[a.bit_count() for a in adj],
    )


def compute_metrics(g: Graph) -> DistanceMetrics:
    """Exact unweighted shortest-path metrics of a connected graph.

    Raises DisconnectedGraphError when some vertex is unreachable; callers
    must not request distance-based indices in that case.
    """
    if g.n < 2:
        raise ValueError("metrics need at least 2 vertices")
    rows = distance_rows(g.adj, g.n)
    if rows is None:
        raise DisconnectedGraphError("graph is not connected")
    return metrics_from_rows(g.adj, g.n, [bytes(r) for r in rows])

"""The ten topological indices, evaluated exactly.

Integer-valued indices return plain ints, the four distance/eccentricity
ratios return Fractions in lowest terms; nothing here ever touches a float,
so extremality and uniqueness comparisons stay decidable.

Each index is classified as monotone decreasing or increasing under edge
addition on connected graphs; `direction` exposes the registry.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .graphs import Graph
from .metrics import DistanceMetrics, compute_metrics


class Direction(enum.Enum):
    DECREASING = "decreasing"
    INCREASING = "increasing"


class IndexKind(enum.Enum):
    WIENER = "wiener"
    HARARY = "harary"
    RDD = "rdd"
    ECC_DIST_SUM = "ecc_dist_sum"
    CONN_ECC = "conn_ecc"
    ADJ_ECC_DIST_SUM = "adj_ecc_dist_sum"
    ZAGREB_M1 = "zagreb_m1"
    ZAGREB_M2 = "zagreb_m2"
    MULT_ZAGREB_PI1 = "mult_zagreb_pi1"
    MULT_ZAGREB_PI2 = "mult_zagreb_pi2"


ALL_KINDS: tuple[IndexKind, ...] = tuple(IndexKind)

# Adding any edge to a connected graph strictly decreases these three and
# strictly increases the other seven.
_DECREASING = frozenset({
    IndexKind.WIENER, IndexKind.ECC_DIST_SUM, IndexKind.ADJ_ECC_DIST_SUM,
})

# These need degrees only and therefore accept disconnected graphs.
DEGREE_ONLY = frozenset({
    IndexKind.ZAGREB_M1, IndexKind.ZAGREB_M2,
    IndexKind.MULT_ZAGREB_PI1, IndexKind.MULT_ZAGREB_PI2,
})

# Exact integers; the remaining four are rationals.
INTEGER_VALUED = frozenset({
    IndexKind.WIENER, IndexKind.ECC_DIST_SUM, IndexKind.ZAGREB_M1,
    IndexKind.ZAGREB_M2, IndexKind.MULT_ZAGREB_PI1, IndexKind.MULT_ZAGREB_PI2,
})

# Closed forms for these assume every join-family part has eccentricity 2,
# which fails when a part is a single (hence universal) vertex.
ECCENTRICITY_KINDS = frozenset({
    IndexKind.ECC_DIST_SUM, IndexKind.CONN_ECC, IndexKind.ADJ_ECC_DIST_SUM,
})


def direction(kind: IndexKind) -> Direction:
    """Monotonicity of the index under adding an edge to a connected graph."""
    return Direction.DECREASING if kind in _DECREASING else Direction.INCREASING


def wiener(metrics: DistanceMetrics) -> int:
    """Sum of distances over unordered vertex pairs."""
    return sum(metrics.transmission) // 2


def harary(metrics: DistanceMetrics) -> Fraction:
    """Sum of reciprocal distances over unordered vertex pairs."""
    counts = _pair_distance_counts(metrics)
    return sum((Fraction(c, d) for d, c in counts.items()), Fraction(0))


def rdd(metrics: DistanceMetrics) -> Fraction:
    """Reciprocal degree distance: sum of (d(u)+d(v))/dist(u,v) over pairs."""
    n, dist, deg = metrics.n, metrics.dist, metrics.degree
    sums: dict[int, int] = {}
    for u in range(n):
        row = dist[u]
        du = deg[u]
        for v in range(u + 1, n):
            d = row[v]
            sums[d] = sums.get(d, 0) + du + deg[v]
    return sum((Fraction(s, d) for d, s in sums.items()), Fraction(0))


def ecc_dist_sum(metrics: DistanceMetrics) -> int:
    """Vertex form: sum over vertices of eccentricity times transmission."""
    return sum(e * t for e, t in zip(metrics.ecc, metrics.transmission))


def conn_ecc(metrics: DistanceMetrics) -> Fraction:
    """Connective eccentricity: sum of degree/eccentricity over vertices."""
    sums: dict[int, int] = {}
    for e, d in zip(metrics.ecc, metrics.degree):
        sums[e] = sums.get(e, 0) + d
    return sum((Fraction(s, e) for e, s in sums.items()), Fraction(0))


def adj_ecc_dist_sum(metrics: DistanceMetrics) -> Fraction:
    """Adjacent eccentric distance sum: eccentricity * transmission / degree."""
    sums: dict[int, int] = {}
    for e, t, d in zip(metrics.ecc, metrics.transmission, metrics.degree):
        sums[d] = sums.get(d, 0) + e * t
    return sum((Fraction(s, d) for d, s in sums.items()), Fraction(0))


def zagreb_m1(metrics: DistanceMetrics) -> int:
    """First Zagreb index: sum of squared degrees."""
    return sum(d * d for d in metrics.degree)


def zagreb_m2(g: Graph, metrics: DistanceMetrics) -> int:
    """Second Zagreb index: sum of degree products over edges."""
    deg = metrics.degree
    total = 0
    for u in range(g.n):
        row = g.adj[u] >> (u + 1) << (u + 1)
        du = deg[u]
        while row:
            v = (row & -row).bit_length() - 1
            row &= row - 1
            total += du * deg[v]
    return total


def mult_zagreb_pi1(metrics: DistanceMetrics) -> int:
    """First multiplicative Zagreb index: product of squared degrees."""
    p = 1
    for d in metrics.degree:
        p *= d
    return p * p


def mult_zagreb_pi2(metrics: DistanceMetrics) -> int:
    """Second multiplicative Zagreb index, vertex form: product of d(u)^d(u).

    Uses the 0^0 = 1 convention, reachable only through degree-only
    evaluation of graphs with isolated vertices.
    """
    p = 1
    for d in metrics.degree:
        p *= d ** d
    return p


def _pair_distance_counts(metrics: DistanceMetrics) -> dict[int, int]:
    n, dist = metrics.n, metrics.dist
    counts: dict[int, int] = {}
    for u in range(n):
        row = dist[u]
        for v in range(u + 1, n):
            d = row[v]
            counts[d] = counts.get(d, 0) + 1
    return counts


def _degree_only_metrics(g: Graph) -> DistanceMetrics:
    # enough structure for the four degree-based evaluators; distances unset
    deg = g.degrees()
    return DistanceMetrics(n=g.n, dist=None, transmission=None, ecc=None, degree=deg)


def evaluate(kind: IndexKind, g: Graph,
             metrics: DistanceMetrics | None = None) -> int | Fraction:
    """Evaluate one index on a graph, sharing a precomputed metrics object.

    Distance and eccentricity kinds require a connected graph (raises
    DisconnectedGraphError otherwise); the four degree-only Zagreb kinds
    accept any simple graph with n >= 2.
    """
    if g.n < 2:
        raise ValueError("indices are defined for n >= 2 only")
    if metrics is None:
        metrics = _degree_only_metrics(g) if kind in DEGREE_ONLY else compute_metrics(g)
    return _EVALUATORS[kind](g, metrics)


_EVALUATORS = {
    IndexKind.WIENER: lambda g, m: wiener(m),
    IndexKind.HARARY: lambda g, m: harary(m),
    IndexKind.RDD: lambda g, m: rdd(m),
    IndexKind.ECC_DIST_SUM: lambda g, m: ecc_dist_sum(m),
    IndexKind.CONN_ECC: lambda g, m: conn_ecc(m),
    IndexKind.ADJ_ECC_DIST_SUM: lambda g, m: adj_ecc_dist_sum(m),
    IndexKind.ZAGREB_M1: lambda g, m: zagreb_m1(m),
    IndexKind.ZAGREB_M2: zagreb_m2,
    IndexKind.MULT_ZAGREB_PI1: lambda g, m: mult_zagreb_pi1(m),
    IndexKind.MULT_ZAGREB_PI2: lambda g, m: mult_zagreb_pi2(m),
}

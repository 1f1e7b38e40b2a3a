"""Shared brute-force oracles, deliberately independent of the package's
bitset code paths: plain dict/list BFS, pair-by-pair sums, networkx for
reference graph6 and isomorphism."""

import collections
import random
from fractions import Fraction

import networkx as nx
import pytest

from vklab import Graph, IndexKind
from vklab.graphs import from_edges


def nx_of(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def graph_of_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return from_edges(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


def brute_distances(g: Graph):
    """Queue BFS over explicit neighbour lists."""
    neigh = {u: [] for u in range(g.n)}
    for u, v in g.edges():
        neigh[u].append(v)
        neigh[v].append(u)
    dist = [[None] * g.n for _ in range(g.n)]
    for s in range(g.n):
        dist[s][s] = 0
        q = collections.deque([s])
        while q:
            u = q.popleft()
            for v in neigh[u]:
                if dist[s][v] is None:
                    dist[s][v] = dist[s][u] + 1
                    q.append(v)
    return dist


def brute_index(kind: IndexKind, g: Graph):
    """Pair-by-pair / vertex-by-vertex evaluation with no grouping tricks."""
    deg = g.degrees()
    if kind is IndexKind.ZAGREB_M1:
        return sum(d * d for d in deg)
    if kind is IndexKind.ZAGREB_M2:
        return sum(deg[u] * deg[v] for u, v in g.edges())
    if kind is IndexKind.MULT_ZAGREB_PI1:
        out = 1
        for d in deg:
            out *= d * d
        return out
    if kind is IndexKind.MULT_ZAGREB_PI2:
        out = 1
        for d in deg:
            out *= d ** d
        return out
    dist = brute_distances(g)
    assert all(dist[u][v] is not None for u in range(g.n) for v in range(g.n))
    trans = [sum(row) for row in dist]
    ecc = [max(row) for row in dist]
    pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
    if kind is IndexKind.WIENER:
        return sum(dist[u][v] for u, v in pairs)
    if kind is IndexKind.HARARY:
        return sum(Fraction(1, dist[u][v]) for u, v in pairs)
    if kind is IndexKind.RDD:
        return sum(Fraction(deg[u] + deg[v], dist[u][v]) for u, v in pairs)
    if kind is IndexKind.ECC_DIST_SUM:
        return sum(ecc[u] * trans[u] for u in range(g.n))
    if kind is IndexKind.CONN_ECC:
        return sum(Fraction(deg[u], ecc[u]) for u in range(g.n))
    if kind is IndexKind.ADJ_ECC_DIST_SUM:
        return sum(Fraction(ecc[u] * trans[u], deg[u]) for u in range(g.n))
    raise AssertionError(kind)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def random_connected(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if nx.is_connected(nx_of(g)):
            return g


@pytest.fixture
def rng():
    return random.Random(20240817)

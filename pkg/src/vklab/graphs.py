"""Simple undirected graphs on at most 64 vertices.

Vertices are 0..n-1 and each neighbourhood is a single machine-word bitset,
so edge tests, complements and joins are plain integer arithmetic. Graphs
are immutable values: every builder returns a new graph, and two graphs
compare equal exactly when they have identical labelled adjacency.

Also provides graph6 text I/O and a canonical form for small graphs
(exhaustive over refinement-admissible relabelings, guaranteed complete
for n <= 8).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, prod

from .errors import Graph6ParseError, GraphSizeError, SizeCapError

MAX_VERTICES = 64

# Permutation search gives up beyond this many admissible orderings.
# 8! = 40320 fits, which is what makes the n <= 8 guarantee unconditional.
_CANONICAL_BUDGET = 50_000


class Graph:
    """Immutable simple graph: vertex count plus per-vertex neighbour bitsets."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: tuple[int, ...]):
        if not 1 <= n <= MAX_VERTICES:
            raise GraphSizeError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(adj) != n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency row {u} references vertices >= {n}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u in range(n):
            for v in range(u + 1, n):
                if (adj[u] >> v & 1) != (adj[v] >> u & 1):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", hash((n, tuple(adj))))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self):
        """Yield edges as (u, v) pairs with u < v."""
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            while row:
                v = (row & -row).bit_length() - 1
                yield (u, v)
                row &= row - 1

    def non_edges(self):
        """Yield non-adjacent pairs (u, v) with u < v."""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.adj[u] >> v & 1:
                    yield (u, v)


def from_edges(n: int, edges) -> Graph:
    """Build a graph from an edge list; duplicate edges are harmless."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    """Graph on n vertices with no edges (the complement of K_n)."""
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << u) for u in range(n)))


def complement(g: Graph) -> Graph:
    """Edge present in the result exactly when absent in g; an involution."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row ^ (1 << u)) for u, row in enumerate(g.adj)))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges; g1's vertices come first."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphSizeError(f"join would have {n} > {MAX_VERTICES} vertices")
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << g2.n) - 1) << g1.n
    adj = [row | mask2 for row in g1.adj]
    adj += [(row << g1.n) | mask1 for row in g2.adj]
    return Graph(n, tuple(adj))


def complete_multipartite(sizes) -> Graph:
    """Complete multipartite graph; two vertices adjacent iff in different parts."""
    sizes = list(sizes)
    if not sizes:
        raise ValueError("at least one part required")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be >= 1")
    g = empty_graph(sizes[0])
    for s in sizes[1:]:
        g = join(g, empty_graph(s))
    return g


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return g + uv as a new graph (matching the G + e notation)."""
    if u == v:
        raise ValueError("cannot add a self-loop")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced by `vertices`, relabelled contiguously preserving order."""
    verts = sorted(set(vertices))
    if not verts:
        raise ValueError("vertex set must be nonempty")
    if verts[0] < 0 or verts[-1] >= g.n:
        raise ValueError("vertex out of range")
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        row = g.adj[v]
        while row:
            w = (row & -row).bit_length() - 1
            row &= row - 1
            if w in index:
                adj[index[v]] |= 1 << index[w]
    return Graph(len(verts), tuple(adj))


def permute(g: Graph, perm) -> Graph:
    """Relabel vertices: vertex u of g becomes perm[u] in the result."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of 0..n-1")
    adj = [0] * g.n
    for u in range(g.n):
        row = g.adj[u]
        new_row = 0
        while row:
            v = (row & -row).bit_length() - 1
            row &= row - 1
            new_row |= 1 << perm[v]
        adj[perm[u]] = new_row
    return Graph(g.n, tuple(adj))


def is_connected(g: Graph) -> bool:
    """BFS reachability from vertex 0 (single-vertex graphs count as connected)."""
    return connected_mask(g.adj) == (1 << g.n) - 1


def connected_mask(adj) -> int:
    """Bitset of vertices reachable from vertex 0 (adjacency rows given directly)."""
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


# ---------------------------------------------------------------------------
# labelled upper-triangle codes (row-major; used by the enumeration harness)
# ---------------------------------------------------------------------------

def pair_count(n: int) -> int:
    return n * (n - 1) // 2

def graph_to_code(g: Graph) -> int:
    """Pack the upper triangle row-major: bit 0 is pair (0,1), then (0,2), ..."""
    code = 0
    bit = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] >> v & 1:
                code |= 1 << bit
            bit += 1
    return code


def code_to_adj(code: int, n: int) -> list[int]:
    """Unpack a row-major upper-triangle code into adjacency bitset rows."""
    adj = [0] * n
    pairs = _ROW_MAJOR_PAIRS.get(n) or _row_major_pairs(n)
    while code:
        b = (code & -code).bit_length() - 1
        code &= code - 1
        u, v = pairs[b]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def code_to_graph(code: int, n: int) -> Graph:
    return Graph(n, tuple(code_to_adj(code, n)))


def _row_major_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


_ROW_MAJOR_PAIRS = {n: _row_major_pairs(n) for n in range(2, 13)}


# ---------------------------------------------------------------------------
# graph6 (printable text encoding; column-major upper triangle)
# ---------------------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    """Encode as one graph6 line (no header, no trailing newline)."""
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        # 18-bit extended order for 63 <= n <= 258047; we only ever need <= 64
        head = "~" + "".join(chr(63 + (n >> shift & 0x3F)) for shift in (12, 6, 0))
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    chars = []
    for i in range(0, len(bits), 6):
        group = bits[i:i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = val << 1 | b
        chars.append(chr(63 + val))
    return head + "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; strict about length and character range."""
    line = text.strip()
    if not line:
        raise Graph6ParseError("empty line")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    pos = 0
    if line[0] == "~":
        if len(line) >= 2 and line[1] == "~":
            raise Graph6ParseError("graphs beyond 64 vertices are unsupported")
        if len(line) < 4:
            raise Graph6ParseError("truncated extended vertex count")
        n = 0
        for ch in line[1:4]:
            val = ord(ch) - 63
            if not 0 <= val <= 63:
                raise Graph6ParseError(f"invalid character {ch!r}")
            n = n << 6 | val
        pos = 4
    else:
        n = ord(line[0]) - 63
        pos = 1
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6ParseError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    nbits = pair_count(n)
    nchars = (nbits + 5) // 6
    body = line[pos:]
    if len(body) != nchars:
        raise Graph6ParseError(
            f"expected {nchars} data characters for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6ParseError(f"invalid character {ch!r}")
        bits.extend((val >> shift & 1) for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6ParseError("nonzero padding bits")
    adj = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            i += 1
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# canonical form / isomorphism
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalCode:
    """Label-independent certificate: equal codes <=> isomorphic graphs.

    `bits` is the lexicographically smallest row-major upper-triangle code
    over all relabelings consistent with the colour refinement classes;
    `method` records which search path produced it.
    """

    n: int
    bits: int
    method: str = "refined-exhaustive"

    def __eq__(self, other):
        return (isinstance(other, CanonicalCode)
                and self.n == other.n and self.bits == other.bits)

    def __hash__(self):
        return hash((self.n, self.bits))


def _refinement_classes(g: Graph) -> list[list[int]]:
    """Partition vertices by iterated degree refinement (1-WL colours).

    Colour identifiers are rebuilt from sorted keys at every round, so the
    resulting ordered class list is invariant under relabeling.
    """
    colors = list(g.degrees())
    while True:
        keys = []
        for u in range(g.n):
            neigh = []
            row = g.adj[u]
            while row:
                v = (row & -row).bit_length() - 1
                row &= row - 1
                neigh.append(colors[v])
            keys.append((colors[u], tuple(sorted(neigh))))
        remap = {key: i for i, key in enumerate(sorted(set(keys)))}
        new_colors = [remap[k] for k in keys]
        if new_colors == colors:
            break
        colors = new_colors
    nclasses = max(colors) + 1 if colors else 0
    classes: list[list[int]] = [[] for _ in range(nclasses)]
    for u, c in enumerate(colors):
        classes[c].append(u)
    return classes


def canonical_form(g: Graph) -> CanonicalCode:
    """Canonical code via exhaustive search over refinement-admissible orderings.

    Complete for every graph it accepts: the admissible orderings of two
    isomorphic graphs correspond one-to-one, so minimum codes agree, and a
    shared code pins down a labelled graph. For n <= 8 the search space is
    at most 8! and always within budget; larger graphs are accepted only
    while the refinement keeps the ordering count under the budget, and a
    SizeCapError is raised otherwise.
    """
    classes = _refinement_classes(g)
    space = prod(factorial(len(c)) for c in classes)
    if space > _CANONICAL_BUDGET:
        raise SizeCapError(
            f"canonical search space {space} exceeds budget {_CANONICAL_BUDGET} "
            f"(n={g.n}; guaranteed only for n <= 8)")
    adj = g.adj
    n = g.n
    pairs = _ROW_MAJOR_PAIRS.get(n) or _row_major_pairs(n)
    best = None
    # packing MSB-first makes integer < equal to lexicographic bit order
    for parts in itertools.product(*[itertools.permutations(c) for c in classes]):
        order = [v for part in parts for v in part]
        bits = 0
        for u, v in pairs:
            bits = bits << 1 | (adj[order[u]] >> order[v] & 1)
        if best is None or bits < best:
            best = bits
    total = len(pairs)
    code = 0
    for i in range(total):
        if best >> (total - 1 - i) & 1:
            code |= 1 << i
    method = "refined-exhaustive" if g.n <= 8 else "refined-exhaustive-large"
    return CanonicalCode(n=n, bits=code, method=method)


def canonical_graph(g: Graph) -> Graph:
    """The canonically labelled copy of g (graph of its canonical code)."""
    code = canonical_form(g)
    return code_to_graph(code.bits, code.n)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by canonical-code comparison."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)

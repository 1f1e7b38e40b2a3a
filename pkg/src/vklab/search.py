"""Exhaustive enumeration and extremal scans.

Scans walk every labelled simple graph on n vertices (all 2^C(n,2)
upper-triangle bit patterns), filter to connected members of the bounded
k-partiteness class, and reduce each requested index to its optimum with
the full set of optimizers. No isomorphism dedup happens during the walk;
optimizers are deduplicated afterwards through canonical codes, which keeps
the reduction associative and the result independent of how the code space
is chunked across workers.

Per-graph pipeline order: connectivity filter, then the k-partiteness
filter, then distance metrics, then index evaluation -- the colorability
filter is cheaper than n BFS runs at these sizes.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import Graph6ParseError, SizeCapError
from .extremal import closed_form, extremal_graph, join_family_graph
from .graphs import (CanonicalCode, Graph, add_edge, canonical_form, code_to_adj,
                     code_to_graph, connected_mask, pair_count, parse_graph6,
                     to_graph6)
from .indices import (ALL_KINDS, DEGREE_ONLY, Direction, IndexKind, adj_ecc_dist_sum,
                      conn_ecc, direction, ecc_dist_sum, evaluate, harary,
                      mult_zagreb_pi1, mult_zagreb_pi2, rdd, wiener, zagreb_m1,
                      zagreb_m2)
from .metrics import DistanceMetrics, distance_rows, metrics_from_rows
from .partiteness import ClassParams, partiteness_within

_ENUM_CAP = 7          # hard cap without opt-in
_ENUM_CAP_LARGE = 8    # 2^28 codes; opt-in and parallel-only territory


def enumerate_graphs(n: int, connected_only: bool = False, large: bool = False):
    """Yield every labelled simple graph on n vertices exactly once.

    Walks all upper-triangle bit patterns in numeric order, so the stream is
    deterministic. n = 8 (2^28 graphs) requires the explicit `large` opt-in.
    """
    cap = _ENUM_CAP_LARGE if large else _ENUM_CAP
    if not 2 <= n <= cap:
        raise SizeCapError(
            f"enumeration supports 2 <= n <= {cap} "
            f"(n=8 needs large=True), got {n}")
    full = (1 << n) - 1
    for code in range(1 << pair_count(n)):
        adj = code_to_adj(code, n)
        if connected_only and connected_mask(adj) != full:
            continue
        yield Graph(n, tuple(adj))


def load_graph6_corpus(lines, strict: bool = True, errors: list | None = None):
    """Yield graphs parsed from an iterable of graph6 lines, in file order.

    Malformed lines are addressed by 1-based line number: under `strict`
    the generator raises immediately; otherwise the line is skipped and
    (line_number, message) is appended to `errors` when a list is supplied.
    Blank lines are ignored.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6ParseError as exc:
            if strict:
                raise Graph6ParseError(str(exc), lineno) from None
            if errors is not None:
                errors.append((lineno, str(exc)))


@dataclass(frozen=True)
class ExtremalReport:
    """Outcome of one class scan for one index."""

    params: ClassParams
    kind: IndexKind
    optimum: int | Fraction
    optimizer_codes: frozenset[CanonicalCode]
    class_size: int
    matches_construction: bool
    matches_closed_form: bool

    def optimizer_graph6(self) -> list[str]:
        """graph6 of each optimizer under its canonical labelling, sorted."""
        return sorted(to_graph6(code_to_graph(c.bits, c.n))
                      for c in self.optimizer_codes)


# ---------------------------------------------------------------------------
# the sweep: one pass over the code space feeding many (m, kind) reductions
# ---------------------------------------------------------------------------

_DISTANCE_KINDS = frozenset(ALL_KINDS) - DEGREE_ONLY


_MINIMIZED = frozenset(k for k in ALL_KINDS if direction(k) is Direction.DECREASING)

# the same evaluator implementations the public `evaluate` dispatches to
_EVALUATOR_TABLE = {
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


def _sweep_range(n, k, m_values, kinds, lo, hi):
    """Reduce one contiguous code chunk; the parallel unit of work."""
    full = (1 << n) - 1
    m_max = max(m_values)
    need_rows = any(kind in _DISTANCE_KINDS for kind in kinds)
    need_graph = IndexKind.ZAGREB_M2 in kinds
    evaluators = [(kind, _EVALUATOR_TABLE[kind]) for kind in kinds]
    class_counts = {m: 0 for m in m_values}
    best: dict = {}
    for code in range(lo, hi):
        adj = code_to_adj(code, n)
        if connected_mask(adj) != full:
            continue
        v = partiteness_within(adj, n, k, m_max)
        if v is None:
            continue
        if need_rows:
            metrics = metrics_from_rows(adj, n, distance_rows(adj, n))
        else:
            metrics = DistanceMetrics(n=n, dist=None, transmission=None, ecc=None,
                                      degree=[a.bit_count() for a in adj])
        g = Graph(n, tuple(adj)) if need_graph else None
        vals = [(kind, fn(g, metrics)) for kind, fn in evaluators]
        for m in m_values:
            if v > m:
                continue
            class_counts[m] += 1
            for kind, val in vals:
                key = (m, kind)
                entry = best.get(key)
                if entry is None:
                    best[key] = [val, [code]]
                else:
                    cur = entry[0]
                    if val == cur:
                        entry[1].append(code)
                    elif (val < cur) if kind in _MINIMIZED else (val > cur):
                        entry[0] = val
                        entry[1] = [code]
    return class_counts, best


def _sweep_worker(args):
    return _sweep_range(*args)


def _merge(partials, kinds, m_values):
    class_counts = {m: 0 for m in m_values}
    best: dict = {}
    for counts, part in partials:
        for m, c in counts.items():
            class_counts[m] += c
        for key, (val, codes) in part.items():
            entry = best.get(key)
            if entry is None:
                best[key] = [val, list(codes)]
            else:
                cur = entry[0]
                if val == cur:
                    entry[1].extend(codes)
                elif (val < cur) if key[1] in _MINIMIZED else (val > cur):
                    best[key] = [val, list(codes)]
    return class_counts, best


_SWEEP_CACHE: dict = {}


def clear_sweep_cache() -> None:
    _SWEEP_CACHE.clear()


def _sweep(n, k, m_values, kinds, workers):
    key = (n, k, m_values, kinds, workers)
    if key in _SWEEP_CACHE:
        return _SWEEP_CACHE[key]
    total = 1 << pair_count(n)
    if workers <= 1:
        partials = [_sweep_range(n, k, m_values, kinds, 0, total)]
    else:
        bounds = [total * i // workers for i in range(workers + 1)]
        jobs = [(n, k, m_values, kinds, bounds[i], bounds[i + 1])
                for i in range(workers)]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            partials = pool.map(_sweep_worker, jobs)
    result = _merge(partials, kinds, m_values)
    _SWEEP_CACHE[key] = result
    return result


def scan_many(n: int, k: int, m_values, kinds=ALL_KINDS, workers: int = 1,
              large: bool = False) -> dict:
    """Scan one class family in a single pass over the code space.

    Returns {(m, kind): ExtremalReport} for every requested m and kind.
    The reduction is associative and commutative with ties accumulated, so
    reports are identical for every worker count.
    """
    cap = _ENUM_CAP_LARGE if large else _ENUM_CAP
    if not 2 <= n <= cap:
        raise SizeCapError(
            f"scans support 2 <= n <= {cap} (n=8 needs large=True), got {n}")
    if n == 8 and workers < 2:
        raise SizeCapError("n=8 scans (2^28 graphs) are parallel-only; "
                           "pass workers >= 2")
    m_values = tuple(sorted(set(m_values)))
    kinds = tuple(kind for kind in ALL_KINDS if kind in set(kinds))
    params_by_m = {m: ClassParams(n, m, k) for m in m_values}  # validates
    class_counts, best = _sweep(n, k, m_values, kinds, workers)
    reports = {}
    for m, params in params_by_m.items():
        ghat = canonical_form(extremal_graph(params))
        for kind in kinds:
            val, codes = best[(m, kind)]
            canon = frozenset(canonical_form(code_to_graph(c, n)) for c in codes)
            reports[(m, kind)] = ExtremalReport(
                params=params,
                kind=kind,
                optimum=val,
                optimizer_codes=canon,
                class_size=class_counts[m],
                matches_construction=canon == {ghat},
                matches_closed_form=val == closed_form(kind, params).value,
            )
    return reports


def scan_class(params: ClassParams, kind: IndexKind, workers: int = 1,
               large: bool = False) -> ExtremalReport:
    """Exhaustive extremal scan of one class for one index.

    For n <= 6 the scan computes (and caches) the full sweep over every m
    and every kind, so follow-up queries on the same (n, k) are free; for
    larger n only the requested (m, kind) is swept.
    """
    if params.n <= 6:
        all_m = tuple(range(1, params.n - params.k + 1))
        reports = scan_many(params.n, params.k, all_m, ALL_KINDS,
                            workers=workers, large=large)
    else:
        reports = scan_many(params.n, params.k, (params.m,), (kind,),
                            workers=workers, large=large)
    return reports[(params.m, kind)]


def scan_corpus(graphs, params: ClassParams, kind: IndexKind) -> ExtremalReport:
    """Scan an externally supplied corpus instead of the labelled code space.

    Graphs of the wrong order, disconnected graphs, and non-members are
    skipped. On a corpus containing one representative per isomorphism
    class this reproduces the labelled scan's optimum and optimizer codes.
    """
    full = (1 << params.n) - 1
    best_val = None
    best_members: list[Graph] = []
    count = 0
    for g in graphs:
        if g.n != params.n or connected_mask(g.adj) != full:
            continue
        if partiteness_within(g.adj, g.n, params.k, params.m) is None:
            continue
        count += 1
        val = evaluate(kind, g)
        if best_val is None:
            best_val, best_members = val, [g]
        elif val == best_val:
            best_members.append(g)
        elif (val < best_val) if kind in _MINIMIZED else (val > best_val):
            best_val, best_members = val, [g]
    if best_val is None:
        raise ValueError("corpus contains no class members")
    canon = frozenset(canonical_form(g) for g in best_members)
    ghat = canonical_form(extremal_graph(params))
    return ExtremalReport(
        params=params,
        kind=kind,
        optimum=best_val,
        optimizer_codes=canon,
        class_size=count,
        matches_construction=canon == {ghat},
        matches_closed_form=best_val == closed_form(kind, params).value,
    )


# ---------------------------------------------------------------------------
# join-family sub-scan (diagnosis helper for regime exceptions)
# ---------------------------------------------------------------------------

def family_scan(params: ClassParams, kind: IndexKind):
    """Optimum of the index over every join-family member of the class.

    Iterates all compositions of n - m into at most k nonempty parts (a part
    count below k is the same as allowing empty parts). Returns
    (optimum, [sorted size lists attaining it]).
    """
    best_val = None
    best_sizes: list[tuple[int, ...]] = []
    for sizes in _partitions_at_most(params.n - params.m, params.k):
        g = join_family_graph(params.m, sizes)
        val = evaluate(kind, g)
        if best_val is None:
            best_val, best_sizes = val, [sizes]
            continue
        if val == best_val:
            best_sizes.append(sizes)
        elif (val < best_val) if kind in _MINIMIZED else (val > best_val):
            best_val, best_sizes = val, [sizes]
    return best_val, best_sizes


def _partitions_at_most(total: int, parts: int):
    """Nonincreasing partitions of `total` into at most `parts` parts."""
    def rec(remaining, maxpart, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, maxpart), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest
    yield from rec(total, total, parts)


# ---------------------------------------------------------------------------
# monotonicity fuzzing
# ---------------------------------------------------------------------------

@dataclass
class FuzzReport:
    """Result of a monotonicity fuzz run for one index."""

    kind: IndexKind
    trials: int
    violations: int
    counterexamples: list = field(default_factory=list)
    resamples: int = 0
    seed: int | None = None


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Edge-probability-1/2 graph, rejection-sampled until connected."""
    full = (1 << n) - 1
    bits = pair_count(n)
    while True:
        adj = code_to_adj(rng.getrandbits(bits), n)
        if connected_mask(adj) == full:
            return Graph(n, tuple(adj))


def monotonicity_fuzz(kind: IndexKind, trials: int, n_range: tuple[int, int],
                      seed: int) -> FuzzReport:
    """Check strict edge-addition monotonicity on random connected graphs.

    Each trial samples a connected graph (edge probability 1/2 conditioned
    on connectivity; complete graphs are resampled since they have no
    non-edge), adds one uniformly random non-edge, and asserts the strict
    inequality of the index's registered direction. Violations are reported
    as findings (graph6 plus the added pair), never raised. Deterministic
    for a fixed seed; single-threaded by design.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    lo, hi = n_range
    if lo < 3:
        # n = 2 has no connected non-complete graph, so resampling there
        # would never terminate
        raise ValueError("n_range must start at 3 or above")
    if hi < lo:
        raise ValueError("empty n_range")
    rng = random.Random(seed)
    report = FuzzReport(kind=kind, trials=trials, violations=0, seed=seed)
    want = direction(kind)
    for _ in range(trials):
        n = rng.randint(lo, hi)
        while True:
            g = random_connected_graph(rng, n)
            non_edges = list(g.non_edges())
            if non_edges:
                break
            report.resamples += 1
        u, v = non_edges[rng.randrange(len(non_edges))]
        before = evaluate(kind, g)
        after = evaluate(kind, add_edge(g, u, v))
        ok = after < before if want is Direction.DECREASING else after > before
        if not ok:
            report.violations += 1
            if len(report.counterexamples) < 10:
                report.counterexamples.append((to_graph6(g), u, v))
    return report

"""Claim-by-claim certification of the published statements.

Each claim id names one printed statement: the two structural extremality
theorems (scan-backed), the per-index closed-form statements on the balanced
construction, the bipartite-case corollary lines, and the inequality
direction of the connective-eccentricity statement. `verify_theorem` checks
one claim over a grid of class parameters and returns a verdict per tuple:

  confirmed       the printed statement matches the independent oracle
  refuted         it does not; both values are carried in the verdict
  regime_flagged  the statement's eccentricity assumption (every part of
                  size >= 2) fails for the tuple, so the printed value is
                  reported side by side with the oracle value instead of
                  being judged

Formula claims compare the printed closed form against direct evaluation on
the construction; extremality claims delegate to the exhaustive scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParamsError
from .extremal import (EVEN, ODD, closed_form, closed_form_bipartite, extremal_graph,
                       join_family_graph)
from .graphs import canonical_form
from .indices import ALL_KINDS, Direction, IndexKind, direction, evaluate
from .partiteness import ClassParams
from .search import family_scan, scan_class

CONFIRMED = "confirmed"
REFUTED = "refuted"
REGIME_FLAGGED = "regime_flagged"


@dataclass(frozen=True)
class ClaimVerdict:
    """One grid tuple's outcome; `expected` is the printed value."""

    params: ClassParams
    verdict: str
    expected: int | Fraction | str | None = None
    actual: int | Fraction | str | None = None
    kind: IndexKind | None = None
    note: str = ""


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    description: str
    verdicts: tuple[ClaimVerdict, ...]

    @property
    def counts(self) -> dict[str, int]:
        out = {CONFIRMED: 0, REFUTED: 0, REGIME_FLAGGED: 0}
        for v in self.verdicts:
            out[v.verdict] += 1
        return out

    @property
    def all_confirmed(self) -> bool:
        return all(v.verdict == CONFIRMED for v in self.verdicts)

    @property
    def refuted(self) -> tuple[ClaimVerdict, ...]:
        return tuple(v for v in self.verdicts if v.verdict == REFUTED)


# claim id -> (kind, description) for the closed-form statements
_FORMULA_CLAIMS = {
    "thm4.1": (IndexKind.WIENER, "minimum Wiener closed form"),
    "thm4.2": (IndexKind.HARARY, "maximum Harary closed form"),
    "thm4.3": (IndexKind.RDD, "maximum reciprocal degree distance closed form"),
    "thm4.4": (IndexKind.ECC_DIST_SUM, "minimum eccentricity distance sum closed form"),
    "thm4.5": (IndexKind.ADJ_ECC_DIST_SUM,
               "minimum adjacent eccentric distance sum closed form"),
    "thm4.6": (IndexKind.CONN_ECC, "connective eccentricity closed form"),
    "thm4.7-m1": (IndexKind.ZAGREB_M1, "maximum first Zagreb closed form"),
    "thm4.7-m2": (IndexKind.ZAGREB_M2, "maximum second Zagreb closed form"),
    "thm4.7-pi1": (IndexKind.MULT_ZAGREB_PI1,
                   "maximum first multiplicative Zagreb closed form"),
    "thm4.7-pi2": (IndexKind.MULT_ZAGREB_PI2,
                   "maximum second multiplicative Zagreb closed form"),
}

_COROLLARY_CLAIMS = {
    "cor4.1": IndexKind.WIENER,
    "cor4.2": IndexKind.HARARY,
    "cor4.3": IndexKind.RDD,
    "cor4.4": IndexKind.ECC_DIST_SUM,
    "cor4.5": IndexKind.ADJ_ECC_DIST_SUM,
    "cor4.6": IndexKind.CONN_ECC,
    "cor4.7-m1": IndexKind.ZAGREB_M1,
    "cor4.7-m2": IndexKind.ZAGREB_M2,
    "cor4.7-pi1": IndexKind.MULT_ZAGREB_PI1,
    "cor4.7-pi2": IndexKind.MULT_ZAGREB_PI2,
}

_SCAN_CLAIMS = {
    "thm3.1": Direction.DECREASING,
    "thm3.2": Direction.INCREASING,
}


def known_claims() -> list[str]:
    return (sorted(_FORMULA_CLAIMS) + sorted(_COROLLARY_CLAIMS)
            + sorted(_SCAN_CLAIMS) + ["thm4.6-direction"])


def default_grid(n_max: int = 10, k_values=(2, 3, 4), n_min: int = 4) -> list[ClassParams]:
    """Every valid (n, m, k) with n_min <= n <= n_max and k in k_values."""
    grid = []
    for n in range(n_min, n_max + 1):
        for k in k_values:
            for m in range(1, n - k + 1):
                grid.append(ClassParams(n, m, k))
    return grid


def verify_theorem(claim: str, grid=None, workers: int = 1,
                   large: bool = False) -> VerificationReport:
    """Check one published claim over a parameter grid.

    Formula and corollary claims default to the construction grid
    (n <= 10 / n <= 10 with k = 2); scan-backed claims default to a small
    exhaustive grid (n <= 5) since they enumerate the whole class.
    """
    claim = claim.lower()
    if claim in _FORMULA_CLAIMS:
        kind, desc = _FORMULA_CLAIMS[claim]
        grid = default_grid() if grid is None else grid
        return VerificationReport(
            claim=claim, description=desc,
            verdicts=tuple(_check_formula(kind, p) for p in grid))
    if claim in _COROLLARY_CLAIMS:
        kind = _COROLLARY_CLAIMS[claim]
        grid = default_grid(k_values=(2,)) if grid is None else grid
        verdicts = []
        for p in grid:
            if p.k != 2:
                raise InvalidParamsError(f"corollary claims need k = 2, got {p}")
            verdicts.append(_check_corollary(kind, p))
        return VerificationReport(
            claim=claim,
            description=f"bipartite-case corollary for {kind.value}",
            verdicts=tuple(verdicts))
    if claim in _SCAN_CLAIMS:
        wanted = _SCAN_CLAIMS[claim]
        grid = default_grid(n_max=5) if grid is None else grid
        verdicts = []
        for p in grid:
            for kind in ALL_KINDS:
                if direction(kind) is wanted:
                    verdicts.append(_check_structure(kind, p, workers, large))
        return VerificationReport(
            claim=claim,
            description=("extremal structure, monotone decreasing indices"
                         if wanted is Direction.DECREASING
                         else "extremal structure, monotone increasing indices"),
            verdicts=tuple(verdicts))
    if claim == "thm4.6-direction":
        grid = default_grid(n_max=5) if grid is None else grid
        return VerificationReport(
            claim=claim,
            description="printed inequality direction of the connective "
                        "eccentricity statement",
            verdicts=tuple(_check_direction(p, workers, large) for p in grid))
    raise ValueError(f"unknown claim {claim!r}; known: {', '.join(known_claims())}")


def _check_formula(kind: IndexKind, params: ClassParams) -> ClaimVerdict:
    printed = closed_form(kind, params)
    oracle = evaluate(kind, extremal_graph(params))
    if printed.value == oracle:
        return ClaimVerdict(params=params, kind=kind, verdict=CONFIRMED,
                            expected=printed.value, actual=oracle)
    if printed.regime_restricted:
        return ClaimVerdict(
            params=params, kind=kind, verdict=REGIME_FLAGGED,
            expected=printed.value, actual=oracle,
            note="universal-vertex regime: a part of size 1 makes its vertex "
                 "eccentricity 1, not the 2 the formula assumes")
    return ClaimVerdict(params=params, kind=kind, verdict=REFUTED,
                        expected=printed.value, actual=oracle,
                        note="printed closed form differs from direct evaluation "
                             "on the construction")


def _check_corollary(kind: IndexKind, params: ClassParams) -> ClaimVerdict:
    parity = EVEN if (params.n - params.m) % 2 == 0 else ODD
    printed = closed_form_bipartite(kind, params.n, params.m, parity)
    oracle = evaluate(kind, extremal_graph(params))
    theorem_value = closed_form(kind, params).value
    note_parity = f"{parity} case (n - m = {params.n - params.m})"
    if printed.value == oracle:
        return ClaimVerdict(params=params, kind=kind, verdict=CONFIRMED,
                            expected=printed.value, actual=oracle, note=note_parity)
    if printed.regime_restricted:
        return ClaimVerdict(
            params=params, kind=kind, verdict=REGIME_FLAGGED,
            expected=printed.value, actual=oracle,
            note=f"{note_parity}; universal-vertex regime")
    detail = ("agrees with the theorem-level value but not the construction"
              if printed.value == theorem_value
              else f"also differs from the theorem-level value {theorem_value}")
    return ClaimVerdict(params=params, kind=kind, verdict=REFUTED,
                        expected=printed.value, actual=oracle,
                        note=f"{note_parity}; {detail}")


def _check_structure(kind: IndexKind, params: ClassParams, workers: int,
                     large: bool) -> ClaimVerdict:
    """Scan-backed: the class optimum is attained on the join family, uniquely.

    This is the structural statement: the extremal graph is a clique joined
    onto a complete multipartite graph for SOME part sizes (balance is the
    separate per-index refinement checked by the formula claims).
    """
    report = scan_class(params, kind, workers=workers, large=large)
    family_value, _ = family_scan(params, kind)
    optimizers = set(report.optimizer_codes)
    if report.optimum != family_value or not optimizers <= _all_family_codes(params):
        return ClaimVerdict(
            params=params, kind=kind, verdict=REFUTED,
            expected=family_value, actual=report.optimum,
            note="class optimum is not attained on the join family")
    if len(optimizers) > 1:
        return ClaimVerdict(
            params=params, kind=kind, verdict=REFUTED,
            expected=family_value, actual=report.optimum,
            note=f"{len(optimizers)} optimizer classes tie; uniqueness fails")
    return ClaimVerdict(params=params, kind=kind, verdict=CONFIRMED,
                        expected=family_value, actual=report.optimum,
                        note="unique optimizer lies in the join family")


def _check_direction(params: ClassParams, workers: int, large: bool) -> ClaimVerdict:
    """The statement prints a lower bound (>=); enumeration decides empirically."""
    kind = IndexKind.CONN_ECC
    lo, hi = _class_min_max(params, kind)
    ghat_value = evaluate(kind, extremal_graph(params))
    if lo < ghat_value:
        side = ("the construction attains the class maximum"
                if hi == ghat_value else
                f"the class maximum is {hi}, also above the printed bound")
        return ClaimVerdict(
            params=params, kind=kind, verdict=REFUTED,
            expected=f"every class member >= {ghat_value} (printed lower bound)",
            actual=f"class minimum is {lo}",
            note=f"inequality direction erratum: the index is monotone increasing "
                 f"and {side}; the statement holds with <=, not >=")
    return ClaimVerdict(params=params, kind=kind, verdict=CONFIRMED,
                        expected=f"every class member >= {ghat_value}",
                        actual=f"class minimum is {lo}")


def _class_min_max(params: ClassParams, kind: IndexKind):
    from .partiteness import partiteness_within
    from .search import enumerate_graphs

    lo = hi = None
    for g in enumerate_graphs(params.n, connected_only=True):
        if partiteness_within(g.adj, g.n, params.k, params.m) is None:
            continue
        val = evaluate(kind, g)
        lo = val if lo is None or val < lo else lo
        hi = val if hi is None or val > hi else hi
    return lo, hi


def _all_family_codes(params: ClassParams):
    from .search import _partitions_at_most
    return {
        canonical_form(join_family_graph(params.m, sizes))
        for sizes in _partitions_at_most(params.n - params.m, params.k)
    }

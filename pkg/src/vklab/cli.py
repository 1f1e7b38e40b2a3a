"""Command-line front end.

One-shot batch commands over graph6 input or class parameters:

  index      evaluate indices on graphs (inline graph6 or a corpus file)
  vk         vertex k-partiteness of graphs
  construct  build the balanced extremal family member
  scan       exhaustive extremal scan of a class
  verify     certify published claims over a parameter grid
  fuzz       randomized edge-addition monotonicity checks

Every report renders as plain text, JSON or CSV with identical exact values:
rationals are {num, den} objects in JSON and "p/q" strings elsewhere, never
floats. Exit status: 0 all claims confirmed, 2 refutations/violations found
(CI can gate on errata), 1 operational error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import Graph6ParseError, VklabError
from .extremal import extremal_graph, part_sizes
from .graphs import parse_graph6, to_graph6
from .indices import ALL_KINDS, IndexKind, evaluate
from .partiteness import ClassParams, vertex_k_partiteness
from .search import monotonicity_fuzz, scan_class
from .verify import REFUTED, known_claims, verify_theorem

_KIND_NAMES = {kind.value: kind for kind in ALL_KINDS}


def _value_json(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    frac = Fraction(v)
    return {"num": frac.numerator, "den": frac.denominator}


def _value_text(v):
    if v is None:
        return ""
    if isinstance(v, bool) or isinstance(v, str):
        return str(v)
    frac = Fraction(v)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def _envelope(claim, params=None, kind=None, optimum=None, optimizers=(),
              flags=None, verdicts=()):
    return {
        "claim": claim,
        "params": params or {},
        "kind": kind.value if isinstance(kind, IndexKind) else kind,
        "optimum": _value_json(optimum),
        "optimizers": list(optimizers),
        "flags": flags or {},
        "verdicts": list(verdicts),
    }


def _emit(envelopes, rows, header, fmt, out):
    """Render one report batch; JSON gets envelopes, plain/CSV get rows."""
    if fmt == "json":
        text = json.dumps(envelopes, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        widths = None
        lines = []
        for row in rows:
            lines.append("  ".join(str(c) for c in row))
        text = "\n".join(lines) + ("\n" if lines else "")
        _ = widths
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _input_graphs(args):
    """Yield (label, Graph) from --graph6 or --file; label is the source line."""
    if args.graph6:
        yield "-", parse_graph6(args.graph6)
        return
    with open(args.file) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except Graph6ParseError as exc:
                if args.strict:
                    raise Graph6ParseError(str(exc), lineno) from None
                continue
            yield str(lineno), g


def _selected_kinds(name: str) -> list[IndexKind]:
    if name == "all":
        return list(ALL_KINDS)
    if name not in _KIND_NAMES:
        raise VklabError(
            f"unknown kind {name!r}; choose from: all, {', '.join(_KIND_NAMES)}")
    return [_KIND_NAMES[name]]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_index(args) -> int:
    kinds = _selected_kinds(args.kind)
    envelopes, rows = [], []
    for label, g in _input_graphs(args):
        g6 = to_graph6(g)
        for kind in kinds:
            val = evaluate(kind, g)
            envelopes.append(_envelope(
                "index", params={"line": label, "graph6": g6},
                kind=kind, optimum=val))
            rows.append([label, g6, kind.value, _value_text(val)])
    _emit(envelopes, rows, ["line", "graph6", "kind", "value"], args.format, args.out)
    return 0


def _cmd_vk(args) -> int:
    envelopes, rows = [], []
    for label, g in _input_graphs(args):
        g6 = to_graph6(g)
        v = vertex_k_partiteness(g, args.k)
        envelopes.append(_envelope(
            "vk", params={"line": label, "graph6": g6, "k": args.k}, optimum=v))
        rows.append([label, g6, args.k, v])
    _emit(envelopes, rows, ["line", "graph6", "k", "value"], args.format, args.out)
    return 0


def _cmd_construct(args) -> int:
    params = ClassParams(args.n, args.m, args.k)
    spec = part_sizes(params)
    g6 = to_graph6(extremal_graph(params))
    envelopes = [_envelope(
        "construct",
        params={"n": params.n, "m": params.m, "k": params.k,
                "s": spec.s, "t": spec.t, "sizes": list(spec.sizes)},
        optimizers=[g6])]
    rows = [[params.n, params.m, params.k, spec.s, spec.t,
             " ".join(map(str, spec.sizes)), g6]]
    _emit(envelopes, rows, ["n", "m", "k", "s", "t", "sizes", "graph6"],
          args.format, args.out)
    return 0


def _cmd_scan(args) -> int:
    params = ClassParams(args.n, args.m, args.k)
    kinds = _selected_kinds(args.kind)
    envelopes, rows = [], []
    findings = False
    for kind in kinds:
        report = scan_class(params, kind, workers=args.workers, large=args.large)
        optimizers = report.optimizer_graph6()
        flags = {
            "matches_construction": report.matches_construction,
            "matches_closed_form": report.matches_closed_form,
            "unique_optimizer": len(report.optimizer_codes) == 1,
        }
        if not (report.matches_construction and report.matches_closed_form):
            findings = True
        envelopes.append(_envelope(
            "scan",
            params={"n": params.n, "m": params.m, "k": params.k,
                    "class_size": report.class_size},
            kind=kind, optimum=report.optimum, optimizers=optimizers, flags=flags))
        rows.append([params.n, params.m, params.k, kind.value,
                     _value_text(report.optimum), report.class_size,
                     flags["matches_construction"], flags["matches_closed_form"],
                     flags["unique_optimizer"], ";".join(optimizers)])
    _emit(envelopes, rows,
          ["n", "m", "k", "kind", "optimum", "class_size", "matches_construction",
           "matches_closed_form", "unique_optimizer", "optimizers"],
          args.format, args.out)
    return 2 if findings else 0


def _cmd_verify(args) -> int:
    claims = known_claims() if args.claim == "all" else [args.claim]
    k_values = tuple(range(2, args.kmax + 1))
    envelopes, rows = [], []
    any_refuted = False
    for claim in claims:
        from .verify import default_grid
        if claim.startswith("cor"):
            grid = default_grid(n_max=args.nmax, k_values=(2,))
        elif claim in ("thm3.1", "thm3.2", "thm4.6-direction"):
            grid = default_grid(n_max=min(args.nmax, args.scan_nmax), k_values=k_values)
        else:
            grid = default_grid(n_max=args.nmax, k_values=k_values)
        report = verify_theorem(claim, grid, workers=args.workers, large=args.large)
        verdict_objs = []
        for v in report.verdicts:
            verdict_objs.append({
                "params": {"n": v.params.n, "m": v.params.m, "k": v.params.k},
                "kind": v.kind.value if v.kind else None,
                "verdict": v.verdict,
                "expected": _value_json(v.expected),
                "actual": _value_json(v.actual),
                "note": v.note,
            })
            rows.append([claim, v.params.n, v.params.m, v.params.k,
                         v.kind.value if v.kind else "", v.verdict,
                         _value_text(v.expected), _value_text(v.actual), v.note])
        counts = report.counts
        if counts[REFUTED]:
            any_refuted = True
        envelopes.append(_envelope(
            claim,
            params={"n_max": args.nmax, "k_values": list(k_values)},
            flags={"confirmed": counts["confirmed"],
                   "refuted": counts["refuted"],
                   "regime_flagged": counts["regime_flagged"]},
            verdicts=verdict_objs))
    _emit(envelopes, rows,
          ["claim", "n", "m", "k", "kind", "verdict", "expected", "actual", "note"],
          args.format, args.out)
    return 2 if any_refuted else 0


def _cmd_fuzz(args) -> int:
    kinds = _selected_kinds(args.kind)
    envelopes, rows = [], []
    violations = 0
    for kind in kinds:
        report = monotonicity_fuzz(kind, args.trials, (args.nmin, args.nmax), args.seed)
        violations += report.violations
        counterexamples = [
            {"graph6": g6, "u": u, "v": v} for g6, u, v in report.counterexamples]
        envelopes.append(_envelope(
            "fuzz", params={"trials": args.trials, "n_min": args.nmin,
                            "n_max": args.nmax, "seed": args.seed},
            kind=kind,
            flags={"violations": report.violations, "resamples": report.resamples},
            verdicts=counterexamples))
        rows.append([kind.value, args.trials, report.violations, report.resamples,
                     args.seed,
                     ";".join(f"{g6}+({u},{v})" for g6, u, v in report.counterexamples)])
    _emit(envelopes, rows,
          ["kind", "trials", "violations", "resamples", "seed", "counterexamples"],
          args.format, args.out)
    return 2 if violations else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vklab",
        description="Exact topological indices, vertex k-partiteness, extremal "
                    "constructions and exhaustive certification scans.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
        p.add_argument("--out", help="write the report here instead of stdout")

    def add_input(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--graph6", help="one inline graph6 line")
        src.add_argument("--file", help="graph6 corpus, one graph per line")
        p.add_argument("--strict", action="store_true", default=True)
        p.add_argument("--lenient", dest="strict", action="store_false",
                       help="skip malformed corpus lines instead of aborting")

    p = sub.add_parser("index", help="evaluate topological indices")
    add_input(p)
    p.add_argument("--kind", default="all")
    add_common(p)
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("vk", help="vertex k-partiteness")
    add_input(p)
    p.add_argument("--k", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_vk)

    p = sub.add_parser("construct", help="build the balanced extremal member")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("scan", help="exhaustive extremal scan of one class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", default="all")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--large", action="store_true",
                   help="opt in to n = 8 scans (2^28 graphs)")
    add_common(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify", help="certify published claims on a grid")
    p.add_argument("--claim", default="all",
                   help=f"one of: all, {', '.join(known_claims())}")
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--scan-nmax", type=int, default=5, dest="scan_nmax",
                   help="grid cap for scan-backed claims")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--large", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fuzz", help="randomized monotonicity checks")
    p.add_argument("--kind", default="all")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--nmin", type=int, default=4)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--seed", type=int, default=1)
    add_common(p)
    p.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VklabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

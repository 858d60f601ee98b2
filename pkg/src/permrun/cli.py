"""Command-line front end.

Exit codes: 0 match / found, 1 no match / none, 2 usage or parse error,
3 brute-force budget exceeded, 4 a state-size bound was violated (bench).
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from dataclasses import astuple, dataclass, fields

from . import oracle
from .hardness import reduce_clique
from .oracle import BudgetExceeded, parse_graph
from .pathwidth import build_pattern_graph, lemma_decomposition, validate_decomposition
from .perm import Permutation, PermutationError, parse_permutation, run_decomposition
from .runmatch import XBOUND_BASE, BoundViolation, iter_traces, match_report, pad_text

EXIT_MATCH, EXIT_NONE, EXIT_USAGE, EXIT_BUDGET, EXIT_BOUND = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _perm(text: str, what: str) -> Permutation:
    try:
        return parse_permutation(text)
    except PermutationError as exc:
        raise UsageError(f"cannot parse {what}: {exc}") from None


def _fmt(seq) -> str:
    return " ".join(map(str, seq))


# -- match -------------------------------------------------------------------

def _trace_lines(pattern: Permutation, text: Permutation) -> list[str]:
    padded = pad_text(pattern, text)
    lines = [f"padded text: {padded.text}" + (f" ({padded.pad} pad)" if padded.pad else "")]
    for table in iter_traces(pattern, text):
        blocks = " ".join(f"F({i})={a}-{b}" for i, (a, b) in enumerate(table.f.spans, 1))
        lines.append(f"-- {blocks}")
        lines.append(table.format())
    return lines


def cmd_match(args) -> int:
    pattern = _perm(args.pattern, "pattern")
    text = _perm(args.text, "text")
    stats: dict = {}
    if args.oracle:
        emb = oracle.brute_force_match(pattern, text, budget=args.budget)
        stats["method"] = "brute-force"
    else:
        report = match_report(pattern, text, check_bounds=False)
        emb = report.embedding
        stats.update(method="alternating-runs", text_runs=report.text_runs,
                     pattern_runs=report.pattern_runs, functions_tried=report.functions_tried,
                     max_states=report.max_states, bound_violations=report.violations)
    if args.json:
        print(json.dumps({
            "matched": emb is not None,
            "positions": list(emb.positions) if emb else None,
            "values": list(emb.values) if emb else None,
            "stats": stats,
        }))
    else:
        if args.trace and not args.oracle:
            print("\n".join(_trace_lines(pattern, text)))
        if emb is None:
            print("no matching")
        else:
            print("matched")
            print(f"positions: {_fmt(emb.positions)}")
            print(f"values: {_fmt(emb.values)}")
    return EXIT_MATCH if emb is not None else EXIT_NONE


# -- runs / pathwidth -------------------------------------------------------

def cmd_runs(args) -> int:
    p = _perm(args.perm, "permutation")
    if not len(p):
        print("runs: 0")
        return EXIT_MATCH
    dec = run_decomposition(p)
    print(f"runs: {dec.count}")
    for r in dec.runs:
        print(f"{r.direction.value:<4} {_fmt(p[q] for q in r.positions())}")
    order = [v for v in p if v in dec.valleys]
    print(f"valleys: {_fmt(order)}")
    print(f"peaks: {_fmt(v for v in p if v in dec.peaks)}")
    print("vales: " + " | ".join(_fmt(g) for g in dec.vale_groups()))
    return EXIT_MATCH


def cmd_pathwidth(args) -> int:
    p = _perm(args.perm, "permutation")
    if not len(p):
        raise UsageError("pathwidth needs a nonempty permutation")
    d = lemma_decomposition(p)
    valid, width = validate_decomposition(build_pattern_graph(p), d)
    print(d.format())
    print(f"width: {width}")
    print(f"valid: {'yes' if valid else 'no'}")
    return EXIT_MATCH if valid else EXIT_NONE


# -- reduce-clique ----------------------------------------------------------

def _read_graph(path: str):
    try:
        with open(path) as fh:
            return parse_graph(fh.read())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read graph {path}: {exc}") from None


def cmd_reduce(args) -> int:
    g = _read_graph(args.graph)
    try:
        inst = reduce_clique(g, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(inst.format())
        for key, val in inst.metadata().items():
            print(f"{key}={val}")
    else:
        sys.stdout.write(inst.format())
    return EXIT_MATCH


# -- oracle -----------------------------------------------------------------

def cmd_oracle(args) -> int:
    if args.what == "match":
        pattern = _perm(args.pattern, "pattern")
        text = _perm(args.text, "text")
        emb = oracle.brute_force_match(pattern, text, budget=args.budget)
        if emb is None:
            print("no matching")
            return EXIT_NONE
        print("matched")
        print(f"positions: {_fmt(emb.positions)}")
        print(f"values: {_fmt(emb.values)}")
        return EXIT_MATCH
    if args.what == "lis":
        print(oracle.lis_length(_perm(args.perm, "permutation")))
        return EXIT_MATCH
    g = _read_graph(args.graph)
    found = oracle.has_clique(g, args.k, budget=args.budget)
    if found is None:
        print("no clique")
        return EXIT_NONE
    print(f"clique: {_fmt(found)}")
    return EXIT_MATCH


# -- bench ------------------------------------------------------------------

@dataclass
class BenchRecord:
    n: int
    k: int
    run_T: int
    run_P: int
    mf_count: int
    max_X: int
    wall_time: float
    outcome: str


def random_permutation(n: int, rng: random.Random) -> Permutation:
    values = list(range(1, n + 1))
    rng.shuffle(values)  # Fisher-Yates
    return Permutation(tuple(values))


def bench_records(ns, ks, seeds: int, seed: int, check_oracle: bool = False):
    for n in ns:
        for k in ks:
            if k > n:
                continue
            for s in range(seeds):
                rng = random.Random(f"{seed}:{n}:{k}:{s}")
                text = random_permutation(n, rng)
                pattern = random_permutation(k, rng)
                start = time.perf_counter()
                report = match_report(pattern, text, exhaust=True, check_bounds=False)
                elapsed = time.perf_counter() - start
                if report.violations:
                    raise BoundViolation(f"n={n} k={k} seed={s}: " + "; ".join(report.violations))
                if check_oracle:
                    expect = oracle.brute_force_match(pattern, text) is not None
                    if expect != report.matched:
                        raise AssertionError(f"oracle disagrees on {pattern} / {text}")
                rec = BenchRecord(n, k, report.text_runs, report.pattern_runs,
                                  report.functions_total or 0, report.max_states,
                                  round(elapsed, 6), "match" if report.matched else "no-match")
                if rec.max_X > XBOUND_BASE ** rec.run_T:
                    raise BoundViolation(f"max |X|={rec.max_X} above {XBOUND_BASE}^{rec.run_T}")
                yield rec


def cmd_bench(args) -> int:
    print(f"# bench seed={args.seed}", file=sys.stderr)
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow([f.name for f in fields(BenchRecord)])
        worst: dict[int, BenchRecord] = {}
        for rec in bench_records(args.n, args.k, args.seeds, args.seed, args.check_oracle):
            writer.writerow(astuple(rec))
            prev = worst.get(rec.n)
            if prev is None or rec.max_X / XBOUND_BASE ** rec.run_T > prev.max_X / XBOUND_BASE ** prev.run_T:
                worst[rec.n] = rec
    finally:
        if out is not sys.stdout:
            out.close()
    if args.summary:
        for n in sorted(worst):
            rec = worst[n]
            bound = XBOUND_BASE ** rec.run_T
            print(f"# n={n} worst max|X|={rec.max_X} at run(T)={rec.run_T}: bound {bound:.1f} "
                  f"(ratio {rec.max_X / bound:.3f})", file=sys.stderr)
    return EXIT_MATCH


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            a, b = part.split("-")
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permrun", description="Exact permutation pattern matching")
    parser.add_argument("--budget", type=int, default=None,
                        help="brute-force search budget (default: $PERMRUN_BUDGET or 1e8)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("match", help="decide whether PATTERN occurs in TEXT")
    p.add_argument("pattern")
    p.add_argument("text")
    p.add_argument("--trace", action="store_true", help="print the state sets for every matching function tried")
    p.add_argument("--oracle", action="store_true", help="use brute force instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("runs", help="alternating runs, valleys, peaks and vales")
    p.add_argument("perm")
    p.set_defaults(func=cmd_runs)

    p = sub.add_parser("pathwidth", help="path decomposition of the position graph")
    p.add_argument("perm")
    p.set_defaults(func=cmd_pathwidth)

    p = sub.add_parser("reduce-clique", help="build a PPM instance from a clique instance")
    p.add_argument("graph", help="file with 'l m' then m lines 'u v'")
    p.add_argument("k", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("oracle", help="brute-force references")
    osub = p.add_subparsers(dest="what", required=True)
    q = osub.add_parser("match")
    q.add_argument("pattern")
    q.add_argument("text")
    q = osub.add_parser("lis")
    q.add_argument("perm")
    q = osub.add_parser("clique")
    q.add_argument("graph")
    q.add_argument("k", type=int)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="random instances, CSV on stdout")
    p.add_argument("--n", type=_int_list, default=[], help="text lengths, e.g. 8,10,12 or 8-12")
    p.add_argument("--k", type=_int_list, default=[], help="pattern lengths")
    p.add_argument("--seeds", type=int, default=10, help="instances per (n, k) cell")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check-oracle", action="store_true", help="cross-check outcomes by brute force")
    p.add_argument("--summary", action="store_true", help="per-n worst state count vs bound on stderr")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except BoundViolation as exc:
        print(f"bound violated: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())

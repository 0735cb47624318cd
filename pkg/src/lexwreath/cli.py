"""Command-line front end.

Subcommands: analyze, aut, product, verify, scan. Graph arguments use the
spec grammar of :mod:`lexwreath.graph_io` (``K2*C6``, ``g6:A_``, ``@file``);
``-`` reads a graph6 line from stdin. Vertices are printed 0-indexed.

Exit codes: 0 verdict HOLDS / success, 1 FAILS, 2 NOT_APPLICABLE, 3 scan
skipped malformed lines, 64 usage or parse error, 65 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .autgroup import BRUTE_FORCE_LIMIT, BruteForceLimitError, automorphism_group, brute_force_automorphisms
from .graph import Graph, is_connected, lex_product, regularity
from .graph_io import Graph6Error, GraphSpecError, parse_graph6, parse_spec, write_graph6
from .verdict import DEFAULT_AUT_LIMIT, Quantum, SweepLimitError, analyze, default_workers, verify_sabidussi

EXIT_OK, EXIT_FAILS, EXIT_NOT_APPLICABLE, EXIT_SKIPPED = 0, 1, 2, 3
EXIT_USAGE, EXIT_LIMIT = 64, 65
MAX_AUT_LIMIT = 64

VERDICT_EXIT = {Quantum.HOLDS: EXIT_OK, Quantum.FAILS: EXIT_FAILS,
                Quantum.NOT_APPLICABLE: EXIT_NOT_APPLICABLE}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class CliConfig:
    subcommand: str
    specs: list[str] = field(default_factory=list)
    json: bool = False
    aut_limit: int = DEFAULT_AUT_LIMIT
    brute_limit: int = BRUTE_FORCE_LIMIT
    workers: int = 1
    verbose: bool = False

    def __post_init__(self):
        if not 1 <= self.aut_limit <= MAX_AUT_LIMIT:
            raise UsageError(f"--aut-limit must be in 1..{MAX_AUT_LIMIT}")
        if not 1 <= self.brute_limit <= BRUTE_FORCE_LIMIT:
            raise UsageError(f"--brute-limit must be in 1..{BRUTE_FORCE_LIMIT}")
        if self.workers < 1:
            raise UsageError("--workers must be positive")


def _config(args) -> CliConfig:
    workers = getattr(args, "workers", None)
    return CliConfig(
        subcommand=args.command,
        specs=[s for s in (getattr(args, k, None) for k in ("x", "y", "spec")) if s is not None],
        json=getattr(args, "json", False),
        aut_limit=getattr(args, "aut_limit", DEFAULT_AUT_LIMIT),
        brute_limit=getattr(args, "brute_limit", BRUTE_FORCE_LIMIT),
        workers=workers if workers is not None else default_workers(),
        verbose=getattr(args, "verbose", False),
    )


def load_graph(spec: str, stdin=None) -> Graph:
    if spec == "-":
        stream = stdin if stdin is not None else sys.stdin
        for line in stream:
            if line.strip():
                try:
                    return parse_graph6(line.strip())
                except Graph6Error as exc:
                    raise UsageError(f"stdin: {exc}") from None
        raise UsageError("stdin: no graph6 line")
    try:
        return parse_spec(spec)
    except GraphSpecError as exc:
        raise UsageError(exc.annotated()) from None


def _load_pair(args) -> tuple[Graph, Graph]:
    if args.x == "-" and args.y == "-":
        raise UsageError("only one graph may be read from stdin")
    return load_graph(args.x), load_graph(args.y)


def cmd_analyze(args, out) -> int:
    cfg = _config(args)
    x, y = _load_pair(args)
    report = analyze(x, y, with_cross_check=not args.no_cross_check,
                     aut_limit=cfg.aut_limit, verbose=cfg.verbose)
    print(report.to_json() if cfg.json else report.to_text(), file=out)
    return VERDICT_EXIT[report.quantum]


def cmd_aut(args, out) -> int:
    cfg = _config(args)
    g = load_graph(args.spec)
    if args.brute and g.vertex_count > cfg.brute_limit:
        print(f"error: brute force refused on {g.vertex_count} vertices "
              f"(limit {cfg.brute_limit})", file=sys.stderr)
        return EXIT_LIMIT
    group = automorphism_group(g)
    brute = None
    if args.brute:
        brute = len(brute_force_automorphisms(g, limit=cfg.brute_limit))
    if cfg.json:
        payload = {"order": str(group.order), "generators": [str(p) for p in group.generators],
                   "base": list(group.base)}
        if brute is not None:
            payload["brute_force_order"] = str(brute)
        print(json.dumps(payload), file=out)
    else:
        print(f"order {group.order}", file=out)
        for p in group.generators:
            print(p, file=out)
        if brute is not None:
            print(f"brute force: {brute} automorphisms"
                  f" ({'agrees' if brute == group.order else 'DISAGREES'})", file=out)
    return EXIT_OK if brute is None or brute == group.order else EXIT_FAILS


def cmd_product(args, out) -> int:
    x, y = _load_pair(args)
    g = lex_product(x, y)
    print(write_graph6(g).decode(), file=out)
    if args.stats:
        valence = regularity(g)
        print(f"vertices {g.vertex_count}", file=out)
        print(f"valence {valence if valence is not None else 'irregular'}", file=out)
        print(f"connected {'yes' if is_connected(g) else 'no'}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    cfg = _config(args)
    try:
        summary = verify_sabidussi(args.max_x, args.max_y, workers=cfg.workers)
    except SweepLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    if cfg.json:
        print(json.dumps({"pairs_checked": summary.pairs_checked,
                          "agreements": summary.agreements,
                          "wreath_pairs": summary.wreath_pairs,
                          "counterexamples": summary.counterexamples}), file=out)
    else:
        print(f"pairs checked {summary.pairs_checked}", file=out)
        print(f"agreements {summary.agreements}", file=out)
        print(f"wreath decompositions {summary.wreath_pairs}", file=out)
        print(f"counterexamples {len(summary.counterexamples)}", file=out)
        for c in summary.counterexamples:
            print("  x=%s y=%s criterion=%s wreath=%s" % c, file=out)
    return EXIT_OK if summary.ok else EXIT_FAILS


def _read_corpus(path: str) -> tuple[list[tuple[int, Graph]], int]:
    graphs, bad = [], 0
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append((lineno, parse_graph6(line)))
            except Graph6Error as exc:
                print(f"{path}:{lineno}: {exc}", file=sys.stderr)
                bad += 1
    return graphs, bad


def _scan_one(job) -> str:
    x, y, cross, aut_limit, verbose = job
    return analyze(x, y, with_cross_check=cross, aut_limit=aut_limit, verbose=verbose).to_json()


def cmd_scan(args, out) -> int:
    cfg = _config(args)
    try:
        xs, bad_x = _read_corpus(args.x_file)
        ys, bad_y = _read_corpus(args.y_file)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    jobs = [(x, y, not args.no_cross_check, cfg.aut_limit, cfg.verbose)
            for _, x in xs for _, y in ys]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            for line in pool.map(_scan_one, jobs, chunksize=4):
                print(line, file=out)
    else:
        for job in jobs:
            print(_scan_one(job), file=out)
    return EXIT_SKIPPED if bad_x or bad_y else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lexwreath", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def analysis_flags(p):
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.add_argument("--aut-limit", type=int, default=DEFAULT_AUT_LIMIT,
                       help="largest product order for the automorphism cross-check")
        p.add_argument("--no-cross-check", action="store_true")
        p.add_argument("--verbose", action="store_true", help="list S_Y and T_Y pairs")

    p = sub.add_parser("analyze", help="decide the wreath criteria for X∘Y")
    p.add_argument("x")
    p.add_argument("y")
    analysis_flags(p)

    p = sub.add_parser("aut", help="automorphism group order and generators")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.add_argument("--brute", action="store_true", help="cross-check by enumerating all permutations")
    p.add_argument("--brute-limit", type=int, default=BRUTE_FORCE_LIMIT)

    p = sub.add_parser("product", help="print X∘Y in graph6")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--stats", action="store_true")

    p = sub.add_parser("verify", help="exhaustive sweep over small labeled graphs")
    p.add_argument("--max-x", type=int, required=True)
    p.add_argument("--max-y", type=int, required=True)
    p.add_argument("--workers", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scan", help="analyze every pair from two graph6 files")
    p.add_argument("--x-file", required=True)
    p.add_argument("--y-file", required=True)
    p.add_argument("--workers", type=int)
    analysis_flags(p)
    return parser


COMMANDS = {"analyze": cmd_analyze, "aut": cmd_aut, "product": cmd_product,
            "verify": cmd_verify, "scan": cmd_scan}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BruteForceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())

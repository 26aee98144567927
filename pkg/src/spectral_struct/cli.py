"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or bench bound exceeded),
2 unreadable or malformed input, 3 hypothesis violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as benchmod
from .errors import HypothesisError, ParseError
from .generators import (
    expand_true_twins,
    fixture,
    gen_block_graph,
    gen_chordal,
    gen_gnp,
    gen_strictly_chordal,
)
from .graph import Graph, is_connected, read_edge_list, to_edge_list
from .oracle.spectrum import (
    default_tol,
    exact_report,
    format_multiplicities,
    format_spectrum,
    integer_multiplicity,
    laplacian,
    numeric_spectrum,
)
from .report import build_report, render_text
from .strictly import run_pipeline

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3

REQUIREMENTS = ("connected", "chordal", "strictly-chordal")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _load(path: str) -> Graph:
    if path == "-":
        from .graph import parse_edge_list

        return parse_edge_list(sys.stdin.read())
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc.strerror or exc}") from exc
    except ParseError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from exc


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise CliError(EXIT_HYPOTHESIS, "graph is not connected")


# -- analyze ------------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load(args.path)
    _require_connected(g)
    report = build_report(g)
    for req in args.require or ():
        if req == "chordal" and not report.chordal:
            raise CliError(EXIT_HYPOTHESIS, "graph is not chordal")
        if req == "strictly-chordal" and not report.strictly_chordal:
            raise CliError(EXIT_HYPOTHESIS, "graph is not strictly chordal")
    sys.stdout.write(report.to_json() if args.json else render_text(report))
    return EXIT_OK


# -- spectrum -----------------------------------------------------------------


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = _load(args.path)
    if args.full:
        tol = args.tol if args.tol is not None else default_tol()
        values = numeric_spectrum(laplacian(g), tol)
        if args.json:
            print(json.dumps({"n": g.n, "spectrum": values}))
        else:
            print(format_spectrum(values))
        return EXIT_OK
    mults = exact_report(g).nonzero()
    if args.json:
        print(json.dumps({"n": g.n, "integer_multiplicities": [[k, v] for k, v in mults.items()]}))
    else:
        print(format_multiplicities(mults))
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def verify_graph(g: Graph) -> list[str]:
    """Violations of ``exact multiplicity >= claimed`` for the pipeline's condensed output."""
    spec = run_pipeline(g).spectrum
    L = laplacian(g)
    bad = []
    for lam, claimed in spec.condense().items():
        exact = integer_multiplicity(L, lam)
        if exact < claimed:
            bad.append(f"lambda={lam}: claimed {claimed}, exact {exact}")
    return bad


def cmd_verify(args: argparse.Namespace) -> int:
    graphs: list[tuple[str, Graph]] = []
    if args.path:
        graphs.append((args.path, _load(args.path)))
    if args.random:
        for i in range(args.random):
            seed = args.seed + i
            n = 2 + (seed * 7919) % max(1, args.max_n - 1)
            graphs.append((f"strictly-chordal seed={seed} n~{n}", gen_strictly_chordal(seed, n)))
    if not graphs:
        raise CliError(EXIT_PARSE, "nothing to verify: give a path or --random N")
    failures = 0
    for name, g in graphs:
        _require_connected(g)
        bad = verify_graph(g)
        if bad:
            failures += 1
            for line in bad:
                print(f"FAIL {name}: {line}")
        elif not args.quiet:
            print(f"PASS {name} (n={g.n}, m={g.m})")
    print(f"{len(graphs) - failures}/{len(graphs)} passed")
    return EXIT_VERIFY if failures else EXIT_OK


# -- gen ----------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    fam = args.family
    if fam == "block":
        g = gen_block_graph(args.seed, args.blocks, args.max_block_size)
        if args.max_copies:
            g = expand_true_twins(g, args.seed + 1, args.max_copies)
    elif fam == "strictly-chordal":
        g = gen_strictly_chordal(args.seed, args.n, args.max_block_size, args.max_copies or 1)
    elif fam == "chordal":
        g = gen_chordal(args.seed, args.n)
    elif fam == "gnp":
        g = gen_gnp(args.seed, args.n, args.p)
    else:
        try:
            g = fixture(fam)
        except KeyError as exc:
            raise CliError(EXIT_PARSE, str(exc.args[0])) from exc
    sys.stdout.write(to_edge_list(g))
    return EXIT_OK


# -- bench --------------------------------------------------------------------


def cmd_bench(args: argparse.Namespace) -> int:
    res = benchmod.run_bench(args.sizes, args.seed, args.family, args.repeat, avg_degree=args.avg_degree)
    if args.json:
        print(
            json.dumps(
                {
                    "rows": [{"n": r.n, "m": r.m, "seconds": r.seconds} for r in res.rows],
                    "exponents": res.exponents,
                },
                indent=2,
            )
        )
    else:
        sys.stdout.write(benchmod.format_table(res))
    if args.max_exponent is not None:
        over = {k: v for k, v in res.exponents.items() if v > args.max_exponent}
        if over:
            print(f"exponent above {args.max_exponent}: {over}", file=sys.stderr)
            return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-struct",
        description="Integer Laplacian eigenvalues from graph structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="twin classes, clique structure and structural spectrum")
    p.add_argument("path", help="edge-list file, or - for stdin")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", action="store_true", help="plain-text report (default)")
    p.add_argument("--require", action="append", choices=REQUIREMENTS,
                   help="exit 3 unless the graph has this structure (repeatable)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("spectrum", help="exact integer multiplicities or the full numeric spectrum")
    p.add_argument("path")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact-integers", action="store_true", help="default")
    mode.add_argument("--full", action="store_true")
    p.add_argument("--tol", type=float, default=None,
                   help="Jacobi tolerance (default: $SPECTRAL_STRUCT_TOL or 1e-12)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="check every structural claim against exact multiplicities")
    p.add_argument("path", nargs="?")
    p.add_argument("--random", type=int, default=0, metavar="N", help="also check N generated strictly chordal graphs")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-n", type=int, default=60)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a generated graph as edge-list text")
    p.add_argument("family", help="block | strictly-chordal | chordal | gnp | a fixture name (fig1, gem, k5, ...)")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--blocks", type=int, default=5)
    p.add_argument("--max-block-size", type=int, default=4)
    p.add_argument("--max-copies", type=int, default=0)
    p.add_argument("--p", type=float, default=0.2)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="doubling experiment with fitted growth exponents")
    p.add_argument("--sizes", type=int, nargs="+", default=[20000, 40000, 80000, 160000])
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--family", choices=("strictly-chordal", "gnp"), default="strictly-chordal")
    p.add_argument("--avg-degree", type=float, default=4.0, help="gnp only")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--max-exponent", type=float, default=None, help="exit 1 if any fitted exponent exceeds this")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except HypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

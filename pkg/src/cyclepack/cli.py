"""Command-line front end.

Usage:
    cyclepack gen --family Y1 | cyclepack pack -k 3
    cyclepack gen --family Gk -k 3 | cyclepack decide -k 3
    cyclepack verify --theorem T1 -k 2 --n 6 7 --min-degree 4

Every graph-consuming subcommand reads graph6 lines (or one edge list) from
--input or standard input and prints one result per graph, in input order.

Exit codes:
    0  success / HasKCycles / verification passed
    1  NoKCycles, a certificate, or a counterexample
    2  usage error, unreadable input, malformed graph, invalid parameters
    3  undetermined within the search budgets
"""

import argparse
import logging
import sys
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import TextIO

from cyclepack.config import BUDGET_ENV_VAR, SearchBudgets
from cyclepack.decide import decide
from cyclepack.enumeration import DEFAULT_SEED, enumerate_graphs, random_graph_stream
from cyclepack.equitable import theta
from cyclepack.exceptions import BudgetExceededError, CyclePackError, InvalidParameterError
from cyclepack.families import FamilyKind, FamilySpec, named_family
from cyclepack.graph import Graph, degree_stats, vertex_classes
from cyclepack.graph6 import emit_edge_list, emit_graph6, parse_edge_list, read_graph6_lines
from cyclepack.independence import independence_number
from cyclepack.models import (
    CandidateCounterexample,
    ExceptionalGraph,
    HypothesisViolation,
    IndependentSetCertificate,
    Packing,
    Verdict,
)
from cyclepack.oracle import oracle_max_packing
from cyclepack.packer import find_disjoint_cycles
from cyclepack.report import render_machine, render_text, write_summary
from cyclepack.verifier import Outcome, TheoremCheck, TheoremId, VerificationMode, verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_UNDETERMINED = 3

LineResult = tuple[list[str], int]

_FAMILY_ALIASES = {
    "complete": "CompleteK",
    "k": "CompleteK",
    "bipartite": "CompleteBipartite",
    "c5blowup": "C5BlowupK3bar",
    "2kkjoinkkbar": "TwoKkJoinKkBar",
    "kkkpluskk": "KkkPlusKk",
}


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def _family_kind(name: str) -> str:
    key = name.strip().lower().replace("-", "").replace("_", "")
    for kind in FamilyKind:
        if kind.value.lower() == key:
            return kind.value
    if key in _FAMILY_ALIASES:
        return _FAMILY_ALIASES[key]
    valid = ", ".join(kind.value for kind in FamilyKind)
    raise InvalidParameterError(f"unknown family '{name}' (expected one of {valid})")


def _positive(value: str) -> int:
    try:
        number = int(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from e
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {number}")
    return number


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["graph6", "edgelist"], default="graph6", help="Graph text format"
    )
    common.add_argument(
        "--output", choices=["text", "machine"], default="text", help="Result rendering"
    )
    common.add_argument(
        "--budget",
        default="",
        help=f"Budget override: an integer or field=value pairs (after ${BUDGET_ENV_VAR})",
    )
    common.add_argument("--workers", type=_positive, default=1, help="Worker processes")
    common.add_argument("--input", default="-", help="Input file (default: standard input)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")

    parser = argparse.ArgumentParser(
        prog="cyclepack", description="Disjoint cycle packing under degree conditions"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pack = sub.add_parser("pack", parents=[common], help="Find k disjoint cycles or a certificate")
    pack.add_argument("-k", type=_positive, required=True, help="Number of cycles")

    decide = sub.add_parser(
        "decide", parents=[common], help="Decide whether k disjoint cycles exist"
    )
    decide.add_argument("-k", type=_positive, required=True, help="Number of cycles")

    gen = sub.add_parser("gen", parents=[common], help="Print a named graph")
    gen.add_argument("--family", required=True, help="Family name, e.g. Y1, Gk, complete, wheel")
    for flag in ("-n", "-k", "-r", "-t", "-s"):
        gen.add_argument(flag, type=int, default=None, help=f"Family parameter {flag[1:]}")

    verify = sub.add_parser("verify", parents=[common], help="Verify a theorem over a graph stream")
    verify.add_argument("--theorem", required=True, help="T1, T2, T4, T9, L16, C14 or H3-necessity")
    verify.add_argument("-k", type=_positive, required=True, help="Theorem parameter")
    verify.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    verify.add_argument("--n", type=int, nargs="+", default=None, help="Enumerate these orders")
    verify.add_argument("--min-degree", type=int, default=None, help="Enumeration filter δ ≥ d")
    verify.add_argument("--max-degree", type=int, default=None, help="Enumeration filter Δ ≤ d")
    verify.add_argument(
        "--min-sigma2", type=int, default=None, help="Enumeration filter σ₂ ≥ s"
    )
    verify.add_argument("--count", type=_positive, default=1000, help="Sampled graphs")
    verify.add_argument("--n-range", type=int, nargs=2, default=None, metavar=("LOW", "HIGH"))
    verify.add_argument("--seed", type=int, default=None, help="Sampling seed")
    verify.add_argument("--p", type=float, default=0.5, help="Sampled edge probability")
    verify.add_argument("--summary", type=Path, default=None, help="Append machine summary here")

    oracle = sub.add_parser("oracle", parents=[common], help="Exact maximum cycle packing")
    oracle.add_argument(
        "--stop-at", type=_positive, default=None, help="Stop once this many are found"
    )

    stats = sub.add_parser("stats", parents=[common], help="Degree and independence statistics")
    stats.add_argument("-k", type=_positive, default=None, help="Classify buds/high/low for this k")
    return parser


def _parse_stream(fmt: str, source: TextIO) -> Iterator[Graph]:
    if fmt == "edgelist":
        yield parse_edge_list(source.read())
    else:
        for _, graph in read_graph6_lines(source):
            yield graph


def _read_graphs(args: argparse.Namespace, stdin: TextIO) -> Iterator[Graph]:
    if args.input == "-":
        yield from _parse_stream(args.format, stdin)
    else:
        with open(args.input, encoding="utf-8") as handle:
            yield from _parse_stream(args.format, handle)


# Per-graph handlers; top level so a process pool can pickle them.


def _pack_one(graph: Graph, k: int, budgets: SearchBudgets, machine: bool) -> LineResult:
    code = emit_graph6(graph)
    result = find_disjoint_cycles(graph, k, budgets)
    if isinstance(result, Packing):
        lines, detail, exit_code = result.packing.format_lines(), "", EXIT_OK
    elif isinstance(result, IndependentSetCertificate):
        vertices = " ".join(str(v) for v in sorted(result.vertices))
        lines, detail, exit_code = [f"independent set: {vertices}"], vertices, EXIT_NO
    elif isinstance(result, ExceptionalGraph):
        detail, exit_code = result.exception.value, EXIT_NO
        lines = [f"exceptional: {detail}"]
    elif isinstance(result, HypothesisViolation):
        names = ",".join(result.violated)
        lines = [f"hypothesis violation: {names}", result.report.summary()]
        detail, exit_code = names, EXIT_NO
    else:
        assert isinstance(result, CandidateCounterexample)
        lines = [f"candidate counterexample ({result.packing.size} cycles)"]
        lines += result.packing.format_lines()
        detail, exit_code = "|".join(result.packing.format_lines()), EXIT_NO
    if machine:
        if isinstance(result, Packing):
            detail = "|".join(lines)
        return [f"{code}\t{result.kind.value}\t{detail}"], exit_code
    return lines, exit_code


def _decide_one(graph: Graph, k: int, budgets: SearchBudgets, machine: bool) -> LineResult:
    decision = decide(graph, k, budgets)
    exit_code = {
        Verdict.HAS_K_CYCLES: EXIT_OK,
        Verdict.NO_K_CYCLES: EXIT_NO,
        Verdict.UNKNOWN: EXIT_UNDETERMINED,
    }[decision.verdict]
    if machine:
        rule = decision.deciding_rule or "-"
        columns = [emit_graph6(graph), decision.verdict.value, rule, decision.justification]
        return ["\t".join(columns)], exit_code
    lines = [f"{decision.verdict.value}: {decision.justification}"]
    if decision.witness is not None:
        lines += [f"  {line}" for line in decision.witness.format_lines()]
    return lines, exit_code


def _oracle_one(
    graph: Graph, stop_at: int | None, budgets: SearchBudgets, machine: bool
) -> LineResult:
    try:
        result = oracle_max_packing(graph, stop_at=stop_at, budgets=budgets)
    except BudgetExceededError as e:
        if machine:
            return [f"{emit_graph6(graph)}\tundetermined\t{e}"], EXIT_UNDETERMINED
        return [f"undetermined: {e}"], EXIT_UNDETERMINED
    cycles = [" ".join(str(v) for v in c) for c in result.cycles]
    if machine:
        return [f"{emit_graph6(graph)}\t{result.count}\t{'|'.join(cycles)}"], EXIT_OK
    qualifier = "" if result.complete else "at least "
    return [f"max disjoint cycles: {qualifier}{result.count}", *cycles], EXIT_OK


def _stats_one(graph: Graph, k: int | None, budgets: SearchBudgets, machine: bool) -> LineResult:
    stats = degree_stats(graph)
    try:
        alpha = str(independence_number(graph, budgets=budgets).size)
        exit_code = EXIT_OK
    except BudgetExceededError:
        alpha, exit_code = "?", EXIT_UNDETERMINED

    def fmt(value: float) -> str:
        if value in (float("inf"), float("-inf")):
            return str(value)
        return str(int(value))

    fields = [
        ("n", str(graph.n)),
        ("edges", str(graph.edge_count)),
        ("delta", str(stats.delta)),
        ("Delta", str(stats.Delta)),
        ("sigma2", fmt(stats.sigma2)),
        ("theta", fmt(theta(graph))),
        ("alpha", alpha),
    ]
    if k is not None:
        classes = vertex_classes(graph, k)
        fields += [
            ("buds", str(len(classes.buds))),
            ("high", str(len(classes.high))),
            ("low", str(len(classes.low))),
        ]
    if machine:
        summary = " ".join(f"{name}={value}" for name, value in fields)
        return [f"{emit_graph6(graph)}\t{summary}"], exit_code
    return [f"{name}: {value}" for name, value in fields], exit_code


def _sigma2_at_least(graph: Graph, threshold: int) -> bool:
    return degree_stats(graph).sigma2 >= threshold


def _run_stream(
    graphs: Iterator[Graph],
    handler: Callable[[Graph], LineResult],
    workers: int,
    out: TextIO,
    machine: bool,
) -> int:
    worst = EXIT_OK
    results: Iterator[LineResult]
    if workers > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(handler, graphs)
    else:
        pool = None
        results = map(handler, graphs)
    try:
        for index, (lines, exit_code) in enumerate(results):
            if index and not machine:
                out.write("\n")
            out.write("".join(f"{line}\n" for line in lines))
            worst = max(worst, exit_code)
    finally:
        if pool is not None:
            pool.shutdown()
    return worst


def _cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    spec = FamilySpec(_family_kind(args.family), n=args.n, k=args.k, r=args.r, t=args.t, s=args.s)
    graph = named_family(spec)
    logger.info(f"generated {spec.label()} with n={graph.n}, {graph.edge_count} edges")
    out.write(emit_edge_list(graph) if args.format == "edgelist" else emit_graph6(graph) + "\n")
    return EXIT_OK


def _cmd_verify(
    args: argparse.Namespace, budgets: SearchBudgets, stdin: TextIO, out: TextIO
) -> int:
    check = TheoremCheck(TheoremId.parse(args.theorem), args.k)
    mode = VerificationMode(args.mode)
    seed = None
    stream: Iterator[Graph]
    if mode is VerificationMode.SAMPLED:
        seed = DEFAULT_SEED if args.seed is None else args.seed
        if args.n_range is None:
            raise InvalidParameterError("sampled mode needs --n-range LOW HIGH")
        stream = random_graph_stream(args.count, (args.n_range[0], args.n_range[1]), seed, args.p)
    elif args.n is not None:
        predicate: Callable[[Graph], bool] | None = None
        if args.min_sigma2 is not None:
            predicate = partial(_sigma2_at_least, threshold=args.min_sigma2)
        stream = (
            graph
            for n in args.n
            for graph in enumerate_graphs(
                n,
                predicate,
                min_degree=args.min_degree,
                max_degree=args.max_degree,
                budgets=budgets,
            )
        )
    else:
        stream = _read_graphs(args, stdin)

    report = verify(stream, check, mode, seed=seed, workers=args.workers, budgets=budgets)
    if args.output == "machine":
        out.write("\n".join(render_machine(report)) + "\n")
    else:
        out.write(render_text(report) + "\n")
    if args.summary is not None:
        write_summary(args.summary, report)

    if not report.passed:
        return EXIT_NO
    return EXIT_UNDETERMINED if report.count(Outcome.SKIPPED) else EXIT_OK


def run(
    argv: Sequence[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
) -> int:
    """
    Execute one command.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
        stdin: Input stream (default: sys.stdin)
        stdout: Output stream (default: sys.stdout)

    Returns:
        Process exit code
    """
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    _configure_logging(args.verbose)
    try:
        budgets = SearchBudgets.from_env().override(args.budget)
        machine = args.output == "machine"
        if args.command == "gen":
            return _cmd_gen(args, out)
        if args.command == "verify":
            return _cmd_verify(args, budgets, stdin, out)

        handler: Callable[[Graph], LineResult]
        if args.command == "pack":
            handler = partial(_pack_one, k=args.k, budgets=budgets, machine=machine)
        elif args.command == "decide":
            handler = partial(_decide_one, k=args.k, budgets=budgets, machine=machine)
        elif args.command == "oracle":
            handler = partial(_oracle_one, stop_at=args.stop_at, budgets=budgets, machine=machine)
        else:
            handler = partial(_stats_one, k=args.k, budgets=budgets, machine=machine)
        return _run_stream(_read_graphs(args, stdin), handler, args.workers, out, machine)
    except BudgetExceededError as e:
        logger.error(f"{args.command} undetermined: {e}")
        return EXIT_UNDETERMINED
    except (CyclePackError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_USAGE


def main() -> None:
    """Console-script entry point."""
    sys.exit(run())

"""Command-line surface.

Subcommands: compile, match, verify, analyze, gadget (doubling-tree,
sep-path, range), demo jump.  Exit codes: 0 success, 1 verification
disagreement, 2 malformed input.  "-" means stdin/stdout, and the
MATCHGADGET_BUDGET environment variable overrides enumeration caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, serialize
from .doubling import doubling_tree
from .dsl import parse_formula
from .errors import CapExceededError, MatchGadgetError
from .gadgets import (
    HaltingOracle,
    compile_false,
    compile_formula,
    compile_true,
    jump_hierarchy,
    range_flag_edge,
    range_gadget,
    separation_path,
)
from .matching import DEFAULT_MATCHING_CAP, enumerate_matchings, maximum_matching
from .verify import (
    decode_set,
    decode_truth,
    evaluate_jump_query,
    verify_unique_pm,
)

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_MALFORMED = 2


def _budget() -> int:
    raw = os.environ.get("MATCHGADGET_BUDGET")
    if raw is None:
        return DEFAULT_MATCHING_CAP
    try:
        return int(raw)
    except ValueError:
        raise MatchGadgetError(f"MATCHGADGET_BUDGET must be an integer, got {raw!r}")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _read_json(path: str) -> dict:
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise serialize.FormatError(f"invalid JSON in {path}: {exc}") from exc


def _emit(doc: dict, path: str = "-") -> None:
    _write_text(path, json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _parse_env_bits(raw: str) -> list[bool]:
    if set(raw) - {"0", "1"}:
        raise MatchGadgetError(f"--env expects a bit string, got {raw!r}")
    return [ch == "1" for ch in raw]


def _cmd_compile(args) -> int:
    formula = parse_formula(args.formula)
    env_bits = _parse_env_bits(args.env) if args.env else []
    env = [compile_true() if b else compile_false() for b in env_bits]
    coding = compile_formula(formula, env)
    _emit(serialize.coding_to_json(coding), args.out)
    if args.dot:
        _write_text(args.dot, serialize.coding_to_dot(coding))
    return EXIT_OK


def _cmd_match(args) -> int:
    graph, _ = serialize.graph_from_json(_read_json(args.graph))
    if args.algo == "blossom":
        best = maximum_matching(graph)
    else:
        result = enumerate_matchings(graph, _budget())
        if result.truncated:
            raise CapExceededError(
                "brute-force matching hit the enumeration cap; raise MATCHGADGET_BUDGET"
            )
        best_size = max(len(m) for m in result.matchings)
        best = next(m for m in result.matchings if len(m) == best_size)
    doc = serialize.matching_to_json(best)
    doc["size"] = len(best)
    doc["perfect"] = best.support == graph.vertices
    _emit(doc, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    graph, marks = serialize.graph_from_json(_read_json(args.graph))
    report = verify_unique_pm(graph, args.cap)
    doc = report.to_json()
    if marks is not None and report.matching is not None:
        coding = serialize.coding_from_json(_read_json(args.graph))
        doc["decoded"] = decode_truth(coding, report.matching)
    _emit(doc, args.out)
    return EXIT_OK if report.count == 1 else EXIT_DISAGREEMENT


def _cmd_analyze(args) -> int:
    graph, _ = serialize.graph_from_json(_read_json(args.graph))
    matching = None
    if args.matching:
        matching = serialize.matching_from_json(_read_json(args.matching))
    cap = _budget()
    report = analysis.analysis_report(graph, matching, cap)
    exit_code = EXIT_OK
    definitional_feasible = (
        len(graph.vertices) <= analysis.DEFINITIONAL_VERTEX_LIMIT
        or cap != DEFAULT_MATCHING_CAP
    )
    if definitional_feasible:
        definitional = analysis.check_condition_a(graph, "definitional", cap)
        if definitional != report["condition_A"]:
            print("condition (A) modes disagree", file=sys.stderr)
            exit_code = EXIT_DISAGREEMENT
    _emit(report, args.out)
    return exit_code


def _parse_tree_nodes(raw: str) -> list[tuple[int, ...]]:
    nodes: list[tuple[int, ...]] = [()]
    raw = raw.strip()
    if raw:
        for token in raw.split(","):
            token = token.strip()
            if token:
                nodes.append(tuple(int(part) for part in token.split(".")))
    return nodes


def _cmd_gadget(args) -> int:
    if args.kind == "doubling-tree":
        dtree = doubling_tree(_parse_tree_nodes(args.nodes))
        doc = serialize.graph_to_json(dtree.graph)
        doc["root"] = dtree.root
        doc["pairs"] = {
            ".".join(str(i) for i in node): list(pair)
            for node, pair in sorted(dtree.pairs.items())
        }
        _emit(doc, args.out)
        if args.dot:
            _write_text(args.dot, serialize.to_dot(dtree.graph, name="doubling"))
        return EXIT_OK
    if args.kind == "sep-path":
        sep = separation_path(args.length)
        doc = serialize.graph_to_json(sep.graph)
        doc["center"] = list(sep.center)
        _emit(doc, args.out)
        return EXIT_OK
    if args.kind == "range":
        graph = range_gadget(args.n, args.in_range)
        doc = serialize.graph_to_json(graph)
        doc["flag_edge"] = list(range_flag_edge(args.n))
        _emit(doc, args.out)
        return EXIT_OK
    raise MatchGadgetError(f"unknown gadget kind {args.kind!r}")


def _cmd_demo_jump(args) -> int:
    oracle_doc = _read_json(args.oracle)
    if not isinstance(oracle_doc, list):
        raise serialize.FormatError(
            "oracle table must be a JSON list of [program, prefix, min_steps] rows"
        )
    oracle = HaltingOracle.from_table(oracle_doc)
    start_bits = _parse_env_bits(args.x0)
    towers = jump_hierarchy(start_bits, args.levels, oracle, args.width, args.bound)
    decoded_levels = [sorted(decode_set(level)) for level in towers]

    # Cross-check every level against direct evaluation of the query.
    direct_bits = list(start_bits)
    direct_levels = [sorted(i for i, b in enumerate(direct_bits) if b)]
    for _ in range(args.levels):
        direct_bits = [
            evaluate_jump_query(direct_bits, program, oracle, args.bound)
            for program in range(args.width)
        ]
        direct_levels.append(sorted(i for i, b in enumerate(direct_bits) if b))
    query_decoded = args.e in decoded_levels[1] if args.levels >= 1 else None
    doc = {
        "levels": decoded_levels,
        "direct": direct_levels,
        "agree": decoded_levels == direct_levels,
        "query": {"e": args.e, "decoded": query_decoded},
    }
    _emit(doc, args.out)
    return EXIT_OK if doc["agree"] else EXIT_DISAGREEMENT


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchgadget",
        description="Matching analysis and formula-to-graph gadget compiler",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compile = sub.add_parser("compile", help="compile a formula to a coding graph")
    p_compile.add_argument("formula")
    p_compile.add_argument("--env", default="", help="atom values as a bit string")
    p_compile.add_argument("--out", default="-")
    p_compile.add_argument("--dot", default=None)
    p_compile.set_defaults(func=_cmd_compile)

    p_match = sub.add_parser("match", help="maximum matching of a graph file")
    p_match.add_argument("graph")
    p_match.add_argument("--algo", choices=("blossom", "brute"), default="blossom")
    p_match.add_argument("--out", default="-")
    p_match.set_defaults(func=_cmd_match)

    p_verify = sub.add_parser("verify", help="count perfect matchings and decode")
    p_verify.add_argument("graph")
    p_verify.add_argument("--cap", type=int, default=10)
    p_verify.add_argument("--out", default="-")
    p_verify.set_defaults(func=_cmd_verify)

    p_analyze = sub.add_parser("analyze", help="augmentability and independence report")
    p_analyze.add_argument("graph")
    p_analyze.add_argument("--matching", default=None)
    p_analyze.add_argument("--out", default="-")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_gadget = sub.add_parser("gadget", help="emit a standalone gadget graph")
    gadget_sub = p_gadget.add_subparsers(dest="kind", required=True)
    p_tree = gadget_sub.add_parser("doubling-tree")
    p_tree.add_argument(
        "--nodes",
        default="",
        help="comma-separated node addresses, dots between levels (root implied)",
    )
    p_tree.add_argument("--out", default="-")
    p_tree.add_argument("--dot", default=None)
    p_tree.set_defaults(func=_cmd_gadget)
    p_sep = gadget_sub.add_parser("sep-path")
    p_sep.add_argument("--length", type=int, required=True)
    p_sep.add_argument("--out", default="-")
    p_sep.set_defaults(func=_cmd_gadget)
    p_range = gadget_sub.add_parser("range")
    p_range.add_argument("--n", type=int, required=True)
    p_range.add_argument("--in-range", action="store_true", dest="in_range")
    p_range.add_argument("--out", default="-")
    p_range.set_defaults(func=_cmd_gadget)

    p_demo = sub.add_parser("demo", help="built-in demonstrations")
    demo_sub = p_demo.add_subparsers(dest="demo_kind", required=True)
    p_jump = demo_sub.add_parser("jump", help="bounded jump hierarchy demo")
    p_jump.add_argument("--oracle", required=True, help="JSON halting table")
    p_jump.add_argument("--e", type=int, default=0, help="program id to report")
    p_jump.add_argument("--width", type=int, default=2)
    p_jump.add_argument("--levels", type=int, default=1)
    p_jump.add_argument("--bound", type=int, default=2)
    p_jump.add_argument("--x0", default="1", help="level-0 bits")
    p_jump.add_argument("--out", default="-")
    p_jump.set_defaults(func=_cmd_demo_jump)

    return parser


def run_command(argv: list[str]) -> int:
    """Parse and run one command, mapping errors to the documented exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (MatchGadgetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command line interface.

Every command prints one canonical JSON report to stdout. Exit status is
0 for a verified property or successful construction, 2 when a check
produced a counterexample or a search came up empty, and 1 for usage or
input errors. Sampled checks require an explicit --seed.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional

from sparsehg import jsonio, kernels
from sparsehg.core import Hypergraph, HypergraphError
from sparsehg.extraction import extract, locate_subcopy
from sparsehg.families import (
    LabeledConfiguration,
    f14,
    factorial_family,
    geometric_tower,
    linear_three_cycle,
    single_edge,
)
from sparsehg.niceness import (
    NOT_NICE,
    sample_nice,
    verify_cycle_bounds,
    verify_nice,
    verify_tower_bounds,
)
from sparsehg.projection import lift, project
from sparsehg.ramsey import (
    check_coloring,
    coloring_to_4graph,
    q_quad,
    verify_implication,
)
from sparsehg.search import count_copies, find_configuration

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_REFUTED = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract reserves 2 for refutations."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _witness_arg(text: str) -> tuple[str, ...]:
    labels = tuple(part for part in text.split(",") if part)
    if not labels:
        raise argparse.ArgumentTypeError("witness must be a comma-separated label list")
    return labels


def _tower_base(name: str) -> LabeledConfiguration:
    if name == "f14":
        return f14()
    if name == "edge":
        return single_edge()
    raise HypergraphError(f"unknown tower base {name!r}")


def _load_config(path: str) -> LabeledConfiguration:
    loaded = jsonio.load_any(jsonio.read_json(path))
    if isinstance(loaded, Hypergraph):
        raise HypergraphError(f"{path}: expected a configuration with roles")
    return loaded


def _counterexample_obj(counterexample) -> Optional[dict]:
    if counterexample is None:
        return None
    return {
        "subset": list(counterexample.subset),
        "condition": counterexample.condition,
        "observed_delta": counterexample.observed_delta,
        "required_bound": counterexample.required_bound,
    }


def _inputs_obj(**paths: Optional[str]) -> dict:
    return {
        name: {"path": path, "sha256": jsonio.file_digest(path)}
        for name, path in paths.items()
        if path is not None
    }


def _config_summary(config: LabeledConfiguration) -> dict:
    return {
        "family": dict(config.family),
        "v": config.graph.vertex_count,
        "e": config.graph.edge_count,
        "delta": config.graph.delta,
    }


def _emit_config(config: LabeledConfiguration, out: Optional[str], report: dict) -> None:
    obj = jsonio.config_to_obj(config)
    if out is None:
        report["configuration"] = obj
    else:
        jsonio.write_json(out, obj)
        report["output"] = out


def _cmd_build(args) -> tuple[dict, int]:
    if args.what == "cycle":
        config = linear_three_cycle()
    elif args.what == "f14":
        config = f14()
    elif args.what == "f-k":
        config = factorial_family(args.k)
    else:
        config = geometric_tower(
            _tower_base(args.base),
            args.ell,
            allow_edge_base=args.base == "edge",
        )
    report = {"command": f"build {args.what}", **_config_summary(config)}
    _emit_config(config, args.output, report)
    return report, EXIT_OK


def _cmd_verify_nice(args) -> tuple[dict, int]:
    config = jsonio.load_any(jsonio.read_json(args.input))
    if args.samples is not None:
        if args.seed is None:
            raise HypergraphError("--samples requires --seed")
        result = sample_nice(
            config,
            args.witness,
            samples=args.samples,
            seed=args.seed,
            workers=args.workers,
        )
    else:
        result = verify_nice(config, args.witness, workers=args.workers)
    report = {
        "command": "verify nice",
        "inputs": _inputs_obj(input=args.input),
        "verdict": result.verdict,
        "checked_subsets": result.checked_subsets,
        "counterexample": _counterexample_obj(result.counterexample),
        "seed": result.seed,
        "backend": kernels.backend_name(
            config.vertex_count
            if isinstance(config, Hypergraph)
            else config.graph.vertex_count
        ),
        "workers": args.workers,
    }
    code = EXIT_REFUTED if result.verdict == NOT_NICE else EXIT_OK
    return report, code


def _cmd_verify_claim63(args) -> tuple[dict, int]:
    config = linear_three_cycle()
    holds = verify_cycle_bounds(config)
    report = {
        "command": "verify claim63",
        "holds": holds,
        "checked_subsets": 1 << config.graph.vertex_count,
    }
    return report, EXIT_OK if holds else EXIT_REFUTED


def _cmd_verify_gl(args) -> tuple[dict, int]:
    config = _load_config(args.input)
    if args.samples is not None:
        if args.seed is None:
            raise HypergraphError("--samples requires --seed")
        result = verify_tower_bounds(
            config,
            exhaustive=False,
            samples=args.samples,
            seed=args.seed,
            workers=args.workers,
        )
    else:
        result = verify_tower_bounds(config, workers=args.workers)
    report = {
        "command": "verify gl-props",
        "inputs": _inputs_obj(input=args.input),
        "verdict": result.verdict,
        "checked_subsets": result.checked_subsets,
        "counterexample": _counterexample_obj(result.counterexample),
        "seed": result.seed,
        "workers": args.workers,
    }
    code = EXIT_REFUTED if result.verdict == NOT_NICE else EXIT_OK
    return report, code


def _cmd_extract(args) -> tuple[dict, int]:
    chain = geometric_tower(
        _tower_base(args.base),
        args.ell,
        allow_edge_base=args.base == "edge",
    )
    result = extract(chain, args.t)
    report = {
        "command": "extract",
        "base": args.base,
        "ell": args.ell,
        "t": args.t,
        "v": result.subgraph.vertex_count,
        "e": result.subgraph.edge_count,
        "delta": result.verified.delta,
        "trace": [dict(step) for step in result.trace],
    }
    if args.output is not None:
        jsonio.write_json(args.output, jsonio.graph_to_obj(result.subgraph))
        report["output"] = args.output
    if args.trace_out is not None:
        jsonio.write_json(args.trace_out, report["trace"])
        report["trace_output"] = args.trace_out
    return report, EXIT_OK


def _cmd_project(args) -> tuple[dict, int]:
    graph = jsonio.graph_from_obj(jsonio.read_json(args.input))
    result = project(graph, args.k, args.e)
    report = {
        "command": "project",
        "inputs": _inputs_obj(input=args.input),
        "case": result.case_tag,
        "anchors": list(result.anchors),
        "kept_links": None if result.projected is None else len(result.projected.pairs),
        "heavy_edges": None
        if result.heavy_config is None
        else result.heavy_config.edge_count,
    }
    if args.output is not None:
        jsonio.write_json(args.output, jsonio.projection_to_obj(result))
        report["output"] = args.output
    else:
        report["projection"] = jsonio.projection_to_obj(result)
    return report, EXIT_OK


def _cmd_lift(args) -> tuple[dict, int]:
    result = jsonio.projection_from_obj(jsonio.read_json(args.proj))
    config3 = jsonio.graph_from_obj(jsonio.read_json(args.config))
    lifted = lift(result, config3)
    report = {
        "command": "lift",
        "inputs": _inputs_obj(proj=args.proj, config=args.config),
        "v": lifted.vertex_count,
        "e": lifted.edge_count,
    }
    if args.output is not None:
        jsonio.write_json(args.output, jsonio.graph_to_obj(lifted))
        report["output"] = args.output
    else:
        report["lifted"] = jsonio.graph_to_obj(lifted)
    return report, EXIT_OK


def _cmd_ramsey(args) -> tuple[dict, int]:
    if args.ramsey_cmd == "qquad":
        return {
            "command": "ramsey qquad",
            "p": args.p,
            "q_quad": q_quad(args.p),
        }, EXIT_OK
    coloring = jsonio.coloring_from_obj(jsonio.read_json(args.input))
    inputs = _inputs_obj(input=args.input)
    if args.ramsey_cmd == "check":
        result = check_coloring(coloring, args.p, args.q)
        report = {
            "command": "ramsey check",
            "inputs": inputs,
            "p": result.p,
            "q": result.q,
            "q_quad": result.q_quad_value,
            "min_colors_on_some_kp": result.min_colors_on_some_kp,
            "valid": result.valid,
            "witness_kp": list(result.witness_kp),
        }
        return report, EXIT_OK if result.valid else EXIT_REFUTED
    if args.ramsey_cmd == "to4":
        shadow, log = coloring_to_4graph(coloring)
        report = {
            "command": "ramsey to4",
            "inputs": inputs,
            "v": shadow.vertex_count,
            "e": shadow.edge_count,
            "collisions": sum(1 for entry in log if not entry["fresh"]),
            "log": [
                {
                    "color": entry["color"],
                    "pair1": list(entry["pair1"]),
                    "pair2": list(entry["pair2"]),
                    "edge": list(entry["edge"]),
                    "fresh": entry["fresh"],
                }
                for entry in log
            ],
        }
        if args.output is not None:
            jsonio.write_json(args.output, jsonio.graph_to_obj(shadow))
            report["output"] = args.output
        else:
            report["graph"] = jsonio.graph_to_obj(shadow)
        return report, EXIT_OK
    holds = verify_implication(coloring, args.p, args.q)
    report = {
        "command": "ramsey implication",
        "inputs": inputs,
        "p": args.p,
        "q": args.q,
        "implication_holds": holds,
    }
    return report, EXIT_OK if holds else EXIT_REFUTED


def _cmd_search(args) -> tuple[dict, int]:
    graph = jsonio.graph_from_obj(jsonio.read_json(args.input))
    if args.search_cmd == "config":
        result = find_configuration(graph, args.v, args.e, workers=args.workers)
        report = {
            "command": "search config",
            "inputs": _inputs_obj(input=args.input),
            "v": args.v,
            "e": args.e,
            "found": result.found,
            "witness": None
            if result.witness is None
            else [list(edge) for edge in result.witness],
            "nodes_explored": result.nodes_explored,
            "workers": args.workers,
        }
        return report, EXIT_OK if result.found else EXIT_REFUTED
    pattern = jsonio.graph_from_obj(jsonio.read_json(args.pattern))
    result = count_copies(graph, pattern, induced=args.induced)
    report = {
        "command": "search copies",
        "inputs": _inputs_obj(input=args.input, pattern=args.pattern),
        "embeddings": result.embeddings,
        "copies": result.copies,
        "induced": args.induced,
    }
    return report, EXIT_OK


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--workers", type=int, default=1, help="parallel scan width")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled checks")
    common.add_argument("-o", "--output", default=None, help="write the result here")

    parser = _Parser(prog="sparsehg", description=__doc__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_build = sub.add_parser("build", help="construct a named configuration")
    sb = p_build.add_subparsers(dest="what", required=True)
    sb.add_parser("cycle", parents=[common])
    sb.add_parser("f14", parents=[common])
    p_fk = sb.add_parser("f-k", parents=[common])
    p_fk.add_argument("--k", type=int, required=True, help="witness size, 4..8")
    p_gl = sb.add_parser("g-ell", parents=[common])
    p_gl.add_argument("--base", default="f14", help="tower base: f14 or edge")
    p_gl.add_argument("--ell", type=int, required=True, help="tower height, >= 0")

    p_verify = sub.add_parser("verify", help="check a structural property")
    sv = p_verify.add_subparsers(dest="verify_cmd", required=True)
    p_nice = sv.add_parser("nice", parents=[common])
    p_nice.add_argument("--input", required=True, help="graph or configuration JSON")
    p_nice.add_argument(
        "--witness", type=_witness_arg, default=None,
        help="comma-separated witness labels (default: role A)",
    )
    group = p_nice.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true", help="scan all subsets (default)")
    group.add_argument("--samples", type=int, default=None, help="sampled scan size")
    sv.add_parser("claim63", parents=[common])
    p_glp = sv.add_parser("gl-props", parents=[common])
    p_glp.add_argument("--input", required=True, help="tower configuration JSON")
    group = p_glp.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true", help="scan all supersets (default)")
    group.add_argument("--samples", type=int, default=None, help="sampled scan size")

    p_extract = sub.add_parser("extract", parents=[common], help="subgraph with 10t edges")
    p_extract.add_argument("--base", default="f14", help="tower base: f14 or edge")
    p_extract.add_argument("--ell", type=int, required=True, help="tower height")
    p_extract.add_argument("--t", type=int, required=True, help="edge multiple")
    p_extract.add_argument("--trace", dest="trace_out", default=None, help="write the descent trace here")

    p_project = sub.add_parser("project", parents=[common], help="anchor and reduce to 3-uniform")
    p_project.add_argument("--input", required=True, help="r-uniform graph JSON")
    p_project.add_argument("--k", type=int, required=True)
    p_project.add_argument("--e", type=int, required=True)

    p_lift = sub.add_parser("lift", parents=[common], help="pull a 3-uniform hit back up")
    p_lift.add_argument("--proj", required=True, help="projection JSON from `project`")
    p_lift.add_argument("--config", required=True, help="3-uniform configuration JSON")

    p_ramsey = sub.add_parser("ramsey", help="edge colorings and the 4-graph shadow")
    sr = p_ramsey.add_subparsers(dest="ramsey_cmd", required=True)
    p_qq = sr.add_parser("qquad", parents=[common])
    p_qq.add_argument("--p", type=int, required=True)
    p_check = sr.add_parser("check", parents=[common])
    p_check.add_argument("--input", required=True, help="coloring JSON")
    p_check.add_argument("--p", type=int, required=True)
    p_check.add_argument("--q", type=int, required=True)
    p_to4 = sr.add_parser("to4", parents=[common])
    p_to4.add_argument("--input", required=True, help="coloring JSON")
    p_impl = sr.add_parser("implication", parents=[common])
    p_impl.add_argument("--input", required=True, help="coloring JSON")
    p_impl.add_argument("--p", type=int, required=True)
    p_impl.add_argument("--q", type=int, required=True)

    p_search = sub.add_parser("search", help="brute-force oracles")
    ss = p_search.add_subparsers(dest="search_cmd", required=True)
    p_cfg = ss.add_parser("config", parents=[common])
    p_cfg.add_argument("--input", required=True, help="graph JSON")
    p_cfg.add_argument("--v", type=int, required=True)
    p_cfg.add_argument("--e", type=int, required=True)
    p_cp = ss.add_parser("copies", parents=[common])
    p_cp.add_argument("--input", required=True, help="host graph JSON")
    p_cp.add_argument("--pattern", required=True, help="pattern graph JSON")
    p_cp.add_argument("--induced", action="store_true")

    return parser


_DISPATCH = {
    "build": _cmd_build,
    "extract": _cmd_extract,
    "project": _cmd_project,
    "lift": _cmd_lift,
    "ramsey": _cmd_ramsey,
    "search": _cmd_search,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse signals both --help and usage errors this way
        return int(exc.code or 0)
    started = time.perf_counter()
    try:
        if args.cmd == "verify":
            handler = {
                "nice": _cmd_verify_nice,
                "claim63": _cmd_verify_claim63,
                "gl-props": _cmd_verify_gl,
            }[args.verify_cmd]
        else:
            handler = _DISPATCH[args.cmd]
        report, code = handler(args)
    except HypergraphError as exc:
        print(f"sparsehg: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"sparsehg: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report["timings"] = {"wall_s": round(time.perf_counter() - started, 6)}
    report["report_sha256"] = jsonio.report_digest(
        {k: v for k, v in report.items() if k != "report_sha256"}
    )
    sys.stdout.write(jsonio.canonical_json(report))
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Machine-readable records go to stdout (one JSON object per line, or a table
for ``bench``); human summaries go to stderr.

Exit codes: 0 success, 1 domain violation, 2 parse error, 3 no path,
4 parameter or precision error, 5 resource guard.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path as FsPath

from . import approx, bounds, exact_dp, formats, generators, oracle, reductions, rounding
from .errors import InputError, PrecisionError, ResourceLimitError
from .model import IMPOSSIBLE, path_reliability, validate_network

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_NO_PATH = 3
EXIT_PARAMETER = 4
EXIT_RESOURCE = 5

METHODS = ("brute", "lower-bound", "dp", "approx-basic", "approx-pruned")


class CommandFailed(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _num(x):
    if x is None or x == IMPOSSIBLE:
        return None
    return float(x)


def emit(record: dict) -> None:
    sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")


def say(message: str) -> None:
    print(message, file=sys.stderr)


def _load_text(path: str) -> str:
    try:
        return FsPath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CommandFailed(EXIT_PARSE, f"cannot read {path}: {exc}") from None


def _load_valid_network(path: str):
    try:
        net = formats.load_network(path)
    except formats.DocumentError as exc:
        raise CommandFailed(EXIT_PARSE, str(exc)) from None
    report = validate_network(net)
    if report:
        for v in report:
            say(f"invalid: {v.kind}: {v.detail}")
        raise CommandFailed(EXIT_INVALID, f"{path} is not a valid network")
    return net


# -- validate ---------------------------------------------------------------


def cmd_validate(args) -> int:
    try:
        net = formats.load_network(args.network)
    except formats.DocumentError as exc:
        raise CommandFailed(EXIT_PARSE, str(exc)) from None
    report = validate_network(net)
    emit({"valid": not report, "violations": [{"kind": v.kind, "detail": v.detail} for v in report]})
    say(f"{args.network}: " + ("valid" if not report else f"{len(report)} violation(s)"))
    return EXIT_OK if not report else EXIT_INVALID


# -- solve ------------------------------------------------------------------


def solve_record(net, method: str, epsilon=None, unit=None, prune=True, max_paths=None, max_entries=None) -> dict:
    """Run one solver and return its machine-readable record."""
    max_paths = oracle.DEFAULT_MAX_PATHS if max_paths is None else max_paths
    max_entries = exact_dp.DEFAULT_MAX_ENTRIES if max_entries is None else max_entries
    if method == "brute":
        res = oracle.brute_force_best(net, max_paths)
        return {"method": method, "path": _ids(res.path), "reliability": _num(res.reliability)}
    if method == "lower-bound":
        lb = bounds.lower_bound_dp(net)
        rel = path_reliability(net, lb.path) if lb.path is not None else 0.0
        return {"method": method, "path": _ids(lb.path), "reliability": _num(rel), "g": _num(lb.g), "f": _num(lb.f)}
    if method == "dp":
        if unit is None:
            raise CommandFailed(EXIT_PARAMETER, "method dp needs --unit")
        icnet = exact_dp.quantize_exact(net, unit)
        res = exact_dp.dp_solve(icnet, prune=prune, max_entries=max_entries)
        return {"method": method, "path": _ids(res.path), "reliability": _num(res.reliability), "unit": unit}
    if method in ("approx-basic", "approx-pruned"):
        if epsilon is None:
            raise CommandFailed(EXIT_PARAMETER, f"method {method} needs --epsilon")
        if method == "approx-basic":
            res = approx.approx_solve_basic(net, epsilon, max_entries=max_entries)
        else:
            res = approx.approx_solve_pruned(net, epsilon, max_entries=max_entries)
        return {
            "method": method,
            "path": _ids(res.path),
            "reliability": _num(res.true_reliability),
            "coarsened_value": _num(res.coarsened_value),
            "variant": res.variant,
            "epsilon": epsilon,
            "unit": res.unit,
            "prunings_evaluated": res.prunings_evaluated,
            "skipped_thresholds": [float(a) for a in res.skipped_thresholds],
        }
    raise CommandFailed(EXIT_PARAMETER, f"unknown method {method!r}")


def _ids(path):
    return None if path is None else list(path.edge_ids)


def cmd_solve(args) -> int:
    net = _load_valid_network(args.network)
    try:
        record = solve_record(
            net,
            args.method,
            epsilon=args.epsilon,
            unit=args.unit,
            prune=not args.no_prune,
            max_paths=args.max_paths,
            max_entries=args.max_entries,
        )
    except PrecisionError as exc:
        raise CommandFailed(EXIT_PARAMETER, str(exc)) from None
    except ResourceLimitError as exc:
        raise CommandFailed(EXIT_RESOURCE, str(exc)) from None
    except InputError as exc:
        raise CommandFailed(EXIT_PARAMETER, str(exc)) from None
    emit(record)
    if record["path"] is None:
        say(f"{args.method}: no source-sink path")
        return EXIT_NO_PATH
    say(f"{args.method}: {' -> '.join(record['path'])} reliability {record['reliability']:.6g}")
    return EXIT_OK


# -- generate ---------------------------------------------------------------


def _write_or_print(text: str, target: str | None) -> None:
    if target is None:
        sys.stdout.write(text)
    else:
        FsPath(target).write_text(text, encoding="utf-8")


def cmd_generate(args) -> int:
    try:
        if args.kind == "random":
            net = generators.layered_network(
                args.vertices,
                args.width,
                args.states,
                seed=args.seed,
                density=args.density,
                reliability_range=(args.rel_min, args.rel_max),
            )
            _write_or_print(formats.dumps_network(net), args.output)
            say(f"random network: {len(net.vertices)} vertices, {len(net.edges)} edges, d={net.state_count}")
            return EXIT_OK
        if args.input is None:
            raise CommandFailed(EXIT_PARAMETER, f"generate {args.kind} needs --input")
        text = _load_text(args.input)
        if args.kind == "from-cnf":
            try:
                cnf = reductions.parse_dimacs(text)
            except InputError as exc:
                raise CommandFailed(EXIT_PARSE, str(exc)) from None
            templates = reductions.templates_from_3sat(cnf)
        else:
            try:
                templates = formats.loads_templates(text)
            except formats.DocumentError as exc:
                raise CommandFailed(EXIT_PARSE, str(exc)) from None
        art = reductions.network_from_templates(templates)
    except InputError as exc:
        raise CommandFailed(EXIT_PARAMETER, str(exc)) from None
    _write_or_print(formats.dumps_network(art.network), args.output)
    sidecar = args.sidecar or (args.output + ".map.json" if args.output else None)
    if sidecar is not None:
        FsPath(sidecar).write_text(json.dumps(formats.artifact_sidecar(art, templates), indent=2) + "\n", encoding="utf-8")
    else:
        say("no --sidecar or --output given; bit-position map not written")
    say(f"{args.kind}: {len(art.network.vertices)} vertices, {len(art.network.edges)} edges, d={art.template_count}")
    return EXIT_OK


# -- round ------------------------------------------------------------------


def cmd_round(args) -> int:
    net = _load_valid_network(args.network)
    try:
        _, flow = formats.loads_flow(_load_text(args.flow))
    except formats.DocumentError as exc:
        raise CommandFailed(EXIT_PARSE, str(exc)) from None
    report = rounding.validate_flow(net, flow)
    emit({"record": "validation", "violations": [{"kind": v.kind, "detail": v.detail} for v in report]})
    if report:
        for v in report:
            say(f"infeasible: {v.detail}")
        return EXIT_INVALID
    cert = rounding.rounding_certificate(net, flow)
    for path, weight in cert.distribution.entries:
        emit({"record": "path", "path": _ids(path), "weight": weight, "reliability": _num(path_reliability(net, path))})
    verdict = "PASS" if cert.jensen_holds else "FAIL"
    emit(
        {
            "record": "objectives",
            "relaxed": cert.relaxed,
            "expected_path_objective": cert.expected_path_objective,
            "jensen": verdict,
        }
    )
    for i, path in enumerate(rounding.sample_many(cert.distribution, args.seed, args.samples)):
        emit({"record": "sample", "index": i, "path": _ids(path), "reliability": _num(path_reliability(net, path))})
    say(
        f"{len(cert.distribution.entries)} path(s); expected {cert.expected_path_objective:.6g} "
        f">= relaxed {cert.relaxed:.6g}: {verdict}"
    )
    return EXIT_OK if cert.jensen_holds else EXIT_INVALID


# -- bench ------------------------------------------------------------------

BENCH_COLUMNS = ("size", "repetition", "method", "seconds", "reliability", "ratio")


def bench_rows(sizes, state_count, methods, repetitions, seed, epsilon=0.1, unit=None, density=0.4):
    """Yield one dict per (size, repetition, method); ``seconds`` is the only nondeterministic field."""
    levels = None if unit is None else [math.exp(-j * unit) for j in range(4)]
    for n in sizes:
        for rep in range(repetitions):
            net = generators.random_network(
                n, state_count, seed=seed * 1_000_003 + n * 1_009 + rep, density=density, levels=levels
            )
            try:
                brute = oracle.brute_force_best(net).reliability
            except ResourceLimitError:
                brute = None
            for method in methods:
                start = time.perf_counter()
                try:
                    rec = solve_record(net, method, epsilon=epsilon, unit=unit)
                    rel = rec["reliability"]
                except (ResourceLimitError, PrecisionError, CommandFailed) as exc:
                    kind = {ResourceLimitError: "resource-limit", PrecisionError: "precision-error"}
                    rel = kind.get(type(exc), "parameter-error")
                seconds = time.perf_counter() - start
                if isinstance(rel, float) and brute:
                    ratio = rel / float(brute)
                else:
                    ratio = None
                yield {"size": n, "repetition": rep, "method": method, "seconds": seconds, "reliability": rel, "ratio": ratio}


def _cell(value) -> str:
    if value is None:
        return "NA"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def cmd_bench(args) -> int:
    for m in args.methods:
        if m not in METHODS:
            raise CommandFailed(EXIT_PARAMETER, f"unknown method {m!r}")
    sys.stdout.write("\t".join(BENCH_COLUMNS) + "\n")
    for row in bench_rows(args.sizes, args.states, args.methods, args.repetitions, args.seed, args.epsilon, args.unit):
        row["seconds"] = f"{row['seconds']:.6f}"
        sys.stdout.write("\t".join(_cell(row[c]) for c in BENCH_COLUMNS) + "\n")
    return EXIT_OK


# -- export-dot -------------------------------------------------------------


def cmd_export_dot(args) -> int:
    try:
        net = formats.load_network(args.network)
    except formats.DocumentError as exc:
        raise CommandFailed(EXIT_PARSE, str(exc)) from None
    sys.stdout.write(formats.to_dot(net))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reliapath", description="Most reliable paths under a hidden failure state.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a network document")
    p.add_argument("network")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="find a most reliable path")
    p.add_argument("network")
    p.add_argument("--method", choices=METHODS, default="brute")
    p.add_argument("--epsilon", type=float)
    p.add_argument("--unit", type=float, help="log-domain grid unit for --method dp")
    p.add_argument("--no-prune", action="store_true", help="disable dominance pruning in the DP")
    p.add_argument("--max-paths", type=int)
    p.add_argument("--max-entries", type=int)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="emit a network document")
    p.add_argument("kind", choices=("random", "from-cnf", "from-templates"))
    p.add_argument("--input", help="CNF or template list file for the reduction kinds")
    p.add_argument("--output", help="write the network here instead of stdout")
    p.add_argument("--sidecar", help="where to write the bit-position map of a reduction")
    p.add_argument("--vertices", type=int, default=8)
    p.add_argument("--width", type=int, default=2)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--states", type=int, default=2)
    p.add_argument("--rel-min", type=float, default=0.05)
    p.add_argument("--rel-max", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("round", help="decompose a fractional flow and sample paths from it")
    p.add_argument("network")
    p.add_argument("flow")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=5)
    p.set_defaults(func=cmd_round)

    p = sub.add_parser("bench", help="time solvers on seeded random instances")
    p.add_argument("--sizes", type=int, nargs="+", default=[6, 8, 10])
    p.add_argument("--states", type=int, default=2)
    p.add_argument("--methods", nargs="+", default=["brute", "approx-basic"])
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--unit", type=float, help="draw reliabilities from exp(-j*unit), j=0..3, enabling dp")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("export-dot", help="render a network as Graphviz DOT")
    p.add_argument("network")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CommandFailed as exc:
        say(f"error: {exc}")
        return exc.code
    except ResourceLimitError as exc:
        say(f"error: {exc}")
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())

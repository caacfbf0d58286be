"""Command-line front end.

Subcommands: compute, reduce, verify, bench, calibrate.  All reports are
JSON with sorted keys (bench emits CSV), rationals travel as "p/q" strings,
and identical invocations produce byte-identical output.  Exit status is 0
only when every check passed and nothing was truncated; input and usage
problems exit with status 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import tempfile
from fractions import Fraction

from .colorable import nu2_bipartite, upper_bound_L
from .graph import (
    Graph,
    GraphFormatError,
    bipartition,
    build_graph,
    degree_profile,
    emit_graph_file,
    is_connected,
    parse_graph_file,
)
from .matching import max_matching, nu
from .reduction import (
    DimacsError,
    additive_threshold,
    build_artifact,
    calibration,
    parse_dimacs,
    verify_artifact,
)
from .spectrum import (
    TruncatedSpectrumError,
    approx_trial,
    decide_problem1,
    parse_tolerance,
    spectrum,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

EXHAUSTIVE_VAR_LIMIT = 6


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _write_atomic(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".resmatch-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _emit_json(obj: dict, path: str | None):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        _write_atomic(path, text)


def _emit_text(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        _write_atomic(path, text)


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def cmd_compute(args) -> int:
    g = parse_graph_file(_read(args.input))
    report = spectrum(g, cap=args.cap)
    out = report.to_json_dict()
    prof = degree_profile(g)
    out["degree_profile"] = {
        "min": prof["min_degree"],
        "max": prof["max_degree"],
        "histogram": sorted(prof["histogram"].items()),
    }
    b = bipartition(g)
    out["bipartite"] = b is not None
    out["connected"] = is_connected(g)
    if b is not None:
        out["nu2"] = nu2_bipartite(g, b).size
        out["upper_bound_L"] = upper_bound_L(g, b)
    failed = report.truncated
    if args.k is not None:
        f = parse_tolerance(args.f)
        result = decide_problem1(g, args.k, f, cap=args.cap)
        out["problem1"] = {
            "k": args.k,
            "f": args.f,
            "answer": result.answer,
            "witness": None
            if result.witness is None
            else [list(e) for e in result.witness.sorted_edges()],
            "enumerated": result.enumerated,
            "truncated": result.truncated,
        }
        failed = failed or result.truncated
    _emit_json(out, args.output)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_reduce(args) -> int:
    cnf = parse_dimacs(_read(args.input))
    art = build_artifact(cnf, args.variant)
    cert = verify_artifact(art, exhaustive=False)
    _emit_text(emit_graph_file(art.graph), args.output)
    _emit_json(cert.to_json_dict(), args.certificate)
    return EXIT_OK if cert.ok else EXIT_CHECK_FAILED


def cmd_verify(args) -> int:
    loaded = parse_graph_file(_read(args.input))
    cnf = parse_dimacs(_read(args.cnf))
    if args.exhaustive and cnf.num_vars > EXHAUSTIVE_VAR_LIMIT:
        raise ValueError(
            f"exhaustive verification supports at most {EXHAUSTIVE_VAR_LIMIT}"
            f" variables, instance has {cnf.num_vars}"
        )
    art = build_artifact(cnf, args.variant)
    cert = verify_artifact(art, exhaustive=args.exhaustive, limit=EXHAUSTIVE_VAR_LIMIT)
    out = cert.to_json_dict()
    mismatches = list(out["discrepancies"])
    if loaded.vertex_count != art.graph.vertex_count:
        mismatches.append(
            f"input graph has {loaded.vertex_count} vertices, artifact has"
            f" {art.graph.vertex_count}"
        )
    if loaded.edge_count != art.graph.edge_count:
        mismatches.append(
            f"input graph has {loaded.edge_count} edges, artifact has"
            f" {art.graph.edge_count}"
        )
    if emit_graph_file(loaded) != emit_graph_file(art.graph):
        mismatches.append("input graph is not the compiled artifact")
    out["graph_matches_artifact"] = emit_graph_file(loaded) == emit_graph_file(art.graph)
    out["discrepancies"] = mismatches
    out["ok"] = not mismatches
    _emit_json(out, args.output)
    return EXIT_OK if not mismatches else EXIT_CHECK_FAILED


def _path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def _cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle family needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def _parse_sizes(text: str) -> list[int]:
    # N, A..B, or A..B:STEP
    step = 1
    if ":" in text:
        text, step_text = text.split(":", 1)
        step = int(step_text)
        if step < 1:
            raise ValueError(f"step must be positive, got {step}")
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad size range {text!r}")
    return list(range(lo, hi + 1, step))


def _parse_params(text: str) -> dict[str, str]:
    params: dict[str, str] = {}
    for part in text.split(","):
        key, eq, value = part.partition("=")
        if not eq:
            raise ValueError(f"bad family parameter {part!r}, expected key=value")
        params[key.strip()] = value.strip()
    return params


def _random_graph(n: int, p: float, rng: random.Random, bipartite: bool) -> Graph:
    edges = []
    if bipartite:
        half = (n + 1) // 2
        candidates = [(u, v) for u in range(1, half + 1) for v in range(half + 1, n + 1)]
    else:
        candidates = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for u, v in candidates:
        if rng.random() < p:
            edges.append((u, v))
    return build_graph(n, edges)


def _family_graphs(spec: str, seed: int):
    """Yield (label, graph) for a family spec such as path:5, cycle:4..12:2,
    or random:n=10,count=100,p=3/10 (random-bipartite takes the same keys)."""
    name, sep, rest = spec.partition(":")
    if not sep:
        raise ValueError(f"family spec {spec!r} needs parameters after ':'")
    if name in ("path", "cycle"):
        build = _path_graph if name == "path" else _cycle_graph
        for n in _parse_sizes(rest):
            yield f"{name}:{n}", build(n)
    elif name in ("random", "random-bipartite"):
        params = _parse_params(rest)
        unknown = set(params) - {"n", "count", "p"}
        if unknown:
            raise ValueError(f"unknown family parameter(s): {sorted(unknown)}")
        n = int(params.get("n", "8"))
        count = int(params.get("count", "10"))
        p = float(Fraction(params.get("p", "1/3")))
        if n < 1 or count < 1:
            raise ValueError("family parameters n and count must be positive")
        for idx in range(count):
            rng = random.Random(f"{seed}:{name}:{n}:{idx}")
            yield f"{name}:{n}#{idx}", _random_graph(n, p, rng, name == "random-bipartite")
    else:
        raise ValueError(f"unknown family {name!r}")


BENCH_COLUMNS = (
    "graph",
    "vertices",
    "edges",
    "nu",
    "ell",
    "L",
    "truncated",
    "seed",
    "residual",
    "ratio_ell",
    "ratio_L",
    "ok",
)


def cmd_bench(args) -> int:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    violations = 0
    truncations = 0
    observed_ell_ratios: set[Fraction] = set()
    seeds = list(range(args.seed, args.seed + args.trials))
    for label, g in _family_graphs(args.family, args.seed):
        nu_g = nu(g)
        try:
            trial = approx_trial(g, seeds, cap=args.cap)
        except TruncatedSpectrumError:
            truncations += 1
            writer.writerow([label, g.vertex_count, g.edge_count,
                             nu_g, "", "", True, "", "", "", "", False])
            continue
        bounds_ok = trial.ell <= trial.big_l <= 2 * trial.ell
        for row in trial.rows:
            row_ok = bounds_ok and trial.ell <= row.residual <= trial.big_l
            if row.ratio_to_ell is not None:
                observed_ell_ratios.add(row.ratio_to_ell)
                row_ok = row_ok and 1 <= row.ratio_to_ell <= 2
                row_ok = row_ok and Fraction(1, 2) <= row.ratio_to_big_l <= 1
            if not row_ok:
                violations += 1
            writer.writerow(
                [
                    label,
                    g.vertex_count,
                    g.edge_count,
                    nu_g,
                    trial.ell,
                    trial.big_l,
                    False,
                    row.seed,
                    row.residual,
                    "" if row.ratio_to_ell is None else _rat(row.ratio_to_ell),
                    "" if row.ratio_to_big_l is None else _rat(row.ratio_to_big_l),
                    row_ok,
                ]
            )
        violations += len(trial.violations)
    _emit_text(buf.getvalue(), args.output)
    ratio_note = ",".join(_rat(r) for r in sorted(observed_ell_ratios)[:12])
    print(
        f"bench: {violations} violation(s), {truncations} truncation(s),"
        f" ratios to ell observed: [{ratio_note}]",
        file=sys.stderr,
    )
    return EXIT_OK if violations == 0 and truncations == 0 else EXIT_CHECK_FAILED


def cmd_calibrate(args) -> int:
    if args.epsilon is None:
        raise ValueError("calibrate requires --epsilon")
    eps = Fraction(args.epsilon)
    out: dict = {"epsilon": _rat(eps)}
    if args.c is None:
        out["variant"] = args.variant
        out["delta"] = _rat(calibration(args.variant, eps))
    else:
        c = Fraction(args.c)
        out["c"] = _rat(c)
        out["bound"] = _rat(Fraction(1, 256) - eps / 32)
        out["admissible"] = additive_threshold(c, eps)
    _emit_json(out, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resmatch",
        description="Residual matching spectra and SAT hardness artifacts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="spectrum report for a graph file")
    p_compute.add_argument("input")
    p_compute.add_argument("--output")
    p_compute.add_argument("--cap", type=int, default=10**6)
    p_compute.add_argument("--k", type=int, default=None)
    p_compute.add_argument("--f", default="identity",
                           help="tolerance: identity, const:C, linear:p/q, log, sqrt")
    p_compute.set_defaults(func=cmd_compute)

    p_reduce = sub.add_parser("reduce", help="compile a CNF into an artifact graph")
    p_reduce.add_argument("input")
    p_reduce.add_argument("--variant", choices=("L", "ell"), required=True)
    p_reduce.add_argument("--output", required=True, help="artifact graph file")
    p_reduce.add_argument("--certificate", help="certificate JSON (default stdout)")
    p_reduce.set_defaults(func=cmd_reduce)

    p_verify = sub.add_parser("verify", help="check a graph file against its CNF")
    p_verify.add_argument("input", help="artifact graph file")
    p_verify.add_argument("cnf")
    p_verify.add_argument("--variant", choices=("L", "ell"), required=True)
    p_verify.add_argument("--exhaustive", action="store_true")
    p_verify.add_argument("--output")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="approximation-ratio sweep over a family")
    p_bench.add_argument("family",
                         help="path:N, cycle:A..B[:STEP], random:n=,count=,p=,"
                              " random-bipartite:n=,count=,p=")
    p_bench.add_argument("--trials", type=int, default=5)
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.add_argument("--cap", type=int, default=10**5)
    p_bench.add_argument("--output")
    p_bench.set_defaults(func=cmd_bench)

    p_cal = sub.add_parser("calibrate", help="exact gap and threshold arithmetic")
    p_cal.add_argument("--variant", choices=("L", "ell"), default="L")
    p_cal.add_argument("--epsilon", help="rational p/q")
    p_cal.add_argument("--c", help="additive coefficient p/q")
    p_cal.add_argument("--output")
    p_cal.set_defaults(func=cmd_calibrate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, DimacsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

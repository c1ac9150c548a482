"""Command-line front end.

Every command prints (or writes to ``--out``) a JSON run report. Exit codes:
0 success, 1 inconclusive (search budget exhausted), 2 unreadable input,
3 input outside the hypotheses, 4 a claim or lemma failed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
from pathlib import Path

from . import generators
from .census import run_census
from .errors import GraphParseError, HypothesisViolation, InternalAssertionFailed, SearchBudgetExceeded
from .graph import Graph, connectivity_class, girth, parse_graph, serialize_graph, vertex_connectivity
from .minors import DEFAULT_BUDGET, MinorModel, NotFound, Timeout, find_minor, verify_model
from .pipeline import k6_girth5, k6_girth6
from .planarity import is_planar
from .truncation import is_nearly_k_long

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_FALSIFIED = 0, 1, 2, 3, 4


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()


def _read_graph(path: str, fmt: str) -> tuple[Graph, str]:
    data = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(data, fmt), hashlib.sha256(data.encode()).hexdigest()


def _finite(x):
    return None if x == math.inf else int(x)


class Report(dict):
    """Run report; ``timing`` stays out of the digest so reruns compare equal."""

    def finish(self, started: float) -> dict:
        body = {k: v for k, v in self.items() if k != "timing"}
        self["digest"] = _digest(body)
        self["timing"] = {"wall_seconds": round(time.perf_counter() - started, 3)}
        return self


def _emit(report: dict, out: str | None, certificate: dict | None = None) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
        if certificate is not None:
            Path(out).with_suffix(".cert.json").write_text(json.dumps(certificate, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------- commands


def cmd_analyze(args) -> tuple[Report, int, dict | None]:
    g, digest = _read_graph(args.input, args.format)
    kappa = vertex_connectivity(g)
    rep = Report(command="analyze", input={"digest": digest, "n": g.n, "m": g.m})
    rep["properties"] = {
        "girth": _finite(girth(g)),
        "min_degree": g.min_degree if g.n else 0,
        "kappa": _finite(kappa),
        "connectivity_class_4": connectivity_class(g, 4).value if g.n else "neither",
        "planar": is_planar(g),
        "nearly_5_long": is_nearly_k_long(g, 5),
        "nearly_6_long": is_nearly_k_long(g, 6),
    }
    return rep, EXIT_OK, None


def cmd_pipeline(args) -> tuple[Report, int, dict | None]:
    g, digest = _read_graph(args.input, args.format)
    rep = Report(command=f"pipeline:{args.variant}", input={"digest": digest, "n": g.n, "m": g.m})
    run = k6_girth6 if args.variant == "girth6" else k6_girth5
    try:
        res = run(g, budget=args.budget)
    except HypothesisViolation as exc:
        rep["hypotheses"] = {"holds": False, "clause": exc.clause, "message": str(exc)}
        return rep, EXIT_HYPOTHESIS, None
    except InternalAssertionFailed as exc:
        rep["hypotheses"] = {"holds": True}
        rep["falsification"] = {"claim": exc.claim, "message": str(exc), "dump": exc.dump}
        return rep, EXIT_FALSIFIED, None
    except SearchBudgetExceeded as exc:
        rep["hypotheses"] = {"holds": True}
        rep["search_nodes"] = exc.nodes
        return rep, EXIT_INCONCLUSIVE, None
    body = res.as_dict()
    cert = body.pop("certificate")
    rep["hypotheses"] = {"holds": True}
    rep.update(body)
    rep["certificate"] = cert
    rep["search_nodes"] = res.model.nodes
    return rep, EXIT_OK, cert


def cmd_find_minor(args) -> tuple[Report, int, dict | None]:
    g, digest = _read_graph(args.input, args.format)
    rep = Report(command=f"find-minor:{args.target}", input={"digest": digest, "n": g.n, "m": g.m})
    r = find_minor(g, args.target, args.budget)
    rep["search_nodes"] = r.nodes
    if isinstance(r, Timeout):
        rep["result"] = "timeout"
        return rep, EXIT_INCONCLUSIVE, None
    if isinstance(r, NotFound):
        rep["result"] = "not-found"
        rep["reason"] = r.reason
        return rep, EXIT_OK, None
    assert isinstance(r, MinorModel)
    cert = r.as_dict(g)
    rep["result"] = "found"
    rep["certificate"] = cert
    return rep, (EXIT_OK if verify_model(g, r) else EXIT_FALSIFIED), cert


def cmd_census(args) -> tuple[Report, int, dict | None]:
    rep = Report(command=f"census:{args.lemma}")
    try:
        res = run_census(args.lemma, args.n_max)
    except ValueError as exc:
        rep["error"] = str(exc)
        return rep, EXIT_PARSE, None
    rep["census"] = res.as_dict()
    return rep, (EXIT_OK if res.ok else EXIT_FALSIFIED), None


def _generate(kind: str, params: list[str], seed: int) -> Graph:
    if kind == "pg":
        (q,) = params or ["5"]
        return generators.pg_incidence(int(q))
    if kind == "named":
        if len(params) != 1:
            raise ValueError("gen named needs one graph name")
        return generators.named(params[0])
    if kind == "random":
        opts = dict(p.split("=", 1) for p in params if "=" in p)
        flavour = next((p for p in params if "=" not in p), "girth5")
        girth_min = {"girth5": 5, "girth6": 6}.get(flavour)
        if girth_min is None:
            raise ValueError(f"unknown random flavour {flavour!r}")
        return generators.random_high_girth(int(opts.get("n", 30)), girth_min, seed,
                                            min_degree=int(opts.get("mindeg", 3)))
    raise ValueError(f"unknown generator {kind!r}")


def cmd_gen(args) -> int:
    try:
        g = _generate(args.kind, args.params, args.seed)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    text = serialize_graph(g, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="k6minor", description="K6 minor certificates for dense high-girth graphs")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("input", help="graph file, or - for stdin")
        sp.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
        sp.add_argument("--out", help="write the report (or graph) here instead of stdout")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")

    common(sub.add_parser("analyze", help="basic invariants of a graph"))
    sp = sub.add_parser("pipeline", help="run a K6 pipeline and emit a certificate")
    sp.add_argument("--variant", choices=["girth6", "girth5"], required=True)
    common(sp)
    sp = sub.add_parser("find-minor", help="search for a minor model")
    sp.add_argument("--target", choices=["k5", "k6", "v8"], default="k5")
    common(sp)
    sp = sub.add_parser("census", help="exhaustive small-graph check of a lemma")
    sp.add_argument("--lemma", required=True)
    sp.add_argument("--n-max", type=int, required=True)
    common(sp, with_input=False)
    sp = sub.add_parser("gen", help="generate a graph")
    sp.add_argument("kind", choices=["pg", "named", "random"])
    sp.add_argument("params", nargs="*", help="pg: q; named: name; random: girth5|girth6 n=<n> [mindeg=<d>]")
    sp.add_argument("--seed", type=int, default=0)
    common(sp, with_input=False)
    return p


COMMANDS = {"analyze": cmd_analyze, "pipeline": cmd_pipeline, "find-minor": cmd_find_minor, "census": cmd_census}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "gen":
        return cmd_gen(args)
    started = time.perf_counter()
    try:
        rep, code, cert = COMMANDS[args.command](args)
    except (GraphParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    rep["exit_code"] = code
    _emit(rep.finish(started), args.out, cert)
    return code


if __name__ == "__main__":
    sys.exit(main())

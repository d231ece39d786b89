"""Command-line interface.

Subcommands: generate, reduce, certify, color, verify, bounds, pipeline.
Exit codes: 0 success, 1 usage error, 2 instance failure, 3 verification
failure. ``FRUGAL_CONFIG`` names the pipeline config when ``--config`` is
not given.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import bounds as bnd
from .generators import GnpSpec, grid_graph, pg_incidence, prune, sample_gnp
from .graph import format_graph, girth, is_pt_free, max_degree, path_graph, read_graph, star_graph
from .hypergraph import (format_colouring, format_hypergraph, is_proper,
                         monochromatic_edges, parse_colouring, parse_hypergraph)
from .pipeline import ConfigError, format_records, read_config, run_pipeline
from .reduction import ReductionParams, build_reduction, certify, f_preset
from .solvers import (ColouringFailure, InstanceTooLarge, ResampleTimeout,
                      exact_frugal_colouring, exact_hypergraph_colouring,
                      greedy_colour, greedy_palette, resample_colour,
                      verify_avoiding, verify_frugal)

EXIT_OK, EXIT_USAGE, EXIT_INSTANCE, EXIT_VERIFY = 0, 1, 2, 3
GIRTH_SUMMARY_CAP = 5000
CONFIG_ENV = "FRUGAL_CONFIG"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read_text(path) -> str:
    with open(path) as fh:
        return fh.read()


def cmd_generate(args) -> int:
    if args.kind == "grid":
        if args.n is None:
            raise UsageError("--kind grid needs --n")
        g = grid_graph(args.n, args.beta)
    elif args.kind == "pg":
        if args.q is None:
            raise UsageError("--kind pg needs --q")
        g = pg_incidence(args.q, args.beta)
    else:
        if args.n is None or args.p is None:
            raise UsageError("--kind gnp needs --n and --p")
        g = sample_gnp(GnpSpec(args.n, args.p, args.seed))
    if args.prune:
        try:
            d, target = args.prune.split(",")
            g, rep = prune(g, float(d), int(target))
        except ValueError:
            raise UsageError("--prune expects 'd,g'") from None
        print(f"pruned: removed {len(rep.high_degree)} high-degree and "
              f"{len(rep.on_short_cycles)} short-cycle vertices", file=sys.stderr)
    gi = girth(g) if g.n <= GIRTH_SUMMARY_CAP else "skipped"
    print(f"n={g.n} m={g.m} delta={max_degree(g)} "
          f"girth={'inf' if gi is None else gi}", file=sys.stderr)
    _emit(format_graph(g), args.out)
    return EXIT_OK


def _params(g, args) -> ReductionParams:
    return ReductionParams.for_graph(g, args.beta, args.t)


def _f_value(args, params) -> float:
    if args.f is not None:
        return args.f
    if args.f_preset:
        return f_preset(args.f_preset, params)
    raise UsageError("certification needs --f or --f-preset")


def cmd_reduce(args) -> int:
    g = read_graph(args.graph)
    params = _params(g, args)
    h = build_reduction(args.kind, g, params)
    _emit(format_hypergraph(h), args.out)
    if args.certify:
        cert = certify(h, _f_value(args, params))
        _emit(cert.report(), args.report)
        if not cert.ok:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_certify(args) -> int:
    if args.hypergraph:
        if args.f is None:
            raise UsageError("--hypergraph input needs an explicit --f")
        h = parse_hypergraph(_read_text(args.hypergraph))
        f = args.f
    elif args.graph:
        g = read_graph(args.graph)
        params = _params(g, args)
        h = build_reduction(args.kind, g, params)
        f = _f_value(args, params)
    else:
        raise UsageError("certify needs --graph or --hypergraph")
    cert = certify(h, f)
    sys.stdout.write(cert.report())
    return EXIT_OK if cert.ok else EXIT_VERIFY


def cmd_color(args) -> int:
    g = None
    if args.graph:
        g = read_graph(args.graph)
        h = build_reduction(args.reduction, g, _params(g, args))
    elif args.hypergraph:
        h = parse_hypergraph(_read_text(args.hypergraph))
    else:
        raise UsageError("color needs --graph or --hypergraph")

    if args.algo == "exact":
        # the frugal optimum is proper on the basic reduction only
        col = (exact_frugal_colouring(g, args.beta)
               if g is not None and args.reduction == "basic"
               else exact_hypergraph_colouring(h))
        iterations = 0
    elif args.algo == "greedy":
        k = args.k if args.k is not None else greedy_palette(h)
        col = greedy_colour(h, k).colouring
        iterations = 0
    else:
        if args.k is None:
            raise UsageError("--algo resample needs --k")
        res = resample_colour(h, args.k, args.seed, args.max_rounds)
        col, iterations = res.colouring, res.iterations
    _emit(format_colouring(col), args.out)
    print(f"algo={args.algo} k={col.k} used={col.used()} iterations={iterations}",
          file=sys.stderr)
    if not is_proper(h, col) or (g is not None and not verify_frugal(g, col, args.beta)):
        return EXIT_VERIFY
    return EXIT_OK


def _pattern(spec: str):
    try:
        name, size = spec.split(":")
        size = int(size)
    except ValueError:
        raise UsageError("--pattern expects star:M or path:M") from None
    if name == "star":
        return star_graph(size)
    if name == "path":
        return path_graph(size)
    raise UsageError(f"unknown pattern {name!r}")


def cmd_verify(args) -> int:
    col = parse_colouring(_read_text(args.colouring))
    if args.hypergraph:
        h = parse_hypergraph(_read_text(args.hypergraph))
        bad = monochromatic_edges(h, col)
        if bad:
            print(f"improper: monochromatic edge {' '.join(map(str, bad[0]))}")
            return EXIT_VERIFY
        print("ok")
        return EXIT_OK
    if not args.graph:
        raise UsageError("verify needs --graph or --hypergraph")
    g = read_graph(args.graph)
    if args.pattern:
        ok = verify_avoiding(g, col, _pattern(args.pattern))
        print("ok" if ok else f"2-coloured copy of {args.pattern} found")
        return EXIT_OK if ok else EXIT_VERIFY
    if args.beta is None:
        raise UsageError("verify --graph needs --beta or --pattern")
    check = verify_frugal(g, col, args.beta)
    if check:
        print("ok")
        return EXIT_OK
    if check.edge is not None:
        print(f"improper: edge {check.edge[0]} {check.edge[1]} is monochromatic")
    else:
        print(f"not {args.beta}-frugal: vertex {check.vertex} sees colour "
              f"{check.colour} {check.count} times")
    return EXIT_VERIFY


def _kv(items: list[str]) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"bound parameter {item!r} is not key=value")
        k, v = item.split("=", 1)
        try:
            out[k] = int(v)
        except ValueError:
            try:
                out[k] = float(v)
            except ValueError:
                raise UsageError(f"bad number {v!r} for {k}") from None
    return out


def cmd_bounds(args) -> int:
    kw = _kv(args.params)
    try:
        rep = bnd.report(args.name, **kw)
    except KeyError as exc:
        raise UsageError(f"bound {args.name!r} needs parameter {exc.args[0]}") from None
    if args.graph and args.name == "erdos_gallai":
        g = read_graph(args.graph)
        t = kw["t"]
        value = bnd.erdos_gallai_bound(t, g.n)
        sat = (g.m <= value) if is_pt_free(g, t) else None
        rep = bnd.BoundReport("erdos_gallai", {"t": t, "n": g.n, "m": g.m}, value, sat)
    sys.stdout.write(bnd.format_reports([rep], args.format))
    return EXIT_VERIFY if rep.satisfied is False else EXIT_OK


def cmd_pipeline(args) -> int:
    path = args.config or os.environ.get(CONFIG_ENV)
    if not path:
        raise UsageError(f"pipeline needs --config or ${CONFIG_ENV}")
    try:
        cfg = read_config(path)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    if args.workers:
        cfg.workers = args.workers
    records = run_pipeline(cfg)
    _emit(format_records(records), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="frugal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write a graph instance")
    g.add_argument("--kind", choices=("grid", "pg", "gnp"), required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--beta", type=int, default=1)
    g.add_argument("--q", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--prune", metavar="D,G")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    def reduction_args(sp, kind_flag="--kind"):
        sp.add_argument(kind_flag, choices=("basic", "cycle", "kbt"), default="basic",
                        dest="kind" if kind_flag == "--kind" else "reduction")
        sp.add_argument("--beta", type=int, default=2)
        sp.add_argument("--t", type=int, default=2)

    def f_args(sp):
        sp.add_argument("--f", type=float)
        sp.add_argument("--f-preset", choices=("k2t", "cycle", "kbt"))

    r = sub.add_parser("reduce", help="build an auxiliary hypergraph")
    r.add_argument("--graph", required=True)
    reduction_args(r)
    r.add_argument("--out")
    r.add_argument("--certify", action="store_true")
    f_args(r)
    r.add_argument("--report")
    r.set_defaults(func=cmd_reduce)

    c = sub.add_parser("certify", help="check the sparse-colouring hypotheses")
    c.add_argument("--graph")
    c.add_argument("--hypergraph")
    reduction_args(c)
    f_args(c)
    c.set_defaults(func=cmd_certify)

    col = sub.add_parser("color", help="colour a graph (frugally) or a hypergraph")
    col.add_argument("--graph")
    col.add_argument("--hypergraph")
    reduction_args(col, "--reduction")
    col.add_argument("--algo", choices=("greedy", "resample", "exact"), default="greedy")
    col.add_argument("--k", type=int)
    col.add_argument("--seed", type=int, default=0)
    col.add_argument("--max-rounds", type=int, default=100_000)
    col.add_argument("--out")
    col.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a colouring file")
    v.add_argument("--graph")
    v.add_argument("--hypergraph")
    v.add_argument("--colouring", "--coloring", required=True)
    v.add_argument("--beta", type=int)
    v.add_argument("--pattern", help="star:M or path:M")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="evaluate a closed-form bound")
    b.add_argument("name", choices=bnd.BOUND_NAMES)
    b.add_argument("params", nargs="*", metavar="key=value")
    b.add_argument("--graph", help="check an instance (erdos_gallai only)")
    b.add_argument("--format", choices=("text", "csv"), default="text")
    b.set_defaults(func=cmd_bounds)

    pl = sub.add_parser("pipeline", help="run an experiment config, emit CSV")
    pl.add_argument("--config")
    pl.add_argument("--workers", type=int)
    pl.add_argument("--out")
    pl.set_defaults(func=cmd_pipeline)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"frugal {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ColouringFailure, ResampleTimeout, InstanceTooLarge, ValueError, OSError) as exc:
        print(f"frugal {args.command}: {exc}", file=sys.stderr)
        return EXIT_INSTANCE


if __name__ == "__main__":
    sys.exit(main())

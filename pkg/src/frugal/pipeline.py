"""Experiment pipeline: build a reduction per instance, certify it, colour it
with each solver, and emit one CSV row per (instance, algorithm).

Config grammar (flat ``key = value`` lines, ``#`` starts a comment)::

    beta = 2               # frugality
    t = 2                  # forbidden-pattern parameter
    reduction = cycle      # basic | cycle | kbt
    f_preset = cycle       # optional: k2t | cycle | kbt, enables certify columns
    seeds = 1, 2, 3        # resample seeds, tried in order
    max_rounds = 20000     # resample budget per (k, seed)
    exact_cap = 12         # exact chi_beta computed when n <= exact_cap
    workers = 1
    timing = false         # wall_time column stays empty unless true
    colourings_dir = out   # optional: write one colouring file per row
    instance = pg q=3      # repeatable; kinds: grid, pg, gnp, file
    instance = gnp n=80 p=0.05 seed=4 prune=8,6

Every key except ``instance`` may appear once; ``instance`` lines
accumulate in file order.
"""
from __future__ import annotations

import csv
import io
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from .generators import GnpSpec, grid_graph, pg_incidence, prune, sample_gnp
from .graph import Graph, max_degree, read_graph
from .hypergraph import Colouring, format_colouring, is_proper
from .hypergraph import delta_star as hyper_delta_star
from .reduction import ReductionParams, build_reduction, certify, f_preset
from .solvers import (ResampleTimeout, exact_frugal_colouring, greedy_colour,
                      greedy_palette, resample_colour, verify_frugal)

CSV_COLUMNS = (
    "instance", "construction", "n", "delta", "beta", "t", "reduction",
    "algorithm", "k", "success", "exact_chi", "delta_star", "certified",
    "iterations", "seed", "wall_time", "colouring_file", "note",
)


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    beta: int = 2
    t: int = 2
    reduction: str = "basic"
    f_preset: Optional[str] = None
    seeds: list[int] = field(default_factory=lambda: [0])
    max_rounds: int = 20000
    exact_cap: int = 12
    workers: int = 1
    timing: bool = False
    colourings_dir: Optional[str] = None
    instances: list[str] = field(default_factory=list)

    def validate(self) -> "Config":
        if self.beta < 1 or self.t < 2:
            raise ConfigError("need beta >= 1 and t >= 2")
        if self.reduction not in ("basic", "cycle", "kbt"):
            raise ConfigError(f"unknown reduction {self.reduction!r}")
        if self.reduction != "basic" and self.beta < 2:
            raise ConfigError(f"reduction {self.reduction!r} needs beta >= 2")
        if not self.seeds:
            raise ConfigError("seeds must be non-empty")
        if self.exact_cap < 1 or self.max_rounds < 1 or self.workers < 1:
            raise ConfigError("caps, max_rounds and workers must be positive")
        for spec in self.instances:
            parse_instance(spec)
        return self


_INT_KEYS = {"beta", "t", "max_rounds", "exact_cap", "workers"}


def parse_config(text: str) -> Config:
    cfg = Config()
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (x.strip() for x in line.split("=", 1))
        if key == "instance":
            cfg.instances.append(value)
            continue
        if key in seen:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        seen.add(key)
        try:
            if key in _INT_KEYS:
                setattr(cfg, key, int(value))
            elif key == "seeds":
                cfg.seeds = [int(x) for x in value.replace(",", " ").split()]
            elif key == "timing":
                cfg.timing = value.lower() in ("1", "true", "yes", "on")
            elif key in ("reduction", "f_preset", "colourings_dir"):
                setattr(cfg, key, value or None)
            else:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"line {lineno}: bad value for {key!r}: {value!r}") from None
    return cfg.validate()


def read_config(path) -> Config:
    with open(path) as fh:
        return parse_config(fh.read())


def parse_instance(spec: str) -> tuple[str, dict[str, str]]:
    parts = spec.split()
    if not parts:
        raise ConfigError("empty instance spec")
    kind, params = parts[0], {}
    for item in parts[1:]:
        if "=" not in item:
            raise ConfigError(f"instance parameter {item!r} is not key=value")
        k, v = item.split("=", 1)
        params[k] = v
    required = {"grid": {"n", "beta"}, "pg": {"q"}, "gnp": {"n", "p"}, "file": {"path"}}
    if kind not in required:
        raise ConfigError(f"unknown instance kind {kind!r}")
    missing = required[kind] - params.keys()
    if missing:
        raise ConfigError(f"instance {spec!r} lacks {sorted(missing)}")
    return kind, params


def instance_id(spec: str) -> str:
    kind, params = parse_instance(spec)
    tail = "_".join(f"{k}{v}".replace(",", "-").replace("/", "-") for k, v in params.items())
    return f"{kind}_{tail}" if tail else kind


def build_instance(spec: str, default_beta: int = 1) -> Graph:
    kind, params = parse_instance(spec)
    if kind == "grid":
        g = grid_graph(int(params["n"]), int(params["beta"]))
    elif kind == "pg":
        g = pg_incidence(int(params["q"]), int(params.get("beta", 1)))
    elif kind == "gnp":
        g = sample_gnp(GnpSpec(int(params["n"]), float(params["p"]), int(params.get("seed", 0))))
    else:
        g = read_graph(params["path"])
    if "prune" in params:
        d, target = params["prune"].split(",")
        g, _ = prune(g, float(d), int(target))
    return g


@dataclass
class ExperimentRecord:
    instance: str
    construction: str
    n: int
    delta: int
    beta: int
    t: int
    reduction: str
    algorithm: str
    k: Optional[int]
    success: bool
    exact_chi: Optional[int] = None
    delta_star: Optional[float] = None
    certified: Optional[bool] = None
    iterations: Optional[int] = None
    seed: Optional[int] = None
    wall_time: Optional[float] = None
    colouring_file: Optional[str] = None
    note: str = ""


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def format_records(records: list[ExperimentRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        row = asdict(r)
        w.writerow([_fmt(row[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def frugal_lower_bound(g: Graph, beta: int) -> int:
    """A max-degree vertex needs its own colour plus ceil(delta / beta) for
    its neighbourhood."""
    delta = max_degree(g)
    return max(2, 1 + math.ceil(delta / beta)) if delta else 1


def least_resample_k(h, lo: int, hi: int, seeds: list[int], max_rounds: int,
                     ceiling: Optional[int] = None):
    """Least k at which some seed succeeds, by bisection.

    ``hi`` (usually the greedy palette) is only a first guess: while it
    fails, the window moves up by doubling, stopping at ``ceiling``.
    Returns ``(k, result)`` with ``result`` None if the ceiling failed too.
    """
    cache: dict[int, object] = {}

    def attempt(k: int):
        if k not in cache:
            cache[k] = None
            for s in seeds:
                try:
                    cache[k] = resample_colour(h, k, s, max_rounds)
                    break
                except ResampleTimeout:
                    continue
        return cache[k]

    lo = max(lo, 2)
    hi = max(hi, lo)
    ceiling = max(ceiling or hi, hi)
    while attempt(hi) is None and hi < ceiling:
        lo, hi = hi + 1, min(2 * hi, ceiling)
    while lo < hi:
        mid = (lo + hi) // 2
        if attempt(mid) is not None:
            hi = mid
        else:
            lo = mid + 1
    return hi, attempt(hi)


def run_instance(spec: str, cfg: Config) -> list[ExperimentRecord]:
    kind, _ = parse_instance(spec)
    iid = instance_id(spec)
    base = dict(instance=iid, construction=kind, beta=cfg.beta, t=cfg.t,
                reduction=cfg.reduction)
    try:
        g = build_instance(spec)
    except Exception as exc:  # recorded, the run continues
        return [ExperimentRecord(**base, n=0, delta=0, algorithm="build", k=None,
                                 success=False, note=f"build failed: {exc}")]
    base.update(n=g.n, delta=max_degree(g))
    params = ReductionParams.for_graph(g, cfg.beta, cfg.t)
    h = build_reduction(cfg.reduction, g, params)
    ds = hyper_delta_star(h) if h.edges else 0.0

    certified = None
    note = ""
    if cfg.f_preset:
        try:
            certified = certify(h, f_preset(cfg.f_preset, params)).ok
        except ValueError as exc:
            note = f"certify skipped: {exc}"

    exact_chi = None
    exact_col = None
    if g.n <= cfg.exact_cap:
        exact_col = exact_frugal_colouring(g, cfg.beta, cap=cfg.exact_cap)
        exact_chi = exact_col.k

    records = []

    def emit(algorithm: str, col: Optional[Colouring], k, started, **extra):
        ok = col is not None
        if ok and algorithm != "exact":
            ok = is_proper(h, col)
        if ok:
            ok = bool(verify_frugal(g, col, cfg.beta))
        path = None
        if ok and cfg.colourings_dir:
            os.makedirs(cfg.colourings_dir, exist_ok=True)
            path = os.path.join(cfg.colourings_dir, f"{iid}_{algorithm}.col")
            with open(path, "w") as fh:
                fh.write(format_colouring(col))
        records.append(ExperimentRecord(
            **base, algorithm=algorithm, k=k, success=ok, exact_chi=exact_chi,
            delta_star=ds, certified=certified,
            wall_time=(time.perf_counter() - started) if cfg.timing else None,
            colouring_file=path, note=note, **extra))

    started = time.perf_counter()
    k_greedy = greedy_palette(h)
    emit("greedy", greedy_colour(h, k_greedy).colouring, k_greedy, started, iterations=0)

    started = time.perf_counter()
    lo = frugal_lower_bound(g, cfg.beta)
    k_res, res = least_resample_k(h, lo, k_greedy, cfg.seeds, cfg.max_rounds,
                                  ceiling=max(g.n, 2))
    emit("resample", res.colouring if res else None, k_res, started,
         iterations=res.iterations if res else None, seed=res.seed if res else None)

    if exact_col is not None:
        emit("exact", exact_col, exact_chi, time.perf_counter(), iterations=0)
    return records


def _run_one(args):
    spec, cfg = args
    return run_instance(spec, cfg)


def run_pipeline(cfg: Config) -> list[ExperimentRecord]:
    """Records for every instance, in config order regardless of worker count."""
    jobs = [(spec, cfg) for spec in cfg.instances]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_run_one, jobs))
    else:
        chunks = [_run_one(j) for j in jobs]
    return [r for chunk in chunks for r in chunk]

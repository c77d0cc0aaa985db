"""Command-line harness: single-pair estimates, synthetic benchmarks, and
directory-wide distance tables.

The benchmark writes a JSON manifest (the source of truth: command, seed,
conventions, per-pair rows, aggregates) plus a TSV of the rows for
spreadsheets. Every command is deterministic given --seed; pairs get
independent sub-seeds, so parallel runs produce identical results.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .estimator import estimate_mgh
from .graph_io import (
    FORMATS,
    MODELS,
    GeneratorSpec,
    GraphFormatError,
    generate,
    read_graph,
    sample_spec,
    write_graph,
)
from .metric import DisconnectedGraphWarning, DistanceMatrix, MetricError, metric_from_graph

__all__ = [
    "RunManifest",
    "TIMING_FIELDS",
    "strip_timing",
    "load_manifest",
    "main",
    "entrypoint",
]

TIMING_FIELDS = frozenset({"elapsed_lower", "elapsed_upper", "time_mean", "time_std"})

_CONVENTIONS = {
    "sample_size_log": "natural",
    "generator_range_log": "log10",
    "integer_rounding": "half_to_even",
    "rng": "philox_seedsequence",
}

_ROW_COLUMNS = (
    "i",
    "j",
    "order_x",
    "order_y",
    "seed",
    "lower",
    "upper",
    "estimate",
    "relative_error",
    "utility",
    "baseline",
    "exact",
    "elapsed_lower",
    "elapsed_upper",
)


def _derive_seed(seed: int, *path: int) -> int:
    """Deterministic 64-bit sub-seed for a namespaced index path."""
    ss = np.random.SeedSequence([int(seed), *map(int, path)])
    return int(ss.generate_state(1, np.uint64)[0])


def _aggregates(rows: list[dict]) -> dict:
    orders = [r["order_x"] for r in rows] + [r["order_y"] for r in rows]
    times = [r["elapsed_lower"] + r["elapsed_upper"] for r in rows]
    errors = [r["relative_error"] for r in rows]
    utilities = [r["utility"] for r in rows]
    exact = [bool(r["exact"]) for r in rows]
    return {
        "pairs": len(rows),
        "order_mean": float(np.mean(orders)),
        "order_std": float(np.std(orders)),
        "time_mean": float(np.mean(times)),
        "time_std": float(np.std(times)),
        "relative_error_mean": float(np.mean(errors)),
        "relative_error_std": float(np.std(errors)),
        "utility_mean": float(np.mean(utilities)),
        "utility_std": float(np.std(utilities)),
        "percent_exact": 100.0 * float(np.mean(exact)),
    }


@dataclass(frozen=True)
class RunManifest:
    """One benchmark run: provenance, per-pair rows, and their aggregates."""

    command: list
    seed: int
    version: str
    conventions: dict
    model: str
    count: int
    samples_x: int | None
    samples_y: int | None
    binary_search_lb: bool
    graphs: list
    rows: list
    aggregates: dict

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "seed": self.seed,
            "version": self.version,
            "conventions": self.conventions,
            "model": self.model,
            "count": self.count,
            "samples_x": self.samples_x,
            "samples_y": self.samples_y,
            "binary_search_lb": self.binary_search_lb,
            "graphs": self.graphs,
            "aggregates": self.aggregates,
            "rows": self.rows,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunManifest":
        manifest = cls(**{f: data[f] for f in cls.__dataclass_fields__})
        recomputed = _aggregates(manifest.rows)
        if recomputed != manifest.aggregates:
            raise ValueError("manifest aggregates do not match its rows")
        return manifest


def load_manifest(path) -> RunManifest:
    """Read a manifest back, re-deriving aggregates from rows as a check."""
    with open(path, "r", encoding="utf-8") as fh:
        return RunManifest.from_dict(json.load(fh))


def strip_timing(manifest: dict) -> dict:
    """Copy of a manifest dict with wall-clock fields removed."""
    out = json.loads(json.dumps(manifest))
    for row in out.get("rows", []):
        for key in TIMING_FIELDS:
            row.pop(key, None)
    for key in TIMING_FIELDS:
        out.get("aggregates", {}).pop(key, None)
    return out


def _quiet_metric(g) -> DistanceMatrix:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DisconnectedGraphWarning)
        return metric_from_graph(g)


_POOL: dict = {}


def _init_pool(payload, opts):
    _POOL["mats"] = [DistanceMatrix(d=a, is_integer=f, diam=dm) for a, f, dm in payload]
    _POOL["opts"] = opts


def _pool_pair(task):
    i, j, pair_seed = task
    mats, opts = _POOL["mats"], _POOL["opts"]
    report = estimate_mgh(mats[i], mats[j], pair_seed, **opts)
    return i, j, pair_seed, report.to_dict()


def _compute_rows(mats, tasks, opts, jobs):
    """Estimate every (i, j, seed) task; output is sorted, not arrival-ordered."""
    if jobs <= 1:
        results = []
        for i, j, pair_seed in tasks:
            report = estimate_mgh(mats[i], mats[j], pair_seed, **opts)
            results.append((i, j, pair_seed, report.to_dict()))
    else:
        payload = [(m.d, m.is_integer, m.diam) for m in mats]
        chunk = max(1, len(tasks) // (jobs * 8))
        with ProcessPoolExecutor(
            max_workers=jobs, initializer=_init_pool, initargs=(payload, opts)
        ) as pool:
            results = list(pool.map(_pool_pair, tasks, chunksize=chunk))
    results.sort(key=lambda r: (r[0], r[1]))
    rows = []
    for i, j, pair_seed, report in results:
        row = {"i": i, "j": j, "order_x": mats[i].n, "order_y": mats[j].n, "seed": pair_seed}
        row.update(report)
        rows.append(row)
    return rows


def _tsv_cell(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_tsv(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\t".join(_ROW_COLUMNS) + "\n")
        for row in rows:
            fh.write("\t".join(_tsv_cell(row[col]) for col in _ROW_COLUMNS) + "\n")


def _estimate_opts(args) -> dict:
    return {
        "samples_x": args.samples_x,
        "samples_y": args.samples_y,
        "binary_search_lb": args.binary_search_lb,
    }


def cmd_estimate(args) -> int:
    gx = read_graph(args.graph_a, args.format)
    gy = read_graph(args.graph_b, args.format)
    report = estimate_mgh(metric_from_graph(gx), metric_from_graph(gy), args.seed, **_estimate_opts(args))
    data = report.to_dict()
    if args.tsv:
        keys = list(data)
        print("\t".join(keys))
        print("\t".join(_tsv_cell(data[k]) for k in keys))
    else:
        print(json.dumps(data, indent=2))
    return 0


def cmd_benchmark(args) -> int:
    if args.count < 2:
        raise ValueError("--count must be at least 2 to form a pair")
    graphs_meta = []
    mats = []
    for i in range(args.count):
        graph_seed = _derive_seed(args.seed, 0, i)
        spec = sample_spec(args.model, seed=graph_seed)
        dm = _quiet_metric(generate(spec))
        mats.append(dm)
        graphs_meta.append(
            {
                "index": i,
                "model": spec.model,
                "n": spec.n,
                "params": spec.model_params,
                "seed": graph_seed,
                "order": dm.n,
            }
        )
    tasks = [
        (i, j, _derive_seed(args.seed, 1, i, j))
        for i in range(args.count)
        for j in range(i + 1, args.count)
    ]
    rows = _compute_rows(mats, tasks, _estimate_opts(args), args.jobs)
    manifest = RunManifest(
        command=["mghdist"] + list(args.raw_argv),
        seed=args.seed,
        version=__version__,
        conventions=dict(_CONVENTIONS),
        model=args.model,
        count=args.count,
        samples_x=args.samples_x,
        samples_y=args.samples_y,
        binary_search_lb=args.binary_search_lb,
        graphs=graphs_meta,
        rows=rows,
        aggregates=_aggregates(rows),
    )
    manifest_path = f"{args.out}.manifest.json"
    with open(manifest_path, "w", encoding="utf-8") as fh:
        json.dump(manifest.to_dict(), fh, indent=2)
        fh.write("\n")
    _write_tsv(f"{args.out}.pairs.tsv", rows)
    print(f"{len(rows)} pairs -> {manifest_path}")
    return 0


def cmd_pairwise(args) -> int:
    names = sorted(
        entry for entry in os.listdir(args.directory)
        if os.path.isfile(os.path.join(args.directory, entry))
    )
    if not names:
        raise ValueError(f"no graph files found in {args.directory!r}")
    # Parse everything up front: a bad file must abort before any output.
    mats = [
        _quiet_metric(read_graph(os.path.join(args.directory, name), args.format))
        for name in names
    ]
    tasks = [
        (i, j, _derive_seed(args.seed, 2, i, j))
        for i in range(len(names))
        for j in range(i + 1, len(names))
    ]
    rows = _compute_rows(mats, tasks, _estimate_opts(args), args.jobs)
    size = len(names)
    tables = {
        "estimate": [[0.0] * size for _ in range(size)],
        "lower": [[0.0] * size for _ in range(size)],
        "upper": [[0.0] * size for _ in range(size)],
    }
    for row in rows:
        i, j = row["i"], row["j"]
        for key, table in tables.items():
            table[i][j] = table[j][i] = row[key]
    for key, table in tables.items():
        path = f"{args.out}.{key}.csv"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("graph," + ",".join(names) + "\n")
            for name, line in zip(names, table):
                fh.write(name + "," + ",".join(repr(x) for x in line) + "\n")
    print(f"{len(rows)} pairs -> {args.out}.{{estimate,lower,upper}}.csv")
    return 0


def cmd_generate(args) -> int:
    explicit = [v for v in (args.n, args.p, args.k, args.m) if v is not None]
    if explicit:
        if args.n is None:
            raise ValueError("explicit parameters require --n")
        params = {}
        if args.model == "erdos_renyi":
            if args.p is None:
                raise ValueError("erdos_renyi requires --p")
            params["p"] = args.p
        elif args.model == "watts_strogatz":
            if args.k is None or args.p is None:
                raise ValueError("watts_strogatz requires --k and --p")
            params.update(k=args.k, p=args.p)
        else:
            if args.m is None:
                raise ValueError("barabasi_albert requires --m")
            params["m"] = args.m
        spec = GeneratorSpec(model=args.model, n=args.n, model_params=params, seed=args.seed)
    else:
        spec = sample_spec(args.model, seed=args.seed)
    write_graph(generate(spec), args.out, args.format)
    print(f"{spec.model} n={spec.n} {spec.model_params} -> {args.out}")
    return 0


def _seed_type(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _add_common(sub, *, budgets=True):
    sub.add_argument("--seed", type=_seed_type, default=None, help="run seed (default: MGH_SEED or 0)")
    if budgets:
        sub.add_argument("--samples-x", type=int, default=None, help="override mapping samples X to Y")
        sub.add_argument("--samples-y", type=int, default=None, help="override mapping samples Y to X")
        sub.add_argument("--binary-search-lb", action="store_true", help="bisect thresholds instead of scanning")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mghdist", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    est = commands.add_parser("estimate", help="bound the distance between two graph files")
    est.add_argument("graph_a")
    est.add_argument("graph_b")
    est.add_argument("--format", choices=FORMATS, default="edge_list")
    est.add_argument("--tsv", action="store_true", help="print one TSV row instead of JSON")
    _add_common(est)
    est.set_defaults(func=cmd_estimate)

    bench = commands.add_parser("benchmark", help="estimate all pairs of a sampled graph family")
    bench.add_argument("--model", choices=MODELS, required=True)
    bench.add_argument("--count", type=int, required=True, help="number of graphs to generate")
    bench.add_argument("--out", required=True, help="output path prefix")
    bench.add_argument("--jobs", type=int, default=1)
    _add_common(bench)
    bench.set_defaults(func=cmd_benchmark)

    pair = commands.add_parser("pairwise", help="distance tables for every graph file in a directory")
    pair.add_argument("directory")
    pair.add_argument("--format", choices=FORMATS, default="edge_list")
    pair.add_argument("--out", required=True, help="output path prefix")
    pair.add_argument("--jobs", type=int, default=1)
    _add_common(pair)
    pair.set_defaults(func=cmd_pairwise)

    gen = commands.add_parser("generate", help="write one synthetic graph")
    gen.add_argument("--model", choices=MODELS, required=True)
    gen.add_argument("--out", required=True)
    gen.add_argument("--format", choices=FORMATS, default="edge_list")
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--p", type=float, default=None)
    gen.add_argument("--k", type=int, default=None)
    gen.add_argument("--m", type=int, default=None)
    _add_common(gen, budgets=False)
    gen.set_defaults(func=cmd_generate)
    return parser


def _resolve_seed(args) -> None:
    if args.seed is None:
        raw = os.environ.get("MGH_SEED", "0")
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"MGH_SEED must be an integer, got {raw!r}") from None
        if not 0 <= value < 2**64:
            raise ValueError("MGH_SEED must fit in an unsigned 64-bit integer")
        args.seed = value


def main(argv=None) -> int:
    raw_argv = list(sys.argv[1:] if argv is None else argv)
    args = _build_parser().parse_args(raw_argv)
    args.raw_argv = raw_argv
    try:
        _resolve_seed(args)
        return args.func(args)
    except (GraphFormatError, MetricError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

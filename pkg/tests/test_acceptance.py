"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (visible with -s or on failure)
and asserts the same condition. The synthetic-family test is the long one;
expect the full module to take tens of minutes.
"""

import itertools
import json
import os
import time

import numpy as np
import pytest

from mghdist import (
    Graph,
    estimate_mgh,
    find_lower_bound,
    find_upper_bound,
    generate,
    metric_from_graph,
    solve_feasible_assignment,
    solve_feasible_assignment_hist,
)
from mghdist.cli import load_manifest, main, strip_timing
from mghdist.graph_io import GeneratorSpec
from oracles import exact_mgh, feasible_bruteforce, random_connected_edges


def report(criterion, label, ok):
    print(f"criterion {criterion} ({label}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {criterion} ({label}) failed"


def test_criterion_1_oracle_sandwich():
    rng = np.random.default_rng(1924)
    started = time.perf_counter()
    violations = 0
    for trial in range(500):
        nx, ex = random_connected_edges(rng, lo=2, hi=6)
        ny, ey = random_connected_edges(rng, lo=2, hi=6)
        dx = metric_from_graph(Graph(nx, ex))
        dy = metric_from_graph(Graph(ny, ey))
        lower = find_lower_bound(dx, dy)
        upper = find_upper_bound(dx, dy, seed=trial)
        truth = exact_mgh(dx.d, dy.d)
        if not lower <= truth + 1e-12 and upper >= truth - 1e-12:
            violations += 1
        if not (lower <= truth + 1e-12 <= upper + 2e-12):
            violations += 1
    elapsed = time.perf_counter() - started
    report(1, "oracle sandwich", violations == 0 and elapsed < 300)


def test_criterion_2_feasibility_oracle():
    started = time.perf_counter()
    top = 4
    vs = [
        np.array(c, dtype=np.int64)
        for k in range(1, 6)
        for c in itertools.combinations_with_replacement(range(top + 1), k)
    ]
    us = [
        np.array(c, dtype=np.int64)
        for k in range(1, 7)
        for c in itertools.combinations_with_replacement(range(top + 1), k)
    ]
    disagreements = 0
    hist_mismatches = 0
    for v in vs:
        hv = np.bincount(v, minlength=top + 1)
        for u in us:
            if v.shape[0] > u.shape[0]:
                continue
            hu = np.bincount(u, minlength=top + 1)
            for d in (1, 2, 3):
                got = solve_feasible_assignment(v, u, d)
                if got != feasible_bruteforce(tuple(v), tuple(u), d):
                    disagreements += 1
                if got != solve_feasible_assignment_hist(hv, hu, d):
                    hist_mismatches += 1
    elapsed = time.perf_counter() - started
    report(
        2,
        "feasibility oracle",
        disagreements == 0 and hist_mismatches == 0 and elapsed < 60,
    )


def test_criterion_3_fixed_points():
    k3 = metric_from_graph(Graph(3, {(0, 1), (0, 2), (1, 2)}))
    p3 = metric_from_graph(Graph(3, {(0, 1), (1, 2)}))
    point = metric_from_graph(Graph(1, set()))
    checks = []
    rep = estimate_mgh(k3, p3, seed=5)
    checks.append(rep.lower == 0.5 and rep.upper == 0.5)
    checks.append(find_lower_bound(p3, point) == 1.0)
    checks.append(find_lower_bound(k3, k3) == 0.0)
    checks.append(find_lower_bound(p3, p3) == 0.0)
    report(3, "worked fixed points", all(checks))


# Table row: (model, percent exact, mean relative error, mean utility).
FAMILY_TARGETS = (
    ("erdos_renyi", 20.1, 0.222, 0.054),
    ("watts_strogatz", 50.42, 0.138, 0.004),
    ("barabasi_albert", 57.1, 0.131, 0.035),
)


def test_criterion_4_synthetic_families(tmp_path):
    results = {}
    for model, pct, eta, ups in FAMILY_TARGETS:
        out = tmp_path / model
        code = main([
            "benchmark", "--model", model, "--count", "100",
            "--seed", "1", "--out", str(out),
        ])
        assert code == 0
        agg = load_manifest(f"{out}.manifest.json").aggregates
        results[model] = agg
        ok = (
            abs(agg["percent_exact"] - pct) <= 15.0
            and abs(agg["relative_error_mean"] - eta) <= 0.10
            and abs(agg["utility_mean"] - ups) <= 0.07
        )
        report(4, f"synthetic families: {model}", ok)
    worst = min(results, key=lambda k: results[k]["percent_exact"])
    report(4, "synthetic families: ER worst", worst == "erdos_renyi")


def test_criterion_5_scaling_smoke():
    def pair_time(n, rep):
        p = np.log10(n) / n
        ga = generate(GeneratorSpec("erdos_renyi", n, {"p": p}, seed=2 * rep))
        gb = generate(GeneratorSpec("erdos_renyi", n, {"p": p}, seed=2 * rep + 1))
        dx, dy = metric_from_graph(ga), metric_from_graph(gb)
        started = time.perf_counter()
        estimate_mgh(dx, dy, seed=rep)
        return time.perf_counter() - started

    small = [pair_time(50, rep) for rep in range(3)]
    large = [pair_time(100, rep) for rep in range(3)]
    ratio = float(np.median(large)) / float(np.median(small))
    report(5, f"scaling smoke: ratio {ratio:.2f}", ratio <= 2**4.2)


def test_criterion_6_determinism(tmp_path):
    argv = ["benchmark", "--model", "watts_strogatz",
            "--count", "6", "--seed", "251", "--out", "run"]
    blobs = []
    for sub in ("first", "second"):
        workdir = tmp_path / sub
        workdir.mkdir()
        cwd = os.getcwd()
        os.chdir(workdir)
        try:
            assert main(list(argv)) == 0
        finally:
            os.chdir(cwd)
        with open(workdir / "run.manifest.json") as fh:
            stripped = strip_timing(json.load(fh))
        blobs.append(json.dumps(stripped, sort_keys=False).encode())
    report(6, "determinism", blobs[0] == blobs[1])

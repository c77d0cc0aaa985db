"""Graph ingestion, serialization, and synthetic benchmark families.

Three text formats are supported: an edge list and a sparse coordinate
format, both with an explicit "n <count>" header so isolated vertices
survive a round trip, and a dense 0/1 CSV adjacency matrix. Generators for
Erdos-Renyi, Watts-Strogatz and Barabasi-Albert graphs produce the
benchmark corpus; parameter ranges for the benchmark are drawn by
sample_spec, while generate itself accepts any structurally feasible
parameters.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .metric import Graph

__all__ = [
    "FORMATS",
    "MODELS",
    "GraphFormatError",
    "DroppedEdgeWarning",
    "GeneratorSpec",
    "read_graph",
    "write_graph",
    "generate",
    "sample_spec",
]

FORMATS = ("edge_list", "dense_csv", "sparse_coo")
MODELS = ("erdos_renyi", "watts_strogatz", "barabasi_albert")


class GraphFormatError(ValueError):
    """Raised on malformed graph input; carries the offending line number."""

    def __init__(self, source: str, line: int | None, reason: str):
        self.source = source
        self.line = line
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {reason}")


class DroppedEdgeWarning(UserWarning):
    """Self-loops or duplicate edges were discarded while reading."""


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one synthetic graph.

    model_params holds p for erdos_renyi, k and p for watts_strogatz, m for
    barabasi_albert. Construction checks structural feasibility only; the
    benchmark parameter ranges are the business of sample_spec.
    """

    model: str
    n: int
    model_params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}, expected one of {MODELS}")
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"graph order must be an integer >= 2, got {self.n!r}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError(f"seed must fit in an unsigned 64-bit integer, got {self.seed!r}")
        p = self.model_params.get("p")
        k = self.model_params.get("k")
        m = self.model_params.get("m")
        if self.model == "erdos_renyi":
            if p is None or not 0.0 <= p <= 1.0:
                raise ValueError(f"erdos_renyi needs p in [0, 1], got {p!r}")
        elif self.model == "watts_strogatz":
            if k is None or int(k) != k or k < 1 or 2 * k > self.n - 1:
                raise ValueError(f"watts_strogatz needs integer k with 1 <= k and 2k <= n-1, got {k!r}")
            if p is None or not 0.0 <= p <= 1.0:
                raise ValueError(f"watts_strogatz needs p in [0, 1], got {p!r}")
        else:
            if m is None or int(m) != m or not 1 <= m < self.n:
                raise ValueError(f"barabasi_albert needs integer m with 1 <= m < n, got {m!r}")


def _source_name(obj) -> str:
    return getattr(obj, "name", None) or "<stream>"


def _read_lines(path_or_stream):
    if hasattr(path_or_stream, "read"):
        return _source_name(path_or_stream), path_or_stream.read().splitlines()
    with open(path_or_stream, "r", encoding="utf-8") as fh:
        return str(path_or_stream), fh.read().splitlines()


def _content_lines(lines):
    """Yield (1-based line number, stripped text), skipping blanks and comments."""
    for no, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        yield no, text


def _parse_header(source, numbered):
    try:
        no, text = next(numbered)
    except StopIteration:
        raise GraphFormatError(source, None, "empty input") from None
    parts = text.split()
    if len(parts) != 2 or parts[0] != "n":
        raise GraphFormatError(source, no, f"expected header 'n <count>', got {text!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise GraphFormatError(source, no, f"vertex count is not an integer: {parts[1]!r}") from None
    if n < 1:
        raise GraphFormatError(source, no, f"vertex count must be positive, got {n}")
    return n


def _parse_pair(source, no, text, n):
    parts = text.split()
    if len(parts) != 2:
        raise GraphFormatError(source, no, f"expected two vertex indices, got {text!r}")
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(source, no, f"vertex indices are not integers: {text!r}") from None
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(source, no, f"vertex index out of range [0, {n}): {text!r}")
    return u, v


def _collect_edges(source, numbered, n):
    edges = set()
    dropped = 0
    for no, text in numbered:
        u, v = _parse_pair(source, no, text, n)
        if u == v:
            dropped += 1
            continue
        e = (u, v) if u < v else (v, u)
        if e in edges:
            dropped += 1
        else:
            edges.add(e)
    return edges, dropped


def _read_pair_format(source, lines):
    numbered = _content_lines(lines)
    n = _parse_header(source, numbered)
    return n, *_collect_edges(source, numbered, n)


def _read_dense_csv(source, lines):
    rows = []
    numbers = []
    for no, text in _content_lines(lines):
        numbers.append(no)
        row = []
        for token in text.split(","):
            token = token.strip()
            try:
                value = int(token)
            except ValueError:
                raise GraphFormatError(source, no, f"matrix entry is not an integer: {token!r}") from None
            if value not in (0, 1):
                raise GraphFormatError(source, no, f"adjacency entries must be 0 or 1, got {value}")
            row.append(value)
        rows.append(row)
    if not rows:
        raise GraphFormatError(source, None, "empty input")
    n = len(rows)
    for no, row in zip(numbers, rows):
        if len(row) != n:
            raise GraphFormatError(source, no, f"row has {len(row)} entries, expected {n}")
    edges = set()
    dropped = 0
    for i in range(n):
        if rows[i][i] == 1:
            dropped += 1
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise GraphFormatError(
                    source, numbers[i], f"matrix is not symmetric at ({i}, {j})"
                )
            if rows[i][j] == 1:
                edges.add((i, j))
    return n, edges, dropped


def read_graph(path_or_stream, format: str = "edge_list") -> Graph:
    """Parse a graph, dropping self-loops and duplicate edges with a warning."""
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}, expected one of {FORMATS}")
    source, lines = _read_lines(path_or_stream)
    if format == "dense_csv":
        n, edges, dropped = _read_dense_csv(source, lines)
    else:
        n, edges, dropped = _read_pair_format(source, lines)
    if dropped:
        warnings.warn(
            f"{source}: dropped {dropped} self-loop/duplicate entries",
            DroppedEdgeWarning,
            stacklevel=2,
        )
    return Graph(n, edges)


def write_graph(g: Graph, path_or_stream, format: str = "edge_list") -> None:
    """Serialize a graph; read_graph inverts it up to edge ordering."""
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}, expected one of {FORMATS}")
    edges = sorted(g.edges)
    n = g.num_vertices
    if format == "dense_csv":
        adj = [[0] * n for _ in range(n)]
        for u, v in edges:
            adj[u][v] = adj[v][u] = 1
        text = "\n".join(",".join(str(x) for x in row) for row in adj) + "\n"
    else:
        body = "\n".join(f"{u} {v}" for u, v in edges)
        text = f"n {n}\n" + (body + "\n" if body else "")
    if hasattr(path_or_stream, "write"):
        path_or_stream.write(text)
    else:
        with open(path_or_stream, "w", encoding="utf-8") as fh:
            fh.write(text)


def _rng(entropy: list[int]) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def _generate_er(n: int, p: float, rng: np.random.Generator) -> set:
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(iu.shape[0]) < p
    return {(int(u), int(v)) for u, v in zip(iu[mask], ju[mask])}


def _generate_ws(n: int, k: int, p: float, rng: np.random.Generator) -> set:
    edges = set()
    adj = [set() for _ in range(n)]
    for j in range(1, k + 1):
        for u in range(n):
            v = (u + j) % n
            edges.add((u, v) if u < v else (v, u))
            adj[u].add(v)
            adj[v].add(u)
    # Rewire pass in the same lattice order the edges were laid down.
    for j in range(1, k + 1):
        for u in range(n):
            if rng.random() >= p:
                continue
            v = (u + j) % n
            w = int(rng.integers(0, n))
            while w == u or w in adj[u]:
                if len(adj[u]) >= n - 1:
                    break
                w = int(rng.integers(0, n))
            else:
                edges.discard((u, v) if u < v else (v, u))
                adj[u].discard(v)
                adj[v].discard(u)
                edges.add((u, w) if u < w else (w, u))
                adj[u].add(w)
                adj[w].add(u)
    return edges


def _generate_ba(n: int, m: int, rng: np.random.Generator) -> set:
    edges = set()
    deg = np.zeros(n, dtype=np.int64)
    for v in range(m, n):
        # Attachment weights frozen before v's own edges are added.
        cum = np.cumsum(deg[:v] + 1)
        total = float(cum[-1])
        targets: set[int] = set()
        while len(targets) < m:
            r = rng.random() * total
            targets.add(int(np.searchsorted(cum, r, side="right")))
        for t in sorted(targets):
            edges.add((t, v))
            deg[t] += 1
            deg[v] += 1
    return edges


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph a spec describes, deterministically in its seed."""
    rng = _rng([int(spec.seed), 1])
    if spec.model == "erdos_renyi":
        edges = _generate_er(spec.n, float(spec.model_params["p"]), rng)
    elif spec.model == "watts_strogatz":
        edges = _generate_ws(spec.n, int(spec.model_params["k"]), float(spec.model_params["p"]), rng)
    else:
        edges = _generate_ba(spec.n, int(spec.model_params["m"]), rng)
    return Graph(spec.n, edges)


def sample_spec(model: str, n_range=(10, 200), seed=0) -> GeneratorSpec:
    """Draw a random benchmark spec for one of the three families.

    The graph order is uniform on n_range. Edge probabilities are uniform on
    [0.5 log n / n, 1.5 log n / n]; the lattice half-degree is uniform on
    1..round(0.5 log^2 n) and the attachment count on 1..round(log^2 n), with
    round() half-to-even on the integer caps. Logarithms are base 10.
    """
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}, expected one of {MODELS}")
    lo, hi = int(n_range[0]), int(n_range[1])
    if not 2 <= lo <= hi:
        raise ValueError(f"invalid order range {n_range!r}")
    rng = _rng([int(seed), 0])
    n = int(rng.integers(lo, hi + 1))
    log_n = math.log10(n)
    p_lo, p_hi = 0.5 * log_n / n, 1.5 * log_n / n
    if model == "erdos_renyi":
        params = {"p": float(rng.uniform(p_lo, p_hi))}
    elif model == "watts_strogatz":
        k_cap = max(1, round(0.5 * log_n**2))
        params = {
            "k": int(rng.integers(1, k_cap + 1)),
            "p": float(rng.uniform(p_lo, p_hi)),
        }
    else:
        m_cap = max(1, round(log_n**2))
        # Two-point draw over the range endpoints: the family needs both deep
        # trees and dense hubs to spread its diameters, which interior m
        # values wash out.
        params = {"m": int(m_cap if rng.integers(0, 2) else 1)}
    return GeneratorSpec(model=model, n=n, model_params=params, seed=int(seed))

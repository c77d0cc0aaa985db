"""Finite metric spaces as dense distance matrices.

A space is either validated from a raw square array or built from an
unweighted undirected graph, where the distance between two vertices is the
shortest-path length inside the largest connected component. Integer-valued
spaces remember that fact so downstream code can use frequency-count
shortcuts.
"""
from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Graph",
    "DistanceMatrix",
    "Curvature",
    "MetricError",
    "DisconnectedGraphWarning",
    "metric_from_graph",
    "diameter",
    "validate",
]


class MetricError(ValueError):
    """A raw array is not a valid distance matrix.

    The ``code`` attribute names the violated invariant: one of
    ``non_square``, ``non_finite``, ``asymmetric``, ``negative``,
    ``nonzero_diagonal``, ``zero_off_diagonal``.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class DisconnectedGraphWarning(UserWarning):
    """Vertices outside the largest connected component were dropped."""


class Graph:
    """Unweighted undirected graph: vertex count plus a set of edges.

    Edges are stored as (u, v) pairs with u < v; self-loops and endpoints
    outside [0, num_vertices) are rejected. Instances are immutable.
    """

    __slots__ = ("num_vertices", "edges")

    def __init__(self, num_vertices: int, edges=()):
        n = int(num_vertices)
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "num_vertices", n)
        object.__setattr__(self, "edges", frozenset(normalized))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.num_vertices == other.num_vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.num_vertices, self.edges))

    def __repr__(self):
        return f"Graph({self.num_vertices}, {sorted(self.edges)})"

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists, each sorted ascending."""
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for neighbors in adj:
            neighbors.sort()
        return adj


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Validated distance matrix with cached flags.

    ``d`` is an int64 array when every entry is integral (``is_integer``),
    float64 otherwise; ``diam`` caches the maximum entry. Use validate() or
    metric_from_graph() to construct instances.
    """

    d: np.ndarray
    is_integer: bool
    diam: float

    @property
    def n(self) -> int:
        return self.d.shape[0]


@dataclass(frozen=True, eq=False)
class Curvature:
    """Principal submatrix of a parent DistanceMatrix.

    ``source_indices`` records which points of the parent were retained, so
    k equals parent.d[np.ix_(source_indices, source_indices)].
    """

    k: np.ndarray
    source_indices: np.ndarray

    @property
    def n(self) -> int:
        return self.k.shape[0]


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def validate(values) -> DistanceMatrix:
    """Check a raw square array and wrap it as a DistanceMatrix.

    Raises MetricError with a distinct code per violated invariant.
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise MetricError("non_square", f"expected a non-empty square matrix, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise MetricError("non_finite", "matrix contains non-finite entries")
    if not (arr == arr.T).all():
        raise MetricError("asymmetric", "matrix is not symmetric")
    if (arr < 0).any():
        raise MetricError("negative", "matrix contains negative entries")
    if np.diagonal(arr).any():
        raise MetricError("nonzero_diagonal", "diagonal entries must be zero")
    off = arr + np.eye(arr.shape[0])
    if (off == 0).any():
        raise MetricError("zero_off_diagonal", "off-diagonal zeros mean duplicate points")
    is_int = bool((arr == np.floor(arr)).all())
    stored = arr.astype(np.int64) if is_int else arr.copy()
    return DistanceMatrix(d=_freeze(stored), is_integer=is_int, diam=float(arr.max()))


def diameter(m: DistanceMatrix) -> float:
    """Largest distance in the space (0 for a single point)."""
    return m.diam


def _components(adj: list[list[int]]) -> list[list[int]]:
    n = len(adj)
    seen = np.zeros(n, dtype=bool)
    comps: list[list[int]] = []
    for start in range(n):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        comp = [start]
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def metric_from_graph(g: Graph) -> DistanceMatrix:
    """Shortest-path metric of the largest connected component of g.

    Breadth-first search from every retained vertex. Equal-size components
    tie-break on the smallest contained vertex index; a warning reports any
    dropped vertices. An edgeless graph reduces to the one-point space on its
    first vertex.
    """
    adj = g.adjacency()
    comps = _components(adj)
    comp = max(comps, key=len)  # max() keeps the earliest, i.e. smallest min-vertex
    if len(comp) < g.num_vertices:
        dropped = g.num_vertices - len(comp)
        warnings.warn(
            DisconnectedGraphWarning(
                f"graph is disconnected: dropped {dropped} of {g.num_vertices} "
                "vertices outside the largest component"
            ),
            stacklevel=2,
        )
    index_of = {v: i for i, v in enumerate(comp)}
    n = len(comp)
    dist = np.zeros((n, n), dtype=np.int64)
    for i, src in enumerate(comp):
        level = np.full(n, -1, dtype=np.int64)
        level[i] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = level[index_of[u]]
            for w in adj[u]:
                iw = index_of[w]
                if level[iw] < 0:
                    level[iw] = du + 1
                    queue.append(w)
        dist[i] = level
    return DistanceMatrix(d=_freeze(dist), is_integer=True, diam=float(dist.max()))

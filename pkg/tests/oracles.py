"""Independent reference implementations used to cross-check the library.

Everything here favors obviousness over speed: exhaustive enumeration of
mappings for the exact distance, complete backtracking for assignment
feasibility, plain BFS for connectivity. None of it shares code with the
package under test.
"""
from __future__ import annotations

import itertools
from collections import deque
from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def _all_mappings(n: int, m: int) -> np.ndarray:
    """Every function from an n-point domain into an m-point codomain."""
    return np.array(list(itertools.product(range(m), repeat=n)), dtype=np.intp).reshape(-1, n)


def min_mapping_distortion(dx, dy) -> float:
    """Smallest distortion over all mappings from the first space into the second."""
    dx = np.asarray(dx, dtype=np.float64)
    dy = np.asarray(dy, dtype=np.float64)
    maps = _all_mappings(dx.shape[0], dy.shape[0])
    pulled = dy[maps[:, :, None], maps[:, None, :]]
    return float(np.abs(pulled - dx[None, :, :]).max(axis=(1, 2)).min())


def exact_mgh(dx, dy) -> float:
    """Exact mGH distance by enumerating both directions independently."""
    return 0.5 * max(min_mapping_distortion(dx, dy), min_mapping_distortion(dy, dx))


def feasible_bruteforce(v, u, d) -> bool:
    """Complete search for an injective pairing with |v_i - u_f(i)| < d.

    Backtracks over every injective assignment; branches on equal u-values
    are collapsed, which skips only permutations of identical outcomes.
    """
    v = list(v)
    u = list(u)
    used = [False] * len(u)

    def place(i: int) -> bool:
        if i == len(v):
            return True
        tried = set()
        for t in range(len(u)):
            if used[t] or u[t] in tried:
                continue
            tried.add(u[t])
            if abs(v[i] - u[t]) < d:
                used[t] = True
                if place(i + 1):
                    return True
                used[t] = False
        return False

    return place(0)


def is_connected(n: int, edges) -> bool:
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        x = queue.popleft()
        for w in adj[x]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                queue.append(w)
    return reached == n


def random_connected_edges(rng: np.random.Generator, lo: int = 2, hi: int = 6):
    """Vertex count and edge list of a random connected graph, by rejection."""
    while True:
        n = int(rng.integers(lo, hi + 1))
        p = float(rng.uniform(0.3, 0.95))
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        if is_connected(n, edges):
            return n, edges


def bfs_distances(n: int, edges) -> np.ndarray:
    """All-pairs shortest paths of a connected unweighted graph."""
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    out = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for w in adj[x]:
                if dist[w] < 0:
                    dist[w] = dist[x] + 1
                    queue.append(w)
        out[s] = dist
    return out

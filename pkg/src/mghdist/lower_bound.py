"""Certified lower bound for the modified Gromov-Hausdorff distance.

The bound rests on two obstructions. First, if one space contains a set of
points pairwise at least d apart that is larger than the other space's point
count, the distance is at least d/2. Second, even with a smaller such set,
the distance is at least d/2 whenever some row of its submatrix cannot be
injectively matched, entrywise within d, into any row of the other space's
matrix. Scanning candidate thresholds from largest to smallest yields the
best certificate either obstruction can give.

Integer-valued spaces (graph metrics) get a fast path: rows are compared as
frequency counts of the values 0..d_max, and the candidate thresholds are
just 1..d_max.
"""
from __future__ import annotations

import numpy as np

from . import _kernels as _k
from .metric import Curvature, DistanceMatrix

__all__ = [
    "find_least_bounded_row",
    "find_bounded_curvature",
    "solve_feasible_assignment",
    "solve_feasible_assignment_hist",
    "has_unmatchable_row",
    "verify_lower_bound",
    "build_difference_set",
    "find_lower_bound",
]


def _require_positive(d) -> float:
    d = float(d)
    if d <= 0:
        raise ValueError(f"threshold must be positive, got {d}")
    return d


def find_least_bounded_row(a, d) -> int | None:
    """Index of the row blocking d-boundedness the most, or None.

    None means every off-diagonal entry is already >= d. Otherwise returns
    the first row with the largest count of off-diagonal entries < d,
    breaking ties by the smaller sum of off-diagonal entries >= d.
    """
    d = _require_positive(d)
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("expected a square matrix")
    idx = _k.least_bounded_row(arr, d)
    return None if idx < 0 else int(idx)


def find_bounded_curvature(dx: DistanceMatrix, d) -> Curvature:
    """Greedily extract a large principal submatrix with off-diagonal >= d.

    Deletes the least bounded row (and its column) until none is left. The
    result approximates the largest point set of dx pairwise >= d apart and
    always retains at least one point.
    """
    d = _require_positive(d)
    if dx.is_integer:
        alive = _k.bounded_submatrix_mask_int(dx.d, d)
    else:
        alive = _k.bounded_submatrix_mask_float(dx.d, d)
    idx = np.flatnonzero(alive)
    sub = np.ascontiguousarray(dx.d[np.ix_(idx, idx)])
    return Curvature(k=sub, source_indices=idx)


def solve_feasible_assignment(v, u, d) -> bool:
    """Can v's entries be injectively paired with u's entries within < d?

    Both vectors must be sorted ascending (asserted, not silently fixed).
    The greedy sweep is exact for sorted inputs.
    """
    d = _require_positive(d)
    v = np.asarray(v, dtype=np.float64)
    u = np.asarray(u, dtype=np.float64)
    assert v.size < 2 or (v[1:] >= v[:-1]).all(), "v must be sorted ascending"
    assert u.size < 2 or (u[1:] >= u[:-1]).all(), "u must be sorted ascending"
    return bool(_k.feasible_sorted(v, u, d))


def solve_feasible_assignment_hist(v, u, d) -> bool:
    """Histogram twin of solve_feasible_assignment for integer data.

    v and u are occurrence counts over the shared value range 0..d_max; d
    must be a positive integer. Decides the same question in O(d_max).
    """
    if float(d) != int(d) or int(d) < 1:
        raise ValueError(f"d must be a positive integer, got {d!r}")
    cv = np.asarray(v, dtype=np.int64)
    cu = np.asarray(u, dtype=np.int64)
    if cv.shape != cu.shape:
        raise ValueError(f"histogram ranges differ: {cv.shape} vs {cu.shape}")
    return bool(_k.feasible_hist(cv, cu, int(d)))


def _row_histograms(mat: np.ndarray, top: int) -> np.ndarray:
    """Per-row occurrence counts of the integer values 0..top."""
    counts = np.zeros((mat.shape[0], top + 1), dtype=np.int64)
    np.add.at(counts, (np.arange(mat.shape[0])[:, None], mat), 1)
    return counts


def _sorted_rows(mat: np.ndarray) -> np.ndarray:
    return np.sort(np.asarray(mat, dtype=np.float64), axis=1)


def has_unmatchable_row(k: Curvature, dy: DistanceMatrix, d) -> bool:
    """True iff some row of k fits into no row of dy within < d.

    Such a row certifies that no mapping into the other space can pair k's
    points with distances all within d of their originals. Requires
    k.n <= dy.n; larger curvatures are already a certificate on their own.
    """
    d = _require_positive(d)
    if k.n > dy.n:
        raise ValueError(f"curvature has {k.n} points but the target space only {dy.n}")
    k_int = np.issubdtype(k.k.dtype, np.integer)
    if k_int and dy.is_integer and float(d).is_integer():
        top = int(max(k.k.max(), dy.diam))
        kh = _row_histograms(k.k, top)
        yh = _row_histograms(dy.d, top)
        return bool(_k.any_unmatchable_row_hist(kh, yh, int(d)))
    ks = _sorted_rows(k.k)
    ys = _sorted_rows(dy.d)
    return bool(_k.any_unmatchable_row_sorted(ks, ys, d))


class _PairContext:
    """Precomputed row representations reused across a threshold scan."""

    __slots__ = ("dx", "dy", "int_path", "top", "hx", "hy", "sx", "sy")

    def __init__(self, dx: DistanceMatrix, dy: DistanceMatrix):
        self.dx = dx
        self.dy = dy
        self.int_path = dx.is_integer and dy.is_integer
        self.sx = self.sy = None
        if self.int_path:
            self.top = int(max(dx.diam, dy.diam))
            self.hx = _row_histograms(dx.d, self.top)
            self.hy = _row_histograms(dy.d, self.top)

    def unmatchable(self, k: Curvature, against_x: bool, d: float) -> bool:
        if self.int_path and float(d).is_integer():
            kh = _row_histograms(k.k, self.top)
            target = self.hx if against_x else self.hy
            return bool(_k.any_unmatchable_row_hist(kh, target, int(d)))
        if self.sx is None:
            self.sx = _sorted_rows(self.dx.d)
            self.sy = _sorted_rows(self.dy.d)
        ks = _sorted_rows(k.k)
        target = self.sx if against_x else self.sy
        return bool(_k.any_unmatchable_row_sorted(ks, target, d))

    def verify(self, d: float) -> bool:
        kx = find_bounded_curvature(self.dx, d)
        ky = find_bounded_curvature(self.dy, d)
        if kx.n > self.dy.n or ky.n > self.dx.n:
            return True
        return self.unmatchable(kx, False, d) or self.unmatchable(ky, True, d)


def verify_lower_bound(dx: DistanceMatrix, dy: DistanceMatrix, d) -> bool:
    """Try to certify that the mGH distance of the pair is >= d/2.

    Sound but not complete: True is a proof, False only means this method
    found no certificate at this threshold.
    """
    d = _require_positive(d)
    return _PairContext(dx, dy).verify(d)


def build_difference_set(dx: DistanceMatrix, dy: DistanceMatrix) -> np.ndarray:
    """All candidate thresholds: absolute differences of distance values.

    Thresholds between two consecutive members certify exactly as much as the
    smaller member, so these are the only values worth testing. For a pair of
    integer spaces this collapses to 0..d_max.
    """
    if dx.is_integer and dy.is_integer:
        return np.arange(int(max(dx.diam, dy.diam)) + 1, dtype=np.float64)
    vx = np.unique(np.asarray(dx.d, dtype=np.float64))
    vy = np.unique(np.asarray(dy.d, dtype=np.float64))
    return np.unique(np.abs(vx[:, None] - vy[None, :]).ravel())


def find_lower_bound(dx: DistanceMatrix, dy: DistanceMatrix, *, binary_search: bool = False) -> float:
    """Best certified lower bound for the mGH distance of the pair.

    Scans the difference set from the largest threshold down and returns
    delta/2 for the first delta that verifies, or 0 if none does. The
    descending scan is the default because verification success is not
    monotone in the threshold. binary_search=True bisects instead, which is
    faster but may settle on a smaller certified value.
    """
    deltas = build_difference_set(dx, dy)
    deltas = deltas[deltas > 0]
    ctx = _PairContext(dx, dy)
    if not binary_search:
        for delta in deltas[::-1]:
            if ctx.verify(float(delta)):
                return float(delta) / 2.0
        return 0.0
    lo, hi = 0, len(deltas) - 1
    best = -1
    while lo <= hi:
        mid = (lo + hi) // 2
        if ctx.verify(float(deltas[mid])):
            best = mid
            lo = mid + 1
        else:
            hi = mid - 1
    return float(deltas[best]) / 2.0 if best >= 0 else 0.0

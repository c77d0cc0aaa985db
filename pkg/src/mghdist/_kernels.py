"""Tight numerical loops shared by the bound computations.

Every function here is a pure scalar/array loop, JIT-compiled when numba is
available and executed as plain Python otherwise. Results are identical either
way: the loops only do IEEE float and integer arithmetic in a fixed order.
"""
from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


@njit(cache=True)
def least_bounded_row(a, d):
    """Pick the row to delete when shrinking a matrix toward d-boundedness.

    Scans rows in order, counting off-diagonal entries < d (n_i) and summing
    off-diagonal entries >= d (s_i). Returns the first row index achieving the
    running optimum "largest n_i, then smallest s_i", or -1 when every row has
    n_i = 0, i.e. the matrix is already d-bounded.
    """
    m = a.shape[0]
    best = -1
    best_n = 0
    best_s = 0.0
    for i in range(m):
        n_i = 0
        s_i = 0.0
        for j in range(m):
            if i != j:
                if a[i, j] < d:
                    n_i += 1
                else:
                    s_i += a[i, j]
        if n_i > best_n or (n_i == best_n and s_i < best_s):
            best = i
            best_n = n_i
            best_s = s_i
    return best


@njit(cache=True)
def bounded_submatrix_mask_int(a, d):
    """Iteratively delete least d-bounded rows of an integer matrix.

    Returns the boolean mask of surviving indices. Counts are maintained
    incrementally, which is exact for integer entries and therefore selects
    the same deletion sequence as rescanning the surviving submatrix.
    """
    m = a.shape[0]
    alive = np.ones(m, np.bool_)
    n_cnt = np.zeros(m, np.int64)
    s_sum = np.zeros(m, np.int64)
    for i in range(m):
        for j in range(m):
            if i != j:
                if a[i, j] < d:
                    n_cnt[i] += 1
                else:
                    s_sum[i] += a[i, j]
    while True:
        best = -1
        best_n = np.int64(0)
        best_s = np.int64(0)
        for i in range(m):
            if alive[i]:
                if n_cnt[i] > best_n or (n_cnt[i] == best_n and s_sum[i] < best_s):
                    best = i
                    best_n = n_cnt[i]
                    best_s = s_sum[i]
        if best == -1:
            return alive
        alive[best] = False
        for i in range(m):
            if alive[i]:
                if a[i, best] < d:
                    n_cnt[i] -= 1
                else:
                    s_sum[i] -= a[i, best]


@njit(cache=True)
def bounded_submatrix_mask_float(a, d):
    """Same deletion loop for real-valued matrices.

    Sums are recomputed over the surviving columns on every round so that the
    float accumulation order matches a fresh scan of the submatrix exactly.
    """
    m = a.shape[0]
    alive = np.ones(m, np.bool_)
    while True:
        best = -1
        best_n = 0
        best_s = 0.0
        for i in range(m):
            if not alive[i]:
                continue
            n_i = 0
            s_i = 0.0
            for j in range(m):
                if alive[j] and j != i:
                    if a[i, j] < d:
                        n_i += 1
                    else:
                        s_i += a[i, j]
            if n_i > best_n or (n_i == best_n and s_i < best_s):
                best = i
                best_n = n_i
                best_s = s_i
        if best == -1:
            return alive
        alive[best] = False


@njit(cache=True)
def feasible_sorted(v, u, d):
    """Injective matching of v into u with |v_k - u_h| < d, both sorted.

    Greedy sweep: pair each v entry with the smallest still-available u entry
    in range. Entries of u that are too small can never serve a later v entry
    and are discarded; a u entry that is too large proves infeasibility.
    """
    q = u.shape[0]
    h = 0
    for k in range(v.shape[0]):
        while h < q and v[k] - u[h] >= d:
            h += 1
        if h >= q:
            return False
        if u[h] - v[k] >= d:
            return False
        h += 1
    return True


@njit(cache=True)
def feasible_hist(cv, cu, d):
    """Histogram form of feasible_sorted for integer values and integer d.

    cv and cu count occurrences of the values 0..D; identical entries are
    assigned in bulk, so a decision costs O(D) instead of O(row length).
    """
    top = cv.shape[0] - 1
    h = 0
    avail = cu[0]
    for a in range(top + 1):
        need = cv[a]
        while need > 0:
            if h > top:
                return False
            if h <= a - d:
                h += 1
                avail = cu[h] if h <= top else 0
                continue
            if h - a >= d:
                return False
            if avail == 0:
                h += 1
                avail = cu[h] if h <= top else 0
                continue
            take = need if need < avail else avail
            need -= take
            avail -= take
    return True


@njit(cache=True)
def any_unmatchable_row_sorted(ks, ys, d):
    """True iff some row of ks fits into no row of ys (rows pre-sorted)."""
    for i in range(ks.shape[0]):
        unmatched = True
        for j in range(ys.shape[0]):
            if feasible_sorted(ks[i], ys[j], d):
                unmatched = False
                break
        if unmatched:
            return True
    return False


@njit(cache=True)
def any_unmatchable_row_hist(kh, yh, d):
    """Histogram-path twin of any_unmatchable_row_sorted."""
    for i in range(kh.shape[0]):
        unmatched = True
        for j in range(yh.shape[0]):
            if feasible_hist(kh[i], yh[j], d):
                unmatched = False
                break
        if unmatched:
            return True
    return False


@njit(cache=True)
def greedy_distortion(dx, dy, order):
    """Distortion of the mapping built by greedy single-point insertion.

    Points of the first space are mapped in the given order; each one goes to
    the target index that minimizes the running distortion, the smallest index
    winning ties. Returns the distortion of the completed mapping.
    """
    ny = dy.shape[0]
    targets = np.empty(order.shape[0], np.int64)
    prev = 0.0
    for step in range(order.shape[0]):
        xi = order[step]
        best = np.inf
        best_j = 0
        for j in range(ny):
            cand = prev
            for k in range(step):
                diff = abs(dx[xi, order[k]] - dy[j, targets[k]])
                if diff > cand:
                    cand = diff
                    if cand >= best:
                        break
            if cand < best:
                best = cand
                best_j = j
        targets[step] = best_j
        prev = best
    return prev

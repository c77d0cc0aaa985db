"""Heuristic upper bound for the modified Gromov-Hausdorff distance.

Builds mappings between the two spaces one point at a time: points of the
source are visited in a random order and each is sent to the target point
that keeps the running distortion smallest, ties broken by the smallest
target index. The best of several such mappings in each direction gives
half their larger distortion as the bound.
"""
from __future__ import annotations

import math

import numpy as np

from . import _kernels as _k
from .metric import DistanceMatrix

__all__ = [
    "decide_sample_size",
    "sample_small_distortion",
    "find_upper_bound",
]

_SEED_LIMIT = 2**64


def _check_seed(seed) -> int:
    s = int(seed)
    if not 0 <= s < _SEED_LIMIT:
        raise ValueError(f"seed must fit in an unsigned 64-bit integer, got {seed!r}")
    return s


def decide_sample_size(n: int, m: int) -> int:
    """Default number of mappings to sample from an n-point source.

    ceil(sqrt(n) * ln(n + 1)), never below 1. The codomain size m does not
    influence the default policy but stays in the signature so callers can
    supply their own policy with the same shape.
    """
    n = int(n)
    m = int(m)
    if n < 1 or m < 1:
        raise ValueError("both space sizes must be at least 1")
    return max(1, math.ceil(math.sqrt(n) * math.log(n + 1)))


def _rng(entropy: list[int]) -> np.random.Generator:
    # Philox is counter-based, so streams derived this way are stable
    # across platforms and independent of how many values others draw.
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def sample_small_distortion(dx: DistanceMatrix, dy: DistanceMatrix, seed) -> float:
    """Distortion of one greedily built mapping from dx's space into dy's.

    The seed fixes the visiting order of the source points; each point then
    goes to the target index minimizing the distortion accumulated so far,
    preferring the smallest index on ties. Deterministic given (dx, dy, seed).
    """
    s = _check_seed(seed)
    order = _rng([s]).permutation(dx.n).astype(np.int64)
    fx = np.asarray(dx.d, dtype=np.float64)
    fy = np.asarray(dy.d, dtype=np.float64)
    return float(_k.greedy_distortion(fx, fy, order))


def _best_distortion(fx: np.ndarray, fy: np.ndarray, seed: int, direction: int, count: int) -> float:
    n = fx.shape[0]
    best = np.inf
    for k in range(count):
        order = _rng([seed, direction, k]).permutation(n).astype(np.int64)
        dis = _k.greedy_distortion(fx, fy, order)
        if dis < best:
            best = dis
        if best == 0.0:
            break
    return best


def find_upper_bound(
    dx: DistanceMatrix,
    dy: DistanceMatrix,
    seed,
    *,
    samples_x: int | None = None,
    samples_y: int | None = None,
) -> float:
    """Upper bound on the mGH distance from sampled mappings both ways.

    Draws samples_x mappings from dx's space into dy's and samples_y in the
    reverse direction (defaults decided per direction from the source size),
    keeps the best distortion of each direction, and returns half the larger
    of the two. Sample k of a direction uses a sub-seed derived from
    (seed, direction, k), so a larger budget only extends the sequence and
    can never worsen the result.
    """
    s = _check_seed(seed)
    bx = decide_sample_size(dx.n, dy.n) if samples_x is None else int(samples_x)
    by = decide_sample_size(dy.n, dx.n) if samples_y is None else int(samples_y)
    if bx < 1 or by < 1:
        raise ValueError("sample budgets must be at least 1")
    fx = np.asarray(dx.d, dtype=np.float64)
    fy = np.asarray(dy.d, dtype=np.float64)
    dis_xy = _best_distortion(fx, fy, s, 0, bx)
    dis_yx = _best_distortion(fy, fx, s, 1, by)
    return max(dis_xy, dis_yx) / 2.0

"""Combine both bounds into the reported estimate and quality metrics.

For a pair of spaces the report carries the certified lower bound (clamped
from below by the easy diameter-difference bound), the sampled upper bound,
their midpoint as the estimate, the relative error of the sandwich, and the
utility of the certified bound over the baseline.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .lower_bound import find_lower_bound
from .metric import DistanceMatrix
from .upper_bound import find_upper_bound

__all__ = ["BoundsReport", "baseline_lower", "estimate_mgh"]


@dataclass(frozen=True)
class BoundsReport:
    """Bounds and derived metrics for one pair of metric spaces.

    relative_error is (upper - lower) / (lower + upper) and utility is
    (lower - baseline) / (lower + upper); both are defined as 0 when the
    upper bound is 0 (then both spaces are single points up to isometry
    and every quantity collapses).
    """

    lower: float
    upper: float
    estimate: float
    relative_error: float
    utility: float
    baseline: float
    exact: bool
    elapsed_lower: float
    elapsed_upper: float

    def __post_init__(self):
        if not 0.0 <= self.baseline <= self.lower <= self.upper:
            raise ValueError(
                f"bounds out of order: baseline={self.baseline} lower={self.lower} upper={self.upper}"
            )
        if self.estimate != (self.lower + self.upper) / 2.0:
            raise ValueError("estimate must be the midpoint of the bounds")
        if self.exact != (self.lower == self.upper):
            raise ValueError("exact flag must mirror lower == upper")
        if self.upper == 0.0 and (self.relative_error != 0.0 or self.utility != 0.0):
            raise ValueError("degenerate pair must report zero error and utility")
        if not (0.0 <= self.relative_error <= 1.0 and 0.0 <= self.utility <= 1.0):
            raise ValueError("relative_error and utility must lie in [0, 1]")

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "estimate": self.estimate,
            "relative_error": self.relative_error,
            "utility": self.utility,
            "baseline": self.baseline,
            "exact": self.exact,
            "elapsed_lower": self.elapsed_lower,
            "elapsed_upper": self.elapsed_upper,
        }


def baseline_lower(dx: DistanceMatrix, dy: DistanceMatrix) -> float:
    """Half the diameter difference: the cheapest valid lower bound."""
    return abs(float(dx.diam) - float(dy.diam)) / 2.0


def estimate_mgh(
    dx: DistanceMatrix,
    dy: DistanceMatrix,
    seed,
    *,
    samples_x: int | None = None,
    samples_y: int | None = None,
    binary_search_lb: bool = False,
) -> BoundsReport:
    """Run both bound computations on a pair and assemble the report.

    The certified bound is clamped to at least the baseline so the utility
    metric is never negative. Wall-clock time of each bound is recorded.
    """
    baseline = baseline_lower(dx, dy)

    t0 = time.perf_counter()
    certified = find_lower_bound(dx, dy, binary_search=binary_search_lb)
    t1 = time.perf_counter()
    upper = find_upper_bound(dx, dy, seed, samples_x=samples_x, samples_y=samples_y)
    t2 = time.perf_counter()

    lower = max(certified, baseline)
    if upper > 0.0:
        rel_err = (upper - lower) / (lower + upper)
        utility = (lower - baseline) / (lower + upper)
    else:
        rel_err = 0.0
        utility = 0.0
    return BoundsReport(
        lower=lower,
        upper=upper,
        estimate=(lower + upper) / 2.0,
        relative_error=rel_err,
        utility=utility,
        baseline=baseline,
        exact=lower == upper,
        elapsed_lower=t1 - t0,
        elapsed_upper=t2 - t1,
    )

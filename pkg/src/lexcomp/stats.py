"""Sample statistics: outlier filtering, descriptives, the two-sample
Kolmogorov-Smirnov test, and Spearman rank correlation.

Standard deviations use the sample convention (n-1 denominator) throughout.
All functions are pure and operate on immutable inputs.
"""

from __future__ import annotations

import math
import statistics
from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from scipy.special import stdtr

from .errors import AllFiltered, DegenerateSample


@dataclass(frozen=True, slots=True)
class DescriptiveStats:
    count: int
    mean: float
    std: float
    min: float
    max: float


@dataclass(frozen=True, slots=True)
class KsResult:
    statistic: float
    p_value: float
    n1: int
    n2: int


@dataclass(frozen=True, slots=True)
class SpearmanResult:
    rho: float
    p_value: float
    n: int


def _check_sample(values: Sequence[float], name: str = "sample") -> None:
    if len(values) == 0:
        raise ValueError(f"{name} must be non-empty")
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{name} contains non-finite value {v!r}")


def _sample_std(values: Sequence[float], mean: float) -> float:
    n = len(values)
    if n < 2:
        return 0.0
    return math.sqrt(sum((v - mean) ** 2 for v in values) / (n - 1))


def outlier_bounds(values: Sequence[float], sigma_k: float = 4.0) -> tuple[float, float]:
    """Inclusive keep-range ``mean +- sigma_k * std`` from the unfiltered sample."""
    _check_sample(values)
    mean = statistics.fmean(values)
    spread = sigma_k * _sample_std(values, mean)
    return mean - spread, mean + spread


def filter_outliers(
    values: Sequence[float], sigma_k: float = 4.0, hard_max: float = 100.0
) -> list[float]:
    """Drop values beyond ``sigma_k`` standard deviations or above ``hard_max``.

    A single pass: mean and std come from the unfiltered input. Order is
    preserved. Raises AllFiltered if nothing survives.
    """
    lo, hi = outlier_bounds(values, sigma_k)
    kept = [v for v in values if lo <= v <= hi and v <= hard_max]
    if not kept:
        raise AllFiltered(f"all {len(values)} values removed by outlier filter")
    return kept


def describe(values: Sequence[float]) -> DescriptiveStats:
    _check_sample(values)
    mean = statistics.fmean(values)
    return DescriptiveStats(
        count=len(values),
        mean=mean,
        std=_sample_std(values, mean),
        min=min(values),
        max=max(values),
    )


def _kolmogorov_sf(lam: float) -> float:
    """Asymptotic two-sided KS survival function.

    ``Q(lam) = 2 * sum_{j>=1} (-1)^(j-1) * exp(-2 j^2 lam^2)``, truncated once
    a term drops below 1e-10 or after 100 terms. The series only fails to
    converge within 100 terms for lam near zero, where the limit value is 1.
    """
    if lam <= 0.0:
        return 1.0
    total = 0.0
    sign = 1.0
    for j in range(1, 101):
        term = math.exp(-2.0 * j * j * lam * lam)
        total += sign * term
        if term < 1e-10:
            return min(max(2.0 * total, 0.0), 1.0)
        sign = -sign
    return 1.0


def ks_two_sample(a: Sequence[float], b: Sequence[float]) -> KsResult:
    """Two-sided two-sample Kolmogorov-Smirnov test.

    The statistic is the supremum difference between the two empirical CDFs,
    evaluated right-continuously at the pooled values (ties are safe). The
    p-value uses the asymptotic Kolmogorov distribution with the classic
    small-sample correction ``lam = D * (sqrt(ne) + 0.12 + 0.11/sqrt(ne))``
    where ``ne = n1*n2/(n1+n2)``.
    """
    _check_sample(a, "a")
    _check_sample(b, "b")
    xs = sorted(a)
    ys = sorted(b)
    n1, n2 = len(xs), len(ys)
    d = 0.0
    for v in sorted(set(xs) | set(ys)):
        diff = abs(bisect_right(xs, v) / n1 - bisect_right(ys, v) / n2)
        if diff > d:
            d = diff
    ne = n1 * n2 / (n1 + n2)
    lam = d * (math.sqrt(ne) + 0.12 + 0.11 / math.sqrt(ne))
    return KsResult(statistic=d, p_value=_kolmogorov_sf(lam), n1=n1, n2=n2)


def average_ranks(values: Sequence[float]) -> list[float]:
    """1-based ranks; tied values all receive the mean of their positions."""
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        tied_rank = (i + j) / 2 + 1
        for idx in order[i : j + 1]:
            ranks[idx] = tied_rank
        i = j + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> SpearmanResult:
    """Spearman rank correlation with average ranks for ties.

    rho is the Pearson correlation of the rank vectors. The two-tailed
    p-value uses the t approximation ``t = rho*sqrt((n-2)/(1-rho^2))``
    against Student's t with n-2 degrees of freedom; rho = +-1 yields p = 0.
    """
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    n = len(x)
    if n < 3:
        raise ValueError(f"need at least 3 pairs, got {n}")
    _check_sample(x, "x")
    _check_sample(y, "y")
    rx = average_ranks(x)
    ry = average_ranks(y)
    mx = statistics.fmean(rx)
    my = statistics.fmean(ry)
    sxx = sum((r - mx) ** 2 for r in rx)
    syy = sum((r - my) ** 2 for r in ry)
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateSample("zero rank variance (all values equal)")
    sxy = sum((a - mx) * (b - my) for a, b in zip(rx, ry))
    rho = sxy / math.sqrt(sxx * syy)
    rho = max(-1.0, min(1.0, rho))
    if 1.0 - rho * rho <= 0.0:
        p = 0.0
    else:
        t = rho * math.sqrt((n - 2) / (1.0 - rho * rho))
        p = 2.0 * float(stdtr(n - 2, -abs(t)))
        p = min(max(p, 0.0), 1.0)
    return SpearmanResult(rho=rho, p_value=p, n=n)

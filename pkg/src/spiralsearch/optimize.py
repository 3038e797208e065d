"""Minimize the logarithmic spiral's normalized search cost over its growth rate."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arclength import QuadratureSettings
from .cost import analyze
from .errors import MinimumOnBoundary
from .spirals import SpiralSpec
from .tangency import Tolerances

__all__ = ["OptimizationResult", "normalized_limit_cost", "optimize_kappa"]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OptimizationResult:
    kappa_star: float
    cost_star: float
    bracket: tuple[float, float]
    evaluations: int

    def to_dict(self) -> dict:
        return {
            "kappa_star": self.kappa_star,
            "cost_star": self.cost_star,
            "bracket": list(self.bracket),
            "evaluations": self.evaluations,
        }


def normalized_limit_cost(
    kappa: float,
    tol: Tolerances = Tolerances(),
    q: QuadratureSettings = QuadratureSettings(),
    radius: float = 1.0,
) -> float:
    """Large-R limit of Lambda/R for ``exp(kappa * theta)``.

    The logarithmic spiral is self-similar, so the ratio does not depend on
    R and a single radius suffices.
    """
    if not kappa > 0.0:
        raise ValueError(f"kappa must be > 0, got {kappa!r}")
    return analyze(SpiralSpec.logarithmic(kappa), radius, tol, q).normalized_cost


def optimize_kappa(
    kappa_lo: float = 0.05,
    kappa_hi: float = 1.0,
    x_tol: float = 1e-9,
    tol: Tolerances = Tolerances(),
    q: QuadratureSettings = QuadratureSettings(),
    grid_points: int = 41,
) -> OptimizationResult:
    """Golden-section search for the cost-minimizing kappa in ``[kappa_lo, kappa_hi]``.

    A uniform grid pre-scan first locates the best grid cell; the section
    search then runs on the two cells around it. The returned point is the
    best one evaluated.

    Raises:
        MinimumOnBoundary: if the best grid point is an end of the bracket.
    """
    if not 0.0 < kappa_lo < kappa_hi:
        raise ValueError(f"need 0 < kappa_lo < kappa_hi, got ({kappa_lo!r}, {kappa_hi!r})")
    if not x_tol > 0.0:
        raise ValueError("x_tol must be > 0")
    evaluations = 0
    best = (math.inf, math.nan)

    def cost(k: float) -> float:
        nonlocal evaluations, best
        evaluations += 1
        c = normalized_limit_cost(k, tol, q)
        if c < best[0]:
            best = (c, k)
        return c

    step = (kappa_hi - kappa_lo) / (grid_points - 1)
    grid = [kappa_lo + i * step for i in range(grid_points)]
    grid[-1] = kappa_hi
    values = [cost(k) for k in grid]
    i = min(range(grid_points), key=values.__getitem__)
    if i == 0 or i == grid_points - 1:
        raise MinimumOnBoundary(
            f"grid minimum at kappa={grid[i]!r} lies on the bracket [{kappa_lo!r}, {kappa_hi!r}]"
        )

    lo, hi = grid[i - 1], grid[i + 1]
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = cost(x1), cost(x2)
    while hi - lo > x_tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = cost(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = cost(x2)
    cost_star, kappa_star = best
    return OptimizationResult(kappa_star, cost_star, (lo, hi), evaluations)

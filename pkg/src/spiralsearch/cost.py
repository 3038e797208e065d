"""Search cost Lambda(f) = arclength from -infinity to theta1, and R-sweeps."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .arclength import QuadratureSettings, tail_arclength
from .errors import BadParams, RadiusNotPositive, SpiralSearchError
from .spirals import SpiralSpec
from .tangency import TangencyReport, Tolerances, solve_tangency

__all__ = [
    "CostReport",
    "SweepRow",
    "Divergence",
    "analyze",
    "sweep",
    "classify_divergence",
    "BoundKind",
    "example_lower_bound",
    "DIVERGENCE_THRESHOLD",
]

# Slightly above the conjectured optimum of the normalized cost.
DIVERGENCE_THRESHOLD = 13.82


@dataclass(frozen=True)
class CostReport:
    tangency: TangencyReport
    lam: float
    normalized_cost: float

    def to_dict(self) -> dict:
        return {
            "tangency": self.tangency.to_dict(),
            "lambda": self.lam,
            "normalized_cost": self.normalized_cost,
        }


@dataclass(frozen=True)
class SweepRow:
    """One radius of a sweep. Failed rows carry NaNs and an error message."""

    radius: float
    theta0: float
    theta1: float
    lam: float
    normalized_cost: float
    error: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "theta0_rad": self.theta0,
            "theta1_rad": self.theta1,
            "lambda": self.lam,
            "normalized_cost": self.normalized_cost,
            "error": self.error,
        }


class Divergence(str, enum.Enum):
    DIVERGING = "diverging"
    BOUNDED = "bounded"
    UNDETERMINED = "undetermined"


def analyze(
    spec: SpiralSpec,
    radius: float,
    tol: Tolerances = Tolerances(),
    q: QuadratureSettings = QuadratureSettings(),
) -> CostReport:
    """Cost of finding every line that strikes the circle ``r = radius``."""
    report = solve_tangency(spec, radius, tol)
    lam = tail_arclength(spec, report.theta1, q)
    return CostReport(report, lam, lam / radius)


def sweep(
    spec: SpiralSpec,
    radii: Sequence[float],
    tol: Tolerances = Tolerances(),
    q: QuadratureSettings = QuadratureSettings(),
) -> list[SweepRow]:
    """Analyze each radius independently; a failing radius does not stop the sweep."""
    radii = [float(r) for r in radii]
    if any(r <= 0.0 for r in radii):
        raise RadiusNotPositive("all sweep radii must be > 0")
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("sweep radii must be strictly increasing")
    rows = []
    for r in radii:
        try:
            c = analyze(spec, r, tol, q)
        except SpiralSearchError as exc:
            nan = math.nan
            rows.append(SweepRow(r, nan, nan, nan, nan, f"{exc.code}: {exc}"))
            continue
        rows.append(SweepRow(r, c.tangency.theta0, c.tangency.theta1, c.lam, c.normalized_cost))
    return rows


def classify_divergence(rows: Iterable[SweepRow]) -> Divergence:
    """Heuristic trend label for a sweep; suggestive only, never a proof.

    Diverging when the last three normalized costs strictly increase and the
    last exceeds :data:`DIVERGENCE_THRESHOLD`; bounded when they are flat to
    1e-6 relative or decreasing.
    """
    costs = [r.normalized_cost for r in rows if r.error is None]
    if len(costs) < 3:
        return Divergence.UNDETERMINED
    x, y, z = costs[-3:]
    if x < y < z and z > DIVERGENCE_THRESHOLD:
        return Divergence.DIVERGING
    if abs(z - x) <= 1e-6 * abs(z) or x >= y >= z:
        return Divergence.BOUNDED
    return Divergence.UNDETERMINED


class BoundKind(str, enum.Enum):
    ARCHIMEDEAN = "arch"
    STRETCHED_A_GT_1 = "sexp_a_gt_1"
    STRETCHED_A_LT_1 = "sexp_a_lt_1"
    POWER_EXP = "pexp"


def example_lower_bound(kind: BoundKind | str, theta0: float, **params: float) -> float:
    """Closed-form lower bounds on the normalized cost, written in terms of theta0.

    ``arch`` (keyword ``kappa``, which cancels out) gives
    ``sqrt(1 + theta0**2) / 2``; ``sexp_a_gt_1`` and ``sexp_a_lt_1``
    (keyword ``a``) give ``sqrt(1 + a**2 theta0**(2a-2))``, the latter
    times ``theta0**(1-a) / a``; ``pexp`` (keyword ``b``) gives the ratio
    that tends to ``2 e**pi``.
    """
    try:
        kind = BoundKind(kind)
    except ValueError:
        raise BadParams(f"unknown bound {kind!r}") from None
    if not theta0 > 0.0:
        raise BadParams(f"theta0 must be > 0, got {theta0!r}")
    expected = {
        BoundKind.ARCHIMEDEAN: {"kappa"},
        BoundKind.STRETCHED_A_GT_1: {"a"},
        BoundKind.STRETCHED_A_LT_1: {"a"},
        BoundKind.POWER_EXP: {"b"},
    }[kind]
    given = {k for k, v in params.items() if v is not None}
    if kind is BoundKind.ARCHIMEDEAN:
        if not given <= expected:
            raise BadParams(f"{kind.value} accepts only {sorted(expected)}, got {sorted(given)}")
    elif given != expected:
        raise BadParams(f"{kind.value} needs exactly {sorted(expected)}, got {sorted(given)}")
    for k in given:
        if not params[k] > 0.0:
            raise BadParams(f"{k} must be > 0")

    t = theta0
    if kind is BoundKind.ARCHIMEDEAN:
        return 0.5 * math.sqrt(1.0 + t * t)
    if kind is BoundKind.POWER_EXP:
        b = params["b"]
        # log form keeps (t + pi)**b / t**(b + 1) finite for large t
        log_ratio = b * math.log1p(math.pi / t) - math.log(t)
        return math.sqrt(2.0) * math.exp(math.pi + log_ratio) * math.hypot(t, b + t)
    a = params["a"]
    if kind is BoundKind.STRETCHED_A_GT_1 and not a > 1.0:
        raise BadParams("sexp_a_gt_1 needs a > 1")
    if kind is BoundKind.STRETCHED_A_LT_1 and not a < 1.0:
        raise BadParams("sexp_a_lt_1 needs a < 1")
    root = math.sqrt(1.0 + a * a * t ** (2.0 * a - 2.0))
    if kind is BoundKind.STRETCHED_A_GT_1:
        return root
    return root * t ** (1.0 - a) / a

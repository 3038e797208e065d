"""Planar spiral search strategies for an unknown line.

Computes the first tangency angle, the repetition angle and the arclength
search cost of a spiral against a circle of radius R, and the growth rate
that makes the logarithmic spiral cheapest.
"""

from .arclength import QuadratureSettings, arclength_between, arclength_integrand, tail_arclength
from .cost import BoundKind, CostReport, SweepRow, analyze, example_lower_bound, sweep
from .errors import *  # noqa: F401,F403
from .lines import (
    Line,
    circle_tangency_angle,
    distance_to_origin,
    line_through_point_with_direction,
    signed_offset,
    tangent_line_at,
)
from .optimize import OptimizationResult, normalized_limit_cost, optimize_kappa
from .spirals import SpiralSpec, Variant, eval_derivative, eval_radius, parse_spiral, support_floor
from .tangency import (
    TangencyReport,
    Tolerances,
    first_tangency_angle,
    second_contact_angle,
    solve_tangency,
    theorem4_residual,
)

__version__ = "0.1.0"

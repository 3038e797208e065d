"""Exception hierarchy for spiral search computations."""

from __future__ import annotations


class SpiralSearchError(Exception):
    """Base class for every error raised by this package."""

    code = "spiral_search_error"


class InvalidSpiral(SpiralSearchError, ValueError):
    code = "invalid_spiral"


class NonDifferentiablePoint(SpiralSearchError, ValueError):
    """The derivative of a spiral was requested exactly at a kink or cusp."""

    code = "non_differentiable_point"


class ZeroDirection(SpiralSearchError, ValueError):
    code = "zero_direction"


class DegeneratePoint(SpiralSearchError, ValueError):
    """Both f and f' vanish, so the curve has no tangent direction."""

    code = "degenerate_point"


class NotTangent(SpiralSearchError, ValueError):
    code = "not_tangent"


class RadiusNotPositive(SpiralSearchError, ValueError):
    code = "radius_not_positive"


class ScanExhausted(SpiralSearchError, RuntimeError):
    """No sign change was found within the allowed scan span."""

    code = "scan_exhausted"


class MaxDepthExceeded(SpiralSearchError, RuntimeError):
    code = "max_depth_exceeded"


class BadParams(SpiralSearchError, ValueError):
    code = "bad_params"


class MinimumOnBoundary(SpiralSearchError, RuntimeError):
    """The grid pre-scan located the minimum at an end of the bracket."""

    code = "minimum_on_boundary"

"""Normalized implicit lines and spiral tangent geometry."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegeneratePoint, NotTangent, ZeroDirection
from .spirals import SpiralSpec, eval_derivative, eval_radius

__all__ = [
    "Line",
    "line_through_point_with_direction",
    "distance_to_origin",
    "tangent_line_at",
    "signed_offset",
    "circle_tangency_angle",
    "unwrap_near",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Line:
    """The line ``a*x + b*y + c = 0`` with ``a**2 + b**2 == 1``.

    Build lines with :func:`line_through_point_with_direction`; the
    normalization is not re-checked here.
    """

    a: float
    b: float
    c: float

    @property
    def slope(self) -> float:
        """dy/dx of the line; infinite for vertical lines."""
        if self.b == 0.0:
            return math.inf
        return -self.a / self.b

    def to_dict(self) -> dict[str, float]:
        return {"a": self.a, "b": self.b, "c": self.c}


def line_through_point_with_direction(px: float, py: float, tx: float, ty: float) -> Line:
    norm = math.hypot(tx, ty)
    if norm == 0.0:
        raise ZeroDirection("direction vector is (0, 0)")
    a = -ty / norm
    b = tx / norm
    # hypot-normalized components can drift one ulp off the unit circle
    s = math.hypot(a, b)
    a, b = a / s, b / s
    return Line(a, b, -(a * px + b * py))


def distance_to_origin(line: Line) -> float:
    return abs(line.c)


def tangent_line_at(spec: SpiralSpec, theta: float) -> Line:
    """Tangent line to the spiral at parameter ``theta``.

    The direction is the velocity ``d/dtheta (f cos, f sin)``, so vertical
    tangents need no special case.
    """
    f = eval_radius(spec, theta)
    df = eval_derivative(spec, theta)
    if f == 0.0 and df == 0.0:
        raise DegeneratePoint(f"f and f' both vanish at theta={theta}")
    cos, sin = math.cos(theta), math.sin(theta)
    return line_through_point_with_direction(
        f * cos, f * sin, df * cos - f * sin, df * sin + f * cos
    )


def signed_offset(spec: SpiralSpec, theta: float, line: Line) -> float:
    """Signed distance of the spiral point at ``theta`` from ``line``."""
    f = eval_radius(spec, theta)
    return line.a * f * math.cos(theta) + line.b * f * math.sin(theta) + line.c


def circle_tangency_angle(line: Line, radius: float, tol: float = 1e-9) -> float:
    """Polar angle in [0, 2pi) where ``line`` touches the circle ``r = radius``.

    ``tol`` is relative to ``max(1, radius)``.
    """
    if abs(distance_to_origin(line) - radius) > tol * max(1.0, radius):
        raise NotTangent(
            f"line is at distance {distance_to_origin(line)!r}, not {radius!r}"
        )
    angle = math.atan2(-line.c * line.b, -line.c * line.a)
    if angle < 0.0:
        angle += TWO_PI
    return 0.0 if angle >= TWO_PI else angle


def unwrap_near(angle: float, reference: float) -> float:
    """The representative ``angle + 2*pi*k`` closest to ``reference``."""
    return angle + TWO_PI * round((reference - angle) / TWO_PI)

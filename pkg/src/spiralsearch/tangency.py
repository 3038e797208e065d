"""First tangency angle, critical line and repetition angle.

For radius R the critical line L is the first spiral tangent that also
touches the circle r = R. Its spiral contact theta0 solves

    R**2 * (f**2 + f'**2) = f**4

and the repetition angle theta1 is the next parameter at which the spiral
crosses L. Both are found by a forward scan followed by bisection.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Callable

from .errors import NonDifferentiablePoint, RadiusNotPositive, ScanExhausted
from .lines import (
    Line,
    circle_tangency_angle,
    signed_offset,
    tangent_line_at,
    unwrap_near,
)
from .spirals import SpiralSpec, eval_derivative, eval_radius, support_floor

__all__ = [
    "Tolerances",
    "TangencyReport",
    "theorem4_residual",
    "first_tangency_angle",
    "second_contact_angle",
    "solve_tangency",
]

_EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class Tolerances:
    """Root-finding controls shared by the tangency solver.

    Attributes:
        scan_step: forward scan increment in radians.
        root_interval: bisection stops once the bracket is this narrow.
        residual_rel: accepted tangency residual relative to ``f**4``.
        theta1_skip: offset past theta0 where the theta1 scan starts,
            scaled by ``max(1, |theta0|)``.
        max_scan_span: give up after scanning this many radians.
    """

    scan_step: float = 0.01
    root_interval: float = 1e-12
    residual_rel: float = 1e-10
    theta1_skip: float = 1e-6
    max_scan_span: float = 1e5

    def __post_init__(self) -> None:
        for name in ("scan_step", "root_interval", "residual_rel", "theta1_skip", "max_scan_span"):
            value = getattr(self, name)
            if not value > 0.0:
                raise ValueError(f"{name} must be > 0, got {value!r}")
        if not self.root_interval < self.scan_step:
            raise ValueError("root_interval must be smaller than scan_step")


@dataclass(frozen=True)
class TangencyReport:
    theta0: float
    critical_line: Line
    circle_touch_angle: float
    theta1: float
    radius: float

    @property
    def circle_touch_unwrapped(self) -> float:
        """Circle contact angle shifted by whole turns to lie nearest theta0."""
        return unwrap_near(self.circle_touch_angle, self.theta0)

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "theta0_rad": self.theta0,
            "theta0_deg": math.degrees(self.theta0),
            "theta1_rad": self.theta1,
            "theta1_deg": math.degrees(self.theta1),
            "circle_touch_rad": self.circle_touch_angle,
            "circle_touch_deg": math.degrees(self.circle_touch_unwrapped),
            "critical_line": self.critical_line.to_dict(),
        }


def theorem4_residual(spec: SpiralSpec, theta: float, radius: float) -> float:
    """``R**2 * (f**2 + f'**2) - f**4``; positive while L lies inside the circle."""
    f = eval_radius(spec, theta)
    df = eval_derivative(spec, theta)
    f2 = f * f
    return radius * radius * (f2 + df * df) - f2 * f2


def _bisect(pred: Callable[[float], bool], lo: float, hi: float, width: float) -> tuple[float, float]:
    """Shrink ``[lo, hi]`` keeping ``pred(lo)`` false and ``pred(hi)`` true."""
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def _reach_angle(spec: SpiralSpec, radius: float, tol: Tolerances) -> float:
    """Smallest theta with ``f(theta) >= radius`` (to ``root_interval``)."""
    reached = lambda t: eval_radius(spec, t) >= radius  # noqa: E731
    base = support_floor(spec)
    base = 0.0 if base is None else base
    step = 1.0
    if reached(base):
        hi, lo = base, base - step
        while reached(lo):
            if base - lo > tol.max_scan_span:
                raise ScanExhausted("spiral never falls below the radius")
            hi, lo, step = lo, lo - 2.0 * step, 2.0 * step
    else:
        lo, hi = base, base + step
        while not reached(hi):
            if hi - base > tol.max_scan_span:
                raise ScanExhausted(f"spiral does not reach radius {radius!r}")
            lo, hi, step = hi, hi + 2.0 * step, 2.0 * step
    return _bisect(reached, lo, hi, tol.root_interval)[1]


def first_tangency_angle(spec: SpiralSpec, radius: float, tol: Tolerances = Tolerances()) -> float:
    """Angle theta0 of the first spiral tangent at distance ``radius`` from the origin.

    The scan starts where the spiral first reaches the circle (no root can
    lie earlier since ``f(theta0) >= radius``) and stops at the first
    point where the residual turns negative, so isolated touching roots of
    the residual are passed over.
    """
    if not radius > 0.0:
        raise RadiusNotPositive(f"radius must be > 0, got {radius!r}")

    def negative(t: float) -> bool:
        try:
            return theorem4_residual(spec, t, radius) < 0.0
        except NonDifferentiablePoint:
            return False  # only reachable at cusps where f' -> inf

    start = _reach_angle(spec, radius, tol)
    prev = start
    k = 0
    while True:
        k += 1
        cur = start + k * tol.scan_step
        if negative(cur):
            break
        if cur - start > tol.max_scan_span:
            raise ScanExhausted("no sign change of the tangency residual")
        prev = cur
    lo, hi = _bisect(negative, prev, cur, tol.root_interval)

    def size(t: float) -> float:
        try:
            return abs(theorem4_residual(spec, t, radius))
        except NonDifferentiablePoint:
            return math.inf

    return lo if size(lo) <= size(hi) else hi


def second_contact_angle(
    spec: SpiralSpec, theta0: float, line: Line, tol: Tolerances = Tolerances()
) -> float:
    """First transversal crossing of ``line`` by the spiral after ``theta0``.

    theta0 is a double root of the offset, so the offset keeps one sign
    just past it and the first sign change is the second contact.
    """

    def noise(t: float) -> float:
        return 64.0 * _EPS * max(eval_radius(spec, t), abs(line.c), 1e-300)

    t = theta0 + tol.theta1_skip * max(1.0, abs(theta0))
    limit = theta0 + tol.max_scan_span
    ref = signed_offset(spec, t, line)
    while abs(ref) <= noise(t):
        t += tol.scan_step
        if t > limit:
            raise ScanExhausted("spiral never leaves the critical line")
        ref = signed_offset(spec, t, line)
    side = math.copysign(1.0, ref)

    crossed = lambda s: signed_offset(spec, s, line) * side < 0.0  # noqa: E731
    start = t
    k = 0
    while True:
        k += 1
        cur = start + k * tol.scan_step
        if crossed(cur):
            break
        if cur > limit:
            raise ScanExhausted("no second contact with the critical line")
        t = cur
    lo, hi = _bisect(crossed, t, cur, tol.root_interval)
    return 0.5 * (lo + hi)


def solve_tangency(spec: SpiralSpec, radius: float, tol: Tolerances = Tolerances()) -> TangencyReport:
    theta0 = first_tangency_angle(spec, radius, tol)
    line = tangent_line_at(spec, theta0)
    touch = circle_tangency_angle(line, radius, tol=max(tol.residual_rel, 1e-9))
    theta1 = second_contact_angle(spec, theta0, line, tol)
    return TangencyReport(theta0, line, touch, theta1, radius)


"""Arclength of spiral arcs, including the improper tail from -infinity."""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import special

from . import _quadrature
from .spirals import SpiralSpec, Variant, eval_derivative, eval_radius

__all__ = [
    "QuadratureSettings",
    "arclength_integrand",
    "arclength_between",
    "tail_arclength",
    "tail_arclength_with_error",
]


@dataclass(frozen=True)
class QuadratureSettings:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_depth: int = 60
    tail_epsilon: float = 1e-12

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0 and self.abs_tol > 0 and self.tail_epsilon > 0):
            raise ValueError("quadrature tolerances must be positive")
        if self.max_depth < 10:
            raise ValueError("max_depth must be at least 10")


def arclength_integrand(spec: SpiralSpec, theta: float) -> float:
    """Speed ``sqrt(f**2 + f'**2)`` of the polar curve at ``theta``."""
    return math.hypot(eval_radius(spec, theta), eval_derivative(spec, theta))


def _singular_exponent(spec: SpiralSpec) -> float | None:
    """Exponent p < 1 for families whose f' blows up like |theta|**(p-1) at 0."""
    if spec.variant is Variant.STRETCHED_EXP and spec.exp_a < 1.0:
        return spec.exp_a
    if spec.variant is Variant.POWER_EXP and spec.exp_b < 1.0:
        return spec.exp_b
    return None


def _piece(spec: SpiralSpec, lo: float, hi: float, q: QuadratureSettings) -> float:
    """Integrate over a piece that does not straddle 0."""
    p = _singular_exponent(spec)
    if p is not None and -1.0 <= lo and hi <= 1.0:
        # theta = +-t**(1/p) removes the |theta|**(p-1) blow-up of f'
        side = 1.0 if hi > 0.0 else -1.0
        inv = 1.0 / p

        def mapped(t: float) -> float:
            theta = side * t**inv
            return arclength_integrand(spec, theta) * inv * t ** (inv - 1.0)

        ta, tb = sorted((abs(lo) ** p, abs(hi) ** p))
        value, _ = _quadrature.integrate(mapped, ta, tb, q.rel_tol, q.abs_tol, q.max_depth)
        return value
    value, _ = _quadrature.integrate(
        lambda t: arclength_integrand(spec, t), lo, hi, q.rel_tol, q.abs_tol, q.max_depth
    )
    return value


def arclength_between(
    spec: SpiralSpec, lo: float, hi: float, q: QuadratureSettings = QuadratureSettings()
) -> float:
    """Arclength of the spiral for ``lo <= theta <= hi``.

    The interval is split at 0 (the support floor of ``arch``/``pexp`` and
    the cusp of ``sexp``), and near 0 for ``sexp`` with ``a < 1`` and
    ``pexp`` with ``b < 1``, so kinks are never sampled.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError("arclength bounds must be finite")
    if lo > hi:
        raise ValueError(f"lo must not exceed hi, got [{lo!r}, {hi!r}]")
    if lo == hi:
        return 0.0
    v = spec.variant
    if v is Variant.LOGARITHMIC:
        cuts = [lo, hi]
    else:
        if v in (Variant.ARCHIMEDEAN, Variant.POWER_EXP):
            if hi <= 0.0:
                return 0.0
            lo = max(lo, 0.0)
        marks = (-1.0, 0.0, 1.0) if _singular_exponent(spec) is not None else (0.0,)
        cuts = [lo] + [m for m in marks if lo < m < hi] + [hi]
    return math.fsum(_piece(spec, a, b, q) for a, b in zip(cuts, cuts[1:]))


def _stretched_discard(a: float, cut: float) -> float:
    """Upper bound on the sexp arclength below ``cut < 0``.

    Uses ``speed <= f + f'`` with ``int f = Gamma(1/a, |cut|**a) / a`` and
    ``int f' = f(cut)``.
    """
    u = (-cut) ** a
    body = special.gammaincc(1.0 / a, u) * special.gamma(1.0 / a) / a
    return float(body) + math.exp(-u)


def tail_arclength_with_error(
    spec: SpiralSpec, hi: float, q: QuadratureSettings = QuadratureSettings()
) -> tuple[float, float]:
    """Arclength from -infinity to ``hi`` together with a truncation bound.

    The bound is 0 wherever the tail is evaluated exactly.
    """
    v = spec.variant
    if v is Variant.LOGARITHMIC:
        k = spec.kappa
        return math.sqrt(1.0 + k * k) / k * eval_radius(spec, hi), 0.0
    if v in (Variant.ARCHIMEDEAN, Variant.POWER_EXP):
        return (arclength_between(spec, 0.0, hi, q) if hi > 0.0 else 0.0), 0.0

    a = spec.exp_a
    eps = q.tail_epsilon
    while eps > 1e-300:
        cut = -math.log(1.0 / eps) ** (1.0 / a)
        if cut < hi:
            core = arclength_between(spec, cut, hi, q)
            discard = _stretched_discard(a, cut)
            if discard <= q.tail_epsilon * core:
                return core, discard
        eps *= 1e-3
    # hi is so far out that the whole tail is below double precision
    return 0.0, _stretched_discard(a, hi)


def tail_arclength(spec: SpiralSpec, hi: float, q: QuadratureSettings = QuadratureSettings()) -> float:
    return tail_arclength_with_error(spec, hi, q)[0]

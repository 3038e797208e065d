"""Spiral families r = f(theta) and their pointwise evaluation.

Four families are supported:

* ``log``  -- logarithmic, ``C * exp(kappa * theta)``
* ``arch`` -- Archimedean, ``kappa * theta`` for ``theta >= 0`` and 0 below
* ``sexp`` -- stretched exponential, ``exp(theta**a)`` for ``theta >= 0`` and
  ``exp(-|theta|**a)`` below
* ``pexp`` -- power exponential, ``theta**b * exp(theta)`` for ``theta >= 0``
  and 0 below

All are nonnegative, nondecreasing, vanish at -inf and grow without bound.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidSpiral, NonDifferentiablePoint

__all__ = [
    "Variant",
    "SpiralSpec",
    "parse_spiral",
    "eval_radius",
    "eval_derivative",
    "support_floor",
]


class Variant(str, enum.Enum):
    LOGARITHMIC = "log"
    ARCHIMEDEAN = "arch"
    STRETCHED_EXP = "sexp"
    POWER_EXP = "pexp"


# Parameters each variant carries, in canonical (text encoding) order.
_PARAMS = {
    Variant.LOGARITHMIC: ("kappa", "amplitude"),
    Variant.ARCHIMEDEAN: ("kappa",),
    Variant.STRETCHED_EXP: ("exp_a",),
    Variant.POWER_EXP: ("exp_b",),
}
_TEXT_KEYS = {"kappa": "kappa", "amplitude": "C", "exp_a": "a", "exp_b": "b"}
_ALIASES = {
    "log": Variant.LOGARITHMIC,
    "logarithmic": Variant.LOGARITHMIC,
    "arch": Variant.ARCHIMEDEAN,
    "archimedean": Variant.ARCHIMEDEAN,
    "sexp": Variant.STRETCHED_EXP,
    "stretched": Variant.STRETCHED_EXP,
    "pexp": Variant.POWER_EXP,
    "powerexp": Variant.POWER_EXP,
}


@dataclass(frozen=True)
class SpiralSpec:
    """One member of a spiral family.

    Use the named constructors (:meth:`logarithmic`, :meth:`archimedean`,
    :meth:`stretched_exp`, :meth:`power_exp`) or :func:`parse_spiral`.
    Parameters are validated here once so evaluation stays cheap.
    """

    variant: Variant
    kappa: Optional[float] = None
    amplitude: Optional[float] = None
    exp_a: Optional[float] = None
    exp_b: Optional[float] = None

    def __post_init__(self) -> None:
        try:
            variant = Variant(self.variant)
        except ValueError:
            raise InvalidSpiral(f"unknown spiral variant {self.variant!r}") from None
        object.__setattr__(self, "variant", variant)
        wanted = _PARAMS[variant]
        for name in ("kappa", "amplitude", "exp_a", "exp_b"):
            value = getattr(self, name)
            if name not in wanted:
                if value is not None:
                    raise InvalidSpiral(f"{variant.value} spiral takes no {name!r}")
                continue
            if value is None:
                raise InvalidSpiral(f"{variant.value} spiral requires {name!r}")
            value = float(value)
            if not math.isfinite(value) or value <= 0.0:
                raise InvalidSpiral(f"{name} must be finite and > 0, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def logarithmic(cls, kappa: float, amplitude: float = 1.0) -> "SpiralSpec":
        return cls(Variant.LOGARITHMIC, kappa=kappa, amplitude=amplitude)

    @classmethod
    def archimedean(cls, kappa: float) -> "SpiralSpec":
        return cls(Variant.ARCHIMEDEAN, kappa=kappa)

    @classmethod
    def stretched_exp(cls, a: float) -> "SpiralSpec":
        return cls(Variant.STRETCHED_EXP, exp_a=a)

    @classmethod
    def power_exp(cls, b: float) -> "SpiralSpec":
        return cls(Variant.POWER_EXP, exp_b=b)

    def params(self) -> dict[str, float]:
        """Present parameters keyed by their text-encoding names."""
        return {_TEXT_KEYS[n]: getattr(self, n) for n in _PARAMS[self.variant]}

    def to_text(self) -> str:
        """Canonical text form, e.g. ``"log:kappa=0.2,C=1"``."""
        body = ",".join(f"{k}={v!r}" for k, v in self.params().items())
        return f"{self.variant.value}:{body}"

    def __str__(self) -> str:
        return self.to_text()


def parse_spiral(text: str) -> SpiralSpec:
    """Parse the text encoding ``family:key=value,...`` (case-insensitive).

    >>> parse_spiral("ARCH:Kappa=2")
    SpiralSpec(variant=<Variant.ARCHIMEDEAN: 'arch'>, kappa=2.0, amplitude=None, exp_a=None, exp_b=None)

    The logarithmic amplitude ``C`` defaults to 1 when omitted.
    """
    family, sep, body = text.strip().partition(":")
    variant = _ALIASES.get(family.strip().lower())
    if variant is None:
        raise InvalidSpiral(f"unknown spiral family {family!r}")
    by_key = {_TEXT_KEYS[n].lower(): n for n in _PARAMS[variant]}
    kwargs: dict[str, float] = {}
    for item in filter(None, (p.strip() for p in body.split(","))) if sep else ():
        key, eq, raw = item.partition("=")
        key = key.strip().lower()
        if not eq or key not in by_key:
            raise InvalidSpiral(f"unknown or malformed parameter {item!r} for {variant.value}")
        name = by_key[key]
        if name in kwargs:
            raise InvalidSpiral(f"duplicate parameter {key!r}")
        try:
            kwargs[name] = float(raw)
        except ValueError:
            raise InvalidSpiral(f"parameter {key!r} is not a number: {raw!r}") from None
    if variant is Variant.LOGARITHMIC:
        kwargs.setdefault("amplitude", 1.0)
    return SpiralSpec(variant, **kwargs)


def _exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def eval_radius(spec: SpiralSpec, theta: float) -> float:
    """Radius f(theta); exactly 0 below the support floor."""
    v = spec.variant
    if v is Variant.LOGARITHMIC:
        return spec.amplitude * _exp(spec.kappa * theta)
    if v is Variant.ARCHIMEDEAN:
        return spec.kappa * theta if theta >= 0.0 else 0.0
    if v is Variant.STRETCHED_EXP:
        if theta >= 0.0:
            return _exp(theta**spec.exp_a)
        return math.exp(-((-theta) ** spec.exp_a))
    if theta < 0.0:
        return 0.0
    return theta**spec.exp_b * _exp(theta)


def eval_derivative(spec: SpiralSpec, theta: float) -> float:
    """Analytic f'(theta).

    Raises:
        NonDifferentiablePoint: at ``theta == 0`` for the Archimedean
            spiral, for ``pexp`` with ``b <= 1`` and for ``sexp`` with
            ``a < 1``, where the one-sided derivatives disagree or diverge.
    """
    v = spec.variant
    if v is Variant.LOGARITHMIC:
        return spec.kappa * spec.amplitude * _exp(spec.kappa * theta)
    if v is Variant.ARCHIMEDEAN:
        if theta == 0.0:
            raise NonDifferentiablePoint("Archimedean spiral has a kink at theta=0")
        return spec.kappa if theta > 0.0 else 0.0
    if v is Variant.STRETCHED_EXP:
        a = spec.exp_a
        if theta == 0.0:
            if a < 1.0:
                raise NonDifferentiablePoint(f"sexp a={a} has an infinite slope at theta=0")
            return 1.0 if a == 1.0 else 0.0
        s = abs(theta)
        g = s**a
        return a * s ** (a - 1.0) * (_exp(g) if theta > 0.0 else math.exp(-g))
    b = spec.exp_b
    if theta < 0.0:
        return 0.0
    if theta == 0.0:
        if b <= 1.0:
            raise NonDifferentiablePoint(f"pexp b={b} is not differentiable at theta=0")
        return 0.0
    return (b * theta ** (b - 1.0) + theta**b) * _exp(theta)


def support_floor(spec: SpiralSpec) -> Optional[float]:
    """Angle below which f vanishes identically, or None if f > 0 everywhere."""
    if spec.variant in (Variant.ARCHIMEDEAN, Variant.POWER_EXP):
        return 0.0
    return None

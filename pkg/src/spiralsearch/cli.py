"""Command-line front end.

Examples::

    spiralsearch figure1
    spiralsearch optimize --kappa-min 0.05 --kappa-max 1
    spiralsearch analyze --spiral arch:kappa=1 --radius 6
    spiralsearch sweep --spiral sexp:a=2 --radius-start 1 --radius-end 1e4 \\
        --points 5 --log-spacing --format csv
    spiralsearch bounds --bound pexp --theta0 1e4 --b 1
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from typing import Optional, Sequence

from . import __version__
from .arclength import QuadratureSettings
from .cost import BoundKind, analyze, classify_divergence, example_lower_bound, sweep
from .errors import InvalidSpiral, SpiralSearchError
from .optimize import optimize_kappa
from .serialize import dumps, to_csv
from .spirals import SpiralSpec, parse_spiral
from .tangency import Tolerances

log = logging.getLogger("spiralsearch")

FIGURE1_SPIRAL = "arch:kappa=1"
FIGURE1_RADIUS = 6.0
SWEEP_HEADER = ("radius", "theta0_rad", "theta1_rad", "lambda", "normalized_cost")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def _spiral(text: str) -> SpiralSpec:
    try:
        return parse_spiral(text)
    except InvalidSpiral as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (value > 0.0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be a finite positive number, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--angle-unit", choices=("rad", "deg"), default="rad",
                        help="unit of sweep angle columns (JSON reports carry both)")
    common.add_argument("-v", "--verbose", action="store_true")
    tol = common.add_argument_group("tolerances")
    defaults_t, defaults_q = Tolerances(), QuadratureSettings()
    for name in ("scan_step", "root_interval", "residual_rel", "theta1_skip", "max_scan_span"):
        tol.add_argument("--" + name.replace("_", "-"), type=_positive, default=getattr(defaults_t, name))
    for name in ("rel_tol", "abs_tol", "tail_epsilon"):
        tol.add_argument("--" + name.replace("_", "-"), type=_positive, default=getattr(defaults_q, name))
    tol.add_argument("--max-depth", type=int, default=defaults_q.max_depth)

    parser = _Parser(prog="spiralsearch", description="Spiral search strategies for an unknown line.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="cost of one spiral at one radius")
    p.add_argument("--spiral", type=_spiral, required=True)
    p.add_argument("--radius", type=_positive, required=True)

    p = sub.add_parser("sweep", parents=[common], help="normalized cost over a range of radii")
    p.add_argument("--spiral", type=_spiral, required=True)
    p.add_argument("--radius-start", type=_positive, required=True)
    p.add_argument("--radius-end", type=_positive, required=True)
    p.add_argument("--points", type=int, default=10)
    p.add_argument("--log-spacing", action="store_true")

    p = sub.add_parser("optimize", parents=[common], help="best logarithmic spiral growth rate")
    p.add_argument("--kappa-min", type=_positive, default=0.05)
    p.add_argument("--kappa-max", type=_positive, default=1.0)
    p.add_argument("--x-tol", type=_positive, default=1e-9)

    sub.add_parser("figure1", parents=[common], help="r = theta against the circle R = 6")

    p = sub.add_parser("bounds", parents=[common], help="closed-form lower bounds at theta0")
    p.add_argument("--bound", choices=[k.value for k in BoundKind], required=True)
    p.add_argument("--theta0", type=_positive, required=True)
    p.add_argument("--a", type=_positive)
    p.add_argument("--b", type=_positive)
    p.add_argument("--kappa", type=_positive)
    return parser


def _settings(args: argparse.Namespace) -> tuple[Tolerances, QuadratureSettings]:
    try:
        tol = Tolerances(args.scan_step, args.root_interval, args.residual_rel,
                         args.theta1_skip, args.max_scan_span)
        q = QuadratureSettings(args.rel_tol, args.abs_tol, args.max_depth, args.tail_epsilon)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return tol, q


def _radii(args: argparse.Namespace) -> list[float]:
    start, end, n = args.radius_start, args.radius_end, args.points
    if n < 1:
        raise UsageError("--points must be at least 1")
    if n == 1:
        if start != end:
            raise UsageError("--points 1 needs --radius-start equal to --radius-end")
        return [start]
    if not end > start:
        raise UsageError("--radius-end must exceed --radius-start")
    if args.log_spacing:
        ls, le = math.log(start), math.log(end)
        # snap to 15 digits so decades print as 100, not 100.00000000000004
        radii = [float(f"{math.exp(ls + (le - ls) * i / (n - 1)):.15g}") for i in range(n)]
    else:
        radii = [start + (end - start) * i / (n - 1) for i in range(n)]
    radii[0], radii[-1] = start, end
    return radii


def _analysis(spec: SpiralSpec, radius: float, tol, q) -> dict:
    report = analyze(spec, radius, tol, q)
    return {"spiral": spec.to_text(), **report.to_dict()}


def _sweep_output(args, tol, q) -> str:
    rows = sweep(args.spiral, _radii(args), tol, q)
    for row in rows:
        if row.error:
            log.warning("radius %r failed: %s", row.radius, row.error)
    conv = math.degrees if args.angle_unit == "deg" else (lambda x: x)
    unit = args.angle_unit
    header = ("radius", f"theta0_{unit}", f"theta1_{unit}", "lambda", "normalized_cost")
    table = [(r.radius, conv(r.theta0), conv(r.theta1), r.lam, r.normalized_cost) for r in rows]
    if args.format == "csv":
        return to_csv(header, table)
    return dumps({
        "spiral": args.spiral.to_text(),
        "classification": classify_divergence(rows).value,
        "rows": [dict(zip(header, t), error=r.error) for t, r in zip(table, rows)],
    })


def run(args: argparse.Namespace) -> str:
    tol, q = _settings(args)
    if args.format == "csv" and args.verb not in ("sweep", "analyze"):
        raise UsageError(f"--format csv is only available for sweep and analyze, not {args.verb}")
    if args.verb == "sweep":
        return _sweep_output(args, tol, q)
    if args.verb == "analyze":
        if args.format == "csv":
            rep = analyze(args.spiral, args.radius, tol, q)
            t = rep.tangency
            return to_csv(SWEEP_HEADER, [(t.radius, t.theta0, t.theta1, rep.lam, rep.normalized_cost)])
        return dumps(_analysis(args.spiral, args.radius, tol, q))
    if args.verb == "figure1":
        out = _analysis(parse_spiral(FIGURE1_SPIRAL), FIGURE1_RADIUS, tol, q)
        t = out["tangency"]
        for key in ("theta0_deg", "theta1_deg", "circle_touch_deg"):
            out[key] = t[key]
        return dumps(out)
    if args.verb == "optimize":
        if not args.kappa_min < args.kappa_max:
            raise UsageError("--kappa-min must be below --kappa-max")
        result = optimize_kappa(args.kappa_min, args.kappa_max, args.x_tol, tol, q)
        return dumps(result.to_dict())
    params = {k: getattr(args, k) for k in ("a", "b", "kappa") if getattr(args, k) is not None}
    value = example_lower_bound(args.bound, args.theta0, **params)
    return dumps({"bound": args.bound, "theta0": args.theta0, "params": params, "value": value})


def _fail(code: str, message: str, status: int) -> int:
    sys.stdout.write(dumps({"error": {"code": code, "message": message}}) + "\n")
    print(f"spiralsearch: error: {message}", file=sys.stderr)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(message)s", stream=sys.stderr)
        text = run(args)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=sys.stderr)
        return _fail("usage", str(exc), 2)
    except SpiralSearchError as exc:
        return _fail(exc.code, str(exc), 1)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())

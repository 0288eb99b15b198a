"""Command-line interface.

Subcommands: witness (single configuration), min-dx (minimal width per
decoherence rate), scan (full grid to CSV) and curve (threshold curve to
CSV). Quantities accept the same suffixed-unit grammar as JSON configs
("1e-15kg", "35 um", "1 s", "1e-2 Hz").

Exit codes: 0 success, 1 no solution/crossing exists, 2 bad configuration
or arguments. Every JSON output carries the fully resolved SI configuration
under "config" as an audit trail.
"""

import argparse
import dataclasses
import json
import os
import sys

from . import scan as scanmod
from .config import Geometry, config_from_dict
from .errors import (
    ArcsinDomain,
    ConfigFieldError,
    GravWitnessError,
    NoCrossing,
    NoSolution,
    UnitParseError,
)
from .units import parse_quantity
from .witness import bipartition_label, witness_expectation

_FLAG_FIELDS = (
    ("mass", "mass", "mass"),
    ("dmin", "d_min", "length"),
    ("dx", "delta_x", "length"),
    ("tau", "tau", "time"),
    ("gamma", "gamma", "frequency"),
)


def _config_from_args(args, skip=()):
    """Resolve --config plus flag overrides into a validated config."""
    raw = {}
    if getattr(args, "config", None):
        with open(args.config, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    for flag, key, dim in _FLAG_FIELDS:
        if flag in skip:
            continue
        value = getattr(args, flag, None)
        if value is not None:
            raw[key] = parse_quantity(value, dim)
    if getattr(args, "geometry", None):
        raw["geometry"] = args.geometry
    raw.setdefault("delta_x", 0.0)
    raw.setdefault("gamma", 0.0)
    missing = [k for k in ("mass", "d_min", "tau", "geometry") if k not in raw]
    if missing:
        raise UnitParseError(
            f"missing required field(s): {', '.join(missing)} "
            "(pass --config or the corresponding flags)"
        )
    return config_from_dict(raw)


def _config_json(config):
    return {
        "mass": config.mass,
        "d_min": config.d_min,
        "delta_x": config.delta_x,
        "tau": config.tau,
        "gamma": config.gamma,
        "geometry": config.geometry.value,
    }


def _spec_json(spec):
    return {
        "mass": spec.mass,
        "d_min": spec.d_min,
        "tau": spec.tau,
        "geometry": spec.geometry.value,
        "gamma": {"lo": spec.gamma_lo, "hi": spec.gamma_hi, "points": spec.gamma_points},
        "delta_x": {
            "lo": spec.delta_x_lo,
            "hi": spec.delta_x_hi,
            "points": spec.delta_x_points,
        },
        "target_w": spec.target_w,
    }


def _emit(payload):
    print(json.dumps(payload, indent=2))


def _cmd_witness(args):
    config = _config_from_args(args)
    result = witness_expectation(config, subsystem=args.bipartition)
    d = result.diagnostics
    _emit(
        {
            "witness": result.lambda_min,
            "entangled": result.entangled,
            "bipartition": bipartition_label(
                config.geometry.n_qubits, result.bipartition
            ),
            "closed_form": d.closed_form,
            "closed_form_gap": d.closed_form_gap,
            "degenerate_minimum": d.degenerate_minimum,
            "config": _config_json(config),
        }
    )
    return 0


def _cmd_min_dx(args):
    base = _config_from_args(args, skip=("gamma",))
    results = []
    failures = 0
    for text in args.gamma:
        gamma = parse_quantity(text, "frequency")
        try:
            dx = scanmod.min_delta_x(gamma, base, args.target_w)
            results.append({"gamma": gamma, "min_delta_x": dx, "status": "ok"})
        except NoCrossing as exc:
            failures += 1
            results.append(
                {
                    "gamma": gamma,
                    "min_delta_x": None,
                    "status": "no_crossing",
                    "min_witness": exc.min_witness,
                }
            )
    _emit(
        {
            "target_w": args.target_w,
            "results": results,
            "config": _config_json(base),
        }
    )
    return 1 if failures else 0


def _load_spec(args):
    spec = scanmod.load_scan_spec(args.spec)
    if args.target_w is not None:
        spec = dataclasses.replace(spec, target_w=args.target_w)
    return spec


def _cmd_scan(args):
    spec = _load_spec(args)
    rows = scanmod.grid_scan(spec, threads=args.threads)
    scanmod.write_csv(args.out, scanmod.rows_to_csv(rows))
    _emit({"out": args.out, "rows": len(rows), "config": _spec_json(spec)})
    return 0


def _cmd_curve(args):
    spec = _load_spec(args)
    points = scanmod.threshold_curve(spec, threads=args.threads)
    scanmod.write_csv(args.out, scanmod.curve_to_csv(points, spec))
    ok = sum(1 for p in points if p.status == "ok")
    _emit(
        {
            "out": args.out,
            "points": len(points),
            "ok": ok,
            "no_crossing": len(points) - ok,
            "config": _spec_json(spec),
        }
    )
    return 0 if ok == len(points) else 1


def _add_config_flags(parser, gamma_list=False):
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--mass", help="test mass, e.g. 1e-15kg")
    parser.add_argument("--dmin", help="minimal separation, e.g. 35um")
    parser.add_argument("--dx", help="superposition width, e.g. 5um")
    parser.add_argument("--tau", help="hold time, e.g. 1s")
    if gamma_list:
        parser.add_argument(
            "--gamma", nargs="+", required=True, help="decoherence rate(s), e.g. 1e-2"
        )
    else:
        parser.add_argument("--gamma", help="decoherence rate, e.g. 1e-2 Hz")
    parser.add_argument(
        "--geometry",
        choices=[g.value for g in Geometry],
        help="mass layout",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gravwitness",
        description="PPT witness calculator for gravitationally coupled "
        "matter-wave interferometers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", help="witness expectation for one config")
    _add_config_flags(p)
    p.add_argument(
        "--bipartition",
        type=int,
        default=1,
        help="0-based qubit index to transpose (default 1, the second qubit)",
    )
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("min-dx", help="minimal width reaching the target witness")
    _add_config_flags(p, gamma_list=True)
    p.add_argument("--target-w", type=float, default=0.0, dest="target_w")
    p.set_defaults(func=_cmd_min_dx)

    p = sub.add_parser("scan", help="witness over a (gamma, delta_x) grid -> CSV")
    p.add_argument("--spec", required=True, help="JSON scan spec file")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--target-w", type=float, default=None, dest="target_w")
    p.add_argument("--threads", type=int, default=os.cpu_count())
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("curve", help="threshold curve min_delta_x(gamma) -> CSV")
    p.add_argument("--spec", required=True, help="JSON scan spec file")
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--target-w", type=float, default=None, dest="target_w")
    p.add_argument("--threads", type=int, default=os.cpu_count())
    p.set_defaults(func=_cmd_curve)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NoCrossing, NoSolution, ArcsinDomain) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConfigFieldError, UnitParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError, GravWitnessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: ``rates`` (one generator as JSON), ``sweep`` (ratio curves as
CSV/SVG), ``evolve`` (trajectory CSV), ``verify`` (full oracle report).

Exit codes: 0 success, 1 verification failure, 2 usage/validation error.
Outputs are deterministic: fixed 12-significant-digit scientific notation,
no locale dependence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import oracle
from .errors import GravatomError
from .lindblad import DensityMatrix2, analytic_state, evolve_numeric
from .model import AtomSpec, GravityEnv, ThermalSpec, potential_from_source
from .rates import build_rate_set


def _fmt(value: float) -> str:
    return f"{value:.11e}"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gravatom",
        description="Dissipation of a two-level atom in a weak gravitational field",
    )
    sub = parser.add_subparsers(dest="mode", required=True)

    def add_physics(p):
        p.add_argument("--phi", type=float, default=None, help="Newtonian potential (<= 0)")
        p.add_argument("--mass", type=float, default=None, help="source mass (G = 1)")
        p.add_argument("--distance", type=float, default=None, help="distance R to the source")
        p.add_argument("--omega", type=float, default=None, help="proper energy splitting")
        p.add_argument("--dipole", type=float, default=None, help="effective dipole magnitude")
        p.add_argument("--angle", type=float, default=None, help="dipole angle psi in radians")
        p.add_argument("--temperature", type=float, default=None, help="distant-observer temperature")

    def add_output(p):
        p.add_argument("--format", choices=("csv", "json", "svg"), default=None)
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--config", default=None, help="JSON config file mirroring flag names")

    p_rates = sub.add_parser("rates", help="compute one full rate set")
    add_physics(p_rates)
    add_output(p_rates)

    p_sweep = sub.add_parser("sweep", help="ratio curve over a grid of x = R*Omega")
    add_physics(p_sweep)
    add_output(p_sweep)
    p_sweep.add_argument("--x-min", dest="x_min", type=float, default=None)
    p_sweep.add_argument("--x-max", dest="x_max", type=float, default=None)
    p_sweep.add_argument("--points", type=int, default=None)
    grid = p_sweep.add_mutually_exclusive_group()
    grid.add_argument("--log", dest="log_grid", action="store_true", default=None)
    grid.add_argument("--linear", dest="log_grid", action="store_false")

    p_evolve = sub.add_parser("evolve", help="evolve a density matrix")
    add_physics(p_evolve)
    add_output(p_evolve)
    p_evolve.add_argument("--t-max", dest="t_max", type=float, default=None,
                          help="evolution span in units of 1/Gamma")
    p_evolve.add_argument("--steps", type=int, default=None)
    p_evolve.add_argument("--initial", default=None,
                          help="excited, ground, or mixed:p")

    p_verify = sub.add_parser("verify", help="run the full verification suite")
    add_output(p_verify)
    p_verify.add_argument("--f1-offset", dest="f1_offset", type=float, default=0.0,
                          help=argparse.SUPPRESS)

    return parser


_DEFAULTS = {
    "phi": None,
    "mass": None,
    "distance": 1.0,
    "omega": None,
    "dipole": 1.0,
    "angle": 0.0,
    "temperature": 0.0,
    "format": "csv",
    "x_min": 1e-2,
    "x_max": 1e2,
    "points": 200,
    "log_grid": True,
    "t_max": 5.0,
    "steps": 500,
    "initial": "excited",
}

#: Documented default used by `sweep` when no potential is given.
SWEEP_DEFAULT_PHI = -0.05


class UsageError(Exception):
    pass


def _resolve(args) -> tuple[dict, set]:
    """Merge flag > config-file > default; also report explicitly set keys."""
    config = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            config = json.load(fh)
        unknown = set(config) - set(_DEFAULTS)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
    merged = {}
    explicit = set()
    for key, default in _DEFAULTS.items():
        flag = getattr(args, key, None)
        if flag is not None:
            merged[key] = flag
            explicit.add(key)
        elif key in config:
            merged[key] = config[key]
            explicit.add(key)
        else:
            merged[key] = default
    return merged, explicit


def _environment(cfg, default_phi=0.0) -> GravityEnv:
    distance = cfg["distance"]
    if cfg["phi"] is not None and cfg["mass"] is not None:
        raise UsageError("give either --phi or --mass, not both")
    if cfg["mass"] is not None:
        phi = potential_from_source(cfg["mass"], distance)
        return GravityEnv(phi=phi, distance=distance, provenance="source")
    phi = cfg["phi"] if cfg["phi"] is not None else default_phi
    return GravityEnv(phi=phi, distance=distance)


def _atom(cfg) -> AtomSpec:
    if cfg["omega"] is None:
        raise UsageError("omega required")
    return AtomSpec(
        omega=cfg["omega"], dipole_mag=cfg["dipole"], dipole_angle=cfg["angle"]
    )


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_rates(args) -> int:
    cfg, _ = _resolve(args)
    atom = _atom(cfg)
    env = _environment(cfg)
    thermal = ThermalSpec.from_distant(cfg["temperature"], env.phi)
    rateset = build_rate_set(atom, env, thermal)
    payload = {k: _fmt(v) for k, v in rateset.as_dict().items()}
    payload["ratio"] = _fmt(rateset.gamma_g / rateset.gamma_flat)
    _write(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return 0


def _sweep_grid(cfg):
    n = cfg["points"]
    if n < 2:
        raise UsageError("points must be >= 2")
    x_min, x_max = cfg["x_min"], cfg["x_max"]
    if not x_min < x_max:
        raise UsageError("need x_min < x_max")
    if cfg["log_grid"]:
        if x_min <= 0.0:
            raise UsageError("x_min must be positive for a log grid")
        step = (math.log(x_max) - math.log(x_min)) / (n - 1)
        return [math.exp(math.log(x_min) + i * step) for i in range(n)]
    step = (x_max - x_min) / (n - 1)
    return [x_min + i * step for i in range(n)]


def _ratio(x: float, phi: float, sin2psi: float) -> float:
    from . import specfun

    return 1.0 + phi * (7.0 - 2.0 * specfun.f1(x) + 3.0 * sin2psi * specfun.f2(x))


def cmd_sweep(args) -> int:
    cfg, explicit = _resolve(args)
    env = _environment(cfg, default_phi=SWEEP_DEFAULT_PHI)
    grid = _sweep_grid(cfg)
    angle_given = "angle" in explicit

    if angle_given:
        sin2 = math.sin(cfg["angle"]) ** 2
        header = "x,ratio"
        rows = [(x, (_ratio(x, env.phi, sin2),)) for x in grid]
        labels = ("ratio",)
    else:
        header = "x,ratio_parallel,ratio_perpendicular"
        rows = [
            (x, (_ratio(x, env.phi, 0.0), _ratio(x, env.phi, 1.0))) for x in grid
        ]
        labels = ("parallel", "perpendicular")

    if cfg["format"] == "svg":
        _write(_render_svg(rows, labels, env.phi), args.out)
        return 0

    lines = [f"# phi={_fmt(env.phi)}", header]
    for x, values in rows:
        lines.append(",".join([_fmt(x)] + [_fmt(v) for v in values]))
    _write("\n".join(lines) + "\n", args.out)
    return 0


def _render_svg(rows, labels, phi) -> str:
    width, height, margin = 640, 420, 60
    xs = [math.log10(r[0]) for r in rows]
    ys = [v for _, values in rows for v in values]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    pad = 0.05 * (y_hi - y_lo or 1.0)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    def px(x):
        return margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin)

    def py(y):
        return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin)

    colors = ("#1f6fb4", "#c23b22")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" '
        f'stroke="black"/>',
        f'<text x="{width / 2:.0f}" y="{height - 15}" text-anchor="middle" '
        f'font-size="14">x = RΩ (log scale), Φ = {phi:g}</text>',
        f'<text x="18" y="{height / 2:.0f}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 18 {height / 2:.0f})">γ_g/γ</text>',
    ]
    for i, label in enumerate(labels):
        points = " ".join(
            f"{px(math.log10(x)):.2f},{py(values[i]):.2f}" for x, values in rows
        )
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="{colors[i % 2]}" '
            f'stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{width - margin - 5}" y="{margin + 18 * (i + 1)}" '
            f'text-anchor="end" font-size="12" fill="{colors[i % 2]}">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _initial_state(name: str) -> DensityMatrix2:
    if name == "excited":
        return DensityMatrix2.excited()
    if name == "ground":
        return DensityMatrix2.ground()
    if name.startswith("mixed:"):
        return DensityMatrix2.mixed(float(name.split(":", 1)[1]))
    raise UsageError(f"unknown initial state {name!r}")


def cmd_evolve(args) -> int:
    cfg, _ = _resolve(args)
    atom = _atom(cfg)
    env = _environment(cfg)
    thermal = ThermalSpec.from_distant(cfg["temperature"], env.phi)
    rateset = build_rate_set(atom, env, thermal)
    rho0 = _initial_state(cfg["initial"])
    t_max = cfg["t_max"] / rateset.gamma_total
    trajectory = evolve_numeric(rho0, rateset, t_max, cfg["steps"])
    lines = ["t,rho_ee,rho_gg,abs_rho_eg,trace_error,analytic_rho_ee"]
    for t, state in zip(trajectory.times, trajectory.states):
        reference = analytic_state(rho0, rateset, t)
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    t,
                    state.ee,
                    state.gg,
                    abs(state.eg),
                    state.trace - 1.0,
                    reference.ee,
                )
            )
        )
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    spec = oracle.QuadratureSpec()
    records = oracle.verification_report(spec, f1_offset=args.f1_offset)
    all_pass = all(r["pass"] for r in records)
    report = {"all_pass": all_pass, "checks": records}
    _write(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if all_pass else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "rates": cmd_rates,
        "sweep": cmd_sweep,
        "evolve": cmd_evolve,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.mode](args)
    except (UsageError, GravatomError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

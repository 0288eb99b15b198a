"""Grid scans over (gamma, delta_x) and minimal-width root finding.

The witness is oscillatory in the accumulated phase, so searches are
restricted to the first monotone branch: the search stops where the total
half-phase magnitude reaches pi/2. Within that branch the smallest width
whose witness reaches the target is found by bracketing plus bisection,
which is the experimentally relevant crossing.

2-qubit scans run on the closed-form eigenvalues with a numeric spot-check
every 50th grid point; 3-qubit scans always run the numeric pipeline.
"""

import json
import math
import multiprocessing
from dataclasses import dataclass

import numpy as np

from .closedform import pt_eigenvalues, witness_linear, witness_parallel
from .config import CODATA, ExperimentConfig, Geometry, validate
from .errors import NoCrossing, UnitParseError
from .phases import phases_for
from .units import parse_quantity
from .witness import witness_expectation

GRID_HEADER = "geometry,mass_kg,d_min_m,tau_s,gamma_hz,delta_x_m,witness"
CURVE_HEADER = "geometry,mass_kg,d_min_m,tau_s,gamma_hz,min_delta_x_m,status"

#: bisection terminates when the bracket is narrower than this [m]
WIDTH_TOL = 1e-9
#: half-phase cap defining the first monotone branch [rad]
PHASE_CAP = 0.5 * math.pi
#: widths beyond this many separations are never searched
MAX_WIDTH_FACTOR = 1e6

SPOT_CHECK_STRIDE = 50
SPOT_CHECK_TOL = 1e-10


@dataclass(frozen=True)
class ScanSpec:
    """A (gamma, delta_x) grid over one geometry at fixed mass/d_min/tau."""

    mass: float
    d_min: float
    tau: float
    geometry: Geometry
    gamma_lo: float
    gamma_hi: float
    gamma_points: int
    delta_x_lo: float
    delta_x_hi: float
    delta_x_points: int
    target_w: float = 0.0
    constants: object = CODATA

    def __post_init__(self):
        validate(self.config_at(self.gamma_lo, self.delta_x_lo))
        if not (0.0 < self.gamma_lo < self.gamma_hi):
            raise ValueError("gamma axis needs 0 < lo < hi (log spacing)")
        if not self.delta_x_lo < self.delta_x_hi:
            raise ValueError("delta_x axis needs lo < hi")
        if self.gamma_points < 2 or self.delta_x_points < 2:
            raise ValueError("each axis needs at least 2 points")

    def config_at(self, gamma, delta_x):
        return ExperimentConfig(
            mass=self.mass,
            d_min=self.d_min,
            delta_x=delta_x,
            tau=self.tau,
            gamma=gamma,
            geometry=self.geometry,
            constants=self.constants,
        )

    def gamma_grid(self):
        return np.geomspace(self.gamma_lo, self.gamma_hi, self.gamma_points)

    def delta_x_grid(self):
        return np.linspace(self.delta_x_lo, self.delta_x_hi, self.delta_x_points)


def scan_spec_from_dict(obj):
    """Build a ScanSpec from its JSON schema.

    Required: mass, d_min, tau, geometry. Optional axis objects
    gamma: {lo, hi, points} (default 1e-4..1e-1 Hz, 200 points, log) and
    delta_x: {lo, hi, points} (default 0..10*d_min, 400 points, linear),
    plus target_w (default 0).
    """
    missing = [k for k in ("mass", "d_min", "tau", "geometry") if k not in obj]
    if missing:
        raise UnitParseError(f"scan spec missing key(s): {', '.join(missing)}")
    d_min = parse_quantity(obj["d_min"], "length")
    gamma = obj.get("gamma", {})
    delta_x = obj.get("delta_x", {})
    return ScanSpec(
        mass=parse_quantity(obj["mass"], "mass"),
        d_min=d_min,
        tau=parse_quantity(obj["tau"], "time"),
        geometry=Geometry.from_label(obj["geometry"]),
        gamma_lo=parse_quantity(gamma.get("lo", 1e-4), "frequency"),
        gamma_hi=parse_quantity(gamma.get("hi", 1e-1), "frequency"),
        gamma_points=int(gamma.get("points", 200)),
        delta_x_lo=parse_quantity(delta_x.get("lo", 0.0), "length"),
        delta_x_hi=parse_quantity(delta_x.get("hi", 10.0 * d_min), "length"),
        delta_x_points=int(delta_x.get("points", 400)),
        target_w=float(obj.get("target_w", 0.0)),
    )


def load_scan_spec(path):
    with open(path, "r", encoding="utf-8") as fh:
        return scan_spec_from_dict(json.load(fh))


@dataclass(frozen=True)
class ScanRow:
    """One grid point; `witness` is the minimal partial-transpose eigenvalue."""

    gamma: float
    delta_x: float
    witness: float
    geometry: str
    mass: float
    d_min: float
    tau: float


@dataclass(frozen=True)
class ThresholdPoint:
    gamma: float
    min_delta_x: float | None
    status: str  # "ok" or "no_crossing"
    min_witness: float | None = None


def _grid_witness(config):
    """Witness value for one grid point: closed form for 2 qubits, numeric
    pipeline for 3."""
    if config.geometry.n_qubits == 2:
        rate_sum = phases_for(config).rate_sum()
        return pt_eigenvalues(rate_sum, config.gamma, config.tau).minimum()
    return witness_expectation(config).lambda_min


def _grid_point(args):
    spec, gamma, delta_x = args
    return _grid_witness(spec.config_at(gamma, delta_x))


def _map(fn, items, threads):
    if threads and threads > 1:
        with multiprocessing.Pool(threads) as pool:
            return pool.map(fn, items)
    return [fn(item) for item in items]


def grid_scan(spec, threads=1):
    """Evaluate the witness on the full grid.

    Rows are ordered gamma-major, delta_x ascending; the output is
    deterministic and independent of `threads`.
    """
    points = [
        (spec, gamma, delta_x)
        for gamma in spec.gamma_grid()
        for delta_x in spec.delta_x_grid()
    ]
    values = _map(_grid_point, points, threads)
    rows = [
        ScanRow(
            gamma=float(gamma),
            delta_x=float(delta_x),
            witness=float(value),
            geometry=spec.geometry.value,
            mass=spec.mass,
            d_min=spec.d_min,
            tau=spec.tau,
        )
        for (_, gamma, delta_x), value in zip(points, values)
    ]
    if spec.geometry.n_qubits == 2:
        for row in rows[::SPOT_CHECK_STRIDE]:
            numeric = witness_expectation(
                spec.config_at(row.gamma, row.delta_x)
            ).lambda_min
            if abs(numeric - row.witness) > SPOT_CHECK_TOL:
                raise RuntimeError(
                    f"closed form and numeric witness disagree at gamma="
                    f"{row.gamma!r}, delta_x={row.delta_x!r}: "
                    f"{row.witness!r} vs {numeric!r}"
                )
    return rows


def _branch_witness(config):
    """The monotone-branch witness used for root finding: the analytic branch
    eigenvalue for 2-qubit layouts, the numeric minimum for 3-qubit ones."""
    if config.geometry is Geometry.PARALLEL2:
        return witness_parallel(phases_for(config).rate_sum(), config.gamma, config.tau)
    if config.geometry is Geometry.LINEAR2:
        return witness_linear(phases_for(config).rate_sum(), config.gamma, config.tau)
    return witness_expectation(config).lambda_min


def _half_phase(config):
    """Half-phase magnitude governing the branch structure: |sum(omega)|*tau/2
    for 2 qubits, the largest branch phase for 3."""
    ps = phases_for(config)
    rate = abs(ps.rate_sum()) if ps.n_qubits == 2 else ps.max_abs_rate()
    return 0.5 * rate * config.tau


def _phase_cap_width(config):
    """Largest width still on the first branch (half-phase <= pi/2).

    The phases approach a finite asymptote as the width grows, so if the cap
    is not reached by MAX_WIDTH_FACTOR separations the search range ends
    there instead.
    """
    hi = MAX_WIDTH_FACTOR * config.d_min
    if _half_phase(config.with_values(delta_x=hi)) <= PHASE_CAP:
        return hi
    lo = 0.0
    while hi - lo > 1e-12 * config.d_min:
        mid = 0.5 * (lo + hi)
        if _half_phase(config.with_values(delta_x=mid)) <= PHASE_CAP:
            lo = mid
        else:
            hi = mid
    return lo


def min_delta_x(gamma, config, target_w=0.0):
    """Smallest width whose witness reaches `target_w`, on the first branch.

    The config's own gamma and delta_x are ignored and replaced. Bracketing
    expands geometrically from d_min/1024 up to the phase cap; bisection then
    narrows the bracket to WIDTH_TOL while keeping witness(lo) > target >=
    witness(hi). Returns 0.0 when even a vanishing width already satisfies
    the target. Raises NoCrossing (carrying the minimum witness achieved)
    when the target is unreachable on the branch.
    """
    if not -0.5 < target_w < 0.25:
        raise ValueError(f"target witness {target_w!r} outside (-1/2, 1/4)")
    base = validate(config.with_values(gamma=gamma, delta_x=0.0))
    w = lambda dx: _branch_witness(base.with_values(delta_x=dx))

    if w(0.0) <= target_w:
        return 0.0
    cap = _phase_cap_width(base)
    lo, hi = 0.0, None
    x = base.d_min / 1024.0
    while x < cap:
        if w(x) <= target_w:
            hi = x
            break
        lo = x
        x *= 2.0
    if hi is None:
        at_cap = w(cap)
        if at_cap <= target_w:
            hi = cap
        else:
            raise NoCrossing(target_w, at_cap, cap)
    while hi - lo > WIDTH_TOL:
        mid = 0.5 * (lo + hi)
        if w(mid) <= target_w:
            hi = mid
        else:
            lo = mid
    return hi


def _curve_point(args):
    spec, gamma = args
    try:
        dx = min_delta_x(gamma, spec.config_at(gamma, 0.0), spec.target_w)
        return ThresholdPoint(float(gamma), dx, "ok")
    except NoCrossing as exc:
        return ThresholdPoint(float(gamma), None, "no_crossing", exc.min_witness)


def threshold_curve(spec, threads=1):
    """min_delta_x at every gamma grid point; failures become no_crossing
    points rather than interpolations or errors."""
    return _map(_curve_point, [(spec, g) for g in spec.gamma_grid()], threads)


def _fmt(value):
    return format(value, ".17g")


def rows_to_csv(rows):
    lines = [GRID_HEADER]
    for r in rows:
        lines.append(
            f"{r.geometry},{_fmt(r.mass)},{_fmt(r.d_min)},{_fmt(r.tau)},"
            f"{_fmt(r.gamma)},{_fmt(r.delta_x)},{_fmt(r.witness)}"
        )
    return "\n".join(lines) + "\n"


def curve_to_csv(points, spec):
    lines = [CURVE_HEADER]
    for p in points:
        dx = "" if p.min_delta_x is None else _fmt(p.min_delta_x)
        lines.append(
            f"{spec.geometry.value},{_fmt(spec.mass)},{_fmt(spec.d_min)},"
            f"{_fmt(spec.tau)},{_fmt(p.gamma)},{dx},{p.status}"
        )
    return "\n".join(lines) + "\n"


def write_csv(path, text):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)

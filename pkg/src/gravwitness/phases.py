"""Entanglement rates for each spin branch of each geometry.

Every branch of the joint spin state sees a different set of pairwise
distances between the superposed masses, hence a different gravitational
potential energy and a different phase accumulation rate omega [rad/s].
Rates are reported relative to the all-up reference branch (0,...,0), whose
common phase is unobservable and would only degrade float accuracy.

Branch labels are bit tuples, 0 for the "up" arm and 1 for the "down" arm,
leftmost bit = mass 1.
"""

import itertools
import math
import warnings
from dataclasses import dataclass, field

from .config import Geometry, validate
from .errors import ApproximationOutOfRegime


@dataclass(frozen=True)
class PhaseSet:
    """Relative phase accumulation rate per spin branch, rad/s."""

    n_qubits: int
    rates: dict = field(default_factory=dict)

    def __post_init__(self):
        expected = set(branch_labels(self.n_qubits))
        if set(self.rates) != expected:
            raise ValueError(f"rates must cover all {len(expected)} branches")
        ref = (0,) * self.n_qubits
        if self.rates[ref] != 0.0:
            raise ValueError("reference branch rate must be 0")
        if not all(math.isfinite(v) for v in self.rates.values()):
            raise ValueError("rates must be finite")

    def rate_sum(self):
        """Total 2-qubit entanglement rate omega_1 + omega_2 [rad/s]."""
        if self.n_qubits != 2:
            raise ValueError("rate_sum is defined for 2-qubit phase sets only")
        return self.rates[(1, 0)] + self.rates[(0, 1)]

    def max_abs_rate(self):
        return max(abs(v) for v in self.rates.values())


def branch_labels(n_qubits):
    return list(itertools.product((0, 1), repeat=n_qubits))


def _pair_rate(config, distance):
    """Relative rate of one mass pair whose same-spin distance is `distance`:
    (G m^2 / hbar) * (1/sqrt(distance^2 + delta_x^2) - 1/distance) <= 0."""
    k = config.constants.G * config.mass**2 / config.constants.hbar
    return k * (1.0 / math.hypot(distance, config.delta_x) - 1.0 / distance)


def _require(config, *geometries):
    validate(config)
    if config.geometry not in geometries:
        allowed = "/".join(g.value for g in geometries)
        raise ValueError(f"expected {allowed} geometry, got {config.geometry.value}")


def phases_parallel2(config):
    """Two masses side by side, superposition arms perpendicular to the
    separation axis. Equal-spin branches keep distance d_min; mixed branches
    sit at sqrt(d_min^2 + delta_x^2), so both single-flip rates are equal and
    non-positive and the rate sum omega_1 + omega_2 is <= 0.
    """
    _require(config, Geometry.PARALLEL2)
    w = _pair_rate(config, config.d_min)
    return PhaseSet(2, {(0, 0): 0.0, (0, 1): w, (1, 0): w, (1, 1): 0.0})


def phases_linear2(config):
    """Two masses on a common axis, arms along that axis, up-arm of mass 1
    leftmost. Branch distances are d_min (down1/up2), d_min + delta_x
    (up1/up2 and down1/down2) and d_min + 2*delta_x (up1/down2), giving
    omega_1 >= 0 >= omega_2 with omega_1 + omega_2 >= 0.
    """
    _require(config, Geometry.LINEAR2)
    k = config.constants.G * config.mass**2 / config.constants.hbar
    d, dx = config.d_min, config.delta_x
    ref = 1.0 / (d + dx)
    return PhaseSet(
        2,
        {
            (0, 0): 0.0,
            (1, 0): k * (1.0 / d - ref),
            (0, 1): k * (1.0 / (d + 2.0 * dx) - ref),
            (1, 1): 0.0,
        },
    )


def _phases3(config, pair_distance):
    rates = {}
    for b in branch_labels(3):
        total = 0.0
        for i, k in ((0, 1), (0, 2), (1, 2)):
            if b[i] != b[k]:
                total += _pair_rate(config, pair_distance(i, k))
        rates[b] = total
    return PhaseSet(3, rates)


def phases_parallel3(config):
    """Three masses in a row with neighbour spacing d_min, arms perpendicular
    to the row. The pair (i, k) sits at distance d_min * (k - i) in equal-spin
    branches; mixed-spin pairs pick up the width in quadrature."""
    _require(config, Geometry.PARALLEL3)
    return _phases3(config, lambda i, k: config.d_min * (k - i))


def phases_triangle3(config):
    """Three masses on an equilateral triangle of edge d_min, displaced by
    delta_x normal to the triangle plane. All pairs are equivalent, so the
    rates are symmetric under any permutation of the branch bits."""
    _require(config, Geometry.TRIANGLE3)
    return _phases3(config, lambda i, k: config.d_min)


_DISPATCH = {
    Geometry.PARALLEL2: phases_parallel2,
    Geometry.LINEAR2: phases_linear2,
    Geometry.PARALLEL3: phases_parallel3,
    Geometry.TRIANGLE3: phases_triangle3,
}


def phases_for(config):
    """Compute the PhaseSet for the config's geometry."""
    return _DISPATCH[config.geometry](config)


def effective_rate_approx(config):
    """Small-width closed-form estimate of the entanglement rate magnitude.

    Diagnostic only; the witness and scan pipelines never use it. For the
    parallel layout this printed estimate is twice the small-width limit of
    the exact rate sum, and for the linear layout it keeps a first-order term
    that cancels in the exact sum, so treat it as an order-of-magnitude
    check, nothing more. Warns when delta_x exceeds a tenth of the
    separation, where the small-width assumption has clearly lapsed.
    """
    _require(config, Geometry.PARALLEL2, Geometry.LINEAR2)
    k = config.constants.G * config.mass**2 / config.constants.hbar
    dx = config.delta_x
    if config.geometry is Geometry.PARALLEL2:
        d = config.d_min
        value = k * 2.0 * dx**2 / d**3
    else:
        d = config.d_min + dx
        value = k / d * (1.0 - dx / d)
    if dx > d / 10.0:
        warnings.warn(
            f"delta_x = {dx:g} m exceeds d/10 = {d / 10.0:g} m; "
            "small-width estimate is unreliable here",
            ApproximationOutOfRegime,
            stacklevel=2,
        )
    return value

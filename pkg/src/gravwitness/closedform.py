"""Analytic partial-transpose eigenvalues for the 2-qubit setups.

With x = exp(-gamma*tau) and half-phase c = (omega_1 + omega_2)*tau/2, the
partially transposed, dephased 2-qubit density matrix has the spectrum

    lambda_1 = 1/4 - (x/4) * (x - 2 sin c)
    lambda_2 = 1/4 - (x/4) * (x + 2 sin c)
    lambda_3 = 1/4 + (x/4) * (x + 2 cos c)
    lambda_4 = 1/4 + (x/4) * (x - 2 cos c)

The parallel layout has rate sum <= 0 and its witness expectation is
lambda_1; the linear layout has rate sum >= 0 and its witness is lambda_2.
These serve as an independent oracle for the numeric pipeline and as the
fast path for 2-qubit scans. The width inversion for the parallel layout
lives here too.
"""

import math
from dataclasses import dataclass

from .config import Geometry, validate
from .errors import ArcsinDomain, NoSolution, WrongSignBranch


@dataclass(frozen=True)
class EigenQuad:
    """The four closed-form partial-transpose eigenvalues (they sum to 1)."""

    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float

    def as_tuple(self):
        return (self.lambda1, self.lambda2, self.lambda3, self.lambda4)

    def minimum(self):
        return min(self.as_tuple())


def pt_eigenvalues(omega_sum, gamma, tau):
    """EigenQuad for total rate `omega_sum` [rad/s], decoherence `gamma` [Hz]
    and hold time `tau` [s]."""
    x = math.exp(-gamma * tau)
    half = 0.5 * omega_sum * tau
    s, c = math.sin(half), math.cos(half)
    return EigenQuad(
        lambda1=0.25 - 0.25 * x * (x - 2.0 * s),
        lambda2=0.25 - 0.25 * x * (x + 2.0 * s),
        lambda3=0.25 + 0.25 * x * (x + 2.0 * c),
        lambda4=0.25 + 0.25 * x * (x - 2.0 * c),
    )


def witness_parallel(omega_sum, gamma, tau):
    """Witness expectation for the parallel layout (lambda_1 branch).

    Requires omega_sum <= 0; a positive rate sum belongs to the linear
    branch and raises WrongSignBranch.
    """
    if omega_sum > 0.0:
        raise WrongSignBranch(
            f"omega_sum = {omega_sum!r} > 0; use witness_linear"
        )
    return pt_eigenvalues(omega_sum, gamma, tau).lambda1


def witness_linear(omega_sum, gamma, tau):
    """Witness expectation for the linear layout (lambda_2 branch).

    Requires omega_sum >= 0.
    """
    if omega_sum < 0.0:
        raise WrongSignBranch(
            f"omega_sum = {omega_sum!r} < 0; use witness_parallel"
        )
    return pt_eigenvalues(omega_sum, gamma, tau).lambda2


def required_delta_x(target_w, config):
    """Superposition width achieving a parallel-layout witness of `target_w`.

    Exact functional inverse of witness_parallel composed with the parallel
    phase rates, on the principal arcsine branch (total half-phase within
    [-pi/2, pi/2]). The config's own delta_x is ignored.

    Raises ArcsinDomain when the target is outside the reachable witness
    range for this decoherence rate and NoSolution when the required phase
    cannot be produced at this mass/separation (squared width negative).
    """
    validate(config)
    if config.geometry is not Geometry.PARALLEL2:
        raise ValueError("width inversion applies to the parallel 2-qubit layout")
    if target_w < -0.5:
        raise ValueError(f"target witness {target_w!r} below the -1/2 floor")
    x = math.exp(-config.gamma * config.tau)
    argument = (4.0 * target_w - 1.0 + x * x) / (2.0 * x)
    if not -1.0 <= argument <= 1.0:
        raise ArcsinDomain(argument)
    half_phase = math.asin(argument)
    gm2t = config.constants.G * config.mass**2 * config.tau
    denom = gm2t + config.d_min * config.constants.hbar * half_phase
    if denom <= 0.0:
        raise NoSolution(-math.inf)
    dx_squared = (config.d_min * gm2t / denom) ** 2 - config.d_min**2
    if dx_squared < 0.0:
        raise NoSolution(dx_squared)
    return math.sqrt(dx_squared)

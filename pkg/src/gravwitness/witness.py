"""Numeric PPT witness pipeline.

Builds the entangled final state from the branch phase rates, forms the
pure-state density matrix, applies exponential damping of coherences, takes
the partial transpose over the chosen subsystem and reports the minimal
eigenvalue. That minimal eigenvalue equals the expectation value of the
optimal PPT witness operator, so a negative value certifies entanglement.

Basis convention: row/column index is the integer value of the branch bit
tuple, leftmost bit = qubit 1 = most significant bit.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from . import closedform
from .config import validate
from .eigen import hermitian_eigensystem
from .errors import DegenerateMinimum, SubsystemOutOfRange
from .phases import phases_for

#: subsystem whose indices are transposed by default: qubit 2, i.e. the
#: 1|2 split for two qubits and the 13|2 split for three.
DEFAULT_SUBSYSTEM = 1

DEGENERACY_TOL = 1e-12
#: minimal eigenvalues within solver resolution of zero are reported as 0.0
#: so separable states never masquerade as entangled
ZERO_FLOOR = 1e-13


def basis_index(branch):
    """Integer basis index of a branch bit tuple (leftmost bit = qubit 1)."""
    index = 0
    for bit in branch:
        index = (index << 1) | bit
    return index


def build_state(phases, tau):
    """Final-state amplitudes 2^(-n/2) * exp(i * rate * tau) per branch."""
    dim = 2**phases.n_qubits
    amps = np.zeros(dim, dtype=complex)
    for branch, rate in phases.rates.items():
        amps[basis_index(branch)] = np.exp(1j * rate * tau)
    return amps / np.sqrt(dim)


def density_from_state(state):
    """Rank-1 density matrix |psi><psi| of a normalized state vector."""
    state = np.asarray(state, dtype=complex)
    return np.outer(state, state.conj())


def _differing_qubits(dim):
    """Matrix h[r, c] = number of qubit positions where r and c differ."""
    idx = np.arange(dim)
    xor = idx[:, None] ^ idx[None, :]
    h = np.zeros((dim, dim), dtype=np.int64)
    while np.any(xor):
        h += xor & 1
        xor >>= 1
    return h


def apply_dephasing(rho, gamma, tau):
    """Damp each coherence by exp(-gamma*tau) per differing qubit position.

    The diagonal is untouched (trace exactly preserved) and the damping
    factor is symmetric, so Hermiticity is preserved exactly as well.
    """
    rho = np.asarray(rho, dtype=complex)
    if gamma == 0.0:
        return rho.copy()
    h = _differing_qubits(rho.shape[0])
    return rho * np.exp(-gamma * tau) ** h


def _n_qubits(dim):
    n = dim.bit_length() - 1
    if 2**n != dim:
        raise ValueError(f"matrix dimension {dim} is not a power of two")
    return n


def partial_transpose(rho, subsystem):
    """Transpose the indices of one qubit between rows and columns.

    `subsystem` is the 0-based qubit index (0 = qubit 1 = most significant
    bit). The result stays Hermitian with trace 1 but need not be positive;
    a negative eigenvalue certifies entanglement across the cut that
    separates `subsystem` from the rest.
    """
    rho = np.asarray(rho)
    dim = rho.shape[0]
    n = _n_qubits(dim)
    if not 0 <= subsystem < n:
        raise SubsystemOutOfRange(
            f"subsystem {subsystem} not in [0, {n}) for a {n}-qubit matrix"
        )
    bit = 1 << (n - 1 - subsystem)
    out = np.empty_like(rho)
    r = np.arange(dim)
    rows = r[:, None]
    cols = r[None, :]
    swapped_rows = (rows & ~bit) | (cols & bit)
    swapped_cols = (cols & ~bit) | (rows & bit)
    out[rows, cols] = rho[swapped_rows, swapped_cols]
    return out


def _canonical_phase(vector):
    """Rotate a vector's global phase so its first significant component is
    real and positive (makes degenerate choices reproducible)."""
    threshold = 1e-12 * np.abs(vector).max()
    for component in vector:
        if abs(component) > threshold:
            return vector * (abs(component) / component)
    return vector


def _minimal_eigenpair(eigenvalues, eigenvectors):
    """Lowest eigenvalue with a deterministic eigenvector choice.

    If the two lowest eigenvalues agree within DEGENERACY_TOL, a
    DegenerateMinimum warning is emitted and the phase-canonicalized
    candidate that is lexicographically largest (by component real then
    imaginary parts) is returned.
    """
    lam = float(eigenvalues[0])
    degenerate = bool(len(eigenvalues) > 1 and eigenvalues[1] - lam < DEGENERACY_TOL)
    candidates = [
        _canonical_phase(eigenvectors[:, k])
        for k in range(len(eigenvalues))
        if eigenvalues[k] - lam < DEGENERACY_TOL
    ]
    if degenerate:
        warnings.warn(
            "minimal partial-transpose eigenvalue is degenerate; eigenvector "
            "choice is basis-dependent",
            DegenerateMinimum,
            stacklevel=3,
        )
        candidates.sort(
            key=lambda v: tuple((c.real, c.imag) for c in v), reverse=True
        )
    return lam, candidates[0], degenerate


def witness_operator(rho_pt, subsystem=DEFAULT_SUBSYSTEM):
    """Optimal PPT witness operator for a partially transposed density matrix.

    W is the partial transpose (same subsystem) of the projector onto the
    eigenvector of the minimal eigenvalue, so Tr(W rho) reproduces that
    minimal eigenvalue and Tr(W sigma) >= 0 for every separable sigma.
    """
    eigenvalues, eigenvectors = hermitian_eigensystem(rho_pt)
    _, vector, _ = _minimal_eigenpair(eigenvalues, eigenvectors)
    projector = np.outer(vector, vector.conj())
    return partial_transpose(projector, subsystem)


@dataclass(frozen=True)
class WitnessDiagnostics:
    closed_form: float | None
    closed_form_gap: float | None
    degenerate_minimum: bool


@dataclass(frozen=True)
class WitnessResult:
    """Minimal partial-transpose eigenvalue and its certificate."""

    lambda_min: float
    eigenvector: np.ndarray
    entangled: bool
    bipartition: int
    diagnostics: WitnessDiagnostics


def witness_expectation(config, subsystem=DEFAULT_SUBSYSTEM):
    """Run the full pipeline and return the witness expectation value.

    phases -> state -> density -> dephasing -> partial transpose over
    `subsystem` -> minimal eigenvalue. For 2-qubit geometries the analytic
    eigenvalue quadruple provides an independent cross-check, recorded in
    the diagnostics. A minimal eigenvalue within ZERO_FLOOR of zero is
    reported as exactly 0.0: below the eigensolver's resolution a negative
    sign is noise, not entanglement.
    """
    validate(config)
    phases = phases_for(config)
    state = build_state(phases, config.tau)
    rho = apply_dephasing(density_from_state(state), config.gamma, config.tau)
    rho_pt = partial_transpose(rho, subsystem)
    eigenvalues, eigenvectors = hermitian_eigensystem(rho_pt)
    lam, vector, degenerate = _minimal_eigenpair(eigenvalues, eigenvectors)
    if abs(lam) < ZERO_FLOOR:
        lam = 0.0

    closed = gap = None
    if phases.n_qubits == 2:
        quad = closedform.pt_eigenvalues(phases.rate_sum(), config.gamma, config.tau)
        closed = quad.minimum()
        gap = float(abs(lam - closed))

    return WitnessResult(
        lambda_min=float(lam),
        eigenvector=vector,
        entangled=bool(lam < 0.0),
        bipartition=subsystem,
        diagnostics=WitnessDiagnostics(closed, gap, degenerate),
    )


def bipartition_label(n_qubits, subsystem):
    """Human-readable split, e.g. subsystem 1 of 3 qubits -> "13|2"."""
    kept = "".join(str(q + 1) for q in range(n_qubits) if q != subsystem)
    return f"{kept}|{subsystem + 1}"

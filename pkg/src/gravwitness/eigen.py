"""Dense Hermitian eigensolver: real-embedded cyclic Jacobi.

The n x n complex Hermitian matrix H = A + iB is embedded into the
2n x 2n real symmetric matrix [[A, -B], [B, A]], which is diagonalized by
cyclic Jacobi sweeps. Every eigenvalue of H appears twice in the embedding;
adjacent sorted pairs are merged and the complex eigenvectors are recovered
from the real ones as v = u[:n] + i*u[n:]. For the dimensions used here
(<= 8) this is simple, unconditionally stable and dependency-light.
"""

import numpy as np

from .errors import ConvergenceFailure, NotHermitian

#: off-diagonal Frobenius target, relative to the matrix Frobenius norm
OFF_DIAGONAL_TOL = 1e-14
MAX_SWEEPS = 100
#: adjacent embedded eigenvalues closer than this (times scale) are one pair
PAIR_TOL = 1e-12
HERMITICITY_TOL = 1e-10


def _jacobi_real_symmetric(E):
    """Cyclic Jacobi on a real symmetric matrix, in place.

    Returns (diagonal, V) with E's columns rotated into V. Stops when the
    off-diagonal Frobenius norm falls below OFF_DIAGONAL_TOL times the
    (rotation-invariant) Frobenius norm of E.
    """
    n = E.shape[0]
    V = np.eye(n)
    norm = np.linalg.norm(E)
    if norm == 0.0:
        return np.zeros(n), V
    target = OFF_DIAGONAL_TOL * norm
    mask = ~np.eye(n, dtype=bool)
    for _ in range(MAX_SWEEPS):
        off = np.linalg.norm(E[mask])
        if off <= target:
            return np.diag(E).copy(), V
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = E[p, q]
                if apq == 0.0:
                    continue
                diff = E[q, q] - E[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff  # tan of a tiny angle; avoids overflow below
                else:
                    theta = diff / (2.0 * apq)
                    t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                    if theta == 0.0:
                        t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # E <- J^T E J with J the (p,q) rotation; then V <- V J
                Ep, Eq = E[:, p].copy(), E[:, q].copy()
                E[:, p] = c * Ep - s * Eq
                E[:, q] = s * Ep + c * Eq
                Ep, Eq = E[p, :].copy(), E[q, :].copy()
                E[p, :] = c * Ep - s * Eq
                E[q, :] = s * Ep + c * Eq
                E[p, q] = 0.0
                E[q, p] = 0.0
                Vp, Vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * Vp - s * Vq
                V[:, q] = s * Vp + c * Vq
    raise ConvergenceFailure(
        f"off-diagonal norm {off:g} above target {target:g} "
        f"after {MAX_SWEEPS} sweeps"
    )


def hermitian_eigensystem(matrix):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.

    Returns (eigenvalues, eigenvectors) with eigenvectors[:, k] belonging to
    eigenvalues[k]. Raises NotHermitian if the input deviates from Hermiticity
    beyond tolerance and ConvergenceFailure if the sweep cap is reached.
    """
    M = np.asarray(matrix, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotHermitian(f"expected a square matrix, got shape {M.shape}")
    n = M.shape[0]
    scale = max(1.0, float(np.abs(M).max()) if n else 1.0)
    deviation = float(np.abs(M - M.conj().T).max())
    if deviation > HERMITICITY_TOL * scale:
        raise NotHermitian(
            f"matrix deviates from Hermiticity by {deviation:g} (tol "
            f"{HERMITICITY_TOL * scale:g})"
        )
    H = 0.5 * (M + M.conj().T)

    A, B = H.real.copy(), H.imag.copy()
    E = np.block([[A, -B], [B, A]])
    diag, V = _jacobi_real_symmetric(E)

    order = np.argsort(diag, kind="stable")
    diag = diag[order]
    V = V[:, order]

    # Merge the doubled spectrum: adjacent entries (2k, 2k+1) are one
    # eigenvalue of H. Degenerate eigenvalues of H form larger clusters; the
    # complex vectors extracted from a cluster are re-orthonormalized because
    # two real embedding vectors can map to parallel complex vectors.
    pair_gap = PAIR_TOL * max(1.0, float(np.abs(diag).max()))
    eigenvalues = np.empty(n)
    for k in range(n):
        lo, hi = diag[2 * k], diag[2 * k + 1]
        if hi - lo > pair_gap:
            raise ConvergenceFailure(
                f"embedded eigenvalues failed to pair: gap {hi - lo:g}"
            )
        eigenvalues[k] = 0.5 * (lo + hi)

    vectors = np.zeros((n, n), dtype=complex)
    start = 0
    while start < n:
        stop = start
        while stop + 1 < n and eigenvalues[stop + 1] - eigenvalues[start] <= pair_gap:
            stop += 1
        k = stop - start + 1  # multiplicity in H
        candidates = V[:, 2 * start : 2 * (stop + 1)]
        basis = []
        for j in range(candidates.shape[1]):
            v = candidates[:n, j] + 1j * candidates[n:, j]
            for b in basis:
                v = v - b * np.vdot(b, v)
            norm = np.linalg.norm(v)
            if norm > 1e-8:
                basis.append(v / norm)
            if len(basis) == k:
                break
        if len(basis) < k:
            raise ConvergenceFailure(
                f"could not extract {k} independent eigenvectors for "
                f"eigenvalue {eigenvalues[start]:g}"
            )
        vectors[:, start : stop + 1] = np.column_stack(basis)
        start = stop + 1

    return eigenvalues, vectors

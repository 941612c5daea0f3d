"""Pure-numpy implementations of the per-state hot kernels.

Mirrors the API of the compiled ``_kernels`` extension.  The two maxima are
deliberately computed through different linear-algebra routes (eigh of T^T T
versus singular values of T) so that the equivalence certificate compares
genuinely independent code paths.
"""
import numpy as np

BACKEND_NAME = "pure"

_SIGMA = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

# KRON[m, n] = sigma_n (x) sigma_m, so that T[m, n] = Tr(rho KRON[m, n]).
_KRON = np.array([[np.kron(_SIGMA[n], _SIGMA[m]) for n in range(3)] for m in range(3)])


def tmat(rho):
    """Correlation matrix T[m, n] = Tr(rho sigma_n (x) sigma_m)."""
    return np.einsum("ij,mnji->mn", np.asarray(rho, dtype=complex), _KRON).real


def tmat_batch(rhos):
    return np.einsum("rij,mnji->rmn", np.asarray(rhos, dtype=complex), _KRON).real


def steering_max(t):
    """2 sqrt(l1 + l2) from the two largest eigenvalues of T^T T."""
    w = np.linalg.eigvalsh(t.T @ t)
    return 2.0 * np.sqrt(max(w[1] + w[2], 0.0))


def chsh_max(t):
    """2 sqrt(s1^2 + s2^2) from the two largest singular values of T."""
    s = np.linalg.svd(t, compute_uv=False)
    return 2.0 * np.sqrt(s[0] ** 2 + s[1] ** 2)


def batch_maxima(rhos):
    """(steering, chsh) maxima for a stack of 4x4 density matrices."""
    ts = tmat_batch(rhos)
    w = np.linalg.eigvalsh(np.einsum("rmi,rmj->rij", ts, ts))
    steer = 2.0 * np.sqrt(np.clip(w[:, 1] + w[:, 2], 0.0, None))
    s = np.linalg.svd(ts, compute_uv=False)
    chsh = 2.0 * np.sqrt(s[:, 0] ** 2 + s[:, 1] ** 2)
    return steer, chsh

"""Horodecki CHSH maximum and the steering/nonlocality equivalence check.

``max_chsh`` is deliberately computed from the singular values of T (SVD
route) while ``steering.max_steering`` diagonalizes T^T T, so the ensemble
certificate compares two independent code paths that share only the
correlation-matrix accessor.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import OutOfRange
from .quantum import DensityMatrix, random_state

GAP_TOL = 1e-8


@dataclass(frozen=True)
class EquivalenceCertificate:
    seed: int
    n_states: int
    max_abs_gap: float
    passed: bool

    def __post_init__(self):
        assert self.passed == (self.max_abs_gap <= GAP_TOL)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n_states": self.n_states,
            "max_abs_gap": self.max_abs_gap,
            "pass": self.passed,
        }


def max_chsh(rho: DensityMatrix) -> float:
    """Horodecki maximum 2 sqrt(s1^2 + s2^2) from the singular values of T."""
    s = np.linalg.svd(rho.t_matrix, compute_uv=False)
    return float(2.0 * np.sqrt(s[0] ** 2 + s[1] ** 2))


def _thread_count() -> int:
    raw = os.environ.get("STEERSCOPE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def ensemble_maxima(seed: int, n_states: int):
    """(steering, chsh) maxima over a deterministic seeded state ensemble.

    Per-state seeds are seed + index, so results are independent of chunking
    or scheduling.
    """
    if n_states < 1:
        raise OutOfRange(f"n_states = {n_states} must be >= 1")
    rhos = np.stack([random_state(seed + i).mat for i in range(n_states)])
    threads = _thread_count()
    if threads == 1 or n_states < 2 * threads:
        return kernels.batch_maxima(rhos)
    from concurrent.futures import ThreadPoolExecutor

    chunks = np.array_split(np.arange(n_states), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda idx: kernels.batch_maxima(rhos[idx]), chunks))
    steer = np.concatenate([p[0] for p in parts])
    chsh = np.concatenate([p[1] for p in parts])
    return steer, chsh


def certify_equivalence(seed: int, n_states: int) -> EquivalenceCertificate:
    steer, chsh = ensemble_maxima(seed, n_states)
    gap = float(np.max(np.abs(steer - chsh)))
    return EquivalenceCertificate(
        seed=seed, n_states=n_states, max_abs_gap=gap, passed=gap <= GAP_TOL
    )

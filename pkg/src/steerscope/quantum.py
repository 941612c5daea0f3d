"""Two-qubit states, Pauli algebra and correlation data.

A two-qubit density matrix is decomposed into its Bloch vectors ``r`` (left
qubit), ``s`` (right qubit) and the 3x3 real correlation matrix ``T`` with
``T[m, n] = Tr(rho sigma_n (x) sigma_m)``.  With that layout the quantum
correlation of dichotomic observables with Bloch axes ``a`` (left) and ``b``
(right) is the contraction ``b . (T a)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .errors import NotHermitian, NotPositive, NotUnitTrace, OutOfRange, WrongBasis

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = -1e-10

SIGMA = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
IDENTITY2 = np.eye(2, dtype=complex)

# Bell-state vectors in the |00>, |01>, |10>, |11> ordering.
_BELL_VECTORS = np.array(
    [
        [1, 0, 0, 1],   # Phi+
        [1, 0, 0, -1],  # Phi-
        [0, 1, 1, 0],   # Psi+
        [0, 1, -1, 0],  # Psi- (singlet)
    ],
    dtype=complex,
) / np.sqrt(2)


@dataclass(frozen=True)
class BlochObservable:
    """A dichotomic qubit observable, ``axis . sigma`` with a unit axis."""

    axis: np.ndarray

    def __post_init__(self):
        axis = np.asarray(self.axis, dtype=float)
        norm = np.linalg.norm(axis)
        if abs(norm - 1.0) > 1e-12:
            raise OutOfRange(f"observable axis norm {norm!r} is not 1 within 1e-12")
        object.__setattr__(self, "axis", axis)

    @classmethod
    def from_vector(cls, vec) -> "BlochObservable":
        """Normalize an arbitrary nonzero 3-vector into an observable."""
        vec = np.asarray(vec, dtype=float)
        norm = np.linalg.norm(vec)
        if norm < 1e-15:
            raise OutOfRange("cannot normalize a zero vector into an axis")
        return cls(vec / norm)

    @property
    def operator(self) -> np.ndarray:
        return np.einsum("i,ijk->jk", self.axis, SIGMA)


@dataclass(frozen=True)
class DensityMatrix:
    """A validated 4x4 two-qubit state with cached Bloch decomposition."""

    mat: np.ndarray
    r: np.ndarray = field(init=False)
    s: np.ndarray = field(init=False)
    t_matrix: np.ndarray = field(init=False)

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        if mat.shape != (4, 4):
            raise OutOfRange(f"expected a 4x4 matrix, got shape {mat.shape}")
        herm = np.max(np.abs(mat - mat.conj().T))
        if herm > HERMITIAN_TOL:
            raise NotHermitian(f"NotHermitian: max |rho - rho^dagger| = {herm:.3e}")
        tr = mat.trace()
        if abs(tr - 1.0) > TRACE_TOL:
            raise NotUnitTrace(f"NotUnitTrace: |Tr(rho) - 1| = {abs(tr - 1.0):.3e}")
        eigs = np.linalg.eigvalsh(mat)
        if eigs.min() < PSD_TOL:
            raise NotPositive(f"NotPositive: minimum eigenvalue = {eigs.min():.3e}")
        object.__setattr__(self, "mat", mat)
        object.__setattr__(
            self, "r", np.array([np.trace(mat @ np.kron(SIGMA[i], IDENTITY2)).real for i in range(3)])
        )
        object.__setattr__(
            self, "s", np.array([np.trace(mat @ np.kron(IDENTITY2, SIGMA[i])).real for i in range(3)])
        )
        t = kernels.tmat(mat)
        if np.max(np.abs(t)) > 1 + 1e-12:
            raise OutOfRange(f"correlation entry |t_mn| = {np.max(np.abs(t)):.6f} exceeds 1")
        t.setflags(write=False)
        object.__setattr__(self, "t_matrix", t)


@dataclass(frozen=True)
class CorrelationVector:
    """The ordered quadruple (<AB>, <A'B>, <AB'>, <A'B'>)."""

    c: np.ndarray
    basis_tag: str = "measurement"

    def __post_init__(self):
        c = np.asarray(self.c, dtype=float)
        if c.shape != (4,):
            raise OutOfRange(f"correlation vector must have 4 components, got {c.shape}")
        if self.basis_tag not in ("measurement", "e_basis"):
            raise WrongBasis(f"unknown basis tag {self.basis_tag!r}")
        if self.basis_tag == "measurement" and np.max(np.abs(c)) > 1 + 1e-12:
            raise OutOfRange(f"correlation component {np.max(np.abs(c)):.6f} outside [-1, 1]")
        c.setflags(write=False)
        object.__setattr__(self, "c", c)


def make_state(mat) -> DensityMatrix:
    """Validate a 4x4 matrix and decompose it into (r, s, T)."""
    return DensityMatrix(np.asarray(mat, dtype=complex))


def bell_state(index: int) -> DensityMatrix:
    """One of the four Bell states; index 3 is the singlet."""
    if index not in (0, 1, 2, 3):
        raise OutOfRange(f"bell index {index} not in 0..3")
    v = _BELL_VECTORS[index]
    return make_state(np.outer(v, v.conj()))


def singlet() -> DensityMatrix:
    return bell_state(3)


def werner_state(eta: float) -> DensityMatrix:
    """eta * singlet + (1 - eta) * I/4, with T = -eta * Identity."""
    if not 0.0 <= eta <= 1.0:
        raise OutOfRange(f"werner parameter eta = {eta} outside [0, 1]")
    v = _BELL_VECTORS[3]
    return make_state(eta * np.outer(v, v.conj()) + (1.0 - eta) * np.eye(4) / 4.0)


def pure_schmidt(angle: float) -> DensityMatrix:
    """Pure state cos(angle)|00> + sin(angle)|11>."""
    v = np.zeros(4, dtype=complex)
    v[0], v[3] = np.cos(angle), np.sin(angle)
    return make_state(np.outer(v, v.conj()))


def random_state(seed: int) -> DensityMatrix:
    """Normalized Gram matrix G G^dagger of a seeded complex Gaussian G."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    w = g @ g.conj().T
    return make_state(w / w.trace())


def correlation(rho: DensityMatrix, a: BlochObservable, b: BlochObservable) -> float:
    """<(a.sigma)(b.sigma)> evaluated both by trace and by T-contraction."""
    full = np.trace(rho.mat @ np.kron(a.operator, b.operator)).real
    contracted = float(b.axis @ rho.t_matrix @ a.axis)
    # The two routes must agree; a mismatch means the index convention broke.
    assert abs(full - contracted) <= 1e-12, (full, contracted)
    return full


def correlation_vector(
    rho: DensityMatrix,
    a: BlochObservable,
    aprime: BlochObservable,
    b: BlochObservable,
    bprime: BlochObservable,
) -> CorrelationVector:
    return CorrelationVector(
        np.array(
            [
                correlation(rho, a, b),
                correlation(rho, aprime, b),
                correlation(rho, a, bprime),
                correlation(rho, aprime, bprime),
            ]
        )
    )


def to_e_basis(cv: CorrelationVector) -> CorrelationVector:
    """Coefficients over e1=(1,1,0,0), e2=(0,0,1,1), e3=(1,-1,0,0), e4=(0,0,1,-1)."""
    if cv.basis_tag != "measurement":
        raise WrongBasis(f"expected a measurement-basis vector, got {cv.basis_tag!r}")
    c1, c2, c3, c4 = cv.c
    v = np.array([(c1 + c2) / 2, (c3 + c4) / 2, (c1 - c2) / 2, (c3 - c4) / 2])
    return CorrelationVector(v, basis_tag="e_basis")


def from_e_basis(cv: CorrelationVector) -> CorrelationVector:
    if cv.basis_tag != "e_basis":
        raise WrongBasis(f"expected an e-basis vector, got {cv.basis_tag!r}")
    v1, v2, v3, v4 = cv.c
    return CorrelationVector(np.array([v1 + v3, v1 - v3, v2 + v4, v2 - v4]))


def state_from_dict(obj: dict) -> DensityMatrix:
    """Build a state from its JSON form.

    Accepts either an explicit matrix of [re, im] pairs or a named family:
    werner(eta), bell(index), pure_schmidt(angle).
    """
    if "matrix" in obj:
        entries = np.asarray(obj["matrix"], dtype=float)
        if entries.shape != (4, 4, 2):
            raise ValueError(f"matrix must be 4x4 of [re, im] pairs, got shape {entries.shape}")
        return make_state(entries[..., 0] + 1j * entries[..., 1])
    if "family" in obj:
        family = obj["family"]
        if family == "werner":
            return werner_state(float(obj["eta"]))
        if family == "bell":
            return bell_state(int(obj["index"]))
        if family == "pure_schmidt":
            return pure_schmidt(float(obj["angle"]))
        raise ValueError(f"unknown state family {family!r}")
    raise ValueError("state JSON needs either a 'matrix' or a 'family' key")


def load_state(path) -> DensityMatrix:
    with open(path) as fh:
        return state_from_dict(json.load(fh))


def state_to_dict(rho: DensityMatrix) -> dict:
    mat = np.stack([rho.mat.real, rho.mat.imag], axis=-1)
    return {"matrix": mat.tolist()}

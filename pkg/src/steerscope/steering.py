"""The CHSH-type steering inequality and its state-level maximum.

Three evaluation layers are provided:

* ``steering_lhs_general`` -- the inequality for an arbitrary pair of
  projective measurements on the trusted side, parameterized by the
  eigenstate overlap ``mu`` (equivalently the angle ``beta``).
* ``steering_lhs_mub`` -- the reduced form for a mutually unbiased pair,
  i.e. the general form at ``beta = pi/4``.
* ``e_steer`` / ``max_steering`` -- the correlation-matrix expression
  ``2 (cos(theta) ||T c|| + sin(theta) ||T c'||)`` and its closed-form
  maximum ``2 sqrt(l1 + l2)`` over measurement settings, where l1 >= l2 are
  the two largest eigenvalues of T^T T.

Note ``e_steer`` is the value attainable with trusted-side axes spanning the
plane of ``T(a + a')`` and ``T(a - a')``; it is independent of which
orthonormal pair is chosen there, which is what makes the maximum depend on
the state alone.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BobPairNotOrthogonal,
    DegenerateAlicePair,
    DegenerateMeasurementPair,
    WrongBasis,
)
from .quantum import BlochObservable, CorrelationVector, DensityMatrix

DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class MeasurementPair:
    """Trusted-side measurement pair with its overlap mu and angle beta."""

    b: BlochObservable
    bprime: BlochObservable
    mu: float
    beta: float

    def __post_init__(self):
        mu_check = (1.0 + float(self.b.axis @ self.bprime.axis)) / 2.0
        if abs(mu_check - self.mu) > 1e-12:
            raise DegenerateMeasurementPair(
                f"mu = {self.mu} inconsistent with axes (expected {mu_check})"
            )
        if self.mu < DEGENERACY_TOL or self.mu > 1.0 - DEGENERACY_TOL:
            raise DegenerateMeasurementPair(
                f"mu = {self.mu} too close to 0 or 1 (parallel axes)"
            )
        beta_check = np.arctan(np.sqrt(1.0 - self.mu) / np.sqrt(self.mu))
        if abs(beta_check - self.beta) > 1e-12:
            raise DegenerateMeasurementPair(
                f"beta = {self.beta} inconsistent with mu (expected {beta_check})"
            )

    @classmethod
    def from_axes(cls, b: BlochObservable, bprime: BlochObservable) -> "MeasurementPair":
        mu = (1.0 + float(b.axis @ bprime.axis)) / 2.0
        mu = min(max(mu, 0.0), 1.0)
        if mu < DEGENERACY_TOL or mu > 1.0 - DEGENERACY_TOL:
            raise DegenerateMeasurementPair(f"mu = {mu} too close to 0 or 1")
        beta = np.arctan(np.sqrt(1.0 - mu) / np.sqrt(mu))
        return cls(b, bprime, mu, beta)


@dataclass(frozen=True)
class SteeringReport:
    """Optimal-settings summary for one state."""

    lhs_general: float
    lhs_mub: float
    max_value: float
    theta_max: float
    c_max: np.ndarray
    cprime_max: np.ndarray
    a_max: BlochObservable
    aprime_max: BlochObservable
    steerable: bool
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "lhs_general": float(self.lhs_general),
            "lhs_mub": float(self.lhs_mub),
            "max_value": float(self.max_value),
            "theta_max": float(self.theta_max),
            "c_max": [float(x) for x in self.c_max],
            "cprime_max": [float(x) for x in self.cprime_max],
            "a_max": [float(x) for x in self.a_max.axis],
            "aprime_max": [float(x) for x in self.aprime_max.axis],
            "steerable": bool(self.steerable),
            "degenerate": bool(self.degenerate),
        }


def _sums_and_diffs(cv: CorrelationVector):
    c1, c2, c3, c4 = cv.c
    # <(A+A')B>, <(A+A')B'>, <(A-A')B>, <(A-A')B'>
    return c1 + c2, c3 + c4, c1 - c2, c3 - c4


def steering_lhs_general(cv: CorrelationVector, pair: MeasurementPair) -> float:
    """(sqrt(u1) + sqrt(u2)) / sin(2 beta); a LHV-LHS model exists iff <= 2."""
    if cv.basis_tag != "measurement":
        raise WrongBasis("steering_lhs_general needs measurement-basis correlations")
    sin2b = 2.0 * np.sqrt(pair.mu * (1.0 - pair.mu))
    if sin2b < DEGENERACY_TOL:
        raise DegenerateMeasurementPair(f"sin(2 beta) = {sin2b} below {DEGENERACY_TOL}")
    cos2b = 2.0 * pair.mu - 1.0
    sb, sbp, db, dbp = _sums_and_diffs(cv)
    u1 = sb**2 + sbp**2 - 2.0 * cos2b * sb * sbp
    u2 = db**2 + dbp**2 - 2.0 * cos2b * db * dbp
    return (np.sqrt(max(u1, 0.0)) + np.sqrt(max(u2, 0.0))) / sin2b


def steering_lhs_mub(cv_mub: CorrelationVector) -> float:
    """Reduced inequality for a mutually unbiased trusted-side pair."""
    if cv_mub.basis_tag != "measurement":
        raise WrongBasis("steering_lhs_mub needs measurement-basis correlations")
    sb, sbp, db, dbp = _sums_and_diffs(cv_mub)
    return np.hypot(sb, sbp) + np.hypot(db, dbp)


def mub_partner(pair: MeasurementPair) -> BlochObservable:
    """The mutually unbiased observable b'' = (b' - (2mu-1) b) / (2 sqrt(mu(1-mu)))."""
    denom = 2.0 * np.sqrt(pair.mu * (1.0 - pair.mu))
    if denom < DEGENERACY_TOL:
        raise DegenerateMeasurementPair(f"sin(2 beta) = {denom} below {DEGENERACY_TOL}")
    axis = (pair.bprime.axis - (2.0 * pair.mu - 1.0) * pair.b.axis) / denom
    return BlochObservable(axis)


def decompose_alice(a: BlochObservable, aprime: BlochObservable):
    """(theta, c, c') with a + a' = 2 cos(theta) c and a - a' = 2 sin(theta) c'."""
    plus = a.axis + aprime.axis
    minus = a.axis - aprime.axis
    np_, nm = np.linalg.norm(plus), np.linalg.norm(minus)
    if np_ < DEGENERACY_TOL or nm < DEGENERACY_TOL:
        raise DegenerateAlicePair(f"|a+a'| = {np_:.3e}, |a-a'| = {nm:.3e}")
    theta = np.arctan2(nm / 2.0, np_ / 2.0)
    return theta, plus / np_, minus / nm


def e_steer(
    rho: DensityMatrix,
    a: BlochObservable,
    aprime: BlochObservable,
    b: BlochObservable,
    bdprime: BlochObservable,
) -> float:
    """||T(a + a')|| + ||T(a - a')|| for an orthonormal trusted-side pair.

    Equals ``steering_lhs_mub`` on the correlations measured with any
    orthonormal (b, b'') whose plane contains T(a+a') and T(a-a').
    """
    dot = abs(float(b.axis @ bdprime.axis))
    if dot > DEGENERACY_TOL:
        raise BobPairNotOrthogonal(f"|b . b''| = {dot:.3e} exceeds {DEGENERACY_TOL}")
    t = rho.t_matrix
    return float(
        np.linalg.norm(t @ (a.axis + aprime.axis))
        + np.linalg.norm(t @ (a.axis - aprime.axis))
    )


def _orthonormal_bob_pair(t: np.ndarray, c: np.ndarray, cprime: np.ndarray):
    """An orthonormal pair spanning the images T c, T c' (arbitrary where
    the images degenerate)."""
    u = t @ c
    v = t @ cprime
    if np.linalg.norm(u) > 1e-12:
        b = u / np.linalg.norm(u)
    else:
        b = np.array([0.0, 0.0, 1.0])
    v = v - (v @ b) * b
    if np.linalg.norm(v) > 1e-12:
        bpp = v / np.linalg.norm(v)
    else:
        # any unit vector orthogonal to b
        seed = np.array([1.0, 0.0, 0.0]) if abs(b[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
        bpp = np.cross(b, seed)
        bpp /= np.linalg.norm(bpp)
    return BlochObservable(b), BlochObservable(bpp)


def max_steering(rho: DensityMatrix) -> SteeringReport:
    """Closed-form maximum 2 sqrt(l1 + l2) with the optimal settings."""
    t = rho.t_matrix
    w, vecs = np.linalg.eigh(t.T @ t)  # ascending
    lam1, lam2 = max(w[2], 0.0), max(w[1], 0.0)
    c = vecs[:, 2]
    cprime = vecs[:, 1]
    max_value = 2.0 * np.sqrt(lam1 + lam2)
    theta = np.arctan2(np.sqrt(lam2), np.sqrt(lam1)) if lam1 > 0 else 0.0
    degenerate = lam2 <= 1e-15
    if degenerate:
        theta = 0.0
    a_axis = np.cos(theta) * c + np.sin(theta) * cprime
    ap_axis = np.cos(theta) * c - np.sin(theta) * cprime
    a = BlochObservable(a_axis)
    aprime = BlochObservable(ap_axis)

    b, bpp = _orthonormal_bob_pair(t, c, cprime)
    corr = lambda x, y: float(y.axis @ t @ x.axis)
    cv_mub = CorrelationVector(
        np.array([corr(a, b), corr(aprime, b), corr(a, bpp), corr(aprime, bpp)])
    )
    lhs_mub = steering_lhs_mub(cv_mub)
    bprime = BlochObservable.from_vector(b.axis + bpp.axis)
    pair = MeasurementPair.from_axes(b, bprime)
    cv_gen = CorrelationVector(
        np.array([corr(a, b), corr(aprime, b), corr(a, bprime), corr(aprime, bprime)])
    )
    lhs_general = steering_lhs_general(cv_gen, pair)

    return SteeringReport(
        lhs_general=lhs_general,
        lhs_mub=lhs_mub,
        max_value=float(max_value),
        theta_max=float(theta),
        c_max=c,
        cprime_max=cprime,
        a_max=a,
        aprime_max=aprime,
        steerable=bool(max_value > 2.0),
        degenerate=degenerate,
    )

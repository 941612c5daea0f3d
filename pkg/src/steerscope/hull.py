"""Convex-hull form of the steering bound and an LP membership oracle.

The closed-form test comes from the hull theorem for two convex sets living
in complementary coordinate planes whose boundaries are quadratic-form level
sets: a 4-vector v lies in the hull iff
``sqrt(f(v1, v2)) + sqrt(g(v3, v4)) <= max(sqrt(r1), sqrt(r2))``.

The LP oracle ignores that geometry entirely: it discretizes the extreme
points of the LHV-LHS correlation set and asks for nonnegative weights,
summing to one, that reproduce the target vector.  Agreement between the two
is the executable form of the inequality being necessary and sufficient.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import linprog

from .errors import (
    DegenerateMeasurementPair,
    DiscretizationTooCoarse,
    OutOfRange,
    OverlappingPlanes,
)
from .quantum import CorrelationVector, to_e_basis

LP_FEAS_TOL = 1e-8


@dataclass(frozen=True)
class PlanarConicSet:
    """Convex set { (x, y) : a x^2 + b y^2 + c xy <= r } in one axis plane."""

    a: float
    b: float
    c: float
    r: float
    plane: tuple

    def __post_init__(self):
        if not (self.a > 0 and 4.0 * self.a * self.b - self.c**2 > 0):
            raise OutOfRange(
                f"quadratic form (a={self.a}, b={self.b}, c={self.c}) is not positive definite"
            )
        if self.r <= 0:
            raise OutOfRange(f"bound r = {self.r} must be positive")
        if tuple(sorted(self.plane)) not in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
            raise OutOfRange(f"plane {self.plane} is not a pair of distinct axes in 0..3")

    def form(self, x: float, y: float) -> float:
        return self.a * x**2 + self.b * y**2 + self.c * x * y


@dataclass(frozen=True)
class HullMembership:
    value: float
    inside: bool
    bound: float
    lp_inside: Optional[bool] = None
    weights: Optional[list] = None

    def to_dict(self) -> dict:
        out = {"value": self.value, "inside": self.inside, "bound": self.bound}
        if self.lp_inside is not None:
            out["lp_inside"] = self.lp_inside
        if self.weights is not None:
            out["weights"] = [[int(i), float(w)] for i, w in self.weights]
        return out


def hull_inequality(s1: PlanarConicSet, s2: PlanarConicSet, v) -> HullMembership:
    """Closed-form membership of a 4-vector in the hull of s1 and s2."""
    v = np.asarray(v, dtype=float)
    if v.shape != (4,):
        raise OutOfRange(f"expected a 4-vector, got shape {v.shape}")
    if set(s1.plane) & set(s2.plane):
        raise OverlappingPlanes(f"planes {s1.plane} and {s2.plane} share an axis")
    value = np.sqrt(max(s1.form(v[s1.plane[0]], v[s1.plane[1]]), 0.0)) + np.sqrt(
        max(s2.form(v[s2.plane[0]], v[s2.plane[1]]), 0.0)
    )
    bound = max(np.sqrt(s1.r), np.sqrt(s2.r))
    return HullMembership(value=float(value), inside=bool(value <= bound), bound=float(bound))


def _ellipse_sets(beta: float):
    sin2b = np.sin(2.0 * beta)
    if sin2b < 1e-9:
        raise DegenerateMeasurementPair(f"sin(2 beta) = {sin2b} below 1e-9")
    cos2b = np.cos(2.0 * beta)
    s1 = PlanarConicSet(1.0, 1.0, -2.0 * cos2b, sin2b**2, (0, 1))
    s2 = PlanarConicSet(1.0, 1.0, -2.0 * cos2b, sin2b**2, (2, 3))
    return s1, s2


def steering_hull_membership(cv: CorrelationVector, beta: float) -> HullMembership:
    """Hull form of the steering inequality; value/sin(2 beta) = lhs/2."""
    if cv.basis_tag == "measurement":
        cv = to_e_basis(cv)
    s1, s2 = _ellipse_sets(beta)
    return hull_inequality(s1, s2, cv.c)


def extreme_points(beta: float, k: int) -> np.ndarray:
    """(2k, 4) array of discretized LHV-LHS extreme points, measurement basis.

    Row j < k is the chi=1 pattern at xi = 2 pi j / k; row k + j is the
    chi=2 sign-flipped pattern.  chi=3,4 are the xi -> xi + pi images and so
    already appear in the grid.
    """
    if k < 16:
        raise DiscretizationTooCoarse(f"k = {k} below the minimum of 16")
    xi = 2.0 * np.pi * np.arange(k) / k
    cp = np.cos(xi + beta)
    cm = np.cos(xi - beta)
    chi1 = np.stack([cp, cp, cm, cm], axis=1)
    chi2 = np.stack([cp, -cp, cm, -cm], axis=1)
    return np.concatenate([chi1, chi2], axis=0)


def _lp_convex_margin(points: np.ndarray, target: np.ndarray):
    """L1 infeasibility margin of expressing target as a convex combination
    of the given points.  Zero margin (within LP tolerance) means feasible.

    Decision variables: weights w >= 0 plus slack pairs (sp, sm) per
    coordinate; minimize sum(sp + sm) subject to P^T w + sp - sm = target,
    sum(w) = 1.
    """
    npts, dim = points.shape
    nvar = npts + 2 * dim
    cost = np.concatenate([np.zeros(npts), np.ones(2 * dim)])
    a_eq = np.zeros((dim + 1, nvar))
    a_eq[:dim, :npts] = points.T
    a_eq[:dim, npts : npts + dim] = np.eye(dim)
    a_eq[:dim, npts + dim :] = -np.eye(dim)
    a_eq[dim, :npts] = 1.0
    b_eq = np.concatenate([target, [1.0]])
    res = linprog(cost, A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if res.status != 0:
        raise RuntimeError(f"LP solver failed: {res.message}")
    return float(res.fun), res.x[:npts]


def lp_membership(cv: CorrelationVector, beta: float, k: int = 720) -> HullMembership:
    """LP feasibility over 2k discretized extreme points.

    The closed-form verdict is reported alongside (value/inside fields) so
    the result is self-contained.
    """
    if cv.basis_tag != "measurement":
        raise OutOfRange("lp_membership expects measurement-basis correlations")
    points = extreme_points(beta, k)
    margin, w = _lp_convex_margin(points, np.asarray(cv.c, dtype=float))
    feasible = margin <= LP_FEAS_TOL
    closed = steering_hull_membership(cv, beta)
    weights = None
    if feasible:
        weights = [(int(i), float(w[i])) for i in np.nonzero(w > 1e-12)[0]]
    return HullMembership(
        value=closed.value,
        inside=closed.inside,
        bound=closed.bound,
        lp_inside=bool(feasible),
        weights=weights,
    )

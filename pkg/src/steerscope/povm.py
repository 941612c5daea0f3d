"""Ellipse geometry of dichotomic POVM outcome probabilities.

For effects E_1|B = k_B |1><1| + lam2_B I and E_1|B' (eigenvector overlap
mu = |<1|1'>|^2), the pure-state probability pairs (p1_B, p1_B') trace an
ellipse.  This module computes its implicit conic, center, semi-axes,
rotation and parametric form, plus the four boundary families of the
correlation set and an LP hull-membership oracle (no closed-form inequality
exists in the POVM case; the hull boundary is only piecewise analytic).

Conventions: the implicit conic, center and parametric form live in
probability space (x, y) = (p1_B, p1_B').  The reported semi-axes are in
correlation space (m, n) = (2x - 1, 2y - 1), i.e. twice the probability-space
lengths, which is the scale at which the projective case degenerates to the
unit-bound ellipse of the steering inequality.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMu, DiscretizationTooCoarse, OutOfRange, TrivialEffect
from .hull import HullMembership, _lp_convex_margin, LP_FEAS_TOL


@dataclass(frozen=True)
class PovmElement:
    """Dichotomic effect with eigenvalue gap k and floor lam2."""

    k: float
    lam2: float

    def __post_init__(self):
        if self.k <= 0:
            raise TrivialEffect(f"eigenvalue gap k = {self.k} must be positive")
        if not (0.0 <= self.lam2 and self.lam2 + self.k <= 1.0):
            raise OutOfRange(
                f"effect eigenvalues ({self.lam2}, {self.lam2 + self.k}) outside [0, 1]"
            )


@dataclass(frozen=True)
class EllipseGeometry:
    """Implicit conic A x^2 + 2B xy + C y^2 + 2D x + 2F y + G = 0 plus
    derived center, semi-axes, rotation and parametric amplitudes."""

    coeffs: tuple  # (A, B, C, D, F, G)
    center: tuple  # (X_C, Y_C), probability space
    semi_axes: tuple  # (a_plus, a_minus), correlation space, a_plus >= a_minus
    rotation: float  # radians in [0, pi/2)
    parametric: tuple  # (T_amp, kappa, T_amp_prime, kappa_prime)


def _conic_coefficients(eb: PovmElement, ebp: PovmElement, mu: float):
    ratio = ebp.k / eb.k
    r = ratio * mu
    s = ratio * (1.0 - mu)
    t = 2.0 * ratio * np.sqrt(mu * (1.0 - mu))
    alpha, gamma, delta = ebp.lam2, eb.lam2, eb.k + eb.lam2
    a = ratio**2
    b = ratio * (1.0 - 2.0 * mu)
    c = 1.0
    f = r * gamma - s * delta - alpha
    d = b * f - t**2 * (delta + gamma) / 2.0
    g = f**2 + t**2 * gamma * delta
    return a, b, c, d, f, g


def povm_ellipse(eb: PovmElement, ebp: PovmElement, mu: float) -> EllipseGeometry:
    """Full ellipse geometry for a pair of effects with overlap mu."""
    if not 1e-12 < mu < 1.0 - 1e-12:
        raise DegenerateMu(f"mu = {mu} must lie strictly inside (0, 1)")
    a, b, c, d, f, g = _conic_coefficients(eb, ebp, mu)
    xc = eb.k / 2.0 + eb.lam2
    yc = ebp.k / 2.0 + ebp.lam2

    ratio2 = (ebp.k / eb.k) ** 2
    disc = np.sqrt((ratio2 + 1.0) ** 2 + 16.0 * ratio2 * mu * (mu - 1.0))
    pref = ebp.k * np.sqrt(mu * (1.0 - mu))
    s_plus = disc - (ratio2 + 1.0)
    s_minus = -disc - (ratio2 + 1.0)
    # Probability-space semi-axes; the +/- branch closer to zero gives the
    # larger axis.  Both S values are <= 0 for valid parameters.
    ax_from_plus = pref * np.sqrt(-2.0 / s_plus) if s_plus < 0 else np.inf
    ax_from_minus = pref * np.sqrt(-2.0 / s_minus)
    major_xy = max(ax_from_plus, ax_from_minus)
    minor_xy = min(ax_from_plus, ax_from_minus)
    if not np.isfinite(major_xy):  # circle: disc == ratio2 + 1 exactly
        major_xy = minor_xy

    # Rotation from the quadratic part; the eigenvector of the smaller
    # eigenvalue points along the major axis.
    quad = np.array([[a, b], [b, c]])
    if abs(b) < 1e-14 and abs(a - c) < 1e-14:
        phi = 0.0
        along, perp = major_xy, major_xy
    else:
        w, vecs = np.linalg.eigh(quad)
        vmaj = vecs[:, 0]
        theta = np.arctan2(vmaj[1], vmaj[0]) % np.pi
        if theta < np.pi / 2:
            phi = theta
            along, perp = major_xy, minor_xy
        else:
            phi = theta - np.pi / 2
            along, perp = minor_xy, major_xy

    t_amp = np.hypot(along * np.cos(phi), perp * np.sin(phi))
    kappa = np.arctan2(perp * np.sin(phi), along * np.cos(phi))
    t_amp_p = np.hypot(along * np.sin(phi), perp * np.cos(phi))
    kappa_p = -np.arctan2(perp * np.cos(phi), along * np.sin(phi))

    return EllipseGeometry(
        coeffs=(a, b, c, d, f, g),
        center=(xc, yc),
        semi_axes=(2.0 * major_xy, 2.0 * minor_xy),
        rotation=float(phi),
        parametric=(float(t_amp), float(kappa), float(t_amp_p), float(kappa_p)),
    )


def ellipse_point(geom: EllipseGeometry, xi: float):
    """Probability pair (p1_B, p1_B') at ellipse parameter xi."""
    xc, yc = geom.center
    t_amp, kappa, t_amp_p, kappa_p = geom.parametric
    x = xc + t_amp * np.cos(np.asarray(xi) + kappa)
    y = yc + t_amp_p * np.cos(np.asarray(xi) + kappa_p)
    return x, y


def conic_residual(geom: EllipseGeometry, x, y):
    a, b, c, d, f, g = geom.coeffs
    return a * x**2 + 2 * b * x * y + c * y**2 + 2 * d * x + 2 * f * y + g


def boundary_sets(geom: EllipseGeometry, n: int):
    """The four boundary families C1..C4 sampled on an n-point xi grid.

    Each is an (n, 4) array of correlation 4-vectors in the measurement
    basis: C1 = m e1 + n e2, C2 = m e3 + n e4, C3 = -C1, C4 = -C2, with
    (m, n) = (2x - 1, 2y - 1).
    """
    if n < 16:
        raise DiscretizationTooCoarse(f"n = {n} below the minimum of 16")
    xi = 2.0 * np.pi * np.arange(n) / n
    x, y = ellipse_point(geom, xi)
    m = 2.0 * x - 1.0
    nn = 2.0 * y - 1.0
    c1 = np.stack([m, m, nn, nn], axis=1)
    c2 = np.stack([m, -m, nn, -nn], axis=1)
    return [c1, c2, -c1, -c2]


def povm_hull_membership(v, geom: EllipseGeometry, n: int = 256) -> HullMembership:
    """LP membership of a correlation 4-vector in the hull of C1..C4.

    No closed-form bound exists here; ``value`` is the LP's L1 infeasibility
    margin (zero when the vector is a convex combination of sampled boundary
    points).
    """
    if n < 64:
        raise DiscretizationTooCoarse(f"n = {n} below the minimum of 64")
    v = np.asarray(v, dtype=float)
    if v.shape != (4,):
        raise OutOfRange(f"expected a 4-vector, got shape {v.shape}")
    points = np.concatenate(boundary_sets(geom, n), axis=0)
    margin, _ = _lp_convex_margin(points, v)
    feasible = margin <= LP_FEAS_TOL
    return HullMembership(
        value=margin, inside=bool(feasible), bound=0.0, lp_inside=bool(feasible)
    )

"""Acceptance gate: one test per shipped guarantee.

Each test prints a single ``ACCEPT <name>: PASS`` line (pytest -s or the
summary in captured output) and enforces both the numeric tolerance and the
runtime budget it was specified with.
"""
import time

import numpy as np
import pytest

from conftest import (
    axis_at_overlap,
    random_axis,
    random_orthonormal_pair,
    ray_oracle_semi_axes,
)

from steerscope import (
    BlochObservable,
    CorrelationVector,
    MeasurementPair,
    PovmElement,
    correlation_vector,
    e_steer,
    ellipse_point,
    lp_membership,
    max_chsh,
    max_steering,
    mub_partner,
    povm_ellipse,
    random_state,
    singlet,
    steering_lhs_general,
    steering_lhs_mub,
    steering_hull_membership,
    werner_state,
)
from steerscope.nonlocality import ensemble_maxima
from steerscope.povm import conic_residual

ENSEMBLE_SEED = 42
ENSEMBLE_SIZE = 10_000


def _report(name, passed, detail):
    status = "PASS" if passed else "FAIL"
    print(f"ACCEPT {name}: {status} ({detail})")
    assert passed, f"{name}: {detail}"


@pytest.fixture(scope="module")
def ensemble():
    """Shared 10,000-state ensemble used by criteria 3 and 9."""
    start = time.perf_counter()
    steer, chsh = ensemble_maxima(ENSEMBLE_SEED, ENSEMBLE_SIZE)
    elapsed = time.perf_counter() - start
    return steer, chsh, elapsed


def test_werner_threshold():
    start = time.perf_counter()
    lo, hi = 0.0, 1.0
    while hi - lo > 1e-9:
        mid = (lo + hi) / 2
        if max_steering(werner_state(mid)).max_value > 2.0:
            hi = mid
        else:
            lo = mid
    threshold = (lo + hi) / 2
    elapsed = time.perf_counter() - start
    ok = abs(threshold - 0.70710678) <= 1e-6 and elapsed < 1.0
    _report("werner-threshold", ok, f"threshold={threshold:.10f}, {elapsed:.3f}s")


def test_singlet_maximum():
    start = time.perf_counter()
    vs = max_steering(singlet()).max_value
    vc = max_chsh(singlet())
    elapsed = time.perf_counter() - start
    target = 2 * np.sqrt(2)
    ok = abs(vs - target) <= 1e-9 and abs(vc - target) <= 1e-9 and elapsed < 0.1
    _report("singlet-maximum", ok, f"steer={vs:.12f}, chsh={vc:.12f}, {elapsed:.3f}s")


def test_equivalence_certificate(ensemble):
    steer, chsh, elapsed = ensemble
    gap = float(np.max(np.abs(steer - chsh)))
    ok = gap <= 1e-8 and elapsed < 30.0
    _report(
        "equivalence-certificate",
        ok,
        f"n={ENSEMBLE_SIZE}, max_gap={gap:.3e}, {elapsed:.2f}s",
    )


def test_mub_reduction():
    start = time.perf_counter()
    rng = np.random.default_rng(2026)
    worst = 0.0
    for i in range(1000):
        rho = random_state(50_000 + i)
        a = BlochObservable(random_axis(rng))
        ap = BlochObservable(random_axis(rng))
        b = random_axis(rng)
        bp = axis_at_overlap(rng, b, rng.uniform(0.05, 0.95))
        pair = MeasurementPair.from_axes(
            BlochObservable(b), BlochObservable.from_vector(bp)
        )
        lhs_gen = steering_lhs_general(
            correlation_vector(rho, a, ap, pair.b, pair.bprime), pair
        )
        lhs_mub = steering_lhs_mub(
            correlation_vector(rho, a, ap, pair.b, mub_partner(pair))
        )
        worst = max(worst, abs(lhs_gen - lhs_mub))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-9 and elapsed < 10.0
    _report("mub-reduction", ok, f"n=1000, max_dev={worst:.3e}, {elapsed:.2f}s")


def test_bob_independence():
    start = time.perf_counter()
    rng = np.random.default_rng(2027)
    worst_spread = 0.0
    for i in range(50):
        rho = random_state(60_000 + i)
        a = BlochObservable(random_axis(rng))
        ap = BlochObservable(random_axis(rng))
        vals = np.empty(100)
        for j in range(100):
            b, bpp = random_orthonormal_pair(rng)
            vals[j] = e_steer(rho, a, ap, BlochObservable(b), BlochObservable(bpp))
        worst_spread = max(worst_spread, float(vals.max() - vals.min()))
    elapsed = time.perf_counter() - start
    ok = worst_spread <= 1e-10 and elapsed < 10.0
    _report(
        "bob-independence", ok, f"50x100 pairs, max_spread={worst_spread:.3e}, {elapsed:.2f}s"
    )


def test_hull_oracle_agreement():
    start = time.perf_counter()
    rng = np.random.default_rng(2028)
    n_band = 0
    n_disagree_outside = 0
    n_agree = 0
    for _ in range(1000):
        c = rng.uniform(-1, 1, 4)
        beta = rng.uniform(0.1, np.pi / 2 - 0.1)
        res = lp_membership(CorrelationVector(c), beta, k=720)
        if abs(res.value - res.bound) < 1e-3:
            n_band += 1
            continue
        if res.inside == res.lp_inside:
            n_agree += 1
        else:
            n_disagree_outside += 1
    elapsed = time.perf_counter() - start
    agree_rate = (n_agree + n_band) / 1000
    ok = n_disagree_outside == 0 and agree_rate >= 0.999 and elapsed < 60.0
    _report(
        "hull-oracle-agreement",
        ok,
        f"agree={n_agree}, band={n_band}, disagree_outside={n_disagree_outside}, {elapsed:.2f}s",
    )


def test_ellipse_degeneration_checkpoints():
    start = time.perf_counter()
    proj = PovmElement(1.0, 0.0)
    center_ok = True
    rotation_ok = True
    for mu in (0.1, 0.3, 0.5, 0.7, 0.9):
        geom = povm_ellipse(proj, proj, mu)
        center_ok &= geom.center == (0.5, 0.5)
        if mu != 0.5:
            rotation_ok &= abs(geom.rotation - np.pi / 4) <= 1e-12
    axes = povm_ellipse(proj, proj, 0.5).semi_axes
    axes_ok = abs(axes[0] - 1.0) <= 1e-12 and abs(axes[1] - 1.0) <= 1e-12
    elapsed = time.perf_counter() - start
    ok = center_ok and axes_ok and rotation_ok and elapsed < 0.1
    _report(
        "ellipse-degeneration",
        ok,
        f"center={center_ok}, axes={axes_ok}, rotation={rotation_ok}, {elapsed:.3f}s",
    )


def test_ellipse_conic_consistency():
    start = time.perf_counter()
    rng = np.random.default_rng(2029)
    xi = np.linspace(0.0, 2 * np.pi, 512)
    worst_residual = 0.0
    worst_axis_dev = 0.0
    for _ in range(100):
        kb = rng.uniform(0.2, 1.0)
        kbp = rng.uniform(0.2, 1.0)
        eb = PovmElement(kb, rng.uniform(0.0, 1.0 - kb))
        ebp = PovmElement(kbp, rng.uniform(0.0, 1.0 - kbp))
        geom = povm_ellipse(eb, ebp, rng.uniform(0.05, 0.95))
        x, y = ellipse_point(geom, xi)
        worst_residual = max(worst_residual, float(np.abs(conic_residual(geom, x, y)).max()))
        amax, amin = ray_oracle_semi_axes(geom.coeffs, geom.center, n=100_000)
        worst_axis_dev = max(
            worst_axis_dev,
            abs(geom.semi_axes[0] - 2 * amax),
            abs(geom.semi_axes[1] - 2 * amin),
        )
    elapsed = time.perf_counter() - start
    ok = worst_residual <= 1e-9 and worst_axis_dev <= 1e-6 and elapsed < 10.0
    _report(
        "ellipse-conic-consistency",
        ok,
        f"max_residual={worst_residual:.3e}, max_axis_dev={worst_axis_dev:.3e}, {elapsed:.2f}s",
    )


def test_tsirelson_cap(ensemble):
    steer, _, _ = ensemble
    peak = float(steer.max())
    ok = peak <= 2 * np.sqrt(2) + 1e-10
    _report("tsirelson-cap", ok, f"n={ENSEMBLE_SIZE}, max={peak:.12f}")

"""Command-line front end.

Exit codes: 0 success, 1 I/O or parse error, 2 domain/config validation
error, 3 failed equivalence certificate.  All JSON output is deterministic
(sorted keys, round-trip-exact floats) and carries "schema_version": 1.
"""
from __future__ import annotations

import json
import sys

import click
import numpy as np

from . import hull, nonlocality, povm, quantum, steering
from .errors import SteerscopeError

SCHEMA_VERSION = 1


def _fmt(x) -> str:
    return f"{float(x):.17g}"


def _emit_json(payload: dict, output):
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _write_csv(rows, header, output):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(x) if isinstance(x, float) else str(x) for x in row))
    text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _fail(exc: Exception, code: int):
    click.echo(f"error: {exc}", err=True)
    sys.exit(code)


@click.group()
def main():
    """Steering and nonlocality analysis for two-qubit states."""


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(), help="State JSON file.")
@click.option("--output", "output_path", default=None, type=click.Path())
def analyze(input_path, output_path):
    """Maximum steering and CHSH values with optimal settings for one state."""
    try:
        rho = quantum.load_state(input_path)
    except SteerscopeError as exc:
        _fail(exc, 2)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        _fail(exc, 1)
    report = steering.max_steering(rho)
    payload = report.to_dict()
    payload["max_chsh"] = nonlocality.max_chsh(rho)
    _emit_json(payload, output_path)


@main.command("scan-werner")
@click.option("--n", default=21, show_default=True, help="Number of grid points.")
@click.option("--eta-min", default=0.0, show_default=True)
@click.option("--eta-max", default=1.0, show_default=True)
@click.option("--output", "output_path", default=None, type=click.Path())
def scan_werner(n, eta_min, eta_max, output_path):
    """CSV sweep of the Werner family: eta, max_steering, max_chsh, steerable."""
    if n < 2:
        raise click.UsageError(f"--n must be >= 2, got {n}")
    if not (0.0 <= eta_min < eta_max <= 1.0):
        raise click.UsageError(f"need 0 <= eta-min < eta-max <= 1, got [{eta_min}, {eta_max}]")
    rows = []
    for eta in np.linspace(eta_min, eta_max, n):
        rho = quantum.werner_state(float(eta))
        report = steering.max_steering(rho)
        rows.append(
            (float(eta), report.max_value, nonlocality.max_chsh(rho), report.steerable)
        )
    _write_csv(rows, ["eta", "max_steering", "max_chsh", "steerable"], output_path)


@main.command("verify-equivalence")
@click.option("--seed", default=42, show_default=True)
@click.option("--n", default=10000, show_default=True, help="Ensemble size.")
@click.option("--output", "output_path", default=None, type=click.Path())
@click.option("--verbose", is_flag=True, help="Also write per-state CSV (needs --output).")
def verify_equivalence(seed, n, output_path, verbose):
    """Certify max_steering == max_chsh over a seeded random-state ensemble."""
    if n < 1:
        raise click.UsageError(f"--n must be >= 1, got {n}")
    if verbose and not output_path:
        raise click.UsageError("--verbose needs --output to place the per-state CSV")
    steer, chsh = nonlocality.ensemble_maxima(seed, n)
    gap = float(np.max(np.abs(steer - chsh)))
    cert = nonlocality.EquivalenceCertificate(
        seed=seed, n_states=n, max_abs_gap=gap, passed=gap <= nonlocality.GAP_TOL
    )
    _emit_json(cert.to_dict(), output_path)
    if verbose:
        rows = [
            (i, float(steer[i]), float(chsh[i]), float(abs(steer[i] - chsh[i])))
            for i in range(n)
        ]
        _write_csv(
            rows, ["index", "max_steering", "max_chsh", "gap"], output_path + ".states.csv"
        )
    if not cert.passed:
        sys.exit(3)


@main.command("hull-check")
@click.option("--vector", required=True, help="Four comma-separated correlations <AB>,<A'B>,<AB'>,<A'B'>.")
@click.option("--mu", default=None, type=float, help="Trusted-side overlap in (0, 1).")
@click.option("--beta", default=None, type=float, help="Alternative to --mu: angle in (0, pi/2).")
@click.option("--k", default=720, show_default=True, help="LP discretization points per ellipse.")
@click.option("--output", "output_path", default=None, type=click.Path())
def hull_check(vector, mu, beta, k, output_path):
    """Closed-form and LP membership verdicts for a correlation 4-vector."""
    try:
        comps = [float(x) for x in vector.split(",")]
        if len(comps) != 4:
            raise ValueError(f"need 4 components, got {len(comps)}")
    except ValueError as exc:
        _fail(exc, 1)
    if (mu is None) == (beta is None):
        raise click.UsageError("give exactly one of --mu or --beta")
    try:
        if mu is not None:
            if not 0.0 < mu < 1.0:
                raise click.UsageError(f"--mu must be in (0, 1), got {mu}")
            beta = float(np.arctan(np.sqrt(1.0 - mu) / np.sqrt(mu)))
        cv = quantum.CorrelationVector(np.array(comps))
        result = hull.lp_membership(cv, beta, k)
    except click.UsageError:
        raise
    except SteerscopeError as exc:
        _fail(exc, 2)
    _emit_json(result.to_dict(), output_path)


@main.command("povm-ellipse")
@click.option("--kb", required=True, type=float, help="Eigenvalue gap of E_1|B.")
@click.option("--lam2b", required=True, type=float, help="Smaller eigenvalue of E_1|B.")
@click.option("--kbp", required=True, type=float, help="Eigenvalue gap of E_1|B'.")
@click.option("--lam2bp", required=True, type=float, help="Smaller eigenvalue of E_1|B'.")
@click.option("--mu", required=True, type=float, help="Squared eigenvector overlap.")
@click.option("--n", default=360, show_default=True, help="Boundary samples for the CSV.")
@click.option("--output", "output_path", default=None, type=click.Path(), help="Boundary CSV path.")
def povm_ellipse(kb, lam2b, kbp, lam2bp, mu, n, output_path):
    """Ellipse geometry of (p1_B, p1_B') for dichotomic POVM effects."""
    try:
        geom = povm.povm_ellipse(
            povm.PovmElement(kb, lam2b), povm.PovmElement(kbp, lam2bp), mu
        )
    except SteerscopeError as exc:
        _fail(exc, 2)
    a, b, c, d, f, g = geom.coeffs
    payload = {
        "coeffs": {"A": a, "B": b, "C": c, "D": d, "F": f, "G": g},
        "center": list(geom.center),
        "semi_axes": list(geom.semi_axes),
        "rotation": geom.rotation,
        "parametric": {
            "T": geom.parametric[0],
            "kappa": geom.parametric[1],
            "T_prime": geom.parametric[2],
            "kappa_prime": geom.parametric[3],
        },
    }
    _emit_json(payload, None)
    if output_path:
        xi = 2.0 * np.pi * np.arange(n) / n
        x, y = povm.ellipse_point(geom, xi)
        rows = [(float(xi[i]), float(x[i]), float(y[i])) for i in range(n)]
        _write_csv(rows, ["xi", "x", "y"], output_path)


if __name__ == "__main__":
    main()

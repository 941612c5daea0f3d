import json

import numpy as np
import pytest
from click.testing import CliRunner

from steerscope.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def werner_json(tmp_path, eta, name="state.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"family": "werner", "eta": eta}))
    return str(path)


class TestAnalyze:
    def test_steerable_werner(self, runner, tmp_path):
        res = runner.invoke(main, ["analyze", "--input", werner_json(tmp_path, 0.8)])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["schema_version"] == 1
        assert payload["steerable"] is True
        assert payload["max_value"] == pytest.approx(2 * np.sqrt(2) * 0.8, abs=1e-10)
        assert payload["max_chsh"] == pytest.approx(payload["max_value"], abs=1e-10)

    def test_unsteerable_werner(self, runner, tmp_path):
        res = runner.invoke(main, ["analyze", "--input", werner_json(tmp_path, 0.5)])
        assert res.exit_code == 0
        assert json.loads(res.output)["steerable"] is False

    def test_output_file(self, runner, tmp_path):
        out = tmp_path / "report.json"
        res = runner.invoke(
            main,
            ["analyze", "--input", werner_json(tmp_path, 0.9), "--output", str(out)],
        )
        assert res.exit_code == 0
        payload = json.loads(out.read_text())
        assert payload["max_value"] == pytest.approx(2 * np.sqrt(2) * 0.9, abs=1e-10)

    def test_malformed_json_exit_1(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        res = runner.invoke(main, ["analyze", "--input", str(path)])
        assert res.exit_code == 1

    def test_missing_file_exit_1(self, runner, tmp_path):
        res = runner.invoke(main, ["analyze", "--input", str(tmp_path / "nope.json")])
        assert res.exit_code == 1

    def test_invalid_state_exit_2_names_invariant(self, runner, tmp_path):
        mat = np.stack([np.diag([0.5, 0.7, -0.1, -0.1]), np.zeros((4, 4))], axis=-1)
        path = tmp_path / "neg.json"
        path.write_text(json.dumps({"matrix": mat.tolist()}))
        res = runner.invoke(main, ["analyze", "--input", str(path)])
        assert res.exit_code == 2
        assert "NotPositive" in res.output


class TestScanWerner:
    def test_grid(self, runner):
        res = runner.invoke(main, ["scan-werner", "--n", "21"])
        assert res.exit_code == 0
        lines = res.output.strip().split("\n")
        assert lines[0] == "eta,max_steering,max_chsh,steerable"
        assert len(lines) == 22
        last = lines[-1].split(",")
        assert float(last[0]) == 1.0
        assert float(last[1]) == pytest.approx(2 * np.sqrt(2), abs=1e-9)
        assert last[3] == "True"
        by_eta = {round(float(r.split(",")[0]), 6): r.split(",")[3] for r in lines[1:]}
        assert by_eta[0.7] == "False"
        assert by_eta[0.75] == "True"

    def test_n_too_small_exit_2(self, runner):
        res = runner.invoke(main, ["scan-werner", "--n", "1"])
        assert res.exit_code == 2

    def test_bad_range_exit_2(self, runner):
        res = runner.invoke(main, ["scan-werner", "--eta-min", "0.9", "--eta-max", "0.1"])
        assert res.exit_code == 2


class TestVerifyEquivalence:
    def test_small_run_passes(self, runner):
        res = runner.invoke(main, ["verify-equivalence", "--seed", "7", "--n", "50"])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["pass"] is True
        assert payload["max_abs_gap"] <= 1e-8
        assert payload["n_states"] == 50

    def test_reruns_byte_identical(self, runner, tmp_path):
        outs = []
        for name in ("a.json", "b.json"):
            out = tmp_path / name
            res = runner.invoke(
                main,
                ["verify-equivalence", "--seed", "3", "--n", "40", "--output", str(out)],
            )
            assert res.exit_code == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]

    def test_verbose_writes_per_state_csv(self, runner, tmp_path):
        out = tmp_path / "cert.json"
        res = runner.invoke(
            main,
            [
                "verify-equivalence",
                "--seed", "5",
                "--n", "30",
                "--output", str(out),
                "--verbose",
            ],
        )
        assert res.exit_code == 0
        lines = (tmp_path / "cert.json.states.csv").read_text().strip().split("\n")
        assert lines[0] == "index,max_steering,max_chsh,gap"
        assert len(lines) == 31
        gaps = [float(r.split(",")[3]) for r in lines[1:]]
        assert max(gaps) <= 1e-8

    def test_verbose_without_output_exit_2(self, runner):
        res = runner.invoke(main, ["verify-equivalence", "--n", "5", "--verbose"])
        assert res.exit_code == 2


class TestHullCheck:
    def test_all_ones_outside(self, runner):
        res = runner.invoke(main, ["hull-check", "--vector", "1,1,1,1", "--mu", "0.5"])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["inside"] is False
        assert payload["lp_inside"] is False
        assert payload["value"] == pytest.approx(np.sqrt(2), abs=1e-12)

    def test_origin_inside(self, runner):
        res = runner.invoke(main, ["hull-check", "--vector", "0,0,0,0", "--beta", "0.7"])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["inside"] is True and payload["lp_inside"] is True

    def test_mu_and_beta_together_exit_2(self, runner):
        res = runner.invoke(
            main, ["hull-check", "--vector", "0,0,0,0", "--mu", "0.5", "--beta", "0.7"]
        )
        assert res.exit_code == 2

    def test_degenerate_mu_exit_2(self, runner):
        res = runner.invoke(main, ["hull-check", "--vector", "0,0,0,0", "--mu", "1.0"])
        assert res.exit_code == 2

    def test_malformed_vector_exit_1(self, runner):
        res = runner.invoke(main, ["hull-check", "--vector", "1,2", "--mu", "0.5"])
        assert res.exit_code == 1


class TestPovmEllipse:
    ARGS = ["--kb", "1", "--lam2b", "0", "--kbp", "1", "--lam2bp", "0", "--mu", "0.5"]

    def test_projective_geometry(self, runner):
        res = runner.invoke(main, ["povm-ellipse", *self.ARGS])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["center"] == pytest.approx([0.5, 0.5], abs=1e-12)
        assert payload["semi_axes"] == pytest.approx([1.0, 1.0], abs=1e-12)

    def test_trivial_effect_exit_2(self, runner):
        res = runner.invoke(
            main,
            ["povm-ellipse", "--kb", "0", "--lam2b", "0.3", "--kbp", "1",
             "--lam2bp", "0", "--mu", "0.5"],
        )
        assert res.exit_code == 2

    def test_boundary_csv(self, runner, tmp_path):
        out = tmp_path / "boundary.csv"
        res = runner.invoke(
            main, ["povm-ellipse", *self.ARGS, "--n", "90", "--output", str(out)]
        )
        assert res.exit_code == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "xi,x,y"
        assert len(lines) == 91
        for row in lines[1:]:
            _, x, y = (float(v) for v in row.split(","))
            assert -1e-9 <= x <= 1 + 1e-9
            assert -1e-9 <= y <= 1 + 1e-9

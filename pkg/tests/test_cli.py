import json
import math

import pytest

from owakit.cli import EXIT_IO, EXIT_METHOD_DOMAIN, EXIT_OK, EXIT_USAGE, main
from owakit.reports import read_sweep_csv


def run(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_linear_uniform(self, capsys):
        code, out, _ = run(["gen", "--n", "5", "--orness", "0.5", "--method", "linear"], capsys)
        assert code == EXIT_OK
        assert "0.2 0.2 0.2 0.2 0.2" in out
        assert f"{math.log(5):.6f}"[:6] in out

    def test_linear_golden(self, capsys):
        code, out, _ = run(
            ["gen", "--n", "5", "--orness", "0.6", "--method", "linear", "--beta", "1.5"],
            capsys,
        )
        assert code == EXIT_OK
        for val in ("0.2715541", "0.2484458", "0.2042229", "0.16", "0.1157770"):
            assert val in out

    def test_maxent_extreme_orness_exit3(self, capsys):
        code, _, err = run(["gen", "--n", "5", "--orness", "1.0", "--method", "maxent"], capsys)
        assert code == EXIT_METHOD_DOMAIN
        assert "orness" in err

    def test_json_format(self, capsys):
        code, out, _ = run(
            ["gen", "--n", "3", "--orness", "0.7", "--method", "maxent", "--format", "json"],
            capsys,
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["status"] == "ok"
        assert abs(payload["achieved_orness"] - 0.7) <= 1e-9
        assert len(payload["w"]) == 3

    def test_csv_format(self, capsys):
        code, out, _ = run(
            ["gen", "--n", "3", "--orness", "0.5", "--format", "csv"], capsys
        )
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0].startswith("method,beta,n,")
        assert lines[1].startswith("linear,1.5,3,")

    def test_bad_orness_usage_error(self, capsys):
        code, _, err = run(["gen", "--n", "5", "--orness", "1.5"], capsys)
        assert code == EXIT_USAGE
        assert "orness" in err

    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["gen", "--n", "5", "--orness", "0.5", "--bogus"])
        assert exc.value.code == 2


class TestSweep:
    def test_writes_csv(self, tmp_path, capsys):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run(
            ["sweep", "--n", "5", "--method", "all", "--steps", "11", "--out", str(out_path)],
            capsys,
        )
        assert code == EXIT_OK
        rows = read_sweep_csv(str(out_path))
        assert {r.method for r in rows} == {
            "linear",
            "exponential",
            "exponential-no-preset",
            "maxent",
        }

    def test_multiple_betas(self, tmp_path, capsys):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run(
            [
                "sweep", "--n", "5", "--method", "linear", "--steps", "5",
                "--beta", "1.0", "--beta", "1.5", "--out", str(out_path),
            ],
            capsys,
        )
        assert code == EXIT_OK
        rows = read_sweep_csv(str(out_path))
        assert {r.beta for r in rows} == {1.0, 1.5}

    def test_unwritable_out_exits_4(self, tmp_path, capsys):
        code, _, err = run(
            [
                "sweep", "--n", "3", "--method", "linear", "--steps", "3",
                "--out", str(tmp_path / "missing" / "s.csv"),
            ],
            capsys,
        )
        assert code == EXIT_IO
        assert "cannot write" in err

    def test_bad_steps_exits_2(self, capsys):
        code, _, _ = run(
            ["sweep", "--n", "3", "--method", "linear", "--steps", "1", "--out", "x.csv"],
            capsys,
        )
        assert code == EXIT_USAGE


class TestBench:
    def test_smoke(self, capsys):
        code, out, _ = run(["bench", "--n", "3", "--reps", "1", "--format", "csv"], capsys)
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "method,beta,n,reps,mean_time,best_time,relative_time"
        assert len(lines) == 7

    def test_bad_reps_exits_2(self, capsys):
        code, _, _ = run(["bench", "--n", "3", "--reps", "0"], capsys)
        assert code == EXIT_USAGE

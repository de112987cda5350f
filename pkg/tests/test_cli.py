"""CLI golden-output and exit-code tests."""

import json

import pytest

from weilclass.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_simple_elliptic(self, capsys):
        code, out, _ = run(capsys, "check", "--p", "5", "--n", "1", "--g", "1", "--coeffs", "1")
        assert code == 0
        assert out == (
            "candidate: p=5 n=1 g=1 q=5 a=(1,)\n"
            "weil: yes\n"
            "simple: yes\n"
            "min_poly: t^2 + t + 5\n"
            "e: 1\n"
            "dim: 1\n"
            "case: non-dim5\n"
            "real_root: no\n"
            "invariants: p:0/1 p:0/1\n"
        )

    def test_real_root_class(self, capsys):
        code, out, _ = run(capsys, "check", "--p", "3", "--n", "1", "--g", "2", "--coeffs", "0,-6")
        assert code == 0
        assert "simple: yes" in out
        assert "e: 2" in out and "dim: 2" in out and "real_root: yes" in out

    def test_non_prime_exit_2(self, capsys):
        code, _, err = run(capsys, "check", "--p", "4", "--n", "1", "--g", "1", "--coeffs", "1")
        assert code == 2
        assert "not prime" in err

    def test_not_simple_exit_1(self, capsys):
        code, out, _ = run(capsys, "check", "--p", "2", "--n", "1", "--g", "1", "--coeffs", "3")
        assert code == 1
        assert "weil: no" in out

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "check", "--p", "5", "--n", "1", "--g", "1", "--coeffs", "1")
        assert code == 0
        record = json.loads(out)
        assert record["simple"] is True and record["e"] == 1
        assert list(record) == ["p", "n", "g", "a", "weil", "simple", "e", "dim", "case_label", "invariants", "tags"]

    def test_malformed_coeffs(self, capsys):
        code, _, err = run(capsys, "check", "--p", "5", "--n", "1", "--g", "1", "--coeffs", "x")
        assert code == 2


class TestNewton:
    def test_two_segments(self, capsys):
        code, out, _ = run(capsys, "newton", "--p", "2", "--poly", "8,2,1")
        assert code == 0
        assert "segments (root valuation x length): 2 x 1, 1 x 1" in out

    def test_single_segment(self, capsys):
        code, out, _ = run(capsys, "newton", "--p", "2", "--poly", "4,2,1")
        assert code == 0
        assert "segments (root valuation x length): 1 x 2" in out

    def test_eisenstein(self, capsys):
        code, out, _ = run(capsys, "newton", "--p", "3", "--poly", "-3,0,1")
        assert code == 0
        assert "segments (root valuation x length): 1/2 x 2" in out

    def test_lattice_check(self, capsys):
        code, out, _ = run(capsys, "newton", "--p", "2", "--poly", "8,2,1", "--n", "3")
        assert "lattice check (n=3): fail" in out
        code, out, _ = run(capsys, "newton", "--p", "2", "--poly", "16,4,1", "--n", "2")
        assert "lattice check (n=2): pass" in out

    def test_zero_constant_exit_2(self, capsys):
        code, _, err = run(capsys, "newton", "--p", "2", "--poly", "0,1")
        assert code == 2


class TestProfile:
    def test_rational_roots(self, capsys):
        code, out, _ = run(capsys, "profile", "--p", "2", "--poly", "4,-5,1")
        assert code == 0
        assert "(1,2) (1,0)" in out

    def test_inert_quadratic(self, capsys):
        code, out, _ = run(capsys, "profile", "--p", "2", "--poly", "4,2,1")
        assert code == 0
        assert "(2,1)" in out

    def test_eisenstein(self, capsys):
        code, out, _ = run(capsys, "profile", "--p", "3", "--poly", "-3,0,1")
        assert code == 0
        assert "(2,1/2)" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "profile", "--p", "3", "--poly", "-3,0,1")
        doc = json.loads(out)
        assert doc["factors"] == [[2, "1/2"]]


class TestEnumerate:
    def test_g1_records_to_stdout(self, capsys):
        code, out, err = run(capsys, "enumerate", "--p", "5", "--n", "1", "--g", "1")
        assert code == 0
        lines = [l for l in out.splitlines() if l]
        assert len(lines) == 9
        assert all(json.loads(l)["simple"] for l in lines)
        summary = json.loads(err)
        assert summary["visited"] == 9 and summary["weil"] == 9

    def test_out_file_and_summary_stdout(self, capsys, tmp_path):
        path = tmp_path / "records.jsonl"
        code, out, _ = run(capsys, "enumerate", "--p", "5", "--n", "1", "--g", "1", "--out", str(path))
        assert code == 0
        summary = json.loads(out)
        assert summary["per_case"] == {"non-dim5": 9}
        lines = path.read_text().splitlines()
        assert len(lines) == 9
        parsed = json.loads(lines[0])
        assert parsed["p"] == 5 and parsed["a"] == [-4]

    def test_csv_output(self, capsys, tmp_path):
        path = tmp_path / "records.csv"
        code, out, _ = run(capsys, "enumerate", "--p", "2", "--n", "1", "--g", "1", "--format", "csv", "--out", str(path))
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "p,n,g,a,weil,simple,e,dim,case_label,invariants,tags"
        assert len(lines) == 6

    def test_cap_refusal_exit_2(self, capsys):
        code, _, err = run(capsys, "enumerate", "--p", "2", "--n", "1", "--g", "5", "--mode", "full")
        assert code == 2
        assert "cap" in err

    def test_sample_mode(self, capsys):
        code, out, err = run(capsys, "enumerate", "--p", "2", "--n", "1", "--g", "2", "--mode", "sample", "--count", "200", "--seed", "42")
        assert code == 0
        summary = json.loads(err)
        assert summary["visited"] == 200 and summary["seed"] == 42

    def test_workers_preserve_order(self, capsys, tmp_path):
        f1 = tmp_path / "w1.jsonl"
        f2 = tmp_path / "w3.jsonl"
        run(capsys, "enumerate", "--p", "3", "--n", "1", "--g", "2", "--out", str(f1))
        run(capsys, "enumerate", "--p", "3", "--n", "1", "--g", "2", "--workers", "3", "--out", str(f2))
        assert f1.read_text() == f2.read_text()


class TestConfig:
    def test_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "weilclass.cfg"
        cfg.write_text("format=json\ntags=0\n")
        code, out, _ = run(capsys, "--config", str(cfg), "check", "--p", "5", "--n", "1", "--g", "1", "--coeffs", "1")
        assert code == 0
        assert json.loads(out)["tags"] == []

    def test_env_var(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "weilclass.cfg"
        cfg.write_text("format=json\n")
        monkeypatch.setenv("WEILCLASS_CONFIG", str(cfg))
        code, out, _ = run(capsys, "check", "--p", "5", "--n", "1", "--g", "1", "--coeffs", "1")
        assert json.loads(out)["p"] == 5

    def test_flag_overrides_config(self, capsys, tmp_path):
        cfg = tmp_path / "weilclass.cfg"
        cfg.write_text("format=json\n")
        code, out, _ = run(capsys, "--config", str(cfg), "--format", "text", "check", "--p", "5", "--n", "1", "--g", "1", "--coeffs", "1")
        assert out.startswith("candidate:")

    def test_unknown_key_rejected(self, capsys, tmp_path):
        cfg = tmp_path / "weilclass.cfg"
        cfg.write_text("bogus=1\n")
        code, _, err = run(capsys, "--config", str(cfg), "check", "--p", "5", "--n", "1", "--g", "1", "--coeffs", "1")
        assert code == 2

import json
import os
import subprocess
import sys

import pytest

from waringsym.cli import main
from waringsym.decomp import decompose_odd


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestBasics:
    def test_sigma(self, capsys):
        code, out, _ = run(capsys, "sigma", 2, 3)
        assert code == 0 and out == "x1*x2 + x1*x3 + x2*x3\n"

    def test_sigma_json(self, capsys):
        code, out, _ = run(capsys, "sigma", 3, 5, "--format", "json")
        assert json.loads(out)["terms"] == 10

    def test_bounds_odd(self, capsys):
        code, out, _ = run(capsys, "bounds", 3, 5)
        data = json.loads(out)
        assert code == 0 and data["exact"] == "6" and data["lower"] == data["upper"] == "6"

    def test_bounds_even_text(self, capsys):
        code, out, _ = run(capsys, "bounds", 4, 5, "--format", "text")
        assert code == 0 and out.startswith("sigma(4,5): 10 <= rank <= 16; exact rank: unknown")

    def test_hilbert(self, capsys):
        code, out, _ = run(capsys, "hilbert", 4, 5, "--check", "--format", "json")
        assert code == 0 and json.loads(out)["hilbert"] == ["1", "5", "10", "5", "1"]

    def test_hilbert_csv(self, capsys):
        _, out, _ = run(capsys, "hilbert", 3, 5, "--format", "csv")
        assert out == "r,hilbert\n0,1\n1,5\n2,5\n3,1\n"

    def test_identity(self, capsys):
        code, out, _ = run(capsys, "identity", 1, 5)
        assert code == 0 and "identity holds" in out

    def test_version(self, capsys):
        code, out, _ = run(capsys, "--version")
        assert code == 0 and "kernel" in out


class TestCatalecticant:
    def test_text_marks_zero_lines(self, capsys):
        code, out, _ = run(capsys, "catalecticant", 4, 5, 2)
        assert code == 0
        assert out.splitlines()[0].endswith("15x15, rank 10")
        assert "*11" in out

    def test_refined_bitmap(self, capsys):
        _, out, _ = run(capsys, "catalecticant", 4, 5, 2, "--refine", "--format", "bitmap")
        assert out.split()[0] == "0000000111" and len(out.split()) == 10

    def test_csv_is_plain(self, capsys):
        _, out, _ = run(capsys, "catalecticant", 2, 3, 1, "--format", "csv")
        assert out == ",1,2,3\n1,0,1,1\n2,1,0,1\n3,1,1,0\n"

    def test_json(self, capsys):
        _, out, _ = run(capsys, "catalecticant", 3, 5, 1, "--refine", "--format", "json")
        data = json.loads(out)
        assert data["shape"] == [10, 5] and data["rank"] == 5


class TestDecomposeVerify:
    def test_intro_identity(self, capsys):
        code, out, _ = run(capsys, "decompose", 3, 5)
        data = json.loads(out)
        assert code == 0 and data["scale"] == "24"
        assert [s["weight"] for s in data["summands"]] == ["3"] + ["-1"] * 5

    @pytest.mark.parametrize("d,n", [(d, n) for n in range(1, 11) for d in range(1, 8) if d <= n])
    def test_round_trip(self, capsys, monkeypatch, d, n):
        code, out, _ = run(capsys, "decompose", d, n)
        if d % 2 == 0 and d == n:
            # no even decomposition of the monomial without --monomial
            assert code == 2
            code, out, _ = run(capsys, "decompose", d, n, "--monomial")
        assert code == 0
        code, msg, _ = run(capsys, "verify", "-", stdin=out, monkeypatch=monkeypatch)
        assert code == 0 and msg.startswith("OK:")

    def test_tampered_file(self, capsys, tmp_path):
        data = json.loads(decompose_odd(3, 5).to_json())
        data["summands"][1]["weight"] = "1"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "verify", path)
        assert code == 1
        assert out.startswith("FAIL: residual") and "at monomial x" in out

    def test_tampered_json_report(self, capsys, tmp_path):
        data = json.loads(decompose_odd(3, 5).to_json())
        data["scale"] = "25"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "verify", path, "--format", "json")
        assert code == 1 and json.loads(out)["ok"] is False

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "dec.json"
        code, out, _ = run(capsys, "decompose", 4, 6, "--method", "derivative", "-o", path)
        assert code == 0 and out == ""
        assert run(capsys, "verify", path)[0] == 0


class TestWitness:
    def test_proposition(self, capsys):
        code, out, _ = run(capsys, "witness", 4, 5, 15)
        assert code == 0 and out == "0 of 16 subsets admit membership\n"

    def test_expectations(self, capsys):
        assert run(capsys, "witness", 4, 5, 15, "--expect", "none")[0] == 0
        assert run(capsys, "witness", 4, 5, 15, "--expect", "some")[0] == 1
        assert run(capsys, "witness", 4, 5, 16, "--expect", "all")[0] == 0

    def test_certificates_json(self, capsys):
        _, out, _ = run(capsys, "witness", 3, 3, 3, "--format", "json", "--certificates")
        data = json.loads(out)
        assert data["members"] == [] and data["elapsed_ms"] is None


class TestUsageErrors:
    @pytest.mark.parametrize("argv", [
        [],
        ["nosuch"],
        ["sigma", "x", "3"],
        ["sigma", "4", "3"],
        ["decompose", "4", "4"],
        ["decompose", "3", "5", "--format", "csv"],
        ["catalecticant", "2", "3", "5"],
        ["identity", "2", "4"],
        ["witness", "4", "5", "17"],
        ["verify", "/nonexistent/file.json"],
    ])
    def test_exit_two(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 2 and out == ""
        assert "usage" in err or "error" in err

    def test_malformed_json(self, capsys, monkeypatch):
        code, _, err = run(capsys, "verify", "-", stdin="{not json", monkeypatch=monkeypatch)
        assert code == 2 and "error" in err


def _subprocess(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "waringsym", *map(str, argv)],
                          capture_output=True, env=env, check=False)


def test_byte_identical_runs():
    for argv in [("decompose", 6, 9), ("catalecticant", 4, 6, 2, "--format", "json"),
                 ("witness", 4, 5, 15, "--certificates")]:
        a, b = _subprocess(*argv), _subprocess(*argv)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout and a.stdout


def test_pure_fallback_gives_same_bytes():
    env = dict(os.environ, WARINGSYM_PURE="1")
    pure = _subprocess("catalecticant", 5, 8, 2, "--refine", "--format", "json", env=env)
    default = _subprocess("catalecticant", 5, 8, 2, "--refine", "--format", "json")
    assert pure.returncode == 0 and pure.stdout == default.stdout
    ver = _subprocess("--version", env=env)
    assert b"kernel: python" in ver.stdout


def test_thread_count_does_not_change_output():
    one = _subprocess("witness", 4, 5, 15, "--certificates", env=dict(os.environ, WARINGSYM_THREADS="1"))
    many = _subprocess("witness", 4, 5, 15, "--certificates", env=dict(os.environ, WARINGSYM_THREADS="4"))
    assert one.stdout == many.stdout

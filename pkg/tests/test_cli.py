"""CLI contract: reports, exit codes, determinism, atomic outputs."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from barylab.cli import main
from barylab.geometry import Polytope, polytope_to_json

F = Fraction


@pytest.fixture
def square_file(tmp_path):
    poly = Polytope.from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)])
    path = tmp_path / "square.json"
    path.write_text(json.dumps(polytope_to_json(poly)))
    return str(path)


@pytest.fixture
def segment_file(tmp_path):
    poly = Polytope.from_vertices([(1,), (0,)])
    path = tmp_path / "segment.json"
    path.write_text(json.dumps(polytope_to_json(poly)))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCharacterize:
    def test_square_center(self, capsys, square_file):
        code, out, _ = run(capsys, ["characterize", "--input", square_file, "--point", "0,0"])
        assert code == 0
        report = json.loads(out)
        assert report["relint"] is True
        assert report["condition_ii"] is True
        assert report["agrees"] is True

    def test_square_vertex_both_false(self, capsys, square_file):
        code, out, _ = run(capsys, ["characterize", "--input", square_file, "--point", "1,1"])
        assert code == 0
        report = json.loads(out)
        assert report["relint"] is False
        assert report["condition_ii"] is False
        assert report["agrees"] is True

    def test_point_outside_exit_3(self, capsys, square_file):
        code, _, err = run(capsys, ["characterize", "--input", square_file, "--point", "9,9"])
        assert code == 3
        assert "precondition" in err

    def test_malformed_json_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run(capsys, ["characterize", "--input", str(bad), "--point", "0,0"])
        assert code == 2

    def test_missing_file_exit_2(self, capsys, tmp_path):
        code, _, _ = run(
            capsys,
            ["characterize", "--input", str(tmp_path / "nope.json"), "--point", "0,0"],
        )
        assert code == 2

    def test_thread_cap_does_not_change_output(self, capsys, square_file, monkeypatch):
        code, out_serial, _ = run(
            capsys, ["characterize", "--input", square_file, "--point", "1/3,1/7"]
        )
        monkeypatch.setenv("BARYLAB_THREADS", "4")
        code2, out_parallel, _ = run(
            capsys, ["characterize", "--input", square_file, "--point", "1/3,1/7"]
        )
        assert code == code2 == 0
        assert out_serial == out_parallel


class TestWitness:
    def test_segment_witness(self, capsys, segment_file):
        code, out, _ = run(
            capsys,
            ["witness", "--input", segment_file, "--point", "1/3", "--pairs", "16"],
        )
        assert code == 0
        report = json.loads(out)
        assert report["barycenter_exact_match"] is True
        assert report["atoms_in_M"] is True
        assert report["covering_radius"] >= 0.0
        assert len(report["measure"]["atoms"]) >= 16

    def test_boundary_point_exit_4(self, capsys, segment_file):
        code, _, err = run(
            capsys, ["witness", "--input", segment_file, "--point", "0"]
        )
        assert code == 4
        assert "no witness" in err

    def test_sweep_covering_radius_non_increasing(self, capsys, segment_file):
        code, out, _ = run(
            capsys,
            [
                "witness", "--input", segment_file, "--point", "1/3",
                "--sweep", "4,16,64", "--grid-resolution", "64",
            ],
        )
        assert code == 0
        rows = json.loads(out)["sweep"]
        radii = [r["covering_radius"] for r in rows]
        assert radii[1] <= radii[0]
        assert radii[2] <= radii[1]

    def test_csv_requires_sweep(self, capsys, segment_file):
        code, _, err = run(
            capsys,
            ["witness", "--input", segment_file, "--point", "1/3", "--format", "csv"],
        )
        assert code == 2

    def test_csv_sweep_table(self, capsys, segment_file):
        code, out, _ = run(
            capsys,
            [
                "witness", "--input", segment_file, "--point", "1/3",
                "--sweep", "2,4", "--format", "csv",
            ],
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "pairs,covering_radius"
        assert len(lines) == 3


class TestHilbert:
    def test_report_alpha_and_pass(self, capsys):
        code, out, _ = run(
            capsys, ["hilbert", "--dim", "10", "--seed", "0", "--samples", "20000"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["alpha_max"] == [1, 10]
        assert report["pass"] is True

    def test_sweep_csv(self, capsys):
        code, out, _ = run(capsys, ["hilbert", "--sweep", "1:5", "--format", "csv"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "d,alpha_max"
        assert lines[1] == "1,1"
        assert lines[-1] == "5,1/5"

    def test_sweep_monotone_decline(self, capsys):
        code, out, _ = run(capsys, ["hilbert", "--sweep", "1:50"])
        assert code == 0
        rows = json.loads(out)["sweep"]
        values = [F(n, d) for n, d in (r["alpha_max"] for r in rows)]
        assert all(a > b for a, b in zip(values, values[1:]))


class TestSimplex:
    def test_full_support_run(self, capsys):
        code, out, _ = run(
            capsys,
            [
                "simplex", "--mu", "1/2,1/3,1/6", "--depth", "16",
                "--lambda-atoms", "16", "--samples", "4000", "--seed", "1",
                "--grid-resolution", "10",
            ],
        )
        assert code == 0
        report = json.loads(out)
        assert report["full_support_target"] is True

    def test_zero_entry_mu_exit_4(self, capsys):
        code, out, _ = run(
            capsys,
            ["simplex", "--mu", "1/2,1/2,0", "--depth", "4",
             "--lambda-atoms", "4", "--samples", "200", "--grid-resolution", "6"],
        )
        assert code == 4
        assert json.loads(out)["full_support_target"] is False

    def test_invalid_mu_exit_2(self, capsys):
        code, _, err = run(
            capsys, ["simplex", "--mu", "1/2,1/3", "--samples", "100"]
        )
        assert code == 2

    def test_m_mismatch_exit_2(self, capsys):
        code, _, _ = run(
            capsys,
            ["simplex", "--mu", "1/2,1/2", "--m", "3", "--samples", "100"],
        )
        assert code == 2


class TestDeterminism:
    def test_byte_identical_reports(self, capsys, square_file, tmp_path):
        out1 = tmp_path / "a.json"
        out2 = tmp_path / "b.json"
        argv = [
            "simplex", "--mu", "1/2,1/4,1/4", "--depth", "8",
            "--lambda-atoms", "8", "--samples", "2000", "--seed", "9",
            "--grid-resolution", "8",
        ]
        assert main(argv + ["--out", str(out1)]) == 0
        assert main(argv + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_out_file_matches_stdout(self, capsys, square_file, tmp_path):
        out = tmp_path / "r.json"
        argv = ["characterize", "--input", square_file, "--point", "0,0"]
        code, stdout, _ = run(capsys, argv)
        assert main(argv + ["--out", str(out)]) == 0
        assert out.read_text() == stdout

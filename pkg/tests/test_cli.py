import math
import os

import numpy as np
import pytest

from chirality2d.cli import (EXIT_DEGENERATE, EXIT_IO, EXIT_PARSE, RunConfig,
                             main)

from .conftest import DATA_DIR

TRI = os.path.join(DATA_DIR, "triangle_345.txt")
SQUARE = os.path.join(DATA_DIR, "square.txt")
COLLINEAR = os.path.join(DATA_DIR, "collinear.txt")
EXTREMAL = os.path.join(DATA_DIR, "extremal_parallelogram.txt")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAlpha:
    def test_triangle(self, capsys):
        code, out, _ = run(capsys, "alpha", TRI)
        assert code == 0
        assert "alpha0=2.000000" in out
        assert "alpha1=1.250000" in out
        assert "axis=bisector-smallest-angle" in out
        assert "alpha2=1.000000" in out

    def test_square(self, capsys):
        code, out, _ = run(capsys, "alpha", SQUARE)
        assert code == 0
        assert "alpha0=1.000000" in out
        assert "alpha1=1.000000" in out

    def test_out_file(self, tmp_path, capsys):
        dest = tmp_path / "alpha.txt"
        code, out, _ = run(capsys, "alpha", TRI, "--out", str(dest))
        assert code == 0
        assert "alpha1=1.250000" in dest.read_text()

    def test_degenerate_input(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "alpha", COLLINEAR)
        assert exc.value.code == EXIT_DEGENERATE

    def test_missing_file(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "alpha", "/no/such/file.txt")
        assert exc.value.code == EXIT_IO

    def test_invalid_grid(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "alpha", TRI, "--grid", "10")
        assert exc.value.code == EXIT_PARSE

    def test_invalid_tol(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "alpha", TRI, "--tol", "0.5")
        assert exc.value.code == EXIT_PARSE


class TestProfile:
    def test_row_count_and_header(self, capsys):
        code, out, _ = run(capsys, "profile", TRI, "--grid", "64")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "theta,R"
        assert len(lines) == 65
        thetas = [float(line.split(",")[0]) for line in lines[1:]]
        assert thetas == sorted(thetas)
        assert 0.0 <= thetas[0] and thetas[-1] < math.pi

    def test_extremal_min_is_sqrt2(self, capsys):
        code, out, _ = run(capsys, "profile", EXTREMAL, "--grid", "256")
        assert code == 0
        vals = [float(line.split(",")[1])
                for line in out.strip().splitlines()[1:]]
        assert min(vals) == pytest.approx(math.sqrt(2), abs=1e-6)
        assert all(v >= math.sqrt(2) - 1e-9 for v in vals)


class TestPhase:
    def test_csv(self, tmp_path, capsys):
        dest = tmp_path / "grid.csv"
        code, _, _ = run(capsys, "phase", "parallelogram", "16",
                         "--out", str(dest))
        assert code == 0
        lines = dest.read_text().splitlines()
        assert lines[0] == "p1,p2,region,alpha1,axis_theta"
        assert len(lines) == 257

    def test_svg_sibling(self, tmp_path, capsys):
        dest = tmp_path / "grid.csv"
        code, _, _ = run(capsys, "phase", "triangle-xy", "16",
                         "--out", str(dest), "--format", "svg")
        assert code == 0
        assert (tmp_path / "grid.svg").exists()

    def test_unwritable_path(self, capsys):
        code, _, err = run(capsys, "phase", "parallelogram", "16",
                           "--out", "/no/such/dir/grid.csv")
        assert code == EXIT_IO
        assert "cannot write" in err


class TestBounds:
    def test_small_campaign(self, tmp_path, capsys):
        dest = tmp_path / "rep.csv"
        code, out, _ = run(capsys, "bounds", "--count", "5",
                           "--out", str(dest))
        assert code == 0
        assert "0 failures" in out
        assert dest.read_text().startswith("body_id,check,lhs,rhs,")

    def test_determinism(self, tmp_path, capsys):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        run(capsys, "bounds", "--count", "4", "--seed", "9", "--out", str(a))
        run(capsys, "bounds", "--count", "4", "--seed", "9", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_witness_flag(self, capsys):
        code, out, _ = run(capsys, "bounds", "--witness", "1.5")
        assert code == 0
        a0 = float(out.split("alpha0=")[1].split()[0])
        assert a0 == pytest.approx(1.5, abs=0.01)


class TestWitness:
    def test_writes_polygon(self, tmp_path, capsys):
        from chirality2d.chirality import asymmetry_alpha0
        from chirality2d.geometry import load_polygon

        dest = tmp_path / "witness.txt"
        code, out, _ = run(capsys, "witness", "--beta", "1.5",
                           "--out", str(dest))
        assert code == 0
        K = load_polygon(dest)
        assert asymmetry_alpha0(K).value == pytest.approx(1.5, abs=0.01)

    def test_bad_beta(self, capsys):
        code, _, err = run(capsys, "witness", "--beta", "3.0")
        assert code == EXIT_PARSE
        assert "invalid witness" in err


class TestRunConfig:
    def test_defaults(self):
        c = RunConfig()
        assert c.grid == 2048 and c.format == "csv"

    def test_validation(self):
        with pytest.raises(ValueError):
            RunConfig(grid=32)
        with pytest.raises(ValueError):
            RunConfig(refine_tol=0.0)
        with pytest.raises(ValueError):
            RunConfig(format="json")

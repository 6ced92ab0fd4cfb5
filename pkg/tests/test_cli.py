"""
End-to-end tests for the quaddom command line
"""
import io
import json
import logging
import math
from pathlib import Path

import pandas as pd
import pytest

from quaddom.cli.main import build_parser, main

MAPS_DIR = Path(__file__).resolve().parent.parent / "quaddom" / "configs" / "maps"
CONCHOID = str(MAPS_DIR / "conchoid_b1.json")


@pytest.fixture(autouse=True)
def _restore_root_logger():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    for handler in root.handlers[:]:
        if handler not in handlers:
            root.removeHandler(handler)
            handler.close()
    root.setLevel(level)


@pytest.fixture(autouse=True)
def _no_env_tolerance(monkeypatch):
    monkeypatch.delenv("QUADDOM_TOL", raising=False)


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class TestParser:
    def test_subcommand_required(self):
        with pytest.raises(SystemExit) as excinfo:
            build_parser().parse_args([])
        assert excinfo.value.code == 2

    def test_bad_complex_argument(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["map", "eval", CONCHOID, "--w=abc"])
        assert excinfo.value.code == 2

    def test_bad_log_level(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["--log-level", "chatty", "map", "classify", CONCHOID])
        assert excinfo.value.code == 2


# ---------------------------------------------------------------------------
# map
# ---------------------------------------------------------------------------

class TestMapCommand:
    def test_eval(self, capsys):
        assert main(["map", "eval", CONCHOID, "--w=0,-1", "--w", "0,0"]) == 0
        out = _json_out(capsys)
        assert out["version"] == 1
        first, second = out["points"]
        assert first["psi"] == pytest.approx([0.0, 0.0], abs=1e-14)
        assert second["psi"] == pytest.approx([0.0, math.sqrt(2.0)], abs=1e-14)

    def test_trace(self, tmp_path):
        out = tmp_path / "trace.csv"
        assert main(["map", "trace", CONCHOID, "--n", "64", "--out", str(out)]) == 0
        frame = pd.read_csv(out)
        assert len(frame) == 64
        assert list(frame.columns)[:3] == ["t", "x", "y"]
        assert frame["t"].is_monotonic_increasing

    def test_classify(self, capsys):
        assert main(["map", "classify", CONCHOID]) == 0
        out = _json_out(capsys)
        assert out["class"] == "line"
        assert out["deviation"]["max"] < 0.1

    def test_univalence(self, capsys):
        assert main(["map", "univalence", CONCHOID]) == 0
        assert _json_out(capsys)["verdict"] == "pass"

    def test_missing_document(self, tmp_path, capsys):
        assert main(["map", "eval", str(tmp_path / "absent.json"), "--w=0,-1"]) == 2
        assert "quaddom: error:" in capsys.readouterr().err

    def test_schema_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"version": 1, "q": {"A1": [1, 0]}, "poles": [{"b": [0, -1]}]}))
        assert main(["map", "classify", str(bad)]) == 2


# ---------------------------------------------------------------------------
# qd
# ---------------------------------------------------------------------------

class TestQdCommand:
    def test_derive(self, capsys):
        assert main(["qd", "derive", CONCHOID]) == 0
        out = _json_out(capsys)
        (node,) = out["points"]
        assert node["beta"] == pytest.approx([0.0, 0.0], abs=1e-10)
        assert node["weights"][0] == pytest.approx([math.pi, 0.0], abs=1e-8)
        assert out["segments"] == []

    def test_verify_passes(self, tmp_path):
        out = tmp_path / "verify.json"
        code = main(["qd", "verify", CONCHOID, "--testfn", "0,3,3", "--testfn", "1,2,4",
                     "--out", str(out)])
        assert code == 0
        report = json.loads(out.read_text())
        assert len(report["records"]) == 2

    def test_inadmissible_test_function(self, capsys):
        assert main(["qd", "verify", CONCHOID, "--testfn=0,-5,3"]) == 4

    def test_tolerance_flag(self, capsys):
        assert main(["--tol", "1e-6", "qd", "verify", CONCHOID, "--testfn", "0,3,3"]) == 0


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------

class TestFamilyCommand:
    def test_conchoid_grid(self, tmp_path):
        out = tmp_path / "family.csv"
        assert main(["family", "--kind", "conchoid", "--grid", "r=0.5,0.9", "--out", str(out)]) == 0
        frame = pd.read_csv(out)
        assert frame["param"].tolist() == [0.5, 0.9]
        assert frame["weight_re"].tolist() == pytest.approx([math.pi, math.pi], rel=1e-8)

    def test_default_output_directory(self, tmp_path):
        assert main(["--output-dir", str(tmp_path), "family", "--kind", "3", "--grid", "a=0.3"]) == 0
        frame = pd.read_csv(tmp_path / "family_ray.csv")
        assert frame["type"].tolist() == ["looped", "type_two"]

    def test_figure_is_reproducible(self, tmp_path):
        svgs = []
        for name in ("one", "two"):
            svg = tmp_path / f"{name}.svg"
            args = ["family", "--kind", "conchoid", "--grid", "r=0.5",
                    "--out", str(tmp_path / f"{name}.csv"), "--figure", str(svg)]
            assert main(args) == 0
            svgs.append(svg.read_bytes())
        assert svgs[0].lstrip().startswith(b"<?xml")
        assert svgs[0] == svgs[1]

    def test_nothing_solved(self, tmp_path):
        assert main(["family", "--kind", "ray", "--grid", "a=0.7", "--out", str(tmp_path / "f.csv")]) == 3

    @pytest.mark.parametrize("args", [
        ["--kind", "ray", "--limits"],
        ["--kind", "ellipse"],
        ["--kind", "parabola", "--grid", "r=0.5"],
    ])
    def test_invalid_requests(self, tmp_path, args):
        assert main(["family", *args, "--out", str(tmp_path / "f.csv")]) == 3


# ---------------------------------------------------------------------------
# contact
# ---------------------------------------------------------------------------

class TestContactCommand:
    def test_map_curve(self, tmp_path):
        out = tmp_path / "field.csv"
        assert main(["contact", CONCHOID, "--z", "0,5", "--z", "1,4", "--out", str(out)]) == 0
        frame = pd.read_csv(out)
        assert frame["F_im"].iloc[0] == pytest.approx(0.2, rel=1e-7)
        assert (frame["abs_gap"] < 1e-7).all()

    def test_below_strip(self):
        assert main(["contact", CONCHOID, "--z", "0,1"]) == 5

    def test_sampled_curve(self, tmp_path, capsys):
        curve = tmp_path / "curve.csv"
        assert main(["map", "trace", CONCHOID, "--n", "4001", "--grading", "uniform",
                     "--t-min=-100", "--t-max", "100", "--out", str(curve)]) == 0
        assert main(["contact", str(curve), "--z", "0,5"]) == 0
        frame = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert frame["F_im"].iloc[0] == pytest.approx(0.2, rel=1e-2)
        assert frame["F_residue_re"].isna().all()

    def test_member_sweep(self, capsys):
        assert main(["contact", "--sweep", "b=0.5,1,2", "--z", "0,5"]) == 0
        out = _json_out(capsys)
        assert out["b"] == [0.5, 1.0, 2.0]
        assert out["max_deviation"] < 1e-7

    def test_source_required_without_sweep(self):
        assert main(["contact", "--z", "0,5"]) == 2

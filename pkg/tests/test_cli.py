import json
import subprocess
import sys

import pytest

from toughlab.cli import main
from toughlab.families import petersen
from toughlab.graph import emit_graph6


@pytest.fixture
def petersen_file(tmp_path):
    path = tmp_path / "petersen.g6"
    path.write_text(emit_graph6(petersen()) + "\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_kneser_graph6(self, capsys):
        code, out, _ = run(capsys, "gen", "kneser", "5", "2")
        assert code == 0
        assert out.strip() == emit_graph6(petersen())

    def test_invalid_params_exit_2(self, capsys):
        code, _, err = run(capsys, "gen", "cycle", "2")
        assert code == 2
        assert "cycle" in err

    def test_complete4_edgelist(self, capsys):
        code, out, _ = run(capsys, "gen", "complete", "4", "--format", "edgelist")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "4 6"
        assert len(lines) == 7

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "c5.g6"
        code, out, _ = run(capsys, "gen", "cycle", "5", "--out", str(target))
        assert code == 0 and out == ""
        from toughlab.families import cycle
        assert target.read_text().strip() == emit_graph6(cycle(5))


class TestAnalyze:
    def test_meta_only(self, capsys, petersen_file):
        code, out, _ = run(capsys, "analyze", petersen_file)
        assert code == 0
        report = json.loads(out)
        assert report["schema"] == "toughlab-report/1"
        assert report["graph_meta"] == {"n": 10, "m": 15, "d": 3, "connected": True}
        for key in ("spectral", "bounds", "toughness", "mixing",
                    "component_bound", "partition"):
            assert report[key] is None

    def test_bounds_and_toughness(self, capsys, petersen_file):
        code, out, _ = run(capsys, "analyze", petersen_file,
                           "--bounds", "--toughness")
        assert code == 0
        report = json.loads(out)
        assert report["bounds"]["theorem"] == pytest.approx(0.5, abs=1e-9)
        assert report["bounds"]["exact_t"] == {"num": 4, "den": 3}
        assert report["toughness"]["t"] == {"num": 4, "den": 3}
        assert report["toughness"]["components"] == 3

    def test_full_pipeline(self, capsys, petersen_file):
        code, out, _ = run(capsys, "analyze", petersen_file, "--toughness",
                           "--bounds", "--mixing", "exhaustive",
                           "--component-bound", "--partition")
        assert code == 0
        report = json.loads(out)
        assert report["mixing"]["mode"] == "exhaustive"
        assert report["mixing"]["worst"]["slack"] >= -1e-9
        assert report["component_bound"]["verified"] is True
        assert report["component_bound"]["value"] == pytest.approx(4, abs=1e-8)
        part = report["partition"]
        if "precondition_failed" not in part:
            assert part["cross_edges"] == 0

    def test_sampled_mixing(self, capsys, tmp_path):
        path = tmp_path / "c12.g6"
        from toughlab.families import cycle
        path.write_text(emit_graph6(cycle(12)) + "\n")
        code, out, _ = run(capsys, "analyze", str(path), "--mixing", "sampled",
                           "--samples", "500", "--seed", "7")
        assert code == 0
        report = json.loads(out)
        assert report["mixing"] == json.loads(out)["mixing"]
        assert report["mixing"]["samples"] == 500

    def test_disconnected_bounds_exit_2(self, capsys, tmp_path):
        path = tmp_path / "disc.txt"
        path.write_text("4 2\n0 1\n2 3\n")
        code, _, err = run(capsys, "analyze", str(path), "--bounds")
        assert code == 2
        assert "connected" in err

    def test_edge_list_autodetect(self, capsys, tmp_path):
        path = tmp_path / "tri.txt"
        path.write_text("3 3\n0 1\n1 2\n2 0\n")
        code, out, _ = run(capsys, "analyze", str(path))
        assert code == 0
        assert json.loads(out)["graph_meta"]["m"] == 3

    def test_parse_error_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("!!!\n")
        code, _, _ = run(capsys, "analyze", str(path))
        assert code == 2

    def test_toughness_cap_exit_2(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("TOUGHLAB_MAX_N", "5")
        from toughlab.families import cycle
        path = tmp_path / "c8.g6"
        path.write_text(emit_graph6(cycle(8)) + "\n")
        code, _, _ = run(capsys, "analyze", str(path), "--toughness")
        assert code == 2
        code, out, _ = run(capsys, "analyze", str(path), "--toughness", "--force")
        assert code == 0
        assert json.loads(out)["toughness"]["t"] == {"num": 1, "den": 1}


class TestVerifyCorpus:
    def test_small_manifest(self, capsys, tmp_path):
        manifest = tmp_path / "m.txt"
        manifest.write_text("cycle 5\npetersen\ncomplete 4\n")
        code, out, _ = run(capsys, "verify-corpus", str(manifest),
                           "--samples", "100")
        assert code == 0
        assert "0 violation(s)" in out
        assert "petersen" in out

    def test_empty_manifest(self, capsys, tmp_path):
        manifest = tmp_path / "empty.txt"
        manifest.write_text("")
        code, out, _ = run(capsys, "verify-corpus", str(manifest))
        assert code == 0
        assert "0 graphs checked" in out

    def test_bad_manifest_line(self, capsys, tmp_path):
        manifest = tmp_path / "bad.txt"
        manifest.write_text("cycle five\n")
        code, _, _ = run(capsys, "verify-corpus", str(manifest))
        assert code == 2


def test_analyze_byte_identical_across_runs(petersen_file):
    cmd = [sys.executable, "-m", "toughlab.cli", "analyze", petersen_file,
           "--bounds", "--toughness", "--mixing", "sampled",
           "--samples", "200", "--seed", "42"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout

import json

import pytest

from gorenstein import cli
from gorenstein.criteria import is_gorenstein, weight_function
from gorenstein.multigraph import Multigraph, complete_graph, cycle_graph

K4_TEXT = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
PATH3_TEXT = "3 2\n0 1\n1 2\n"
C5_TEXT = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.txt"
    p.write_text(K4_TEXT)
    return str(p)


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_k4(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "check", k4_file)
        assert code == 0
        data = json.loads(out)
        assert data["gorenstein"] is True
        assert data["delta"] == 2
        assert set(data["weights"].values()) == {1}
        assert len(data["good_flats"]) == 10

    def test_path_not_two_connected(self, capsys, tmp_path):
        p = tmp_path / "path3.txt"
        p.write_text(PATH3_TEXT)
        code, out, _ = run_cli(capsys, "check", str(p))
        assert code == 0
        assert json.loads(out) == {"gorenstein": False, "reason": "not 2-connected"}

    def test_oracle_flag(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "check", k4_file, "--oracle")
        assert code == 0
        data = json.loads(out)
        assert data["delta"] == 2
        assert data["point"] == [1] * 6

    def test_parse_error_exit_two(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("2 1\n0 x\n")
        code, _, err = run_cli(capsys, "check", str(p))
        assert code == 2
        assert "line 2" in err

    def test_missing_file_exit_two(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "check", str(tmp_path / "nope.txt"))
        assert code == 2

    def test_matches_library(self, capsys, k4_file):
        _, out, _ = run_cli(capsys, "check", k4_file)
        data = json.loads(out)
        delta, w = is_gorenstein(Multigraph.parse(K4_TEXT))
        assert data["delta"] == delta
        assert data["weights"] == {str(k): v for k, v in w.as_dict().items()}

    def test_byte_deterministic(self, capsys, k4_file):
        _, out1, _ = run_cli(capsys, "check", k4_file)
        _, out2, _ = run_cli(capsys, "check", k4_file)
        assert out1 == out2


class TestWeights:
    def test_c5_at_five(self, capsys, tmp_path):
        p = tmp_path / "c5.txt"
        p.write_text(C5_TEXT)
        code, out, _ = run_cli(capsys, "weights", str(p), "--delta", "5")
        assert code == 0
        data = json.loads(out)
        assert set(data["weights"].values()) == {4}

    def test_none_when_absent(self, capsys, tmp_path):
        p = tmp_path / "k2.txt"
        p.write_text("2 1\n0 1\n")
        code, out, _ = run_cli(capsys, "weights", str(p), "--delta", "2")
        assert code == 0
        assert out.strip() == "none"


class TestFacets:
    def test_k4_representation(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "facets", k4_file)
        assert code == 0
        data = json.loads(out)
        assert data["rank"] == 3
        assert len(data["vertices"]) == 16
        assert len(data["facets"]) == 16
        kinds = {f["kind"] for f in data["facets"]}
        assert kinds == {"nonnegativity", "good_flat"}

    def test_not_two_connected_exit_two(self, capsys, tmp_path):
        p = tmp_path / "path3.txt"
        p.write_text(PATH3_TEXT)
        code, _, _ = run_cli(capsys, "facets", str(p))
        assert code == 2


class TestGlue:
    def spec_file(self, tmp_path, delta):
        spec = {
            "delta": delta,
            "left": {"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]},
            "left_class": [0],
            "right": {"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]},
            "right_class": [0],
        }
        p = tmp_path / "glue.json"
        p.write_text(json.dumps(spec))
        return str(p)

    def test_triangles_at_three(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "glue", self.spec_file(tmp_path, 3))
        assert code == 0
        diamond = Multigraph.from_edge_list(
            4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]
        )
        assert Multigraph.parse(out).is_isomorphic(diamond)

    def test_dot_output(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "glue", self.spec_file(tmp_path, 3), "--format", "dot"
        )
        assert code == 0
        assert out.startswith("graph G {")
        assert "--" in out

    def test_infeasible_precondition_exit_two(self, capsys, tmp_path):
        spec = {
            "delta": 5,
            "left": {"vertices": 2, "edges": [[0, 1], [0, 1]]},
            "left_class": [0],
            "right": {"vertices": 2, "edges": [[0, 1], [0, 1]]},
            "right_class": [0],
        }
        p = tmp_path / "bad.json"
        p.write_text(json.dumps(spec))
        code, _, err = run_cli(capsys, "glue", str(p))
        assert code == 2
        assert "negative" in err

    def test_malformed_json_exit_two(self, capsys, tmp_path):
        p = tmp_path / "broken.json"
        p.write_text("{not json")
        code, _, _ = run_cli(capsys, "glue", str(p))
        assert code == 2


class TestDecompose:
    def test_k4_at_two(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "decompose", k4_file, "--delta", "2")
        assert code == 0
        data = json.loads(out)
        assert data["seed"] == "k4"
        assert data["steps"] == []

    def test_none_when_absent(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "decompose", k4_file, "--delta", "3")
        assert code == 0
        assert out.strip() == "none"


class TestCensusCommand:
    def test_small(self, capsys):
        code, out, _ = run_cli(
            capsys, "census", "--max-v", "3", "--max-e", "3", "--max-mult", "1"
        )
        assert code == 0
        data = json.loads(out)
        assert data["total"] == 2


class TestVerifyCommand:
    def test_equivalence_clean(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify", "equivalence",
            "--max-v", "3", "--max-e", "4", "--max-mult", "3",
        )
        assert code == 0
        assert json.loads(out)["mismatches"] == []

    def test_classification_table(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify", "classification", "--delta", "3",
            "--max-v", "4", "--max-e", "6", "--max-mult", "3",
            "--table",
        )
        assert code == 0
        assert "mismatches: 0" in out


class TestDeltaMaxEnv:
    def test_invalid_value_exit_two(self, capsys, k4_file, monkeypatch):
        monkeypatch.setenv("GORENSTEIN_DELTA_MAX", "zero")
        code, _, err = run_cli(capsys, "check", k4_file, "--oracle")
        assert code == 2
        assert "GORENSTEIN_DELTA_MAX" in err

    def test_overrides_scan_bound(self, capsys, tmp_path, monkeypatch):
        p = tmp_path / "b9.txt"
        p.write_text("2 9\n" + "0 1\n" * 9)
        monkeypatch.setenv("GORENSTEIN_DELTA_MAX", "5")
        code, out, _ = run_cli(capsys, "check", str(p), "--oracle")
        assert code == 0
        assert json.loads(out)["gorenstein"] is False
        monkeypatch.setenv("GORENSTEIN_DELTA_MAX", "9")
        code, out, _ = run_cli(capsys, "check", str(p), "--oracle")
        assert code == 0
        assert json.loads(out)["delta"] == 9

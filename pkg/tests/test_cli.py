import json
from fractions import Fraction

import pytest

from minbisect.cli import instance_to_doc, main
from minbisect.dimacs import ParseError, parse_graph
from minbisect.hp import HPInstance


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


C4_TEXT = """c a four-cycle
p edge 4 4
e 1 2
e 2 3
e 3 4
e 1 4
"""

K4_TEXT = "p edge 4 6\n" + "\n".join(
    f"e {i} {j}" for i in range(1, 5) for j in range(i + 1, 5)
) + "\n"


class TestParseGraph:
    def test_single_edge(self):
        g = parse_graph("p edge 2 1\ne 1 2\n")
        assert g.n == 2 and g.edges == ((0, 1),)

    def test_triangle(self):
        g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
        assert g.n == 3 and g.m == 3

    def test_weighted(self):
        g = parse_graph("p edge 3 2\ne 1 2 2.5\ne 2 3 4\n")
        assert g.weights[(0, 1)] == Fraction(5, 2)
        assert g.weights[(1, 2)] == 4

    @pytest.mark.parametrize("text,fragment", [
        ("p edge 2 1\ne 1 1\n", "self-loop"),
        ("p edge 2 2\ne 1 2\ne 2 1\n", "duplicate"),
        ("p edge 2 1\ne 1 3\n", "out of range"),
        ("e 1 2\n", "before problem line"),
        ("p edge 2 2\ne 1 2\n", "declares"),
        ("p edge 2 1\nq 1 2\n", "unknown record"),
    ])
    def test_errors_carry_line_info(self, text, fragment):
        with pytest.raises(ParseError) as err:
            parse_graph(text)
        assert fragment in str(err.value)


class TestCommands:
    def test_bisect_c4(self, tmp_path, capsys):
        path = tmp_path / "c4.col"
        path.write_text(C4_TEXT)
        code, out, _ = run_cli(capsys, "bisect", "--k", "2", str(path))
        assert code == 0
        doc = json.loads(out)
        assert doc["feasible"] and doc["cut_size"] == 2
        assert sorted(map(len, doc["partition"])) == [2, 2]

    def test_bisect_k4_infeasible(self, tmp_path, capsys):
        path = tmp_path / "k4.col"
        path.write_text(K4_TEXT)
        code, out, _ = run_cli(capsys, "bisect", "--k", "1", str(path))
        assert code == 0
        assert json.loads(out) == {"feasible": False}

    def test_weighted_bisect(self, tmp_path, capsys):
        path = tmp_path / "w.col"
        path.write_text("p edge 3 3\ne 1 2 1\ne 1 3 1\ne 2 3 5\n")
        code, out, _ = run_cli(capsys, "bisect", "--k", "2", "--weighted", str(path))
        assert code == 0
        doc = json.loads(out)
        assert doc["feasible"] and doc["cut_weight"] == "2"

    def test_sized_cut(self, tmp_path, capsys):
        path = tmp_path / "p4.col"
        path.write_text("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
        code, out, _ = run_cli(capsys, "sized-cut", "--k", "1", "--target", "2", str(path))
        doc = json.loads(out)
        assert code == 0 and doc["cut_size"] == 1

    def test_decompose_validate_round_trip(self, tmp_path, capsys):
        graph_path = tmp_path / "p5.col"
        graph_path.write_text("p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n")
        dec_path = tmp_path / "dec.json"
        code, out, _ = run_cli(capsys, "decompose", "--k", "1", "--scale", "2,3",
                               str(graph_path), "-o", str(dec_path))
        assert code == 0
        doc = json.loads(dec_path.read_text())
        assert len(doc["nodes"]) >= 2
        code, out, _ = run_cli(capsys, "validate-decomposition", "--k", "1",
                               "--scale", "2,3", str(graph_path), str(dec_path))
        assert code == 0
        assert json.loads(out)["ok"]

    def test_validate_flags_bad_document(self, tmp_path, capsys):
        graph_path = tmp_path / "p3.col"
        graph_path.write_text("p edge 3 2\ne 1 2\ne 2 3\n")
        dec_path = tmp_path / "bad.json"
        dec_path.write_text(json.dumps({"nodes": [{"id": 0, "parent": None, "bag": [1, 3]}]}))
        code, out, _ = run_cli(capsys, "validate-decomposition", "--k", "1",
                               str(graph_path), str(dec_path))
        assert code == 1
        assert not json.loads(out)["ok"]

    def test_important_seps(self, tmp_path, capsys):
        path = tmp_path / "p5.col"
        path.write_text("p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n")
        code, out, _ = run_cli(capsys, "important-seps", "--k", "1",
                               "--source", "1", "--target", "5", str(path))
        assert code == 0
        assert out.strip().splitlines() == ["5"]

    def test_solve_hp_round_trip(self, tmp_path, capsys):
        inst = HPInstance(
            k=1, b=1, d=1, q=1, vertices=(0,), hyperedges=[frozenset({0})],
            col0={}, costs=[{(frozenset(), 0): 0, (frozenset({0}), 1): 0}])
        path = tmp_path / "inst.json"
        path.write_text(json.dumps(instance_to_doc(inst)))
        code, out, _ = run_cli(capsys, "solve-hp", "--deterministic", str(path))
        assert code == 0 and json.loads(out)["w"] == [0, 0]
        code, out, _ = run_cli(capsys, "oracle", "hp", str(path))
        assert code == 0 and json.loads(out)["w"] == [0, 0]

    def test_oracle_commands(self, tmp_path, capsys):
        path = tmp_path / "c4.col"
        path.write_text(C4_TEXT)
        code, out, _ = run_cli(capsys, "oracle", "bisect", "--k", "2", "--target", "2", str(path))
        assert code == 0 and json.loads(out)["cut_size"] == 2
        code, out, _ = run_cli(capsys, "oracle", "impsep", "--k", "1",
                               "--source", "1", "--target", "3", str(path))
        assert code == 0 and out.strip() == "3"
        code, out, _ = run_cli(capsys, "oracle", "unbreak", "--q", "1", "--k", "1",
                               "--set", "1,2,3,4", str(path))
        assert code == 0 and json.loads(out)["unbreakable"]

    def test_parse_error_exit_code(self, tmp_path, capsys):
        path = tmp_path / "bad.col"
        path.write_text("p edge 2 1\ne 1 1\n")
        code, _, err = run_cli(capsys, "bisect", "--k", "1", str(path))
        assert code == 2 and "self-loop" in err

    def test_seed_env_honoured_when_flag_absent(self, tmp_path, capsys, monkeypatch):
        path = tmp_path / "c4.col"
        path.write_text(C4_TEXT)
        monkeypatch.setenv("MINBISECT_SEED", "17")
        code, out1, _ = run_cli(capsys, "bisect", "--k", "2", "--randomized", str(path))
        assert code == 0
        monkeypatch.delenv("MINBISECT_SEED")
        code, out2, _ = run_cli(capsys, "bisect", "--k", "2", "--randomized",
                                "--seed", "17", str(path))
        assert out1 == out2

    def test_report_infeasible(self, tmp_path, capsys):
        path = tmp_path / "k4.col"
        path.write_text(K4_TEXT)
        report_dir = tmp_path / "rep"
        code, _, _ = run_cli(capsys, "bisect", "--k", "1", str(path),
                             "--report", str(report_dir))
        assert code == 0
        rows = (report_dir / "summary.csv").read_text().splitlines()
        assert "False" in rows[1]
        assert (report_dir / "partition.png").stat().st_size > 0

    def test_report_files(self, tmp_path, capsys):
        path = tmp_path / "c4.col"
        path.write_text(C4_TEXT)
        report_dir = tmp_path / "report"
        code, _, _ = run_cli(capsys, "bisect", "--k", "2", str(path),
                             "--report", str(report_dir))
        assert code == 0
        assert (report_dir / "summary.csv").exists()
        assert (report_dir / "partition.png").exists()
        summary = (report_dir / "summary.csv").read_text().splitlines()
        assert summary[0].startswith("n,m,k,feasible")

        dec_report = tmp_path / "dec_report"
        code, _, _ = run_cli(capsys, "decompose", "--k", "1", "--scale", "2,3",
                             str(path), "--report", str(dec_report))
        assert code == 0
        assert (dec_report / "nodes.csv").exists()
        assert (dec_report / "tree.png").exists()

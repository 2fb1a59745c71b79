import json

import pytest

from lapcent.cli import main

P3 = "0 1\n1 2\n"


@pytest.fixture()
def p3_file(tmp_path):
    path = tmp_path / "p3.el"
    path.write_text(P3)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestAnalyze:
    def test_json_values(self, capsys, p3_file):
        code, out, _ = run(capsys, "analyze", p3_file, "--json")
        assert code == 0
        rep = json.loads(out)
        assert [round(n["cstar"], 4) for n in rep["nodes"]] == [1.8, 4.5, 1.8]
        assert rep["graph"]["kirchhoff"] == pytest.approx(4 / 3, abs=1e-9)
        assert rep["graph"]["kirchhoff_convention"] == "trace"

    def test_text_and_csv(self, capsys, p3_file):
        code, out, _ = run(capsys, "analyze", p3_file)
        assert code == 0 and "kirchhoff index K: 1.333333" in out
        code, out, _ = run(capsys, "analyze", p3_file, "--csv")
        assert code == 0
        assert out.splitlines()[0] == "node,label,lplus_diag,cstar"
        assert len(out.splitlines()) == 4

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run(capsys, "analyze", "no-such-file.el")
        assert code == 2
        assert "error:" in err

    def test_parse_error_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.el"
        bad.write_text("0 0\n")
        code, _, err = run(capsys, "analyze", str(bad))
        assert code == 2 and "self-loop" in err

    def test_output_file_and_determinism(self, capsys, p3_file, tmp_path):
        out1 = tmp_path / "a.json"
        out2 = tmp_path / "b.json"
        assert run(capsys, "analyze", p3_file, "--json", "-o", str(out1))[0] == 0
        assert run(capsys, "analyze", p3_file, "--json", "-o", str(out2))[0] == 0
        assert out1.read_bytes() == out2.read_bytes()


class TestCompare:
    def test_csv_shape(self, capsys, p3_file):
        code, out, _ = run(capsys, "compare", p3_file)
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("node,label,degree,degree_norm")
        assert len(lines) == 4


class TestHitting:
    def test_exact(self, capsys, p3_file):
        code, out, _ = run(capsys, "hitting", p3_file, "-i", "0", "-j", "2")
        assert code == 0
        rep = json.loads(out)
        assert rep["hitting"] == pytest.approx(4.0)
        assert rep["commute"] == pytest.approx(8.0)

    def test_mc_deterministic(self, capsys, p3_file):
        args = ("hitting", p3_file, "-i", "0", "-j", "2", "--method", "mc",
                "--runs", "2000", "--seed", "7")
        code, out1, _ = run(capsys, *args)
        assert code == 0
        _, out2, _ = run(capsys, *args)
        assert out1 == out2
        est = json.loads(out1)["estimate"]
        assert est["runs"] == 2000 and est["seed"] == 7
        assert abs(est["mean"] - 4.0) <= 4 * est["std_error"]

    def test_approx_conventions(self, capsys, p3_file):
        code, out, _ = run(capsys, "hitting", p3_file, "-i", "1", "-j", "0",
                           "--method", "approx")
        rep = json.loads(out)
        assert code == 0
        assert rep["hitting"] == pytest.approx(2.0)  # Vol/d(1) = 4/2
        assert "dense-regime" in rep["note"]
        _, out, _ = run(capsys, "hitting", p3_file, "-i", "1", "-j", "0",
                        "--method", "approx", "--convention", "target-degree")
        assert json.loads(out)["hitting"] == pytest.approx(4.0)  # Vol/d(0)


class TestEen:
    def test_export(self, capsys, p3_file):
        code, out, _ = run(capsys, "een", "export", p3_file)
        assert code == 0
        assert out == "0 1 R=1\n1 2 R=1\n"


class TestVerify:
    def test_single_check_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--seed", "42", "--only", "census")
        assert code == 0
        assert out.startswith("PASS census-disjointness")

    def test_unattainable_tolerance_dumps_instances(self, capsys, tmp_path,
                                                    monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, out, _ = run(capsys, "verify", "--seed", "42",
                           "--only", "detour-average", "--tolerance", "1e-30")
        assert code == 1
        assert "FAIL detour-average" in out
        dumps = list(tmp_path.glob("verify-fail-detour-average-*.el"))
        assert dumps
        # dumped instances parse back
        from lapcent import load_edge_list
        assert load_edge_list(dumps[0]).n >= 4

    def test_unknown_filter(self, capsys):
        code, _, err = run(capsys, "verify", "--only", "zzz-no-such")
        assert code == 2 and "no check matches" in err


class TestTopologyCommands:
    def test_gen_perturb_sensitivity_roundtrip(self, capsys, tmp_path):
        before = tmp_path / "g.el"
        after = tmp_path / "g1.el"
        code, _, _ = run(capsys, "gen", "--preset", "abilene", "-o", str(before))
        assert code == 0
        code, _, _ = run(capsys, "perturb", str(before), "--preset", "pert1",
                         "-o", str(after))
        assert code == 0
        code, out, _ = run(capsys, "sensitivity", str(before), str(after), "--json")
        assert code == 0
        rep = json.loads(out)
        assert rep["directions"]["kstar"] == "↓"
        assert rep["directions"]["randic"] == "↑"
        assert set(rep) == {"before", "after", "deltas", "directions"}

    def test_gen_deterministic_bytes(self, capsys, tmp_path):
        a, b = tmp_path / "a.el", tmp_path / "b.el"
        run(capsys, "gen", "--preset", "abilene", "--seed", "3", "-o", str(a))
        run(capsys, "gen", "--preset", "abilene", "--seed", "3", "-o", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_gen_custom_requires_subnets(self, capsys):
        code, _, err = run(capsys, "gen")
        assert code == 2

    def test_gen_custom(self, capsys, tmp_path):
        out = tmp_path / "c.el"
        code, _, _ = run(capsys, "gen", "--core", "1", "--gateways", "1",
                         "--subnets", "3", "-o", str(out))
        assert code == 0
        from lapcent import load_edge_list
        assert load_edge_list(out).n == 5

    def test_perturb_text_output(self, capsys, tmp_path):
        before = tmp_path / "g.el"
        run(capsys, "gen", "--preset", "abilene", "-o", str(before))
        code, out, _ = run(capsys, "sensitivity", str(before), str(before))
        assert code == 0
        assert "↔" in out  # all-flat table


class TestExportDot:
    def test_dot_output(self, capsys, p3_file):
        code, out, _ = run(capsys, "export-dot", p3_file, "--metric", "cstar")
        assert code == 0
        assert out.startswith("graph cstar {")
        assert "fillcolor" in out

    def test_unknown_metric(self, capsys, p3_file):
        code, _, err = run(capsys, "export-dot", p3_file, "--metric", "bogus")
        assert code == 2 and "unknown metric" in err

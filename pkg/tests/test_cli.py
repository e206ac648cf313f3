import json

import pytest
from jsonschema import Draft202012Validator

from bergeturan.cli import SCHEMA_PATH, main
from bergeturan.extremal import TuranParams, construct_extremal
from bergeturan.hypercore import Hypergraph, read_hypergraph, write_hypergraph

VALIDATOR = Draft202012Validator(json.loads(SCHEMA_PATH.read_text()))


def run(capsys, *argv):
    code = main(["--json", *map(str, argv)])
    out = capsys.readouterr().out
    if not out:
        return code, None
    report = json.loads(out)
    VALIDATOR.validate(report)
    assert report["exit_code"] == code
    return code, report


def run_text(capsys, *argv):
    code = main(list(map(str, argv)))
    return code, capsys.readouterr()


@pytest.fixture
def files(tmp_path):
    K5 = Hypergraph.complete(5, 3)
    paths = {
        "k4": Hypergraph.complete(4, 3),
        "k5": K5,
        "k5p": Hypergraph(6, 3, [*K5.edges, (3, 4, 5)]),
        "e8": construct_extremal(TuranParams(8, 3, 4)),
    }
    for name, H in paths.items():
        write_hypergraph(H, tmp_path / f"{name}.hg")
    return {name: tmp_path / f"{name}.hg" for name in paths}


def test_schema_is_valid():
    Draft202012Validator.check_schema(VALIDATOR.schema)


class TestFormula:
    def test_value(self, capsys):
        code, rep = run(capsys, "formula", "-n", 7, "-r", 3, "-k", 4)
        assert code == 0 and rep["result"]["value"] == 5

    def test_glsz(self, capsys):
        code, rep = run(capsys, "formula", "-n", 7, "-r", 3, "-k", 3)
        assert code == 0 and rep["result"]["value"] == 3 and rep["result"]["regime"] == "GLSZ"

    def test_invalid_k(self, capsys):
        code, out = run_text(capsys, "formula", "-n", 7, "-r", 3, "-k", 1)
        assert code == 2 and out.out == "" and "k must be >= 2" in out.err

    def test_text_output(self, capsys):
        code, out = run_text(capsys, "formula", "-n", 7, "-r", 3, "-k", 4)
        assert code == 0 and "= 5" in out.out


class TestConstruct:
    def test_writes_file(self, capsys, tmp_path):
        out = tmp_path / "out.hg"
        code, rep = run(capsys, "construct", "-n", 7, "-r", 3, "-k", 4, "-o", out)
        assert code == 0 and rep["result"]["edges"] == 5 and rep["result"]["self_check"] == "pass"
        assert len(read_hypergraph(out).edges) == 5

    def test_small_k(self, capsys, tmp_path):
        code, rep = run(capsys, "construct", "-n", 8, "-r", 3, "-k", 3, "-o", tmp_path / "o.hg")
        assert code == 0 and rep["result"]["edges"] == 4

    def test_divisibility_gate(self, capsys):
        code, out = run_text(capsys, "construct", "-n", 7, "-r", 3, "-k", 3)
        assert code == 2 and "divide" in out.err


class TestDetect:
    def test_examples(self, capsys, files):
        assert run(capsys, "detect", files["k4"], "-k", 3)[0] == 0
        code, rep = run(capsys, "detect", files["k4"], "-k", 4)
        assert code == 1 and rep["result"]["witness"] is None
        code, rep = run(capsys, "detect", files["k4"], "-k", 4, "--kind", "cycle")
        assert code == 0 and len(rep["result"]["witness"]["vertices"]) == 4

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "detect", tmp_path / "nope.hg", "-k", 2)[0] == 2

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.hg"
        bad.write_text("berge-hgraph v1\nr=3 n=4\n0 1\n")
        assert run(capsys, "detect", bad, "-k", 2)[0] == 2


class TestGoodsets:
    def test_pendant(self, capsys, files):
        code, rep = run(capsys, "goodsets", files["k5p"], "--max-size", 1)
        assert code == 0 and [5] in [g["subset"] for g in rep["result"]["good_sets"]]

    def test_k5_third_bullet(self, capsys, files):
        code, rep = run(capsys, "goodsets", files["k5"])
        disj = rep["result"]["disjunction"]
        assert code == 0 and disj["holds"] and "component" in disj["witness"]

    def test_regime_gate(self, capsys, files):
        code, out = run_text(capsys, "goodsets", files["e8"])
        assert code == 2 and "ell > r" in out.err


class TestOracle:
    def test_hypergraph(self, capsys):
        code, rep = run(capsys, "oracle", "--regime", "hypergraph", "-n", 6, "-r", 3, "-k", 4)
        assert code == 0 and rep["result"]["best_value"] == 4 and rep["result"]["status"] == "proved"

    def test_cliques(self, capsys):
        code, rep = run(capsys, "oracle", "--regime", "cliques", "-n", 7, "-r", 3, "-k", 4)
        assert code == 0 and rep["result"]["best_value"] == 5

    def test_redblue(self, capsys):
        # proved maximum at k = r+1 is 7, not the closed-form 5 (see test_search)
        code, rep = run(capsys, "oracle", "--regime", "redblue", "-n", 6, "-r", 3, "-k", 4)
        assert code == 0 and rep["result"]["best_value"] == 7

    def test_budget_exit(self, capsys):
        code, rep = run(capsys, "oracle", "-n", 7, "-r", 3, "-k", 4, "--max-nodes", 2, "--no-seed")
        assert code == 3 and rep["result"]["status"] == "budget_exhausted"

    def test_threads_recorded(self, capsys):
        code, rep = run(capsys, "oracle", "-n", 6, "-r", 3, "-k", 4, "--threads", 2)
        assert code == 0 and rep["threads"] == 2 and rep["result"]["workers"] == 2


class TestVerify:
    def test_formula_pass(self, capsys):
        code, rep = run(capsys, "verify", "--regime", "formula", "--r", 3, "--k", 4, "--n", "3..6")
        assert code == 0 and rep["result"]["passed"] and len(rep["result"]["cells"]) == 4

    def test_redblue_mismatch(self, capsys):
        code, rep = run(capsys, "verify", "--regime", "redblue", "--r", 3, "--k", 4, "--n", "4..5")
        assert code == 1 and rep["result"]["mismatches"] == 2

    def test_tiny_budget(self, capsys):
        code, rep = run(capsys, "verify", "--r", 3, "--k", 4, "--n", "6..7", "--max-nodes", 2)
        assert code == 3 and rep["result"]["inconclusive"] >= 1

    def test_bad_range(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--r", "3", "--k", "4", "--n", "6..x"])
        assert exc.value.code == 2

    def test_table(self, capsys):
        code, out = run_text(capsys, "verify", "--r", 3, "--k", 4, "--n", "3..4")
        assert code == 0 and "match" in out.out and out.out.strip().endswith("PASS")


def test_deterministic_json(capsys):
    reports = []
    for _ in range(2):
        _, rep = run(capsys, "oracle", "-n", 6, "-r", 3, "-k", 4, "--no-seed")
        rep.pop("elapsed_ms")
        rep["result"].pop("elapsed_ms")
        reports.append(rep)
    assert reports[0] == reports[1]


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "bergeturan", "formula", "-n", "7", "-r", "3", "-k", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and "= 5" in proc.stdout

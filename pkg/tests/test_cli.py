import json
import subprocess
import sys
from pathlib import Path

import pytest

from seshadri_positivity import catalog
from seshadri_positivity.cli import main

SPECS = Path(__file__).resolve().parent.parent / "demos" / "specs"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


class TestCompute:
    def test_veronese_is_big(self, capsys):
        report = run_json(capsys, "compute", str(SPECS / "veronese.json"))
        assert report["verdict"]["verdict"] == "big"
        assert report["delta_at_seshadri"] == "9/8"
        assert "annotation" in report["verdict"]

    def test_ci922_is_not_big(self, capsys):
        report = run_json(capsys, "compute", str(SPECS / "ci922.json"))
        assert report["verdict"]["verdict"] == "not_big"

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "compute", str(SPECS / "veronese.json"), "--explain", "--eta", "1/3")
        assert code == 0
        assert "verdict:  big" in out
        assert "delta at 1/2: 9/8" in out
        assert "delta(1/3) = " in out
        assert "C(k-2,t)" in out

    def test_explain_rows(self, capsys):
        report = run_json(capsys, "compute", str(SPECS / "elliptic_scroll.json"), "--explain")
        assert [row["t"] for row in report["explain"]] == [0, 1, 2, 3]
        assert report["verdict"]["verdict"] == "big"

    def test_json_is_deterministic(self, capsys):
        path = str(SPECS / "segre_p2p1_scaled.json")
        first = run(capsys, "compute", path, "--json")[1]
        assert first == run(capsys, "compute", path, "--json")[1]

    def test_emit_spec_round_trip(self, capsys, tmp_path):
        code, spec, _ = run(capsys, "catalog", "run", "segre_p2p2", "--emit-spec")
        assert code == 0
        path = tmp_path / "segre.json"
        path.write_text(spec)
        direct = run_json(capsys, "catalog", "run", "segre_p2p2")
        reloaded = run_json(capsys, "compute", str(path))
        assert reloaded == direct

    def test_zero_dimension_is_an_input_error(self, capsys, tmp_path):
        doc = json.loads((SPECS / "veronese.json").read_text())
        doc["y"] = 0
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "compute", str(path))
        assert code == 2
        assert "dimension must satisfy 1 ≤ y ≤ k−1" in err

    def test_schema_error_names_the_field(self, capsys, tmp_path):
        doc = json.loads((SPECS / "veronese.json").read_text())
        doc["seshadri"] = {"exact": 0.5}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "compute", str(path))
        assert code == 2
        assert "seshadri.exact" in err

    def test_bad_eta(self, capsys):
        code, _, err = run(capsys, "compute", str(SPECS / "veronese.json"), "--eta", "0.5")
        assert code == 2 and "--eta" in err


class TestCatalog:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "catalog", "list", "--json")
        rows = [json.loads(line) for line in out.splitlines()]
        assert code == 0 and len(rows) >= 10
        assert {r["name"] for r in rows} == set(catalog.names())
        assert all(r["expected"] for r in rows)

    def test_list_text(self, capsys):
        code, out, _ = run(capsys, "catalog", "list")
        assert code == 0 and "scroll" in out and "--e int" in out

    @pytest.mark.parametrize("e,verdict", [(3, "big"), (7, "not_big")])
    def test_scroll(self, capsys, e, verdict):
        report = run_json(capsys, "catalog", "run", "scroll", "--e", str(e))
        assert report["verdict"]["verdict"] == verdict

    def test_equals_syntax(self, capsys):
        report = run_json(capsys, "catalog", "run", "ci_codim2", "--d1=3", "--d2=2", "--k=5")
        assert report["k"] == 5

    def test_unknown_entry(self, capsys):
        code, _, err = run(capsys, "catalog", "run", "scrol")
        assert code == 1 and "scroll" in err

    def test_bad_param_value(self, capsys):
        code, _, err = run(capsys, "catalog", "run", "scroll", "--e", "-2")
        assert code == 2 and err

    def test_unknown_param(self, capsys):
        code, _, err = run(capsys, "catalog", "run", "scroll", "--q", "1")
        assert code == 2 and "--q" in err


class TestVerify:
    def test_pristine_run_passes(self, capsys):
        code, out, _ = run(capsys, "verify-paper")
        assert code == 0
        assert "FAIL" not in out

    def test_only_one_entry(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--only", "veronese", "--json")
        rows = [json.loads(line) for line in out.splitlines()]
        assert code == 0
        assert {r["suite"] for r in rows} == {"veronese"}

    def test_json_covers_every_expectation(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--json", "--no-properties")
        expected = sum(
            len(catalog.get(n).expected(catalog.get(n).resolve(p))) for n in catalog.names() for p in catalog.get(n).instances
        )
        assert code == 0
        assert len(out.splitlines()) >= expected

    def test_mutation_fails(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--only", "scroll", "--mutate", "scroll", "C0", "F", "pt", "2")
        assert code == 1
        assert "FAIL" in out

    def test_mutation_of_unknown_entry(self, capsys):
        code, _, _ = run(capsys, "verify-paper", "--mutate", "nope", "a", "b", "c", "1")
        assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "seshadri_positivity", "catalog", "run", "veronese"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert "delta at 1/2: 9/8" in proc.stdout

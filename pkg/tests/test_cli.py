import json
import subprocess
import sys
from pathlib import Path

from polydual import sggi
from polydual.cli import EXIT_CAP, EXIT_INVALID, EXIT_OK, main, survey

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr().out


class TestClassify:
    def test_all_p_golden(self, capsys):
        code, out = run(["classify", "--family", "all-p", "--p", "9"], capsys)
        assert code == EXIT_OK
        assert out == (GOLDEN / "classify_all_p_9.json").read_text()

    def test_byte_identical(self, capsys):
        _, a = run(["classify", "--torus44", "5"], capsys)
        _, b = run(["classify", "--torus44", "5"], capsys)
        assert a == b

    def test_torus_external(self, capsys):
        code, out = run(["classify", "--torus44", "4"], capsys)
        assert code == EXIT_OK and json.loads(out)["duality"] == "external"

    def test_coxeter(self, capsys):
        code, out = run(["classify", "--coxeter", "3,3,3"], capsys)
        data = json.loads(out)
        assert code == EXIT_OK and data["order"] == 120 and data["duality"] == "internal"

    def test_infinite_guard(self, capsys):
        code, out = run(["classify", "--coxeter", "inf,inf"], capsys)
        data = json.loads(out)
        assert code == EXIT_OK and data["duality"] == "external" and data["order"] == "infinite"

    def test_cap_exit(self, capsys):
        code, out = run(["classify", "--coxeter", "inf,inf", "--relator", "0 1 " * 7,
                         "--relator", "0 2 1 " * 6 + "0 " + "1 2 0 " * 6 + "2", "--cap", "5000"], capsys)
        assert code == EXIT_CAP and json.loads(out)["error"] == "cap exceeded"

    def test_coset_cap_exit(self, capsys):
        code, _ = run(["classify", "--coxeter", "3,4,3", "--cap", "100"], capsys)
        assert code == EXIT_CAP

    def test_invalid(self, capsys):
        code, out = run(["classify", "--family", "even-k", "--p", "6", "--k", "1"], capsys)
        assert code == EXIT_INVALID and json.loads(out)["valid"] is False

    def test_missing_parameter(self, capsys):
        code, out = run(["classify", "--family", "all-p"], capsys)
        assert code == EXIT_INVALID and "--p" in json.loads(out)["note"]

    def test_bad_parameter(self, capsys):
        code, _ = run(["classify", "--family", "all-p", "--p", "5"], capsys)
        assert code == EXIT_INVALID

    def test_timings_flag(self, capsys):
        _, out = run(["classify", "--torus44", "3"], capsys)
        assert "timings" not in json.loads(out)
        _, out = run(["classify", "--torus44", "3", "--timings"], capsys)
        assert "classify" in json.loads(out)["timings"]

    def test_input_file(self, tmp_path, capsys):
        from polydual import constructions as C
        f = tmp_path / "p.txt"
        f.write_text(sggi.to_text(C.polygon(7)))
        code, out = run(["classify", "--input", str(f), "--format", "text"], capsys)
        assert code == EXIT_OK and "duality: internal" in out

    def test_unparseable_input(self, tmp_path, capsys):
        f = tmp_path / "bad.txt"
        f.write_text("rank 2 degree 3\n(1,2\n(2,3)\n")
        code, _ = run(["classify", "--input", str(f)], capsys)
        assert code == EXIT_INVALID


class TestCheck:
    def test_valid(self, capsys):
        code, out = run(["check", "--family", "rank-n", "--n", "5"], capsys)
        assert code == EXIT_OK and json.loads(out)["valid"]

    def test_invalid_witness(self, capsys):
        code, out = run(["check", "--family", "even-k", "--p", "6", "--k", "1"], capsys)
        data = json.loads(out)
        assert code == EXIT_INVALID and data["intersection"]["witness"]["I"] == [0, 1]


class TestSurvey:
    def test_counts(self):
        res = survey(["polygon:3-12", "torus44:2-9", "all-p:7-12"])
        assert res["counts"]["polygon"] == {"external": 5, "internal": 5}
        assert res["counts"]["torus44"] == {"external": 4, "internal": 4}
        assert res["counts"]["all-p"] == {"internal": 6}

    def test_parallel_same(self):
        a = survey(["polygon:3-8", "simplex:2-4"], jobs=1)
        b = survey(["polygon:3-8", "simplex:2-4"], jobs=2)
        strip = lambda r: [{k: v for k, v in x.items() if k != "timings"} for x in r["instances"]]
        assert strip(a) == strip(b) and a["counts"] == b["counts"]

    def test_failures_recorded(self):
        res = survey(["even-k:6,1-2"])
        assert res["counts"]["even-k"] == {"failed": 2}

    def test_text_table(self, capsys):
        code, out = run(["survey", "polygon:3-6"], capsys)
        assert code == EXIT_OK and "polygon         external=2  internal=2" in out

    def test_bad_spec(self, capsys):
        code, _ = run(["survey", "nothing:1"], capsys)
        assert code == EXIT_INVALID


class TestEmit:
    def test_dot(self, capsys):
        code, out = run(["emit", "--family", "all-p", "--p", "9", "--format", "dot"], capsys)
        assert code == EXIT_OK
        assert sum(1 for ln in out.splitlines() if ln.strip().rstrip(";").isdigit()) == 9

    def test_cpr_text(self, capsys):
        _, out = run(["emit", "--family", "rank-n", "--n", "5"], capsys)
        assert out.splitlines()[0] == "cpr rank=5 vertices=10"

    def test_sggi_round_trip(self, capsys):
        _, out = run(["emit", "--torus44", "3", "--format", "sggi"], capsys)
        assert sggi.parse_text(out).order() == 72

    def test_lattice_json(self, capsys):
        _, out = run(["emit", "--family", "simplex", "--n", "3", "--format", "json"], capsys)
        assert [len(f) for f in json.loads(out)["faces"]] == [4, 6, 4]

    def test_presentation_text(self, capsys, tmp_path):
        f = tmp_path / "p.txt"
        code, _ = run(["emit", "--coxeter", "4,4", "--relator", "0 1 2 1 0 1 2 1 0 1 2 1",
                       "--format", "text", "-o", str(f)], capsys)
        assert code == EXIT_OK and f.read_text().startswith("gens 3")
        code, out = run(["classify", "--input", str(f)], capsys)
        assert json.loads(out)["order"] == 72


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polydual", "classify", "--family", "polygon", "--p", "5",
                           "--format", "text"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "witness: (1,4)(2,3)" in proc.stdout

import json
import subprocess
import sys

import pytest

from stdbasis import cli
from stdbasis import essentiality as ess
from stdbasis import hilbert_burch as hb
from stdbasis.cli import EXIT_CROSSCHECK, EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, main, run, validate_report

from conftest import FIXTURE_NAMES

COMMANDS = ("classify", "emax", "emin", "sets", "ebasis", "matrix", "sat", "std-basis")


def write(tmp_path, data, name="p.json"):
    p = tmp_path / name
    p.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(p)


def strip_timing(rep):
    rep = dict(rep)
    rep.pop("timing", None)
    return rep


@pytest.mark.parametrize("command", COMMANDS)
def test_reports_validate_against_schema(command):
    rep = run(command, "inessential_pair", trials=16)
    validate_report(rep)
    assert rep["command"] == command and rep["problem"] == "inessential_pair"
    assert rep["certainty"] in ("exact", "monte-carlo(16)")


def test_classify_report_contents():
    rep = run("classify", "five_columns")
    statuses = [v["status"] for v in rep["verdicts"]]
    assert statuses == ["essential", "essential", "inessential", "inessential", "essential"]
    assert [v["index"] for v in rep["verdicts"]] == [1, 2, 3, 4, 5]
    assert rep["verdicts"][2]["exponent"] == 5
    assert rep["certainty"] == "exact"


def test_matrix_report_is_monte_carlo_when_si_likely():
    rep = run("matrix", "five_columns", trials=32)
    assert rep["certainty"] == "monte-carlo(32)"
    cols = {c["column"]: c for c in rep["columns"]}
    assert cols[3]["exponent"] == 5 and cols[4]["exponent"] == 4
    assert cols[3]["si_status"] == ess.SI_LIKELY and cols[3]["seed"] == 0


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_reports_are_deterministic(name):
    a = run("emax", name, trials=16, seed=7)
    b = run("emax", name, trials=16, seed=7)
    assert strip_timing(a) == strip_timing(b)


def test_jobs_do_not_change_output():
    a = run("classify", "five_columns", jobs=1)
    b = run("classify", "five_columns", jobs=2)
    assert strip_timing(a) == strip_timing(b)


@pytest.mark.parametrize("command", ("classify", "matrix", "sets", "emax"))
def test_recheck_passes(command, capsys):
    assert main([command, "inessential_pair", "--recheck", "--trials", "8", "--json"]) == EXIT_OK
    rep = json.loads(capsys.readouterr().out)
    assert rep["recheck"]["ok"] and rep["recheck"]["checked"] > 0


def test_recheck_failure_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(ess, "recheck_verdict", lambda B, v: False)
    monkeypatch.setattr(cli.ess, "recheck_verdict", lambda B, v: False)
    assert main(["classify", "cubics", "--recheck"]) == EXIT_CROSSCHECK


def test_crosscheck_failure_exit_code(monkeypatch, capsys):
    real = hb.classify

    def flipped(B, i):
        v = real(B, i)
        return ess.Verdict(v.index, ess.ESSENTIAL if v.inessential else ess.INESSENTIAL)

    monkeypatch.setattr(hb, "classify", flipped)
    assert main(["matrix", "cubics"]) == EXIT_CROSSCHECK
    assert "cross-check failure" in capsys.readouterr().err


def test_output_file_and_summary(tmp_path, capsys):
    out = tmp_path / "rep.json"
    assert main(["classify", "cubics", "-o", str(out)]) == EXIT_OK
    text = capsys.readouterr().out
    assert "g4 = x*y*z: inessential (t=1)" in text
    validate_report(json.loads(out.read_text()))


def test_generators_problem_file(tmp_path):
    p = write(tmp_path, {"ring": ["x", "y", "z"], "generators": ["x*y*z", "x^2*y", "y^2*z", "x*z^2", "x^2*y^2"]})
    rep = run("classify", p)
    assert rep["extracted_from_generators"] is True
    assert rep["degrees"] == [3, 3, 3, 3]
    assert rep["problem"] == "p"


def test_sat_command():
    rep = run("sat", "inessential_pair", subset="4,5")
    validate_report(rep)
    assert rep["saturated"] is True
    assert rep["subset"]["complement_saturation_equals_ideal"] is True
    assert rep["subset"]["column_test"]["status"] == "inessential-set"


def test_std_basis_order_flag():
    for order in ("degrevlex", "lex", "elim:1", "elim(1)"):
        rep = run("std-basis", "cubics", order=order)
        assert rep["groebner_basis"] and rep["order"]
        assert rep["betti"] == {"3": 4} and rep["dubreil_bound_holds"]


def test_subset_flag_and_dehom(capsys):
    assert main(["sets", "five_columns", "--subset", "3,4", "--dehom", "x+2*y+3*z", "--json"]) == EXIT_OK
    rep = json.loads(capsys.readouterr().out)
    assert rep["subset"]["indices"] == [3, 4]
    assert rep["dehom_form"] == "x + 2*y + 3*z"


@pytest.mark.parametrize("data, code", [
    ('{"ring": ["x"', EXIT_PARSE),
    ({"ring": ["x", "y", "z"]}, EXIT_PARSE),
    ({"ring": ["x", "y", "z"], "generators": ["x+"]}, EXIT_PARSE),
    ({"ring": ["x", "y", "z"], "generators": ["x*w"]}, EXIT_PARSE),
    ({"ring": ["x", "y", "z"], "generators": ["x"], "bogus": 1}, EXIT_PARSE),
    ({"ring": ["x", "y", "z"], "generators": ["x", "y", "z^2"]}, EXIT_UNSUPPORTED),
    ({"ring": ["x", "y", "z"], "generators": ["x^2+y"]}, EXIT_UNSUPPORTED),
    ({"ring": ["x", "y", "z"], "matrix": [["x", "y"], ["x", "y"]]}, EXIT_UNSUPPORTED),
    ({"ring": ["x", "y", "z"], "matrix": [["z", "0", "0", "-x"], ["0", "x", "0", "-y"], ["0", "0", "y", "-z"]],
      "subset": [9]}, EXIT_PARSE),
])
def test_error_exit_codes(tmp_path, data, code, capsys):
    assert main(["classify", write(tmp_path, data)]) == code
    assert capsys.readouterr().err.strip()


def test_bad_flags(capsys):
    assert main(["classify", "cubics", "--subset", "a,b"]) == EXIT_PARSE
    assert main(["sets", "cubics", "--dehom", "x^2"]) == EXIT_UNSUPPORTED
    assert main(["classify", "no_such_fixture"]) == EXIT_PARSE
    with pytest.raises(SystemExit):
        main(["frobnicate", "cubics"])


def test_matrix_command_requires_matrix(tmp_path):
    p = write(tmp_path, {"ring": ["x", "y", "z"], "generators": ["x^2*y", "y^2*z", "x*z^2", "x*y*z"]})
    assert main(["matrix", p]) == EXIT_UNSUPPORTED


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "stdbasis", "classify", "unique_top"], capture_output=True, text=True)
    assert r.returncode == 0 and "g4" in r.stdout

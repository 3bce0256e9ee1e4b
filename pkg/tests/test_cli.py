import json
import subprocess
import sys

import pytest

from sparr.cli import JobSpec, Params, main, parse_input, run
from sparr.divisor_poset import Divisor, intersection_poset
from sparr.errors import UnsupportedSpaceError, ValidationError
from sparr.sp_tables import SpaceModel

EXAMPLE = {
    "space": {"kind": "closed_surface", "genus": 1},
    "n": 2,
    "points": ["x1", "x2"],
    "generators": [[1, 0], [0, 1]],
}


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "arr.json"
    path.write_text(json.dumps(EXAMPLE))
    return path


def test_parse_example():
    arr = parse_input(json.dumps(EXAMPLE))
    assert arr.space == SpaceModel.closed_surface(1)
    assert arr.n == 2 and arr.points.labels == ("x1", "x2")
    assert arr.generators == (Divisor((1, 0)), Divisor((0, 1)))


def test_parse_rejects_order_above_n():
    doc = dict(EXAMPLE, generators=[[1, 0], [2, 1]])
    with pytest.raises(ValidationError, match=r"generators\[1\]"):
        parse_input(json.dumps(doc))


def test_parse_rejects_unknown_space():
    doc = dict(EXAMPLE, space={"kind": "klein_bottle"})
    with pytest.raises(UnsupportedSpaceError):
        parse_input(json.dumps(doc))


@pytest.mark.parametrize("change,fragment", [
    ({"generators": [[1, -1]]}, "negative"),
    ({"generators": [[1]]}, "generators[0]"),
    ({"n": 0}, "document.n"),
    ({"points": []}, "points"),
    ({"space": {"kind": "punctured_surface", "genus": 1}}, "punctures"),
])
def test_parse_field_diagnostics(change, fragment):
    with pytest.raises(ValidationError) as err:
        parse_input(json.dumps(dict(EXAMPLE, **change)))
    assert fragment in str(err.value)


def test_parse_reports_json_position():
    with pytest.raises(ValidationError, match="line 2"):
        parse_input('{"n": 2,\n  oops}')


def test_duplicate_generator_warns(caplog):
    doc = dict(EXAMPLE, generators=[[1, 0], [1, 0]])
    arr = parse_input(json.dumps(doc))
    assert len(arr.generators) == 1
    assert "generators[1]" in caplog.text


def test_run_union():
    code, text = run(JobSpec("union", parse_input(json.dumps(EXAMPLE))))
    doc = json.loads(text)
    assert code == 0
    assert doc["betti"] == {"0": 1, "1": 4, "2": 2}
    assert doc["terms"] == [{"j": 0, "p": 0, "q": 0, "mult": 1}, {"j": 1, "p": 1, "q": 0, "mult": 4},
                            {"j": 1, "p": 2, "q": 0, "mult": 2}]


def test_run_endspace_annotation():
    code, text = run(JobSpec("endspace", Params(1, 3, 2)))
    doc = json.loads(text)
    assert [doc["ranks"][str(p)] for p in range(5)] == [1, 9, 9, 1, 0]
    assert doc["annotations"] == {"3": "pipeline-determined"}
    assert doc["pipeline_agrees"] is True


def test_run_distinguish():
    doc = json.loads(run(JobSpec("distinguish", Params(1, 3, 2, 2, 1)))[1])
    assert doc["homotopy_equivalent"] and doc["distinguishable"]


def test_run_complement():
    doc = json.loads(run(JobSpec("complement", parse_input(json.dumps(EXAMPLE), "complement")))[1])
    assert doc["cohomology"] == {"0": 1, "1": 3, "2": 3, "3": 0, "4": 0}


def test_poset_round_trip():
    arr = parse_input(json.dumps(dict(EXAMPLE, n=3, generators=[[1, 0], [0, 1], [2, 0]])))
    _, text = run(JobSpec("poset", arr))
    doc = json.loads(text)
    again = parse_input(text, "poset")
    P, Q = intersection_poset(arr), intersection_poset(again)
    assert P == Q
    assert [e["divisor"] for e in doc["elements"]] == [list(D.multiplicities) for D in P.elements]
    assert json.loads(run(JobSpec("poset", again))[1]) == doc


def test_output_is_byte_identical(example_file, tmp_path):
    outs = []
    for i in range(2):
        out = tmp_path / f"out{i}.json"
        assert main(["union", "--input", str(example_file), "--output", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_main_exit_codes(example_file, tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(dict(EXAMPLE, space={"kind": "punctured_surface", "genus": 1, "punctures": 2})))
    assert main(["complement", "--input", str(bad)]) == 1
    assert "duality" in capsys.readouterr().err
    assert main(["union"]) == 1
    assert main(["endspace", "--genus", "1", "--punctures", "0", "--power", "2"]) == 1
    assert main(["endspace", "--genus", "1", "--punctures", "3", "--power", "2", "--format", "table"]) == 0
    assert "pipeline-determined" in capsys.readouterr().out


def test_selftest_failure_exit_code(monkeypatch):
    from sparr import cli
    from sparr.oracle import VerificationReport

    monkeypatch.setattr(cli, "battery", lambda seed: {"broken": lambda: iter([VerificationReport("x", {}, 1, 2)])})
    code, text = run(JobSpec("selftest", None))
    assert code == 2 and json.loads(text)["passed"] is False


def test_selftest_subprocess():
    proc = subprocess.run([sys.executable, "-m", "sparr", "selftest", "--format", "table"],
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "FAIL" not in proc.stdout


def test_params_from_input_file(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"genus": 2, "punctures": 1, "power": 2}))
    assert main(["endspace", "--input", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [doc["ranks"][str(p)] for p in range(5)] == [1, 4, 4, 1, 0]

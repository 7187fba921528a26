import json
import subprocess
import sys

import pytest

from skewinc.cli import main, run
from skewinc.errors import CycleError, ParseError, PathInconsistent, ValidationError
from skewinc.problem import parse_problem, parse_task, problem_from_dict

CROWN = {"field": "Q",
         "poset": {"elements": ["1", "2", "3", "4"],
                   "relations": [["1", "3"], ["1", "4"], ["2", "3"], ["2", "4"]]},
         "sigma": {"covers": {"1,3": "1", "1,4": "1", "2,3": "1", "2,4": "2"}},
         "lambda": "id", "beta": "identity",
         "tasks": ["validate", {"cohomology": {"degree": 1}}, "cross-check"]}

V = {"field": "F7",
     "poset": {"elements": ["1", "2", "3"], "relations": [["1", "2"], ["1", "3"]]},
     "sigma": "zeta", "lambda": {"2": "3", "3": "2"},
     "beta": {"table": {"1,1": "2", "1,2": "3", "2,2": "1", "3,3": "5"}},
     "tasks": ["validate", "cohomology --degree 1", "derivations", "decompose", "fractional",
               {"equivalent": {"sigma": {"covers": {"1,2": "3", "1,3": "4"}}}},
               "cross-check"]}


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="p.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)
    return _write


def test_v_poset_degree_one(write):
    doc = dict(V, tasks=[{"cohomology": {"degree": 1}}])
    status, text = run(write(doc), as_json=True)
    assert status == 0
    res = json.loads(text)["results"][0]["degrees"][0]
    assert res["dim_H"] == 1 and len(res["representatives"]) == 1


def test_all_tasks_text(write):
    status, text = run(write(V))
    assert status == 0
    assert "H^1: dim Z = 2, dim B = 1, dim H = 1" in text
    assert "cross-check: consistent" in text
    assert "sigma is equivalent" in text


def test_crown_non_fractional(write):
    doc = dict(CROWN, tasks=["fractional", "cohomology --degree 1"])
    status, text = run(write(doc))
    assert status == 0
    assert "cycle 1-3-2-4-1 has product 2" in text
    assert "dim H = 0" in text


def test_cycle_exits_one(write, capsys):
    doc = {"poset": {"elements": ["a", "b"], "relations": [["a", "b"], ["b", "a"]]}}
    assert main(["run", write(doc)]) == 1
    assert "CycleError" in capsys.readouterr().err


def test_bad_json_is_located(write):
    status, text = run(write('{"poset":\n  [}'))
    assert status == 1
    assert "line 2" in text
    with pytest.raises(ParseError) as exc:
        parse_problem('{"poset":\n  [}')
    assert exc.value.line == 2 and exc.value.column is not None


@pytest.mark.parametrize("mutate, kind", [
    (lambda d: d["poset"].update(relations=[["1", "9"]]), ValidationError),
    (lambda d: d.update(field="F6"), ValidationError),
    (lambda d: d.update(sigma={"covers": {"1,3": "1"}}), ValidationError),
    (lambda d: d.update(sigma={"covers": {"1,3": "0", "1,4": "1", "2,3": "1", "2,4": "1"}}),
     ValidationError),
    (lambda d: d.update(sigma={"covers": {"1,3": 1.5}}), ParseError),
    (lambda d: d.update(sigma={"table": {"1,3": "1"}}), ParseError),
    (lambda d: d.update(beta={"table": {"1,1": "0"}}), ValidationError),
    (lambda d: d.update(tasks=["frobnicate"]), ParseError),
    (lambda d: d.update(tasks=[{"cohomology": {"degree": -1}}]), ParseError),
    (lambda d: d.update(extra=1), ParseError),
    (lambda d: d.update({"lambda": {"1": "3"}}), ValidationError),
])
def test_validation_failures(mutate, kind):
    doc = json.loads(json.dumps(CROWN))
    mutate(doc)
    with pytest.raises(kind):
        problem_from_dict(doc)


def test_path_inconsistent_from_file(write):
    doc = {"poset": {"elements": ["1", "2", "3", "4"],
                     "relations": [["1", "2"], ["1", "3"], ["2", "4"], ["3", "4"]]},
           "sigma": {"covers": {"1,2": "1", "1,3": "1", "2,4": "1", "3,4": "2"}}}
    with pytest.raises(PathInconsistent):
        problem_from_dict(doc)
    assert run(write(doc))[0] == 1


def test_located_paths():
    doc = json.loads(json.dumps(CROWN))
    doc["sigma"] = {"covers": {"1,3": True}}
    with pytest.raises(ParseError) as exc:
        problem_from_dict(doc)
    assert "$.sigma.covers['1,3']" in str(exc.value)


def test_task_forms():
    assert parse_task("cohomology --degree 2", "$").options == {"degree": 2}
    assert parse_task({"cohomology": {"degree": 0}}, "$").options == {"degree": 0}
    assert parse_task("cross-check", "$").name == "cross-check"


def test_max_degree(write):
    doc = dict(V, tasks=["cohomology"])
    status, text = run(write(doc), max_degree=1)
    assert status == 0 and "H^0" in text and "H^1" in text and "H^2" not in text
    doc = dict(V, tasks=["cohomology --degree 2"])
    assert run(write(doc), max_degree=1)[0] == 1


def test_json_round_trip(write, tmp_path):
    first = json.loads(run(write(V), as_json=True)[1])
    again = write(first["problem"], "again.json")
    second = json.loads(run(again, as_json=True)[1])
    assert first == second


def test_reports_are_deterministic(write):
    path = write(V)
    assert run(path) == run(path)
    assert run(path, as_json=True) == run(path, as_json=True)


def test_paper_examples_task(write):
    doc = dict(CROWN, tasks=["paper-examples"])
    status, text = run(write(doc))
    assert status == 0
    assert "H^1 = K^4" in text and "K^1 if fractional, K^0 otherwise" in text


def test_check_examples_subcommand():
    out = subprocess.run([sys.executable, "-m", "skewinc", "check-paper-examples", "--field", "F5"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "0 failed" in out.stdout
    bad = subprocess.run([sys.executable, "-m", "skewinc", "check-paper-examples", "--field", "F4"],
                         capture_output=True, text=True)
    assert bad.returncode == 1


def test_missing_file():
    assert run("/nonexistent/problem.json")[0] == 1


def test_cycle_error_is_validation_error():
    assert issubclass(CycleError, ValidationError)


def test_inconsistency_exits_two(write, monkeypatch):
    import skewinc.cli as cli
    from skewinc.cohomology import CrossCheckReport
    monkeypatch.setattr(cli, "h1_cross_check", lambda spec: CrossCheckReport(3, 1, 1, 2, 1, 2, 1))
    status, text = run(write(dict(V, tasks=["cross-check"])))
    assert status == 2 and "INCONSISTENT" in text

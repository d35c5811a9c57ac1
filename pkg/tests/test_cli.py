import io
import json
from pathlib import Path

import pytest

from jetmoeb.cli import EXIT_DOMAIN, EXIT_MALFORMED, EXIT_OK, main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv) -> tuple[int, dict]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def write(tmp_path):
    def _write(doc) -> str:
        path = tmp_path / "input.json"
        text = doc if isinstance(doc, str) else json.dumps(doc)
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


def test_class(capsys, write):
    path = write({"n": 1, "value": "0", "a": ["2", "3", "5"]})
    assert run(capsys, "class", path) == (EXIT_OK, {"n": 1, "c": ["3/2"]})


def test_class_of_a_plain_jet(capsys, write):
    path = write(["7", "0", "2", "3"])
    assert run(capsys, "class", path, "--n", "1") == (EXIT_OK, {"n": 1, "c": ["3/2"]})
    code, doc = run(capsys, "class", path)
    assert code == EXIT_MALFORMED
    assert doc["error"]["name"] == "MalformedInput"


def test_class_from_stdin(capsys, monkeypatch):
    doc = {"n": 1, "value": "inf", "a": ["1", "0", "0"]}
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(doc)))
    assert run(capsys, "class") == (EXIT_OK, {"n": 1, "c": ["0"]})


def test_normal_form(capsys, write):
    path = write({"n": 1, "c": ["3/2"]})
    code, doc = run(capsys, "normal-form", path)
    assert code == EXIT_OK
    assert doc == {"n": 1, "value": "0", "a": ["1", "3/2", "0"]}


def test_act(capsys, write):
    jet = {"n": 1, "value": "0", "a": ["2", "3", "5"]}
    path = write({"jet": jet, "moebius": {"a": "1", "b": "1", "c": "0", "d": "1"}})
    code, doc = run(capsys, "act", path)
    assert code == EXIT_OK
    assert doc["jet"] == {"n": 1, "value": "1", "a": ["2", "3", "5"]}
    assert doc["class"] == {"n": 1, "c": ["3/2"]}


def test_diff_and_translate(capsys, write):
    path = write({"left": {"n": 1, "c": ["5"]}, "right": {"n": 1, "c": ["1"]}})
    assert run(capsys, "diff", path) == (EXIT_OK, {"n": 1, "eta": ["6"]})
    code, doc = run(capsys, "diff", path, "--mode", "schwarzian")
    assert (code, doc) == (EXIT_OK, {"n": 1, "beta": ["-6"]})
    path = write({"class": {"n": 1, "c": ["1"]}, "delta": {"n": 1, "eta": ["3"]}})
    assert run(capsys, "translate", path) == (EXIT_OK, {"n": 1, "c": ["3"]})


def test_divisor_diff(capsys, write):
    left = {"points": [{"label": "p", "n": 1, "class": ["5"]}]}
    right = {"points": [{"label": "p", "n": 1, "class": ["1"]}]}
    code, doc = run(capsys, "diff", write({"left": left, "right": right}))
    assert code == EXIT_OK
    assert doc == {"points": [{"label": "p", "n": 1, "eta": ["6"]}]}
    other = {"points": [{"label": "q", "n": 1, "class": ["1"]}]}
    code, doc = run(capsys, "diff", write({"left": left, "right": other}))
    assert code == EXIT_DOMAIN
    assert doc["error"]["name"] == "DivisorMismatch"


def test_solve(capsys, write):
    path = write({"n": 1, "alpha": ["-3/2", "2", "-2", "0"]})
    code, doc = run(capsys, "solve", path)
    assert code == EXIT_OK
    assert doc["solution"]["delta"][:2] == ["-2", "0"]
    assert doc["jet"]["a"][0] == "1"
    assert doc["class"]["n"] == 1


def test_solve_with_an_obstruction(capsys, write):
    path = write({"n": 1, "alpha": ["-3/2", "0", "1"]})
    code, doc = run(capsys, "solve", path)
    assert code == EXIT_DOMAIN
    assert doc["error"]["name"] == "ObstructionViolated"
    assert doc["error"]["payload"] == {"value": "1"}


def test_solve_with_a_wrong_double_pole(capsys, write):
    code, doc = run(capsys, "solve", write({"n": 1, "alpha": ["0", "0", "0"]}))
    assert code == EXIT_DOMAIN
    assert doc["error"]["payload"] == {"n": 1, "expected": "-3/2", "found": "0"}


def test_obstruction(capsys, write):
    path = write({"n": 1, "alpha": ["-3/2", "0", "1"]})
    code, doc = run(capsys, "obstruction", path)
    assert code == EXIT_OK
    assert doc == {
        "n": 1,
        "phi": {"n": 1, "alpha": ["-3/2", "0", "1"]},
        "value": "1",
        "forced_alpha": "0",
        "vanishes": False,
    }


def test_obstruction_poly(capsys):
    code, doc = run(capsys, "obstruction-poly", "--n", "1")
    assert code == EXIT_OK
    assert doc["vars"] == ["X1", "X2"]
    assert sorted(m["coeff"] for m in doc["monomials"]) == ["1", "1/2"]
    code, doc = run(capsys, "obstruction-poly", "--n", "99")
    assert code == EXIT_DOMAIN
    assert doc["error"]["name"] == "DegreeBoundExceeded"


def test_malformed_json(capsys, write):
    code, doc = run(capsys, "class", write("{not json"))
    assert code == EXIT_MALFORMED
    assert doc["error"]["name"] == "MalformedInput"


def test_missing_file(capsys, tmp_path):
    code, doc = run(capsys, "class", str(tmp_path / "missing.json"))
    assert code == EXIT_MALFORMED


def test_usage_errors_exit_with_status_one():
    with pytest.raises(SystemExit) as e:
        main(["class", "--n", "x"])
    assert e.value.code == EXIT_MALFORMED
    with pytest.raises(SystemExit) as e:
        main(["verify", "--samples", "-1"])
    assert e.value.code == EXIT_MALFORMED


def test_verify(capsys):
    code, doc = run(
        capsys, "--quiet", "verify", "--suite", "series,moebius", "--samples", "2"
    )
    assert code == EXIT_OK
    assert doc["ok"] is True
    assert [s["suite"] for s in doc["suites"]] == ["moebius", "series"]
    assert all(s["failed"] == 0 for s in doc["suites"])


def test_verify_unknown_suite(capsys):
    code, doc = run(capsys, "--quiet", "verify", "--suite", "nope")
    assert code == EXIT_MALFORMED
    assert "nope" in doc["error"]["message"]


def test_float_overflow_is_malformed(capsys, write):
    path = write({"n": 1, "value": "0", "a": ["1e400", "0", "0"]})
    code, doc = run(capsys, "--backend", "float", "class", path)
    assert code == EXIT_MALFORMED
    assert doc["error"]["name"] == "MalformedInput"


def test_class_of_order_zero_is_a_domain_error(capsys, write):
    code, doc = run(capsys, "normal-form", write({"n": 0, "c": []}))
    assert code == EXIT_DOMAIN
    assert doc["error"]["name"] == "BranchOrderMismatch"


@pytest.mark.parametrize(
    "name, argv, status",
    [
        ("class", ["class"], EXIT_OK),
        ("normal_form", ["normal-form"], EXIT_OK),
        ("act", ["act"], EXIT_OK),
        ("diff", ["diff", "--mode", "schwarzian"], EXIT_OK),
        ("translate", ["translate"], EXIT_OK),
        ("solve", ["solve"], EXIT_OK),
        ("solve_obstructed", ["solve"], EXIT_DOMAIN),
        ("obstruction", ["obstruction"], EXIT_OK),
        ("obstruction_poly", ["obstruction-poly", "--n", "1"], EXIT_OK),
        ("obstruction_poly_bound", ["obstruction-poly", "--n", "99"], EXIT_DOMAIN),
        (
            "verify",
            ["--quiet", "verify", "--suite", "series", "--samples", "2"],
            EXIT_OK,
        ),
    ],
)
def test_golden_output(capsys, name, argv, status):
    source = GOLDEN / f"{name}.json"
    if source.exists():
        argv = [*argv, str(source)]
    assert main(argv) == status
    expected = (GOLDEN / f"{name}.out").read_text(encoding="utf-8")
    assert capsys.readouterr().out == expected


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", str(GOLDEN / "solve.json")],
        ["act", str(GOLDEN / "act.json")],
        ["--quiet", "verify", "--suite", "fuchs", "--samples", "3", "--seed", "0"],
    ],
)
def test_output_is_byte_identical_across_runs(capsys, argv):
    outputs = []
    for _ in range(2):
        main(argv)
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]

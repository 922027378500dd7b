import io
from fractions import Fraction
import subprocess
import sys

import pytest

from cliffblend.blendcore import FinitePartition
from cliffblend.cli import ScenarioError, parse_scenario, run
from cliffblend.literals import parse_parallelism, parse_value
from cliffblend.projgeom import Line, line_from_span
from cliffblend.quat import HAMILTON, AlgebraSpec, Quaternion

H = HAMILTON
one, i, j, k = H.basis()


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    pairs = [line.split(" = ", 1) for line in out.getvalue().splitlines()]
    return code, pairs, out.getvalue()


def values(pairs, key):
    return [v for kk, v in pairs if kk == key]


def test_parse_scenario_binding():
    sc = parse_scenario("a=-1 b=-1\nL = [(1,0,0,0);(0,1,0,0)]\n")
    assert sc.algebra == H
    assert sc.bindings == {"L": line_from_span(one, i)}


def test_parse_scenario_names_and_comments():
    sc = parse_scenario("# demo\na=-1 b=-3\nq = (1,2/3,0,-1)  # exact\nr = q\n")
    assert sc.algebra == AlgebraSpec(-1, -3)
    assert sc.bindings["q"].coords == (1, Fraction(2, 3), 0, -1)
    assert sc.bindings["r"] is sc.bindings["q"]


def test_parse_scenario_errors_have_positions():
    with pytest.raises(ScenarioError) as exc:
        parse_scenario("a=-1 b=-1\nL = [(1,0,0,0);(0,1,0,0]\n", source="s.txt")
    assert (exc.value.line, exc.value.column) == (2, 24)
    assert "s.txt:2:24" in str(exc.value)
    with pytest.raises(ScenarioError) as exc:
        parse_scenario("L = [(1,0,0,0);(2,0,0,0)]")
    assert exc.value.line == 1 and "rank" in str(exc.value)
    with pytest.raises(ScenarioError) as exc:
        parse_scenario("M = N")
    assert "unknown name" in str(exc.value)
    with pytest.raises(ScenarioError):
        parse_scenario("a=-1 b=2\n")


def test_equiv_test_example():
    code, pairs, _ = invoke("equiv", "test", "L1=[(1,0,0,0);(0,1,0,0)]", "L2=[(1,0,0,0);(0,0,0,1)]")
    assert code == 0
    assert values(pairs, "equivalent") == ["true"]
    e = parse_value(values(pairs, "e")[0], H)
    assert e == one + j
    assert e.inverse() * i * e == k
    assert values(pairs, "verified") == ["true"]


def test_equiv_test_failure_exit_code():
    code, pairs, _ = invoke("equiv", "test", "[(1,0,0,0);(0,1,0,0)]", "[(1,0,0,0);(0,1,1,0)]")
    assert code == 1 and values(pairs, "equivalent") == ["false"]


def test_ds_scan_example():
    code, pairs, _ = invoke("ds", "scan", "--par1", "left", "--par2", "right", "--trials", "100", "--seed", "42")
    assert code == 0
    assert values(pairs, "holds") == ["100/100"]
    assert values(pairs, "seed") == ["42"]


def test_ds_scan_counterexample_exit_code():
    code, pairs, _ = invoke("ds", "scan", "--par1", "blend:-1", "--par2", "blend:-1", "--trials", "20", "--seed", "42")
    assert code == 1
    assert len(values(pairs, "holds")) == 1
    assert values(pairs, "counterexample_holds") == ["false"]
    assert values(pairs, "counterexample_common") == ["none"]


def test_blend_enumerate_example():
    code, pairs, _ = invoke("blend", "enumerate", "P1={{1,2},{3,4}}", "P2={{1,3},{2,4}}")
    assert code == 0
    assert values(pairs, "count") == ["2"]
    assert set(values(pairs, "blend")) == {"{{1,2},{3,4}}", "{{1,3},{2,4}}"}


def test_header_and_default_seed():
    code, pairs, _ = invoke("scan", "invariants", "--height", "1")
    assert code == 0
    assert pairs[0] == ["command", "scan invariants"]
    assert pairs[1] == ["algebra", "a=-1 b=-1"]
    assert pairs[2] == ["seed", "0"]
    assert values(pairs, "invariants") == ["-1,-2,-3"]


@pytest.mark.parametrize("argv, expected_code", [
    (["algebra", "check", "--algebra", "-1,-3"], 0),
    (["algebra", "check", "--algebra", "-1,2"], 1),
    (["line", "perp", "[(1,0,0,0);(0,1,0,0)]"], 0),
    (["line", "transversal", "[(1,1,0,0);(0,0,1,1)]"], 0),
    (["line", "invariant", "[(1,0,1,0);(0,1,0,0)]"], 0),
    (["common", "lines", "[(1,0,0,0);(0,1,0,0)]", "[(1,0,0,0);(0,1,0,0)]"], 0),
    (["common", "lines", "[(1,0,0,0);(0,1,0,0)]", "[(1,0,0,0);(0,1,1,0)]"], 1),
    (["par", "build", "[(1,0,0,0);(0,1,0,0)]", "[(1,0,0,0);(0,1,1,0)]"], 0),
    (["par", "test", "--par", "blend:-1", "[(1,0,0,0);(0,1,0,0)]", "[(0,0,1,0);(0,0,0,1)]"], 0),
    (["par", "classline", "[(1,0,0,0);(0,1,0,0)]", "(0,0,1,0)"], 0),
    (["par", "compare", "--par1", "blend:-1", "--par2", "right"], 1),
    (["ds", "check", "(1,0,0,0)", "(0,1,0,0)", "(0,0,1,0)"], 0),
    (["blend", "join", "{{1,2},{3,4}}", "{{1,3},{2,4}}"], 0),
    (["blend", "isblend", "{{1},{2}}", "{{1,2}}", "{{1,2}}"], 1),
    (["blend", "fromseed", "{3}", "{{1,2},{3,4}}", "{{1,2},{3},{4}}"], 0),
    # usage and domain errors
    (["nope", "nothing"], 2),
    (["line", "perp"], 2),
    (["line", "perp", "[(1,0,0,0);(2,0,0,0)]"], 2),
    (["line", "perp", "[(1,0,0,0);(0,1,0,0"], 2),
    (["blend", "join", "{{1,2}}", "{{1},{2},{3}}"], 2),
    (["ds", "check", "(1,0,0,0)", "(0,1,0,0)", "(1,1,0,0)"], 2),
    (["equiv", "test", "--algebra", "-1,2", "[(1,0,0,0);(0,1,0,0)]", "[(1,0,0,0);(0,1,0,0)]"], 2),
    (["scan", "invariants", "--bogus"], 2),
])
def test_exit_codes(argv, expected_code, capsys):
    assert run(argv, stdout=io.StringIO()) == expected_code
    if expected_code == 2:
        assert capsys.readouterr().err


def test_selected_outputs():
    _, pairs, _ = invoke("line", "perp", "[(1,0,0,0);(0,1,0,0)]")
    assert values(pairs, "perp") == ["[(0,0,1,0);(0,0,0,1)]"]
    _, pairs, _ = invoke("line", "transversal", "[(1,1,0,0);(0,0,1,1)]")
    assert values(pairs, "transversal") == ["[(1,0,0,0);(0,0,1,0)]"]
    _, pairs, _ = invoke("line", "invariant", "[(1,0,1,0);(0,1,0,0)]")
    assert values(pairs, "invariant") == ["-2"]
    _, pairs, _ = invoke("par", "build", "[(1,0,0,0);(0,1,0,0)]", "[(1,0,0,0);(0,1,1,0)]")
    assert values(pairs, "parallelism") == ["blend:-2,-1"]
    _, pairs, _ = invoke("blend", "fromseed", "{3}", "{{1,2},{3,4}}", "{{1,2},{3},{4}}")
    assert values(pairs, "blend") == ["{{1,2},{3,4}}"] and values(pairs, "index_set") == ["{3}"]
    _, pairs, _ = invoke("algebra", "check", "--algebra", "-1,-3")
    assert values(pairs, "ramified") == ["inf,3"]


def test_scenario_file_and_expr(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("a=-1 b=-3\nL = [(1,0,0,0);(0,1,0,0)]\n")
    code, pairs, _ = invoke("line", "perp", str(path), "L")
    assert code == 0 and values(pairs, "algebra") == ["a=-1 b=-3"]
    code, pairs, _ = invoke("common", "lines", "--expr", "M = [(1,0,0,0);(0,1,0,0)];;N = M", "M", "N")
    assert code == 0 and values(pairs, "count") == ["2"]


def test_determinism():
    argv = ("ds", "scan", "--par1", "blend:-1", "--par2", "right", "--trials", "15", "--seed", "7")
    assert invoke(*argv)[2] == invoke(*argv)[2]


def test_emitted_literals_round_trip():
    outputs = [
        invoke("equiv", "test", "[(1,2,0,0);(0,0,1,3)]", "[(1,0,0,0);(0,2,0,1)]")[1],
        invoke("ds", "scan", "--par1", "blend:-1", "--par2", "blend:-1", "--trials", "5")[1],
        invoke("par", "compare", "--par1", "blend:-1", "--par2", "right")[1],
        invoke("blend", "enumerate", "{{1,2},{3},{4,5}}", "{{1},{2,3},{4},{5}}")[1],
        invoke("common", "lines", "[(1,1,0,0);(0,0,1,1)]", "[(1,1,0,0);(0,0,1,1)]")[1],
    ]
    checked = 0
    for pairs in outputs:
        for key, value in pairs:
            if value.startswith(("(", "[", "{{")) and " " not in value:
                parsed = parse_value(value, H)
                assert str(parsed) == value
                assert isinstance(parsed, (Quaternion, Line, FinitePartition))
                checked += 1
            elif key in ("par1", "par2", "parallelism"):
                assert str(parse_parallelism(value)) == value
    assert checked > 10


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cliffblend", "blend", "join", "{{1,2},{3,4}}", "{{1,3},{2,4}}"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "join = {{1,2,3,4}}" in proc.stdout

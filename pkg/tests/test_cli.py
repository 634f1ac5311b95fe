import json

import pytest

from thompson_ore.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def js(capsys, *argv):
    code, out = run(capsys, *argv)
    data = json.loads(out)
    assert data.pop("schema") == "1"
    return code, data


def test_normalize_and_mul(capsys):
    assert js(capsys, "normalize", "x2*x0") == (0, {"normal_form": "x0*x3", "degree": 2})
    code, d = js(capsys, "mul", "1 - x0", "1 + x0 - x1")
    assert code == 0 and d["product"] == "1 - x1 - x0^2 + x0*x1"


def test_reduce_and_lcm(capsys):
    code, d = js(capsys, "reduce", "X0*x1*x0")
    assert d["normal_form"] == "x2" and d["tex"] == "x_2" and not d["identity"]
    assert js(capsys, "lcm", "x0", "x1")[1] == {"lcm": "x0*x2"}


def test_solvers(capsys):
    code, d = js(capsys, "solve-x0b", "-b", "1 - x1")
    assert code == 0 and d["verified"]
    code, d = js(capsys, "phi-relation", "-b", "x1 + x2")
    assert code == 0 and d["verified"]
    code, d = js(capsys, "chain", "-m", "2")
    assert code == 0 and d["verified"] and d["terms"] == [56, 48, 36] and len(d["support_w"]) == 64
    code, d = js(capsys, "divide-v0", "-v", "x0^2")
    assert (d["w1"], d["w2"], d["w3"]) == ("-1", "x1", "1 - x3")
    assert js(capsys, "basis-u", "-k", "1")[1]["u"].startswith("1")


def test_relation2solution(capsys):
    code, d = js(capsys, "relation2solution", "X0^2*x1*x0^2*X1*X0*X1*x0*x1", "--decompose")
    assert code == 0 and d["verified"] and d["r"]


def test_field_option(capsys):
    code, d = js(capsys, "mul", "--field", "fp", "--prime", "7", "4*x0", "2")
    assert d["product"] == "x0"


def test_graph_commands(tmp_path, capsys):
    s = tmp_path / "set.txt"
    s.write_text("1\nx0\nx1\n")
    code, d = js(capsys, "density", "--set", str(s), "--gens", "x0,x1")
    assert code == 0 and d["identity_ok"] and d["m"] == 2
    assert js(capsys, "ay-ratio", "--set", str(s), "--gens", "x0")[1]["ratio"] == "1"
    f = tmp_path / "flow.txt"
    f.write_text("1 ; x0 ; 1\n")
    code, d = js(capsys, "flow-check", "--set", str(s), "--gens", "x0,x1", "--flow", str(f))
    assert code == 1 and d["error"]["code"] == "missing_edge_value"


def test_forest(capsys):
    assert js(capsys, "forest", "count", "--kind", "bb", "--leaves", "3", "--height", "1")[1]["count"] == 7
    code, d = js(capsys, "forest", "enumerate", "--kind", "trees", "--carets", "2")
    assert sorted(d["items"]) == ["((..).)", "(.(..))"]


def test_search(tmp_path, capsys):
    exp = tmp_path / "m.txt"
    code, d = js(capsys, "search", "chain", "-m", "1", "--max-degree", "3", "--max-index", "3", "--export", str(exp))
    assert code == 0 and d["candidates"][0]["verified"]
    assert exp.read_text().startswith("% ")
    code, d = js(capsys, "search", "chain", "-m", "1", "--max-degree", "1", "--max-index", "5")
    assert code == 2 and d["error"]["code"] == "no_solution_in_bounds"
    code, d = js(capsys, "search", "q", "--coeffs", "1,0,0;0,1,0", "--max-degree", "1", "--max-index", "3")
    assert code == 0 and d["solutions"]


def test_errors(capsys):
    code, d = js(capsys, "mul", "x0 +", "1")
    assert code == 1 and d["error"]["code"] == "syntax_error"
    code, d = js(capsys, "relation2solution", "x2")
    assert code == 1


def test_text_output(capsys):
    code, out = run(capsys, "normalize", "--text", "x1*x0")
    assert out == "normal_form: x0*x2\ndegree: 2\n"


def test_deterministic(capsys):
    a = run(capsys, "chain", "-m", "2")
    b = run(capsys, "chain", "-m", "2")
    assert a == b

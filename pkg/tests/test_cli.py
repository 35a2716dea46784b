import json

import pytest

from schubgl.cli import main
from schubgl.exactpoly import LaurentWindow, Poly
from schubgl.symfunc import SchurExpansion, parse_element, reduce_mod


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_act_in_the_box(capsys):
    code, out, _ = run(capsys, "act", "--r", "2", "--n", "4", "--i", "1", "--j", "2", "--schur", "2,2")
    assert code == 0
    assert "schur: {(2,1): 1}" in out
    printed = parse_element(out.split("e-poly:")[1].strip(), 2)
    # same class in B_{2,4} as h1*h2 = e1^3 - e1*e2
    assert reduce_mod(printed, 2, 4) == reduce_mod(parse_element("e1^3 - e1*e2", 2), 2, 4)
    assert reduce_mod(printed, 2, 4) == reduce_mod(parse_element("h1*h2", 2), 2, 4)


def test_act_without_box(capsys):
    code, out, _ = run(capsys, "act", "--r", "2", "--i", "4", "--j", "2", "--schur", "1,1")
    assert code == 0
    assert out == "schur: {(3,1): 1}\ne-poly: e1^2*e2 - e2^2\n"


def test_act_with_expression(capsys):
    code, out, _ = run(capsys, "act", "--r", "2", "--i", "4", "--j", "2", "--expr", "e2")
    assert code == 0 and "{(3,1): 1}" in out


def test_latex_output(capsys):
    code, out, _ = run(capsys, "act", "--r", "2", "--i", "4", "--j", "2", "--schur", "1,1", "--format", "latex")
    assert out.strip() == r"\Delta_{(3,1)}(H_{2}) = e_{1}^{2}e_{2} - e_{2}^{2}"


def test_json_round_trip_is_byte_identical(capsys):
    code, out, _ = run(capsys, "act", "--r", "2", "--n", "4", "--i", "1", "--j", "2", "--schur", "2,2", "--format", "json")
    data = json.loads(out)
    assert json.dumps(data, indent=2, sort_keys=True) + "\n" == out
    x = SchurExpansion.from_json(data["result"])
    assert json.dumps(x.to_json(), indent=2, sort_keys=True) == json.dumps(data["result"], indent=2, sort_keys=True)
    assert Poly.from_json(data["e_poly"], 2).to_json() == data["e_poly"]


def _series(capsys, *extra):
    code, out, _ = run(capsys, "series", "--r", "2", "--schur", "1,1", "--format", "json", *extra)
    assert code == 0
    data = json.loads(out)
    assert json.dumps(data, indent=2, sort_keys=True) + "\n" == out
    return LaurentWindow.from_json(data["series"], lambda v: Poly.from_json(v, 2), Poly.zero(2))


def test_series_restriction(capsys):
    wide = _series(capsys, "--z-max", "7", "--w-span", "5")
    narrow = _series(capsys, "--z-max", "4", "--w-span", "2")
    assert wide.restrict(z_max=4, w_min=-2) == narrow
    assert narrow.coeff(4, -2) == parse_element("h1*h3 - h4", 2)


def test_series_in_the_box(capsys):
    code, out, _ = run(capsys, "series", "--r", "2", "--n", "4", "--schur", "2,2")
    assert code == 0
    assert "z^3 w^-3: e2^2" in out and "w^-2: e1^2 - e2" in out


def test_gamma_commands(capsys):
    code, out, _ = run(capsys, "gamma", "--r", "2", "--schur", "0", "--star")
    assert code == 0 and "w^1: -e1" in out
    code, out, _ = run(capsys, "gamma", "--r", "0", "--schur", "0", "--z-max", "2")
    assert code == 0 and "z^2: e1^2" in out


def test_matrix_act(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"n": 4, "entries": [{"i": 1, "j": 2, "a": "3"}]}))
    code, out, _ = run(capsys, "matrix-act", "--r", "2", "--schur", "2,2", "--matrix", str(path))
    assert code == 0 and "{(2,1): 3}" in out


def test_straighten(capsys):
    code, out, _ = run(capsys, "straighten", "--r", "2", "--expr", "e1^2")
    assert code == 0 and "{(2): 1, (1,1): 1}" in out
    code, out, _ = run(capsys, "straighten", "--r", "2", "--n", "4", "--expr", "h1*h3 - h4")
    assert code == 0 and "schur: {}" in out


@pytest.mark.parametrize("argv", [
    ["act", "--r", "2", "--n", "4", "--i", "4", "--j", "2", "--schur", "1,1"],
    ["act", "--r", "2", "--n", "4", "--i", "0", "--j", "0", "--schur", "3"],
    ["act", "--r", "3", "--n", "2", "--i", "0", "--j", "0", "--schur", "0"],
    ["gamma", "--r", "0", "--schur", "0", "--star"],
])
def test_domain_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["act", "--r", "2", "--i", "1", "--j", "2", "--expr", "e1 +"],
    ["act", "--r", "2", "--i", "1"],
    ["straighten", "--r", "2", "--expr", "e3"],
    ["frobnicate"],
    ["matrix-act", "--r", "2", "--schur", "0", "--matrix", "/nonexistent.json"],
])
def test_parse_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "parse error" in err


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-r", "2", "--max-n", "4", "--max-deg", "4", "--samples", "40")
    assert code == 0
    assert "all" in out and "checks passed" in out


def test_verify_failure_exit_3(capsys, monkeypatch):
    from schubgl import verify

    def broken(params):
        res = verify.SuiteResult("broken")
        for k in range(12):
            res.check(False, f"cell {k}")
        return res

    monkeypatch.setitem(verify.SUITES, "partitions", broken)
    code, out, _ = run(capsys, "verify", "--suite", "partitions")
    assert code == 3
    assert "cell 9" in out and "cell 10" not in out

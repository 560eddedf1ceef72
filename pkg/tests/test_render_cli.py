import json
import re

import pytest
from hypothesis import given, settings

from nsmac.appendix import appendix_table
from nsmac.cli import main, table_order
from nsmac.exactalg import ONE, Q, T, QTPoly
from nsmac.macdonald import E_combinatorial
from nsmac.render import SCHEMA, factor_binomials, latex_coefficient, parse_xpolynomial
from strategies import xpolys


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_round_trip_example():
    f = parse_xpolynomial("x2 + (1-t)/(1-q*t^2)*x1", 3)
    assert f == E_combinatorial((0, 1, 0))
    assert parse_xpolynomial(f.to_str(), 3) == f


def test_parse_rejects():
    with pytest.raises(ValueError):
        parse_xpolynomial("x4", 3)
    with pytest.raises(ValueError):
        parse_xpolynomial("1/x1", 3)
    with pytest.raises(ValueError):
        parse_xpolynomial("import_os", 3)


@given(xpolys(n=3))
@settings(max_examples=40)
def test_text_round_trip(f):
    assert parse_xpolynomial(f.to_str(), 3) == f


def test_factor_binomials():
    p = (QTPoly({(1, 0): 1}) * QTPoly({(0, 0): 1, (0, 1): -1}) ** 2 * QTPoly({(0, 0): 1, (2, 2): -1}))
    sign, content, mono, factors, rest = factor_binomials(p)
    assert (sign, content, mono) == (1, 1, (1, 0))
    assert sorted(factors) == [((0, 1), 2), ((2, 2), 1)]
    assert rest.is_one()


def test_latex_coefficient():
    assert latex_coefficient((ONE - T) / (ONE - Q * T ** 2)) == r"\frac{1-t}{1-q\,t^{2}}"
    assert latex_coefficient(ONE) == "1"


def squash(s):
    return re.sub(r"\s+", "", s)


def test_compute_latex_matches_published_line(capsys):
    code, out, _ = run(capsys, "compute", "E", "0,1,0", "--format", "latex")
    assert code == 0
    published = r"E_{(0,1,0)} & = x_{2} + {\frac{1-t}{1-q\,{t^2}}}\,x_{1}\\"
    normal = squash(published).replace("{t^2}", "t^{2}").replace("{\\frac{1-t}{1-q\\,t^{2}}}", "\\frac{1-t}{1-q\\,t^{2}}")
    assert squash(out) == normal


def test_compute_text(capsys):
    assert run(capsys, "compute", "E", "0,0,0") == (0, "1\n", "")
    code, out, _ = run(capsys, "compute", "P", "1,1,0", "--format", "text")
    assert (code, out) == (0, "x1*x2 + x1*x3 + x2*x3\n")
    code, out, _ = run(capsys, "compute", "P", "--lambda", "1,1,0", "--mode", "checked")
    assert (code, out) == (0, "x1*x2 + x1*x3 + x2*x3\n")


@pytest.mark.parametrize("family", ["E", "Eint", "Einv", "key"])
def test_compute_families_checked_equals_fast(capsys, family):
    _, fast, _ = run(capsys, "compute", family, "--mu", "0,2,1")
    code, checked, _ = run(capsys, "compute", family, "--mu", "0,2,1", "--mode", "checked")
    assert code == 0 and fast == checked


@pytest.mark.parametrize("family, index", [("D", "2,1"), ("J", "2,1"), ("schur", "2,1")])
def test_compute_symmetric_families(capsys, family, index):
    code, out, _ = run(capsys, "compute", family, index, "--m", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == SCHEMA and doc["n"] == 3


def test_compute_json_is_deterministic(capsys):
    a = run(capsys, "compute", "E", "0,2,0", "--format", "json")
    b = run(capsys, "compute", "E", "0,2,0", "--format", "json")
    assert a == b
    doc = json.loads(a[1])
    assert doc["schema"] == "nsmac/1" and doc["family"] == "E" and doc["index"] == [0, 2, 0]


def test_usage_errors(capsys):
    assert run(capsys, "compute", "E", "0,x")[0] == 2
    assert run(capsys, "compute", "J", "0,1")[0] == 2
    assert run(capsys, "compute", "E", "0,1", "--m", "2")[0] == 2
    assert run(capsys, "compute", "F", "0,1")[0] == 2
    assert run(capsys, "compute", "E")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "table", "--n", "0", "--max-degree", "1")[0] == 2


def test_table_order():
    rows = table_order(3, 2)
    assert rows == [
        (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (1, 1, 0), (1, 0, 1), (0, 1, 1), (2, 0, 0), (0, 2, 0), (0, 0, 2),
    ]


def test_table_latex_matches_published_values(capsys):
    code, out, _ = run(capsys, "table", "--n", "3", "--max-degree", "2", "--format", "latex")
    lines = [ln for ln in out.splitlines() if ln.startswith("E_")]
    assert code == 0 and len(lines) == 10
    table = appendix_table()
    published = [mu for mu in table_order(3, 2) if mu in table]
    labels = [tuple(int(c) for c in re.match(r"E_\{\(([\d,]+)\)\}", ln).group(1).split(",")) for ln in lines]
    assert labels == table_order(3, 2)
    assert [mu for mu in labels if mu in table] == published


def test_table_json_values(capsys):
    from nsmac.exactalg import XPolynomial

    code, out, _ = run(capsys, "table", "--n", "3", "--max-degree", "2", "--format", "json")
    doc = json.loads(out)
    for entry in doc["entries"]:
        mu = tuple(entry["mu"])
        f = XPolynomial.from_records(3, entry["terms"])
        if mu in appendix_table():
            assert f == appendix_table()[mu]


def test_table_n1(capsys):
    code, out, _ = run(capsys, "table", "--n", "1", "--max-degree", "3")
    assert out.splitlines() == ["E(0) = 1", "E(1) = x1", "E(2) = x1^2", "E(3) = x1^3"]


def test_table_n2_symmetry(capsys):
    code, out, _ = run(capsys, "table", "--n", "2", "--max-degree", "2", "--mode", "checked")
    assert code == 0 and len(out.splitlines()) == 6


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "appendix-table")
    assert code == 0 and "9/9 checks passed" in out
    code, out, _ = run(capsys, "verify", "operator-relations", "--n", "3", "--seed", "42")
    assert code == 0 and "[FAIL]" not in out
    code, out, _ = run(capsys, "verify", "dual-engine", "--n", "3", "--max-degree", "2", "--format", "json")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_failure_reports_counterexample(capsys, monkeypatch):
    import nsmac.verify as verify

    def broken(**_):
        yield verify.Check("deliberately false", False, 0.0, {"f": [{"x": [1], "num": [[0, 0, "1"]]}]})

    monkeypatch.setitem(verify.SUITES, "broken", broken)
    from nsmac import cli

    monkeypatch.setattr(cli, "SUITES", verify.SUITES)
    code, out, _ = run(capsys, "verify", "broken")
    assert code == 1
    assert "first counterexample" in out and '"num"' in out


def test_stats(capsys):
    rows = json.dumps([[1, 2, 3, 5], [6, 4, 5], [2]])
    code, out, _ = run(capsys, "stats", "2,1,3,0,0,2", "--filling", rows, "--format", "json")
    doc = json.loads(out)
    rec = doc["fillings"][0]
    assert code == 0
    assert (rec["maj"], rec["Inv"], rec["inv"], rec["coinv"]) == (3, 25, 15, 2)
    assert doc["arm_leg"]["3,1"] == [5, 2]
    code, out, _ = run(capsys, "stats", "0,1,0")
    assert code == 0 and out.splitlines()[-1] == "2 filling(s)"
    assert run(capsys, "stats", "1,0", "--filling", "[[1,2]]")[0] == 2

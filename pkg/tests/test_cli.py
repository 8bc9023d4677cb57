import json

import pytest

from kgamma.cli import main, parse_tableau_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mult_golden(capsys):
    code, out, _ = run(capsys, "mult", "1", "1")
    assert code == 0
    assert out == "2 1\n1,1 1\n2,1 -1\n"


def test_coprod_golden(capsys):
    code, out, _ = run(capsys, "coprod", "1")
    assert code == 0
    lines = set(out.strip().splitlines())
    assert lines == {"1 0 1", "0 1 1", "1 1 -1"}


def test_tripleint_golden(capsys):
    code, out, _ = run(capsys, "tripleint", "4", "9", "3,2,1", "3,2,1", "4,2,1")
    assert code == 0
    assert out.strip() == "-1"


def test_skew_and_pieri(capsys):
    code, out, _ = run(capsys, "skew", "2,1/1")
    assert code == 0
    assert out == "2 1\n1,1 1\n2,1 -1\n"
    code, out2, _ = run(capsys, "pieri", "1", "1")
    assert code == 0
    assert out2 == out


def test_sslash(capsys):
    code, out, _ = run(capsys, "sslash", "2,1", "2,1")
    assert code == 0
    assert out.splitlines()[0] == "0 1"


def test_usage_error_exit_2(capsys):
    code, _, err = run(capsys, "mult", "1,3", "1")
    assert code == 2
    assert "usage error" in err


def test_domain_error_exit_1(capsys):
    code, _, err = run(capsys, "tripleint", "2", "4", "3", "1", "1")
    assert code == 1
    assert "error" in err


def test_unknown_suite_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["verify", "nosuchsuite"])
    assert e.value.code == 2


def test_determinism(capsys):
    a = run(capsys, "mult", "2,1", "2,1")
    b = run(capsys, "mult", "2,1", "2,1")
    assert a == b
    a = run(capsys, "stable", "2,4,1,3", "--vars", "2", "--deg", "5")
    b = run(capsys, "stable", "2,4,1,3", "--vars", "2", "--deg", "5")
    assert a == b


def test_json_matches_text(capsys):
    _, text, _ = run(capsys, "mult", "2", "1,1")
    _, js, _ = run(capsys, "mult", "2", "1,1", "--json")
    doc = json.loads(js)
    from_text = {
        tuple(int(v) for v in lam.split(",") if lam != "0"): int(c)
        for lam, c in (line.split() for line in text.strip().splitlines())
    }
    from_json = {tuple(t["partition"]): t["coeff"] for t in doc["terms"]}
    assert from_text == from_json


def test_json_single_document(capsys):
    _, js, _ = run(capsys, "tripleint", "2", "4", "1", "1", "1", "--json")
    doc = json.loads(js)
    assert doc == {"command": "tripleint", "value": 1}


def test_poly_and_stable(capsys):
    code, out, _ = run(capsys, "poly", "1", "--vars", "2", "--deg", "5")
    assert code == 0
    assert out.strip() == "x2 + x1 - x1*x2"
    code, out, _ = run(capsys, "stable", "2,1", "--vars", "2", "--deg", "3")
    assert code == 0
    assert out.splitlines()[0] == "polynomial: x2 + x1 - x1*x2"
    assert out.splitlines()[1] == "alpha 1 1"


def test_insert_trace(capsys):
    code, out, _ = run(capsys, "insert", "2,3,5", "{1,2}/{4,5}")
    assert code == 0
    lines = out.splitlines()
    assert lines[-2] == "result: {1}{2,4,5} / {2,3} / {5}"
    assert lines[-1] == "word: 5,2,3,1,2,4,5"


def test_antipode_cmd(capsys):
    code, out, _ = run(capsys, "antipode", "0", "--deg", "4")
    assert code == 0
    assert out.strip() == "0 1"


def test_dualcheck(capsys):
    code, out, _ = run(capsys, "dualcheck", "2", "4")
    assert code == 0
    assert "all dual" in out


def test_grmult(capsys):
    code, out, _ = run(capsys, "grmult", "2", "4", "1", "1")
    assert code == 0
    assert out == "2 1\n1,1 1\n2,1 -1\n"


def test_verify_cli(capsys):
    code, out, _ = run(capsys, "verify", "shapes")
    assert code == 0
    assert all(line.startswith(("PASS", "5/5")) for line in out.strip().splitlines())


def test_verify_bound_flags(capsys):
    code, out, _ = run(capsys, "verify", "insertion", "--max-weight", "3", "--max-entry", "3")
    assert code == 0
    assert "FAIL" not in out
    code, out, _ = run(capsys, "verify", "gamma", "--max-weight", "3")
    assert code == 0
    assert "FAIL" not in out


def test_skew_command_deterministic(capsys):
    code, out, _ = run(capsys, "skew", "4,3,2/1")
    assert code == 0
    assert out.strip()  # a nonempty deterministic expansion
    again = run(capsys, "skew", "4,3,2/1")
    assert again[1] == out


def test_parse_tableau_text():
    t = parse_tableau_text("{1}{1,2}/{2,3}")
    assert str(t) == "{1}{1,2} / {2,3}"
    with pytest.raises(ValueError):
        parse_tableau_text("{2}{1}")
    with pytest.raises(ValueError):
        parse_tableau_text("{1}/{1,2}{3}")

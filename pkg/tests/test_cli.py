import csv
import json

import pytest

from ffnorm.cli import (CSV_COLUMNS, EXIT_BUDGET, EXIT_INPUT, EXIT_OK, SpecError, format_count,
                        load_field_spec, main, parse_c, parse_field_spec)
from ffnorm.comprep import CompactRep, cr_norm, element_from_strings
from ffnorm.parse import parse_poly

from conftest import ROOT

E1 = str(ROOT / "fields" / "e1.toml")
E2 = str(ROOT / "fields" / "e2.toml")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def spec_file(tmp_path, text, name="f.toml"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_format_count():
    assert format_count(5 ** 1038, 5) == "5^1038"
    assert format_count(125, 5) == "125"
    assert format_count(7 * 5 ** 60, 5).startswith("~10^")


def test_info_e1(capsys):
    code, out, _ = run(capsys, "info", "--field", E1)
    assert code == EXIT_OK
    assert "g=1, one infinite place e=2 deg=1, unit rank 0" in out
    assert "n=2, g=1, C_f=2" in out
    assert "order 4" in out


@pytest.mark.slow
def test_info_e2(capsys):
    code, out, _ = run(capsys, "info", "--field", E2)
    assert code == EXIT_OK
    assert "two infinite places e=1 deg=1, e=1 deg=2, unit rank 1" in out
    assert "[[-694, 347]]" in out or "[[694, -347]]" in out
    assert "regulator: 347" in out


def test_malformed_toml(capsys, tmp_path):
    path = spec_file(tmp_path, 'q = 3\nf = = "t^2"\n')
    code, _, err = run(capsys, "info", "--field", path)
    assert code == EXIT_INPUT
    assert f"{path}:2:5:" in err


def test_malformed_polynomial_position(tmp_path):
    text = 'name = "bad"\nq = 3\nf = "t^2 - (x^3 + "\n'
    with pytest.raises(SpecError) as info:
        parse_field_spec(text, "bad.toml")
    # end of input: the column of the closing quote on line 3
    assert str(info.value).startswith("bad.toml:3:19:")


def test_missing_keys_and_types():
    with pytest.raises(SpecError, match="missing key 'f'"):
        parse_field_spec("q = 3\n")
    with pytest.raises(SpecError, match="q must be an integer"):
        parse_field_spec('q = "3"\nf = "t^2 - x"\n')


def test_missing_file(capsys):
    code, _, err = run(capsys, "info", "--field", "/nonexistent/field.toml")
    assert code == EXIT_INPUT and "cannot read" in err


def test_wild_and_anchorless(capsys, tmp_path):
    wild = spec_file(tmp_path, 'q = 3\nf = "t^3 + x"\n', "wild.toml")
    code, _, err = run(capsys, "solve", "--field", wild, "--c", "x")
    assert code == EXIT_INPUT and "wild" in err
    flat = spec_file(tmp_path, 'q = 3\nf = "t^2 - 2*x^2 - 2"\n', "flat.toml")
    code, _, err = run(capsys, "solve", "--field", flat, "--c", "x", "--algorithm", "exhaustive-cr")
    assert code == EXIT_INPUT and "degree 1" in err
    code, out, _ = run(capsys, "solve", "--field", flat, "--c", "x", "--algorithm", "gp")
    assert code == EXIT_OK


def test_constant_c(capsys):
    code, _, err = run(capsys, "solve", "--field", E1, "--c", "3")
    assert code == EXIT_INPUT and "constant c unsupported" in err
    code, _, err = run(capsys, "solve", "--field", E1, "--c", "2")
    assert code == EXIT_INPUT and "constant c unsupported" in err


def test_bad_c(capsys):
    code, _, err = run(capsys, "solve", "--field", E1, "--c", "x +* 1")
    assert code == EXIT_INPUT and "--c:1:4:" in err


def test_solve_gp_text(capsys):
    code, out, _ = run(capsys, "solve", "--field", E1, "--c", "x^3+x+1", "--algorithm", "gp")
    assert code == EXIT_OK
    assert "1 solution(s)" in out


@pytest.mark.parametrize("alg", ["gp", "oracle", "exhaustive-cr", "index-calculus"])
def test_json_round_trip(capsys, alg):
    code, out, _ = run(capsys, "solve", "--field", E1, "--c", "x^3+x+1", "--algorithm", alg,
                       "--output", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["count"] == 1 == len(data["solutions"])
    F = load_field_spec(E1)
    c = parse_poly(data["c"], F.q)
    for s in data["solutions"]:
        if isinstance(s, dict):
            N = cr_norm(CompactRep.from_json(F, s))
        else:
            N = element_from_strings(F, s).norm()
        assert N.den.is_one() and N.num.monic() == c.monic()


def test_budget_exit(capsys):
    code, _, err = run(capsys, "solve", "--field", E1, "--c", "x^20 + 1", "--algorithm", "gp")
    assert code == EXIT_BUDGET and "exceeds budget" in err


@pytest.mark.slow
def test_e2_index_calculus_json(capsys):
    code, out, _ = run(capsys, "solve", "--field", E2, "--c", "x+4", "--algorithm",
                       "index-calculus", "--output", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["count"] >= 1
    F = load_field_spec(E2)
    for s in data["solutions"]:
        N = cr_norm(CompactRep.from_json(F, s))
        assert N.den.is_one() and N.num.monic() == parse_c("x+4", 5)


@pytest.mark.slow
def test_stats_e2(capsys):
    code, out, _ = run(capsys, "stats", "--field", E2, "--c", "x+4", "--output", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["gp_count"] == "5^1038"
    assert data["tuple_bound"] <= 2980
    assert data["ideal_count"] == 4


def test_stats_text(capsys):
    code, out, _ = run(capsys, "stats", "--field", E1, "--c", "x")
    assert code == EXIT_OK
    assert "index-calculus ideals: 4" in out


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_bench_empty_suite(capsys, tmp_path):
    suite = spec_file(tmp_path, "# nothing yet\n", "suite.toml")
    out = tmp_path / "out.csv"
    code, _, _ = run(capsys, "bench", suite, "--out", str(out), "--quiet")
    assert code == EXIT_OK
    assert read_csv(out) == [CSV_COLUMNS]


def test_bench_timeout_rows(capsys, tmp_path):
    e1 = spec_file(tmp_path, 'q = 3\nf = "t^2 - (x^3 + x + 1)"\n', "e1.toml")
    suite = spec_file(tmp_path, f'''
[[case]]
field = "e1.toml"
c = "x^20 + 1"
algorithms = ["gp"]

[[case]]
field = "{E2}"
c = "x + 4"
algorithms = ["index-calculus"]

[[case]]
field = "e1.toml"
c = "x"

[[case]]
field = "missing.toml"
c = "x"
algorithms = ["gp"]
''', "suite.toml")
    out = tmp_path / "out.csv"
    code, printed, _ = run(capsys, "bench", suite, "--out", str(out), "--timeout", "2")
    assert code == EXIT_OK
    rows = read_csv(out)
    assert rows[0] == CSV_COLUMNS
    body = [dict(zip(CSV_COLUMNS, r)) for r in rows[1:]]
    assert len(body) == 6
    assert [r["status"] for r in body] == ["TIMEOUT", "TIMEOUT", "OK", "OK", "OK", "ERROR"]
    assert all(r["solutions"] == "0" for r in body[2:5])
    assert (tmp_path / "out_n.png").exists() and (tmp_path / "out_g.png").exists()
    assert len(printed.strip().splitlines()) == 6

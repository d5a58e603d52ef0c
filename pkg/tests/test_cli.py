import json
import subprocess
import sys
from fractions import Fraction

import pytest

from w3cft import cli
from w3cft.records import parse_csv, parse_json


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def both(capsys, *argv):
    c1, j, _ = run(capsys, *argv, "--format", "json")
    c2, c, _ = run(capsys, *argv, "--format", "csv")
    assert c1 == c2 == 0
    cols, jvals = parse_json(j)
    types = dict(zip(cols, json.loads(j)["types"]))
    ccols, cvals = parse_csv(c, types)
    assert cols == ccols
    return cols, jvals, cvals


COMMANDS = [
    ("kac-table", "4", "5"),
    ("kac-table", "4", "5", "--exact"),
    ("kac-table", "5", "4"),
    ("curves", "w3-psi"),
    ("curves", "w3-eps", "--exact"),
    ("curves", "virasoro", "--grid", "1/2:sqrt(5/2):7"),
    ("orbits", "all", "--p-range", "1:4"),
    ("spin-search", "sigma"),
    ("spin-search", "sigma1"),
    ("fusion", "sigma2", "sigma2", "--model", "4:5"),
    ("fusion", "sigma", "--spectrum", "conjugate", "--cutoff", "2"),
    ("fusion", "1,2,1,1", "sigma"),
    ("potts",),
    ("potts", "--fusions"),
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_csv_json_value_identity(capsys, argv):
    _, jvals, cvals = both(capsys, *argv)
    norm = lambda vals: [[None if v == "" else v for v in row] for row in vals]
    assert norm(jvals) == norm(cvals)


def test_json_round_trip_is_exact(capsys):
    _, out, _ = run(capsys, "kac-table", "4", "5", "--format", "json")
    cols, vals = parse_json(out)
    h = [row[cols.index("h")] for row in vals]
    assert sorted(h) == sorted(Fraction(x) for x in ("0", "1/15", "1/15", "2/3", "2/3", "2/5"))
    data = json.loads(out)
    assert json.loads(json.dumps(data)) == data


def test_kac_table_row_for_sigma_at_5_4(capsys):
    cols, vals, _ = both(capsys, "kac-table", "5", "4")
    rows = [dict(zip(cols, r)) for r in vals]
    hit = [r for r in rows if "[[2, 1], [1, 1]]" in r["triple"]]
    assert len(hit) == 1 and hit[0]["h"] == Fraction(1, 15)


def test_empty_table_renders_header(capsys):
    code, out, _ = run(capsys, "kac-table", "2", "3")
    assert code == 0 and out == "triple,n1,n2,m1,m2,q,h,w_factor\n"


def test_curves_special_rows(capsys):
    cols, vals, _ = both(capsys, "curves", "w3-eps", "--exact", "--squared", "--grid", "4/5:1:2")
    row = dict(zip(cols, vals[0]))
    assert (row["b2"], row["h_sigma"], row["h_eps"]) == (Fraction(4, 5), Fraction(1, 15), Fraction(2, 5))
    cols, vals, _ = both(capsys, "curves", "w3-psi", "--exact", "--squared", "--grid", "1/2:1:2")
    row = dict(zip(cols, vals[0]))
    assert row["h_sigma"] == row["h_sigma2"] == row["h_psi"] == Fraction(-1, 3)


def test_exact_mode_has_no_decimals(capsys):
    _, out, _ = run(capsys, "curves", "w3-psi", "--exact", "--format", "json")
    assert set(json.loads(out)["types"]) == {"rational"}
    _, out, _ = run(capsys, "kac-table", "7", "8", "--exact", "--format", "json")
    assert "decimal" not in json.loads(out)["types"]


def test_orbits_emit_twelve_points(capsys):
    cols, vals, _ = both(capsys, "orbits", "sigma", "--p-range", "1:20")
    assert len(vals) == 12 * 20


def test_spin_search_prints_one_orbit(capsys):
    cols, vals, _ = both(capsys, "spin-search", "sigma")
    assert len(vals) == 1
    row = dict(zip(cols, vals[0]))
    assert row["status"] == "unique"
    assert (row["n1"], row["n2"], row["m1"], row["m2"]) == (
        Fraction(2, 3), Fraction(-1, 3), Fraction(1, 3), Fraction(1, 3))


def test_out_file(capsys, tmp_path):
    target = tmp_path / "t.csv"
    code, out, _ = run(capsys, "potts", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("name,triple,q,h,w")


@pytest.mark.parametrize(
    "argv",
    [
        ("kac-table", "4", "6"),
        ("kac-table", "1", "4"),
        ("curves", "w3-psi", "--grid", "1:1:1"),
        ("curves", "w3-psi", "--grid", "1:2:1"),
        ("curves", "w3-psi", "--grid", "2:1:5"),
        ("curves", "w3-psi", "--grid", "sqrt(1/2):2:5", "--exact"),
        ("curves", "w3-psi", "--grid", "a:b:c"),
        ("orbits", "sigma", "--p-range", "0:3"),
        ("orbits", "sigma", "--p-range", "1:101"),
        ("spin-search", "no-such-spec"),
        ("fusion", "sigma"),
        ("fusion", "sigma", "sigma2"),
        ("fusion", "1,2,3", "sigma"),
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


def test_malformed_spec_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "spin-search", str(bad))
    assert code == 1 and "malformed" in err


def test_argparse_errors_exit_1():
    for argv in (["orbits", "tau"], ["nonsense"], []):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 1


def test_check_exits_zero_via_console_script():
    out = subprocess.run([sys.executable, "-m", "w3cft.cli", "check"], capture_output=True, text=True)
    assert out.returncode == 0, out.stdout + out.stderr
    assert "checks passed" in out.stdout


def test_check_failure_exits_2(capsys, monkeypatch):
    from w3cft import checks

    monkeypatch.setattr(checks, "CHECKS", checks.CHECKS + [("broken", lambda: (False, "forced"))])
    code, out, _ = run(capsys, "check")
    assert code == 2 and "FAIL" in out

import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from simulprime.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_check_true():
    code, text = run("check", "--form", "twin-a", "--p", "5", "--format", "json")
    record = json.loads(text)
    assert code == 0
    assert record["verdict"] is True
    assert (record["residue"], record["modulus"]) == ("0", "35")
    assert record["targets"] == ["5", "7"]


def test_check_false_named_prefix():
    code, text = run("check", "--form", "named:quad", "--p", "7", "--format", "json")
    assert code == 3
    assert json.loads(text)["verdict"] is False


def test_check_domain_error(capsys):
    code, text = run("check", "--form", "twin-a", "--p", "4")
    assert code == 2 and text == ""
    assert "odd" in capsys.readouterr().err


def test_check_witness():
    code, text = run("check", "--form", "quad", "--p", "5", "--witness", "--format", "json")
    assert code == 0 and json.loads(text)["witness"] == "76020"
    code, text = run("check", "--form", "quad", "--p", "5", "--witness", "--witness-cap", "3")
    assert code == 2


def test_check_recipe_with_pattern():
    code, text = run("check", "--form", "U:2", "--pattern", "0,2,6,8", "--p", "11",
                     "--k", "balanced", "--format", "json")
    assert code == 0
    assert json.loads(text)["targets"] == ["11", "13", "17", "19"]
    code, _ = run("check", "--form", "divisor", "--d", "5", "--p", "3")
    assert code == 0
    code, _ = run("check", "--form=pair-s", "--k", "4", "--p", "7")
    assert code == 0
    code, _ = run("check", "--form", "triple-s", "--pattern=-2,0,4", "--p", "7")
    assert code == 0
    code, _ = run("check", "--form", "twin-a", "--pattern", "0,4", "--p", "7")
    assert code == 2


def test_scan_table():
    code, text = run("scan", "--form", "twin-a", "--range", "3..20")
    assert code == 0
    rows = text.splitlines()[1:]
    assert [r.split()[0] for r in rows] == ["3", "5", "11", "17"]


def test_scan_csv():
    code, text = run("scan", "--form", "quad", "--range", "3..110", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0
    assert text.splitlines()[0] == "p,targets,form,verdict,residue,modulus,reason"
    assert [r["p"] for r in rows] == ["5", "11", "101"]
    assert rows[0]["targets"] == "5;7;11;13"


def test_scan_empty():
    code, text = run("scan", "--form", "clement", "--range", "4..4", "--format", "json")
    assert code == 0 and text == ""
    code, text = run("scan", "--form", "clement", "--range", "4..4", "--format", "csv")
    assert text == "p,targets,form,verdict,residue,modulus,reason\n"


def test_scan_round_trip_with_check():
    _, text = run("scan", "--form", "pair-s:6", "--range", "2..300", "--format", "json")
    bases = [json.loads(line)["p"] for line in text.splitlines()]
    assert bases
    for p in bases:
        assert run("check", "--form", "pair-s:6", "--p", p)[0] == 0


@pytest.mark.parametrize("fmt", ["json", "csv", "table"])
def test_scan_byte_identical_across_jobs(fmt):
    one = run("scan", "--form", "twin-b", "--range", "3..4000", "--format", fmt, "--jobs", "1")
    eight = run("scan", "--form", "twin-b", "--range", "3..4000", "--format", fmt, "--jobs", "8")
    assert one == eight


def test_verify():
    code, text = run("verify", "--form", "twin-b", "--range", "3..3000")
    assert code == 0 and "mismatches 0" in text
    code, text = run("verify", "--form", "pair-c:4", "--range", "2..1000", "--format", "json")
    assert code == 0 and json.loads(text)["mismatches"] == []
    code, text = run("verify", "--form", "twin-a", "--range", "3..3", "--format", "json")
    assert code == 0 and json.loads(text)["checked"] == 1


def test_verify_csv_header():
    code, text = run("verify", "--form", "clement", "--range", "3..50", "--format", "csv")
    assert code == 0 and text == "form,p,form_verdict,oracle_verdict\n"


def test_bench():
    code, text = run("bench", "--forms", "clement,twin-a", "--range", "3..2000", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0
    assert [r["form"] for r in rows] == ["clement", "twin-a", "oracle-sieve"]
    assert all(float(r["ratio_vs_sieve"]) > 0 for r in rows)
    assert rows[0]["hits"] == rows[2]["hits"]

    code, text = run("bench", "--forms", "twin-a", "--range", "3..3")
    assert code == 0 and len(text.splitlines()) == 3
    code, _ = run("bench", "--forms", "nosuch", "--range", "3..9")
    assert code == 2


def test_list_criteria():
    code, text = run("list-criteria", "--format", "json")
    entries = {e["id"]: e for e in json.loads(text)}
    assert code == 0
    assert entries["simionov:k"]["domain"] == "2 <= p, 1 <= k <= p"
    assert "quadruplet" in entries["quad"]["provenance"]
    assert run("list-criteria") == run("list-criteria")


@pytest.mark.parametrize("argv", [
    [],
    ["nosuch"],
    ["check", "--form", "twin-a"],
    ["check", "--form", "twin-a", "--p", "x"],
    ["check", "--form", "twin-a", "--p", "-3"],
    ["check", "--form", "frob", "--p", "5"],
    ["check", "--form", "divisor:4", "--p", "5"],
    ["scan", "--form", "twin-a", "--range", "20..3"],
    ["scan", "--form", "twin-a", "--range", "3-20"],
    ["scan", "--form", "twin-a"],
    ["scan", "--form", "twin-a", "--range", "3..20", "--jobs", "0"],
    ["scan", "--form", "twin-a", "--range", "3..20", "--format", "xml"],
    ["scan", "--form", "weighted", "--pattern", "0,0", "--range", "3..20"],
    ["verify", "--range", "3..20"],
    ["bench", "--range", "3..20"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv, out=io.StringIO()))
    assert exc.value.code == 2


malformed_ranges = st.one_of(
    st.text(alphabet="0123456789x -,:", max_size=8),            # no ".." at all
    st.tuples(st.integers(1, 50), st.integers(0, 50)).filter(lambda t: t[0] > t[1])
      .map(lambda t: f"{t[0]}..{t[1]}"),                         # reversed
    st.tuples(st.text(alphabet="x -", min_size=1, max_size=3), st.integers(0, 50))
      .map(lambda t: f"{t[0]}..{t[1]}"),                         # junk bound
)


@settings(max_examples=60, deadline=None)
@given(malformed_ranges)
def test_malformed_ranges_exit_2(text):
    try:
        code = main(["scan", "--form", "twin-a", "--range=" + text], out=io.StringIO())
    except SystemExit as exc:
        code = exc.code
    assert code == 2


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 200))
def test_exit_code_contract_for_check(p):
    code, _ = run("check", "--form", "twin-a", "--p", str(p))
    if p % 2 == 0:
        assert code == 2
    else:
        from simulprime.oracle import tuple_is_prime
        assert code == (0 if tuple_is_prime(p, (0, 2)) else 3)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "simulprime", "check", "--form", "twin-a", "--p", "9"],
                          capture_output=True, text=True)
    assert proc.returncode == 3

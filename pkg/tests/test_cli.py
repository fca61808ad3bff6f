import json

import pytest

from pcnkit.cli import main

F6 = ["--field", "p=2", "n=6"]


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_analyze_table_shape(capsys):
    rc, out, _ = run(capsys, "analyze", *F6, "--func", "mono d=5", "--all-c", "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    deltas = {r["c"]: r["delta"] for r in doc["rows"]}
    assert len(deltas) == 64
    assert deltas[0] == 1 and deltas[1] == 4
    assert sorted(c for c, d in deltas.items() if d == 1) == [0, 14, 15]


def test_analyze_c0_and_pn(capsys):
    rc, out, _ = run(capsys, "analyze", *F6, "--func", "mono d=5", "--c", "0", "--format", "json")
    assert rc == 0 and json.loads(out)["rows"][0]["delta"] == 1
    rc, out, _ = run(capsys, "analyze", "--field", "p=3", "n=2", "--func", "mono d=2", "--all-c", "--format", "json")
    assert rc == 0 and json.loads(out)["pcn_set"] == []


def test_analyze_verify(capsys):
    rc, out, _ = run(capsys, "analyze", "--field", "p=2", "n=4", "--func", "mono d=7", "--all-c", "--verify", "--format", "json")
    assert rc == 0 and json.loads(out)["audits"]["oracle_mismatches"] == []


def test_enumerate_c(capsys):
    rc, out, _ = run(capsys, "enumerate-c", *F6, "--func", "mono d=34", "--format", "json")
    assert rc == 0 and json.loads(out)["pcn_set"] == [14, 15]


def test_shifts(capsys):
    rc, out, _ = run(capsys, "shifts", *F6, "--func", "mono d=34", "--c", "5", "--format", "json")
    r = json.loads(out)[0]
    assert rc == 0
    assert r["trichotomy"] == "AllBad" and r["dimension"] == 6


def test_shifts_refutation_exit(capsys):
    # random GF(8) permutations have non-subspace bad-shift sets
    rc, out, _ = run(capsys, "shifts", "--field", "p=2", "n=3", "--func", "lut 0 1 3 2 6 7 5 4", "--all-c", "--format", "json")
    rows = json.loads(out)
    assert rc == (1 if any(not r["is_subspace"] for r in rows) else 0)


def test_ddt_dump_roundtrip(capsys, tmp_path):
    p = tmp_path / "t.csv"
    rc, _, _ = run(capsys, "ddt", *F6, "--func", "mono d=34", "--dump", str(p))
    assert rc == 0 and p.read_text().startswith("a/b,0,1")
    rc, out, _ = run(capsys, "ddt", *F6, "--func", "mono d=34", "--load", str(p))
    assert rc == 0
    rc, _, _ = run(capsys, "ddt", *F6, "--func", "mono d=5", "--load", str(p))
    assert rc == 1


def test_walsh(capsys):
    rc, out, _ = run(capsys, "walsh", "--field", "p=2", "n=3", "--func", "mono d=3", "--format", "json")
    assert rc == 0 and json.loads(out)["nl"] == 2


def test_quadratic(capsys):
    rc, out, _ = run(capsys, "quadratic", *F6, "--gold-k", "2", "--all-c", "--format", "json")
    assert rc == 0
    rc, _, err = run(capsys, "quadratic", *F6, "--gold-k", "3", "--all-c")
    assert rc == 3 and "gcd" in err


def test_affine(capsys):
    rc, out, _ = run(capsys, "affine", *F6, "--func", "mono d=5", "--lin", "lin 2:1 0:9", "--c", "14", "15", "--format", "json")
    assert rc == 0
    rc, _, err = run(capsys, "affine", *F6, "--func", "mono d=5", "--search", "--c", "14")
    assert rc == 3 and "budget" in err


def test_reproduce(capsys):
    rc, out, _ = run(capsys, "reproduce", "example-3-1")
    assert rc == 0 and "PASS" in out
    rc, out, _ = run(capsys, "reproduce", "binomial-f25")
    assert rc == 1 and "FAIL" in out
    rc, _, err = run(capsys, "reproduce", "bogus")
    assert rc == 2 and "table-1" in err


def test_bench(capsys):
    rc, out, _ = run(capsys, "bench", "--field", "p=2", "n=4", "--func", "mono d=7", "--runs", "1", "--format", "json")
    assert rc == 0 and json.loads(out)["reports"][0]["agree"]
    rc, _, err = run(capsys, "bench", "--field", "p=2", "n=10", "--func", "mono d=7", "--runs", "1", "--methods", "triple")
    assert rc == 3 and "budget" in err


@pytest.mark.parametrize(
    "argv,code,needle",
    [
        (["analyze", "--field", "p=2", "k=6", "--func", "mono d=5", "--all-c"], 2, "k=6"),
        (["analyze", *F6, "--func", "mono d=zz", "--all-c"], 2, "zz"),
        (["analyze", *F6, "--func", "frob d=5", "--all-c"], 2, "frob"),
        (["analyze", "--field", "p=4", "n=2", "--func", "mono d=5", "--all-c"], 3, "p=4"),
        (["shifts", *F6, "--func", "mono d=5", "--c", "1"], 3, "c=1"),
        (["nosuch"], 2, ""),
    ],
)
def test_exit_codes(capsys, argv, code, needle):
    rc, _, err = run(capsys, *argv)
    assert rc == code
    assert needle in err


CMDS = [
    ["analyze", "--func", "mono d=5", "--all-c"],
    ["enumerate-c", "--func", "mono d=34"],
    ["shifts", "--func", "mono d=11", "--all-c"],
    ["walsh", "--func", "mono d=5"],
    ["ddt", "--func", "mono d=5"],
]


@pytest.mark.parametrize(
    "cmd,fmt",
    [(c, f) for c in CMDS for f in ("json", "csv") if not (c[0] == "walsh" and f == "csv")],
)
def test_thread_count_does_not_change_output(capsys, cmd, fmt):
    base = [cmd[0], *F6, *cmd[1:], "--format", fmt, "--seed", "3"]
    _, a, _ = run(capsys, *base, "--threads", "1")
    _, b, _ = run(capsys, *base, "--threads", "4")
    assert a == b and a


def test_out_file(capsys, tmp_path):
    p = tmp_path / "o.json"
    rc, out, _ = run(capsys, "enumerate-c", *F6, "--func", "mono d=34", "--format", "json", "--out", str(p))
    assert rc == 0 and json.loads(p.read_text())["pcn_set"] == [14, 15]


def test_pretty(capsys):
    rc, out, _ = run(capsys, "enumerate-c", *F6, "--func", "mono d=34", "--pretty")
    assert rc == 0 and "m^3 + m^2 + m" in out

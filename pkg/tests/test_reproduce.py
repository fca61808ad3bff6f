import pytest

from pcnkit import ArgumentError
from pcnkit.reproduce import SCENARIOS, X5_ROWS, reproduce


def test_unknown_name():
    with pytest.raises(ArgumentError, match="example-3-1"):
        reproduce("nope")


def test_x34_scenario():
    r = reproduce("example-3-1")
    assert r.passed, r.to_text()
    assert r.seconds < 5


def test_x5_scenario():
    r = reproduce("table-1")
    assert r.passed, r.to_text()
    diffs = next(c for c in r.checks if c.label == "per-row differences")
    assert diffs.computed == []
    assert len(X5_ROWS) == 76
    assert any("c=47" in n for n in r.notes)


def test_scenario_reports_are_serialisable():
    import json

    r = reproduce("example-3-1")
    doc = json.loads(json.dumps(r.to_dict()))
    assert doc["name"] == "example-3-1" and doc["passed"]
    assert "PASS" in r.to_text()


@pytest.mark.parametrize("name", ["inverse-f28", "binomial-f25", "closure-f25"])
def test_claims_that_do_not_reproduce(name):
    # these scenarios complete with a written verdict; the claims fail to reproduce
    r = reproduce(name)
    assert not r.passed
    assert r.notes
    assert "FAIL" in r.to_text()


def test_every_scenario_listed():
    assert set(SCENARIOS) == {"example-3-1", "table-1", "inverse-f28", "binomial-f25", "closure-f25"}

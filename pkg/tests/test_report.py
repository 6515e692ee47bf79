import json
import random

import pytest

from thetacrit.report import SCHEMA, RunReport, canonical_order, encode, loads, recheck


def make_report():
    rep = RunReport(["thetacrit", "demo"], seed=3, config={"tol": 1e-9})
    rep.note("first")
    rep.note("second")
    rep.row("t", x=1, value=1 / 3 + 2j / 7)
    rep.check("a", 1e-12, 1e-9)
    rep.check("b", 2e-3, 1e-9)
    rep.check("c", True)
    rep.check("d", False, expected=False, soft=True)
    rep.check("e", 5.0, 1.0, soft=True)
    return rep


def test_statuses_and_exit():
    rep = make_report()
    assert [r["status"] for r in rep.checks()] == ["pass", "fail", "pass", "pass", "fail"]
    assert rep.exit_status == 1
    assert [r["name"] for r in rep.failures()] == ["b"]
    assert len(rep.failures(include_soft=True)) == 2


def test_round_trip_reproduces_statuses():
    rep = make_report()
    text = rep.to_jsonl()
    back = loads(text)
    assert recheck(back) == []
    assert [r["status"] for r in back.checks()] == [r["status"] for r in canonical_order(rep.checks())]
    assert back.exit_status == rep.exit_status
    assert back.to_jsonl() == text


def test_recheck_detects_tampering():
    rep = make_report()
    lines = [json.loads(l) for l in rep.to_jsonl().splitlines()]
    for r in lines:
        if r.get("name") == "b":
            r["status"] = "pass"
    back = loads("\n".join(json.dumps(r) for r in lines))
    assert recheck(back) == [("b", "pass", "fail")]


def test_schema_and_floats():
    text = make_report().to_jsonl()
    recs = [json.loads(l) for l in text.splitlines()]
    assert all(r["schema"] == SCHEMA for r in recs)
    assert recs[0]["kind"] == "command" and recs[-1]["kind"] == "summary"
    row = next(r for r in recs if r["kind"] == "row")
    assert row["value"] == {"re": float(f"{1 / 3:.15g}"), "im": float(f"{2 / 7:.15g}")}
    assert encode(float("nan")) == "nan"
    with pytest.raises(ValueError):
        loads(json.dumps({"schema": "other/0", "kind": "command"}))
    with pytest.raises(ValueError):
        loads("")


def test_order_independent_emission():
    a, b = make_report(), make_report()
    rng = random.Random(0)
    checks = [r for r in b.records if r["kind"] == "check"]
    rng.shuffle(checks)
    b.records = [r for r in b.records if r["kind"] != "check"] + checks
    assert a.to_jsonl() == b.to_jsonl()


def test_summary_lines():
    lines = make_report().summary_lines()
    assert lines[:2] == ["first", "second"]
    assert lines[-1] == "5 checks, 1 failed, exit 1"

import json

import pytest

from thetacrit.cli import UsageError, format_complex, main, parse_complex
from thetacrit.report import loads, recheck


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("text,value", [
    ("0.13+0.07i", 0.13 + 0.07j), (" 1 - 2 i ", 1 - 2j), ("i", 1j), ("-i", -1j), ("2", 2),
    ("−0.28+0.04i", -0.28 + 0.04j), ("3j", 3j), ("1e-3i", 1e-3j),
])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1+", "1 + 2k", "ii"])
def test_parse_complex_rejects(text):
    with pytest.raises(ValueError):
        parse_complex(text)


def test_format_complex():
    assert format_complex(1 - 2j) == "1-2i"
    assert parse_complex(format_complex(0.1 + 0.2j)) == 0.1 + 0.2j


def test_pairs(capsys):
    code, out, _ = run(capsys, "pairs", "9")
    assert code == 0
    assert "a=1 b=8" in out and "(-22 + i√2)/81" in out and "81k^2 -44k +6" in out
    assert "a=5 b=4" in out and "(-20 + i√5)/81" in out and "81k^2 -40k +5" in out


def test_pairs_empty_and_even(capsys):
    code, out, _ = run(capsys, "pairs", "3")
    assert code == 0 and "no pairs" in out
    code, _, err = run(capsys, "pairs", "8")
    assert code == 2 and "odd" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "7", "4", "3", "1", "2", "0.2")
    assert code == 0 and "-2 - i√3" in out
    code, out, _ = run(capsys, "verify", "5", "1", "4", "0", "1", "0.13+0.07i")
    assert code == 0 and "1 + 2i" in out
    code, _, err = run(capsys, "verify", "5", "1", "4", "0", "3", "0.1")
    assert code == 2 and "does not divide N_0 = 2" in err


def test_verify_mismatch_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "5", "1", "4", "0", "1", "--tol", "1e-20")
    assert code == 1 and "FAIL" in out


def test_tau(capsys):
    code, out, _ = run(capsys, "tau", "5", "1", "4", "0", "1")
    assert code == 0 and "[[-31, -8], [4, 1]]" in out and "(-7 + i)/25" in out


def test_family(capsys):
    code, out, _ = run(capsys, "family", "5", "-0.28+0.04i", "0.13+0.07i", "--lam", "1+2i")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "family", "3", "i", "--lam", "1")
    assert code == 1
    code, out, _ = run(capsys, "family", "3", "i")
    assert code == 0 and "[soft]" in out


def test_theta(capsys):
    code, out, _ = run(capsys, "theta", "0", "i")
    assert code == 0 and "1.08643481121331" in out
    code, out, _ = run(capsys, "theta", "0", "i", "--char", "1", "0")
    assert code == 0 and "theta_{1,0}" in out
    code, _, err = run(capsys, "theta", "0", "1e-12i")
    assert code == 2


def test_negsign(capsys):
    code, out, _ = run(capsys, "negsign", "9", "5")
    assert code == 0 and "(1, 2)" in out and "(61 + i√5)/162" in out
    code, out, _ = run(capsys, "negsign", "5", "1")
    assert code == 0 and "never" in out
    code, _, _ = run(capsys, "negsign", "9", "2")
    assert code == 2


@pytest.mark.parametrize("d,n", [(9, 15), (5, 6), (13, 18)])
def test_lists(capsys, d, n):
    code, out, _ = run(capsys, "lists", str(d))
    assert code == 0 and f"{n} entries" in out


def test_lists_13_details(capsys):
    code, out, _ = run(capsys, "lists", "13", "--jsonl")
    rows = [json.loads(l) for l in out.splitlines()]
    rows = [r for r in rows if r["kind"] == "row"]
    by_value = {r["value"]: r for r in rows}
    for v in ("3 + 2*I", "-3 - 2*I", "3 - 2*I", "-3 + 2*I"):
        assert by_value[v]["realized"]
    assert set(by_value["-3 - 2*I"]["tags"]) >= {"theorem_negative"}
    mis = [r for r in rows if r["printed"] == "±1 ± 3i√2"]
    assert len(mis) == 4 and all(r["misprint"] for r in mis)
    assert sorted(r["expected"] for r in mis) == ["conjugate", "higher_genus", "higher_genus", "theorem"]


def test_lists_unknown(capsys):
    code, _, err = run(capsys, "lists", "21")
    assert code == 2


def test_jsonl_round_trip(capsys, tmp_path):
    path = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "verify", "9", "5", "4", "1", "2", "--jsonl", "--report", str(path))
    assert code == 0
    assert path.read_text() == out
    rep = loads(out)
    assert recheck(rep) == [] and rep.exit_status == 0


def test_deterministic(capsys):
    a = run(capsys, "lists", "9", "--jsonl")[1]
    b = run(capsys, "lists", "9", "--jsonl")[1]
    assert a == b


def test_config(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"search": {"k_max": 0, "k_min": 0}}))
    code, out, _ = run(capsys, "negsign", "9", "5", "--config", str(cfg))
    assert code == 0 and "none" in out and "[soft]" in out
    cfg.write_text(json.dumps({"theta": {"max_terms": 5}}))
    code, _, err = run(capsys, "theta", "0", "i", "--config", str(cfg))
    assert code == 2
    cfg.write_text(json.dumps({"thetas": {}}))
    code, _, err = run(capsys, "pairs", "5", "--config", str(cfg))
    assert code == 2 and "unknown" in err
    code, _, err = run(capsys, "pairs", "5", "--config", str(tmp_path / "missing.json"))
    assert code == 2


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "quick")
    assert code == 0
    assert sum(line.startswith("[PASS] criterion") for line in out.splitlines()) == 10


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "verify", "5", "1")[0] == 2


def test_selftest_full_contents(capsys):
    code, out, _ = run(capsys, "selftest", "full", "--jsonl")
    assert code == 0
    checks = {r["name"]: r for r in map(json.loads, out.splitlines()) if r["kind"] == "check"}
    assert checks["c9.bullet_rule_mismatches"]["info"]["l_max"] == 60
    assert checks["c5.sign_classification_mismatches"]["info"]["inputs"] >= 50
    assert all(r["status"] == "pass" for r in checks.values())


def test_parse_rational_complex():
    assert parse_complex("(-7+i)/25") == pytest.approx(complex(-7, 1) / 25)
    assert parse_complex("(−12 + 1.7320508075688772i) / 49") == pytest.approx(complex(-12, 3 ** 0.5) / 49)
    with pytest.raises(UsageError):
        parse_complex("(1+i)/0")

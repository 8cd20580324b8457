import json

import pytest

from idemsync import SearchBudget, UsageError
from idemsync.harness import CLAIMS, ClaimRecord, HarnessReport, run_harness


def test_claim_registry_is_complete():
    assert sorted(CLAIMS) == [
        "cerny",
        "cor3",
        "gusev7",
        "ladder",
        "lemma1",
        "prop5",
        "thm2",
    ]


def test_cerny_claim_produces_one_record_per_size():
    report = run_harness(["cerny"])
    assert [r.params for r in report.records] == [f"n={n}" for n in range(2, 11)]
    assert report.ok
    assert all(r.claim == "cerny" and r.passed for r in report.records)
    assert all(r.millis >= 0 for r in report.records)


def test_records_are_ordered_by_claim_id():
    report = run_harness(["thm2", "cerny"])
    claims = [r.claim for r in report.records]
    assert claims == sorted(claims)
    assert claims[0] == "cerny"


def test_unknown_claim_is_rejected():
    with pytest.raises(UsageError, match="unknown claim"):
        run_harness(["cerny", "bogus"])


def test_gusev_claim_gates_only_the_seven_state_instance():
    report = run_harness(["gusev7"])
    gating = [r for r in report.records if not r.informative]
    info = [r for r in report.records if r.informative]
    assert [r.params for r in gating] == ["n=7"]
    assert [r.params for r in info] == ["n=3", "n=5", "n=9", "n=11", "n=13"]
    assert report.ok == gating[0].passed


def test_informative_records_never_gate():
    failing_info = ClaimRecord("x", "n=1", "1", "2", False, 0.0, informative=True)
    passing = ClaimRecord("x", "n=2", "1", "1", True, 0.0)
    failing = ClaimRecord("x", "n=2", "1", "2", False, 0.0)
    assert HarnessReport((failing_info, passing)).ok
    assert not HarnessReport((failing_info, passing, failing)).ok


def test_text_lines_carry_tags():
    report = run_harness(["gusev7"])
    lines = report.text_lines()
    assert lines[0].startswith("[PASS] gusev7 n=7:")
    assert all(line.startswith("[info]") for line in lines[1:])


def test_jsonl_records_carry_all_fields():
    report = run_harness(["ladder"])
    for line in report.jsonl_lines():
        record = json.loads(line)
        assert set(record) == {
            "claim",
            "params",
            "expected",
            "measured",
            "pass",
            "millis",
            "informative",
        }
        assert record["claim"] == "ladder"
        assert record["pass"] is True


def test_budget_is_threaded_through():
    report = run_harness(["cerny"], budget=SearchBudget(max_subsets=2))
    assert not report.ok


def test_smallest_doubled_instance_is_the_known_red_record():
    report = run_harness(["cor3"])
    failing = [r for r in report.records if not r.passed]
    assert [r.params for r in failing] == ["n=4"]
    assert "proper=False" in failing[0].measured

# tests/test_fuzz.py
import harness.fuzz as fuzz
from core.errors import UnsupportedConfiguration
from core.stratum import StratumType
from harness.fuzz import (
    AGREE,
    CRITERION_ERROR,
    HARD,
    SKIPPED,
    SOFT,
    UNCERTIFIED,
    TrialRecord,
    aggregate,
    format_fuzz,
    fuzz_frame,
    run_fuzz,
    run_trial,
    trial_rng,
)

SMALL = dict(depth=4, escalation_depth=4, node_budget=300, precision=12)
SEEDED = dict(depth=8, escalation_depth=12, node_budget=1500, precision=16)


def test_trial_rng_is_per_index():
    assert trial_rng(1, 0).random() == trial_rng(1, 0).random()
    assert trial_rng(1, 0).random() != trial_rng(1, 1).random()


def test_single_trial_record():
    rec = run_trial(1, 0, kinds=(StratumType.C,), **SMALL)
    assert rec.kind == "C"
    assert rec.p in (3, 5, 7)
    assert rec.outcome in (AGREE, SOFT, SKIPPED, UNCERTIFIED)
    assert rec.outcome != HARD


def test_fuzz_is_deterministic():
    a = run_fuzz(seed=3, trials=4, kinds=(StratumType.C, StratumType.D), **SMALL)
    b = run_fuzz(seed=3, trials=4, threads=2, kinds=(StratumType.C, StratumType.D), **SMALL)
    assert a == b
    assert a.trials == 4
    assert a.hard_failures == 0
    assert a.criterion_errors == 0
    total = a.agreements + a.soft_failures + a.uncertified + a.skipped
    assert total == 4


def test_seeded_fuzz_has_no_failures():
    out = run_fuzz(seed=1, trials=20, threads=2, **SEEDED)
    assert out.trials == 20
    assert out.agreements > 0
    assert out.hard_failures == 0
    assert out.soft_failures == 0
    assert out.criterion_errors == 0
    assert out.ok


def test_criterion_error_is_not_skipped(monkeypatch):
    def refuse(s):
        raise UnsupportedConfiguration("rules disagree")

    monkeypatch.setattr(fuzz, "criterion_status", refuse)
    rec = run_trial(1, 0, kinds=(StratumType.D,), **SMALL)
    assert rec.outcome == CRITERION_ERROR
    assert "UnsupportedConfiguration: rules disagree" in rec.detail
    assert rec.kind == "D"


def test_soft_failure_is_not_ok():
    records = [
        TrialRecord(0, "C", 7, True, "NonEmpty", SOFT, 16, escalated=True),
        TrialRecord(1, "D", 5, False, "Empty", AGREE, 12),
    ]
    out = aggregate(records)
    assert out.hard_failures == 0
    assert out.failures == 1
    assert not out.ok


def test_criterion_error_is_a_failure():
    records = [
        TrialRecord(0, "B", 5, False, None, CRITERION_ERROR, 12, detail="error: UnsupportedConfiguration: x"),
        TrialRecord(1, "D", 5, False, None, SKIPPED, 12, detail="no valid stratum"),
    ]
    out = aggregate(records)
    assert (out.criterion_errors, out.skipped) == (1, 1)
    assert not out.ok
    assert [r.index for r in out.error_cases] == [0]
    assert "CRITERION ERROR trial 0" in out.to_text()


def test_uncertified_witness_is_reported_but_not_a_failure():
    out = aggregate([TrialRecord(0, "D", 7, False, "Empty", UNCERTIFIED, 12, detail="point")])
    assert out.uncertified == 1
    assert out.ok


def test_aggregate_counts_and_histogram():
    records = [
        TrialRecord(2, "D", 5, False, "Empty", HARD, 12, detail="x"),
        TrialRecord(0, "C", 5, False, "NonEmpty", AGREE, 12),
        TrialRecord(1, "C", 5, False, "NonEmpty", SOFT, 16, escalated=True),
    ]
    out = aggregate(records)
    assert (out.agreements, out.soft_failures, out.hard_failures) == (1, 1, 1)
    assert not out.ok
    assert out.histogram["C/p=5/unram/NonEmpty"] == {AGREE: 1, SOFT: 1}
    assert [r.index for r in out.counterexamples] == [2]
    assert "COUNTEREXAMPLE trial 2" in out.to_text()
    df = fuzz_frame(out)
    assert list(df.columns) == ["case", "outcome", "count"]
    assert df["count"].sum() == 3
    assert format_fuzz(out, "csv").startswith("case,outcome,count")


def test_criterion_and_search_agree_on_fixed_seeds():
    for seed in (2, 3, 4):
        for i in range(4):
            rec = run_trial(seed, i, kinds=(StratumType.D,), **SEEDED)
            assert rec.outcome in (AGREE, UNCERTIFIED, SKIPPED), rec.detail
            if rec.xbeta == "NonEmpty":
                assert rec.outcome == AGREE, rec.detail

# tests/test_verify.py
from core.padic import BaseElement, PrimeConfig, is_norm_class
from harness.verify import (
    FAIL,
    PASS,
    DrawResult,
    SuiteResult,
    VerifyReport,
    brute_norm_class,
    character_suite,
    conjugation_suite,
    decision_suite,
    format_verify,
    norm_class_suite,
    separation_suite,
    shallow_cases,
    shallowness_suite,
    type_c_exceptional_suite,
)


def test_brute_norm_class_agrees_on_samples():
    for ramified in (False, True):
        cfg = PrimeConfig.make(7, ramified)
        for k in (-1, 0, 3):
            for u in (1, 3, 6):
                y = BaseElement.power_of_p(cfg, k, u)
                assert brute_norm_class(y) == is_norm_class(y)


def test_norm_class_suite():
    suite = norm_class_suite(primes=(3, 5))
    assert suite.ok
    # 2 ramificaciones x 5 valuaciones x (p - 1) unidades
    assert suite.draws == 2 * 5 * 2 + 2 * 5 * 4


def test_shallowness_suite_passes():
    suite = shallowness_suite()
    assert suite.draws == len(shallow_cases())
    assert suite.ok
    assert suite.passed > 0


def test_conjugation_suite():
    suite = conjugation_suite(seed=1, per_prime=4, primes=(3,))
    assert suite.draws == 4
    assert suite.passed == 4


def test_character_suite():
    suite = character_suite(seed=1, draws=4, primes=(5,))
    assert suite.ok, suite.to_text()


def test_separation_suite():
    suite = separation_suite(seed=1, draws=2, primes=(5,))
    assert suite.ok, suite.to_text()


def test_decision_suites():
    assert decision_suite(seed=1, draws=4, primes=(5,)).ok
    assert type_c_exceptional_suite(seed=1, draws=2, primes=(5,)).ok


def test_report_rendering():
    good = SuiteResult("good", 2, 2, 0)
    bad = SuiteResult("bad", 1, 0, 0, (DrawResult(0, FAIL, "lhs=1 rhs=0"),))
    report = VerifyReport((good, bad))
    assert not report.ok
    text = format_verify(report)
    assert "COUNTEREXAMPLE #0" in text
    csv = format_verify(report, "csv")
    assert csv.splitlines()[0] == "suite,draws,passed,skipped,failed"
    assert DrawResult(1, PASS).status == "pass"

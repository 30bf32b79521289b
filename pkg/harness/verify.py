# harness/verify.py
"""
Suites de verificacion de los lemas.

Cada suite ejecuta draws deterministas (un generador por draw) y clasifica
cada uno como pass, skip (hipotesis no cumplidas) o fail. Un draw que queda
indeterminado por precision se repite con la precision doblada antes de
contarse como fallo.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Sequence, Tuple

import pandas as pd
from joblib import Parallel, delayed

from classifier.genericity import classify_genericity, theorem_table
from classifier.lemmas import (
    ShallowCase,
    character_check,
    check_claim,
    conjugation_identity,
    random_conjugation_triple,
    random_isotropic_coords,
    shallowness_threshold,
    shallowness_value,
    stable_shallowness,
    valuation_separation,
)
from classifier.sampler import sample_stratum
from config.constants import DEFAULT_LEMMA_DRAWS, DEFAULT_PRECISION, DEFAULT_PRIMES
from core.errors import (
    ConstraintViolated,
    HypothesisViolated,
    IndeterminateValuation,
    NoSolution,
    StrataError,
)
from core.hermitian import WEYL_ELEMENTS, random_unitary
from core.padic import INF, BaseElement, ExtElement, PrimeConfig, is_norm_class
from core.stratum import Stratum, StratumType, q_invariants
from geometry.criteria import XBeta, criterion_status
from harness.input_file import emit_stratum
from infrastructure.logging import get_logger

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

CONJUGATION_DRAWS = 100
TYPE_C_DRAWS = 50
DECISION_DRAWS = 40
SAMPLE_ATTEMPTS = 60
NU_RANGE = 10
M_RANGE = 8


@dataclass(frozen=True)
class DrawResult:
    index: int
    status: str
    detail: str = ""


@dataclass(frozen=True)
class SuiteResult:
    name: str
    draws: int
    passed: int
    skipped: int
    failures: Tuple[DrawResult, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        head = f"{self.name:<22} draws={self.draws} pass={self.passed} skip={self.skipped} fail={len(self.failures)}"
        lines = [head]
        for f in self.failures:
            lines.append(f"  COUNTEREXAMPLE #{f.index}:")
            lines.extend(f"    {line}" for line in f.detail.splitlines())
        return "\n".join(lines)


@dataclass(frozen=True)
class VerifyReport:
    suites: Tuple[SuiteResult, ...]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def to_text(self) -> str:
        return "\n".join(s.to_text() for s in self.suites)

    def frame(self) -> pd.DataFrame:
        rows = [(s.name, s.draws, s.passed, s.skipped, len(s.failures)) for s in self.suites]
        return pd.DataFrame(rows, columns=["suite", "draws", "passed", "skipped", "failed"])


def format_verify(report: VerifyReport, output: str = "text") -> str:
    if output == "csv":
        return report.frame().to_csv(index=False)
    return report.to_text()


def _configs(primes: Sequence[int], precision: int) -> List[PrimeConfig]:
    return [PrimeConfig.make(p, ram, precision=precision) for p in primes for ram in (False, True)]


def _draw_rng(suite: str, seed: int, index: int, attempt: int = 0) -> random.Random:
    return random.Random(f"{suite}:{seed}:{index}:{attempt}")


def _with_retry(fn: Callable[[PrimeConfig], DrawResult], cfg: PrimeConfig, index: int) -> DrawResult:
    try:
        return fn(cfg)
    except IndeterminateValuation:
        doubled = PrimeConfig.make(cfg.p, cfg.ramified, cfg.nonsquare_unit, 2 * cfg.precision)
        try:
            return fn(doubled)
        except IndeterminateValuation as exc:
            return DrawResult(index, FAIL, f"indeterminate at precision {doubled.precision}: {exc}")


def _run_suite(name: str, draws: int, draw: Callable[[int], DrawResult], threads: int) -> SuiteResult:
    results = Parallel(n_jobs=threads)(delayed(draw)(i) for i in range(draws))
    results = sorted(results, key=lambda r: r.index)
    failures = tuple(r for r in results if r.status == FAIL)
    suite = SuiteResult(
        name=name,
        draws=len(results),
        passed=sum(1 for r in results if r.status == PASS),
        skipped=sum(1 for r in results if r.status == SKIP),
        failures=failures,
    )
    events = get_logger()
    events.event(
        "VERIFY_SUITE_DONE", suite=name, draws=suite.draws, passed=suite.passed,
        skipped=suite.skipped, failed=len(failures),
    )
    for f in failures:
        events.event("COUNTEREXAMPLE", source="verify", suite=name, draw=f.index, detail=f.detail)
    logger.info(f"{name}: pass={suite.passed} skip={suite.skipped} fail={len(failures)}")
    return suite


# =========================
# Clases de normas
# =========================
def brute_norm_class(y: BaseElement) -> bool:
    """y es norma sii y/N(x) es una unidad = 1 mod p para algun x = (a + b d) pi^j."""
    cfg = y.cfg
    p = cfg.p
    target = y.valuation()
    step = ExtElement.delta(cfg) if cfg.ramified else ExtElement.uniformizer(cfg)
    step_val = 1 if cfg.ramified else 2
    j, r = divmod(target, step_val)
    if r:
        return False
    power = step ** j if j >= 0 else step.inverse() ** (-j)
    for a in range(p):
        for b in range(p):
            if a == 0 and b == 0:
                continue
            x = ExtElement(BaseElement.from_int(cfg, a), BaseElement.from_int(cfg, b)) * power
            n = x.norm()
            if n.is_zero() or n.valuation() != target:
                continue
            if (y / n).residue() == 1:
                return True
    return False


def norm_class_suite(primes: Sequence[int] = DEFAULT_PRIMES, precision: int = DEFAULT_PRECISION) -> SuiteResult:
    results = []
    index = 0
    for cfg in _configs(primes, precision):
        for k in range(-2, 3):
            for u in range(1, cfg.p):
                y = BaseElement.make(cfg, k, u, INF)
                fast, slow = is_norm_class(y), brute_norm_class(y)
                if fast == slow:
                    results.append(DrawResult(index, PASS))
                else:
                    results.append(DrawResult(
                        index, FAIL, f"{cfg.describe()} y={y.to_literal()}: is_norm_class={fast} enumeration={slow}"
                    ))
                index += 1
    failures = tuple(r for r in results if r.status == FAIL)
    get_logger().event(
        "VERIFY_SUITE_DONE", suite="norm-class", draws=len(results),
        passed=len(results) - len(failures), skipped=0, failed=len(failures),
    )
    return SuiteResult("norm-class", len(results), len(results) - len(failures), 0, failures)


# =========================
# Caracter en el radical derivado
# =========================
@lru_cache(maxsize=None)
def _type_a_stratum(seed: int, cfg: PrimeConfig) -> Stratum:
    return sample_stratum(random.Random(f"char-stratum:{seed}:{cfg.p}:{cfg.ramified}"), StratumType.A, cfg, 3)


def _character_draw(seed: int, index: int, cfg: PrimeConfig) -> DrawResult:
    s = _type_a_stratum(seed, cfg)
    rng = _draw_rng("character", seed, index)
    g = random_unitary(rng, cfg, steps=3, max_val=2)
    side = "upper" if index % 2 == 0 else "lower"
    try:
        check = character_check(g, s, 0, side)
    except ConstraintViolated as exc:
        return DrawResult(index, FAIL, f"{cfg.describe()} side={side}: {exc}")
    level = check.level
    problems = []
    if check.trace_identity is not True:
        problems.append("trace identity failed")
    if not character_check(g, s, level, side).nontrivial:
        problems.append(f"trivial at r=level={level}")
    if character_check(g, s, level + 1, side).nontrivial:
        problems.append(f"nontrivial at r={level + 1}")
    if not character_check(g, s, level - 1, side).nontrivial:
        problems.append(f"not monotone at r={level - 1}")
    if problems:
        return DrawResult(index, FAIL, f"{cfg.describe()} side={side}: " + "; ".join(problems) + "\n" + emit_stratum(s))
    return DrawResult(index, PASS)


def character_suite(seed: int, draws: int = DEFAULT_LEMMA_DRAWS, threads: int = 1,
                    primes: Sequence[int] = DEFAULT_PRIMES, precision: int = DEFAULT_PRECISION) -> SuiteResult:
    configs = _configs(primes, precision)

    def draw(i: int) -> DrawResult:
        return _with_retry(lambda c: _character_draw(seed, i, c), configs[i % len(configs)], i)

    return _run_suite("character", draws, draw, threads)


# =========================
# Separacion de valuaciones
# =========================
def _separation_draw(seed: int, index: int, cfg: PrimeConfig) -> DrawResult:
    for attempt in range(SAMPLE_ATTEMPTS):
        rng = _draw_rng("separation", seed, index, attempt)
        try:
            s = sample_stratum(rng, StratumType.D, cfg, 4)
            if criterion_status(s).status != XBeta.EMPTY:
                continue
            coords = random_isotropic_coords(rng, s)
            check = valuation_separation(s, coords, XBeta.EMPTY)
        except (HypothesisViolated, NoSolution):
            continue
        if check.holds:
            return DrawResult(index, PASS)
        lits = ", ".join(x.to_literal() for x in coords)
        return DrawResult(index, FAIL, f"lhs={check.lhs} rhs={check.rhs} v=({lits})\n" + emit_stratum(s))
    return DrawResult(index, SKIP, "no Empty type D stratum with an admissible isotropic vector")


def separation_suite(seed: int, draws: int = DEFAULT_LEMMA_DRAWS, threads: int = 1,
                     primes: Sequence[int] = DEFAULT_PRIMES, precision: int = DEFAULT_PRECISION) -> SuiteResult:
    configs = _configs(primes, precision)

    def draw(i: int) -> DrawResult:
        return _with_retry(lambda c: _separation_draw(seed, i, c), configs[i % len(configs)], i)

    return _run_suite("valuation-separation", draws, draw, threads)


# =========================
# Identidad de conjugacion
# =========================
def conjugation_suite(seed: int, per_prime: int = CONJUGATION_DRAWS, threads: int = 1,
                      primes: Sequence[int] = DEFAULT_PRIMES, precision: int = DEFAULT_PRECISION) -> SuiteResult:
    configs = _configs(primes, precision)
    per_config = max(1, per_prime // 2)
    total = per_config * len(configs)

    def draw(i: int) -> DrawResult:
        cfg = configs[i // per_config]
        rng = _draw_rng("conjugation", seed, i)
        x, y, a = random_conjugation_triple(rng, cfg)
        try:
            ok = conjugation_identity(x, y, a)
        except ConstraintViolated as exc:
            return DrawResult(i, FAIL, f"{cfg.describe()}: {exc}")
        if ok:
            return DrawResult(i, PASS)
        return DrawResult(i, FAIL, f"{cfg.describe()} x={x.to_literal()} y={y.to_literal()} a={a.to_literal()}")

    return _run_suite("conjugation", total, draw, threads)


# =========================
# Poca profundidad
# =========================
def shallow_cases() -> List[ShallowCase]:
    out = []
    for m in range(M_RANGE + 1):
        for r in (0, 1):
            for shape in ("oo", "op"):
                out.append(ShallowCase(StratumType.C, False, shape, m, r))
            out.append(ShallowCase(StratumType.C, True, "op", m, r))
            for m2 in range(M_RANGE + 1):
                for r2 in (0, 1):
                    for shape in ("oo", "op"):
                        out.append(ShallowCase(StratumType.D, False, shape, m, r, m2, r2))
        for m2 in range(M_RANGE + 1):
            out.append(ShallowCase(StratumType.D, True, "oo", m, 0, m2, 0))
    return out


def _nu_values(ramified: bool) -> List[Fraction]:
    if ramified:
        return [Fraction(k, 2) for k in range(2 * NU_RANGE + 1)]
    return [Fraction(k) for k in range(NU_RANGE + 1)]


def _shallow_draw(index: int, case: ShallowCase) -> DrawResult:
    checked = 0
    for w in WEYL_ELEMENTS:
        stable = stable_shallowness(case, w)
        threshold = shallowness_threshold(case, w)
        for nu in _nu_values(case.ramified):
            d = shallowness_value(case, w, nu)
            if d < stable or (nu >= threshold and d != stable):
                return DrawResult(index, FAIL, f"{case} w={w} nu={nu}: d={d} stable={stable} threshold={threshold}")
            try:
                claim = check_claim(case, w, nu)
            except HypothesisViolated:
                continue
            checked += 1
            if not claim.holds:
                return DrawResult(index, FAIL, f"{case} w={w} nu={nu}: lhs={claim.lhs} > rhs={claim.rhs}")
    return DrawResult(index, PASS if checked else SKIP)


def shallowness_suite(threads: int = 1) -> SuiteResult:
    cases = shallow_cases()
    return _run_suite("shallowness", len(cases), lambda i: _shallow_draw(i, cases[i]), threads)


# =========================
# Tabla de decision
# =========================
def _decision_draw(seed: int, index: int, cfg: PrimeConfig, kind: StratumType, need_iso: bool) -> DrawResult:
    for attempt in range(SAMPLE_ATTEMPTS):
        rng = _draw_rng(f"decision-{kind.value}", seed, index, attempt)
        try:
            s = sample_stratum(rng, kind, cfg, 4)
            if need_iso and not s.v2_isotropic():
                continue
            report = classify_genericity(s)
        except IndeterminateValuation:
            raise
        except StrataError:
            continue
        iso = s.v2_isotropic() if kind in (StratumType.B, StratumType.C) else None
        q = q_invariants(s).q
        q1 = q[0] if len(q) > 0 else None
        q2 = q[1] if len(q) > 1 else None
        expected = theorem_table(kind, iso, q1, q2, report.xbeta)
        problems = []
        if report.verdict != expected:
            problems.append(f"verdict {report.verdict.value} but table gives {expected.value}")
        if report.xbeta != criterion_status(s).status:
            problems.append("report xbeta differs from criterion_status")
        if need_iso and not (report.xbeta == XBeta.NONEMPTY and report.verdict.value == "NonGeneric"):
            problems.append(f"isotropic type C gave xbeta={report.xbeta.value} verdict={report.verdict.value}")
        if problems:
            return DrawResult(index, FAIL, "; ".join(problems) + "\n" + emit_stratum(s))
        return DrawResult(index, PASS)
    return DrawResult(index, SKIP, f"no valid type {kind.value} stratum sampled")


def decision_suite(seed: int, draws: int = DECISION_DRAWS, threads: int = 1,
                   primes: Sequence[int] = DEFAULT_PRIMES, precision: int = DEFAULT_PRECISION) -> SuiteResult:
    configs = _configs(primes, precision)
    kinds = (StratumType.A, StratumType.B, StratumType.C, StratumType.D)

    def draw(i: int) -> DrawResult:
        kind = kinds[i % len(kinds)]
        cfg = configs[(i // len(kinds)) % len(configs)]
        return _with_retry(lambda c: _decision_draw(seed, i, c, kind, False), cfg, i)

    return _run_suite("decision-table", draws, draw, threads)


def type_c_exceptional_suite(seed: int, draws: int = TYPE_C_DRAWS, threads: int = 1,
                             primes: Sequence[int] = DEFAULT_PRIMES, precision: int = DEFAULT_PRECISION) -> SuiteResult:
    configs = _configs(primes, precision)

    def draw(i: int) -> DrawResult:
        return _with_retry(lambda c: _decision_draw(seed, i, c, StratumType.C, True), configs[i % len(configs)], i)

    return _run_suite("typeC-exceptional", draws, draw, threads)


# =========================
# Todo junto
# =========================
def run_verify(
    seed: int,
    draws: int = DEFAULT_LEMMA_DRAWS,
    threads: int = 1,
    primes: Sequence[int] = DEFAULT_PRIMES,
    precision: int = DEFAULT_PRECISION,
    conjugation_per_prime: int = CONJUGATION_DRAWS,
    decision_draws: int = DECISION_DRAWS,
    type_c_draws: int = TYPE_C_DRAWS,
) -> VerifyReport:
    logger.info("=" * 70)
    logger.info(f"VERIFY seed={seed} draws={draws} threads={threads}")
    logger.info("=" * 70)
    suites = (
        norm_class_suite(primes, precision),
        character_suite(seed, draws, threads, primes, precision),
        separation_suite(seed, draws, threads, primes, precision),
        conjugation_suite(seed, conjugation_per_prime, threads, primes, precision),
        shallowness_suite(threads),
        decision_suite(seed, decision_draws, threads, primes, precision),
        type_c_exceptional_suite(seed, type_c_draws, threads, primes, precision),
    )
    return VerifyReport(suites)

# harness/fuzz.py
"""
Fuzz de criterion_status contra la busqueda de puntos.

Cada trial muestrea un estrato valido (tipo B, C o D, p en {3,5,7}, ambas
ramificaciones), decide X_beta con el criterio y busca un punto:

  - NonEmpty sin testigo a la profundidad base se reintenta una vez a la
    profundidad de escalado; si sigue sin testigo es un fallo blando;
  - Empty con testigo certificado es un fallo duro (contraejemplo);
  - Empty con testigo sin certificado se cuenta aparte;
  - un error del criterio (reglas en desacuerdo) es un fallo;
  - solo se salta el trial si el muestreador no produce estrato.

La ejecucion es aceptable si no hay fallos blandos, duros ni errores del criterio.
"""
from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd
from joblib import Parallel, delayed

from classifier.sampler import sample_stratum
from config.constants import (
    DEFAULT_ESCALATION_DEPTH,
    DEFAULT_FUZZ_NODE_BUDGET,
    DEFAULT_MAX_VALUATION,
    DEFAULT_PRECISION,
    DEFAULT_PRIMES,
    DEFAULT_SEARCH_DEPTH,
)
from core.errors import HypothesisViolated, NoSolution, StrataError
from core.padic import PrimeConfig
from core.stratum import StratumType
from geometry.criteria import XBeta, criterion_status
from geometry.search import brute_search
from geometry.system import assemble_system
from harness.input_file import emit_stratum
from infrastructure.logging import get_logger

logger = logging.getLogger(__name__)

FUZZ_KINDS = (StratumType.B, StratumType.C, StratumType.D)

AGREE = "agree"
SOFT = "soft_failure"
HARD = "hard_failure"
UNCERTIFIED = "uncertified_witness"
CRITERION_ERROR = "criterion_error"
SKIPPED = "skipped"


@dataclass(frozen=True)
class TrialRecord:
    index: int
    kind: str
    p: int
    ramified: bool
    xbeta: Optional[str]
    outcome: str
    depth: int
    escalated: bool = False
    detail: str = ""

    @property
    def case(self) -> str:
        ram = "ram" if self.ramified else "unram"
        return f"{self.kind}/p={self.p}/{ram}/{self.xbeta}"


@dataclass(frozen=True)
class FuzzOutcome:
    trials: int
    agreements: int
    soft_failures: int
    hard_failures: int
    uncertified: int
    skipped: int
    criterion_errors: int
    histogram: Dict[str, Dict[str, int]] = field(default_factory=dict)
    counterexamples: Tuple[TrialRecord, ...] = field(default_factory=tuple)
    soft_cases: Tuple[TrialRecord, ...] = field(default_factory=tuple)
    error_cases: Tuple[TrialRecord, ...] = field(default_factory=tuple)

    @property
    def failures(self) -> int:
        return self.soft_failures + self.hard_failures + self.criterion_errors

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_text(self) -> str:
        lines = [
            f"trials         : {self.trials}",
            f"agreements     : {self.agreements}",
            f"soft failures  : {self.soft_failures}",
            f"hard failures  : {self.hard_failures}",
            f"uncertified    : {self.uncertified}",
            f"criterion errs : {self.criterion_errors}",
            f"skipped        : {self.skipped}",
            "per case:",
        ]
        for case in sorted(self.histogram):
            counts = ", ".join(f"{k}={v}" for k, v in sorted(self.histogram[case].items()))
            lines.append(f"  {case}: {counts}")
        for rec in self.counterexamples:
            lines.append(f"COUNTEREXAMPLE trial {rec.index} ({rec.case}):")
            lines.extend(f"  {line}" for line in rec.detail.splitlines())
        for rec in self.error_cases:
            lines.append(f"CRITERION ERROR trial {rec.index} ({rec.case}):")
            lines.extend(f"  {line}" for line in rec.detail.splitlines())
        return "\n".join(lines)


def fuzz_frame(outcome: FuzzOutcome) -> pd.DataFrame:
    rows = []
    for case in sorted(outcome.histogram):
        for result, count in sorted(outcome.histogram[case].items()):
            rows.append((case, result, count))
    return pd.DataFrame(rows, columns=["case", "outcome", "count"])


def format_fuzz(outcome: FuzzOutcome, output: str = "text") -> str:
    if output == "csv":
        return fuzz_frame(outcome).to_csv(index=False)
    return outcome.to_text()


# =========================
# Un trial
# =========================
def trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"fuzz:{seed}:{index}")


def run_trial(
    seed: int,
    index: int,
    depth: int = DEFAULT_SEARCH_DEPTH,
    escalation_depth: int = DEFAULT_ESCALATION_DEPTH,
    precision: int = DEFAULT_PRECISION,
    max_valuation: int = DEFAULT_MAX_VALUATION,
    node_budget: int = DEFAULT_FUZZ_NODE_BUDGET,
    kinds: Sequence[StratumType] = FUZZ_KINDS,
    primes: Sequence[int] = DEFAULT_PRIMES,
) -> TrialRecord:
    rng = trial_rng(seed, index)
    kind = rng.choice(list(kinds))
    p = rng.choice(list(primes))
    ramified = bool(rng.getrandbits(1))
    cfg = PrimeConfig.make(p, ramified, precision=precision)
    try:
        s = sample_stratum(rng, kind, cfg, max_valuation)
    except (NoSolution, HypothesisViolated) as exc:
        return TrialRecord(index, kind.value, p, ramified, None, SKIPPED, depth, detail=str(exc))
    try:
        status = criterion_status(s).status
    except StrataError as exc:
        # cualquier error del criterio cuenta como fallo
        detail = emit_stratum(s) + f"error: {type(exc).__name__}: {exc}"
        return TrialRecord(index, kind.value, p, ramified, None, CRITERION_ERROR, depth, detail=detail)

    system = assemble_system(s)
    result = brute_search(system, depth, node_budget=node_budget)
    escalated = False
    if status == XBeta.NONEMPTY and not result.found and escalation_depth > depth:
        result = brute_search(system, escalation_depth, node_budget=2 * node_budget)
        escalated = True

    used = result.depth
    if status == XBeta.NONEMPTY:
        outcome = AGREE if result.found else SOFT
        detail = "" if result.found else emit_stratum(s)
    elif result.found and result.certificate is not None:
        outcome = HARD
        detail = emit_stratum(s) + result.to_text()
    elif result.found:
        outcome = UNCERTIFIED
        detail = result.witness.to_text()
    else:
        outcome = AGREE
        detail = ""
    return TrialRecord(index, kind.value, p, ramified, status.value, outcome, used, escalated, detail)


# =========================
# Agregacion
# =========================
def aggregate(records: List[TrialRecord]) -> FuzzOutcome:
    records = sorted(records, key=lambda r: r.index)
    counts = Counter(r.outcome for r in records)
    histogram: Dict[str, Counter] = {}
    for r in records:
        histogram.setdefault(r.case, Counter())[r.outcome] += 1
    return FuzzOutcome(
        trials=len(records),
        agreements=counts[AGREE],
        soft_failures=counts[SOFT],
        hard_failures=counts[HARD],
        uncertified=counts[UNCERTIFIED],
        skipped=counts[SKIPPED],
        criterion_errors=counts[CRITERION_ERROR],
        histogram={k: dict(v) for k, v in histogram.items()},
        counterexamples=tuple(r for r in records if r.outcome == HARD),
        soft_cases=tuple(r for r in records if r.outcome == SOFT),
        error_cases=tuple(r for r in records if r.outcome == CRITERION_ERROR),
    )


def run_fuzz(
    seed: int,
    trials: int,
    threads: int = 1,
    depth: int = DEFAULT_SEARCH_DEPTH,
    escalation_depth: int = DEFAULT_ESCALATION_DEPTH,
    precision: int = DEFAULT_PRECISION,
    max_valuation: int = DEFAULT_MAX_VALUATION,
    node_budget: int = DEFAULT_FUZZ_NODE_BUDGET,
    kinds: Sequence[StratumType] = FUZZ_KINDS,
) -> FuzzOutcome:
    """Resultado determinista dada la semilla (cada trial tiene su propio generador)."""
    events = get_logger()
    events.event("FUZZ_START", seed=seed, trials=trials, threads=threads, depth=depth)
    logger.info("=" * 70)
    logger.info(f"FUZZ seed={seed} trials={trials} depth={depth} escalate={escalation_depth}")
    logger.info("=" * 70)

    records = Parallel(n_jobs=threads)(
        delayed(run_trial)(
            seed, i, depth, escalation_depth, precision, max_valuation, node_budget, kinds
        )
        for i in range(trials)
    )
    outcome = aggregate(list(records))
    for rec in outcome.counterexamples:
        events.event("COUNTEREXAMPLE", source="fuzz", trial=rec.index, case=rec.case, detail=rec.detail)
    for rec in outcome.soft_cases:
        events.event("FUZZ_TRIAL_FAILED", trial=rec.index, case=rec.case, kind="soft", depth=rec.depth)
    for rec in outcome.error_cases:
        events.event("FUZZ_TRIAL_FAILED", trial=rec.index, case=rec.case, kind="criterion", detail=rec.detail)

    events.event(
        "FUZZ_DONE",
        trials=outcome.trials,
        agreements=outcome.agreements,
        soft_failures=outcome.soft_failures,
        hard_failures=outcome.hard_failures,
        uncertified=outcome.uncertified,
        skipped=outcome.skipped,
        criterion_errors=outcome.criterion_errors,
    )
    logger.info(
        f"FUZZ done: agree={outcome.agreements} soft={outcome.soft_failures} "
        f"hard={outcome.hard_failures} criterion_errors={outcome.criterion_errors}"
    )
    return outcome

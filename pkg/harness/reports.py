# harness/reports.py
"""
Salida de informes: texto legible o CSV (pandas) que se puede volver a leer.
"""
from __future__ import annotations

import io
import json
from typing import List, Optional, Tuple

import pandas as pd

from classifier.genericity import ClassificationReport, Verdict
from core.errors import ParseError
from core.padic import PrimeConfig, parse_base_literal
from core.stratum import StratumType
from geometry.criteria import LemmaStep, XBeta
from geometry.hensel import HenselCertificate, Witness
from geometry.search import SearchResult

REPORT_COLUMNS = ["record", "key", "value"]


def _tuple_from(value: str) -> Tuple[int, ...]:
    return tuple(int(x) for x in value.split(";")) if value else ()


def _tuple_to(values) -> str:
    return ";".join(str(int(x)) for x in values)


def _untuple(obj):
    if isinstance(obj, list):
        return tuple(_untuple(x) for x in obj)
    if isinstance(obj, dict):
        return {k: _untuple(v) for k, v in obj.items()}
    return obj


# =========================
# Testigos
# =========================
def _witness_rows(witness: Optional[Witness], certificate: Optional[HenselCertificate]) -> List[Tuple[str, str, str]]:
    rows = []
    if witness is not None:
        rows += [
            ("witness", "point", ";".join(x.to_literal() for x in witness.point)),
            ("witness", "residual_level", str(witness.residual_level)),
            ("witness", "weights", _tuple_to(witness.weights)),
            ("witness", "scaled", _tuple_to(witness.scaled)),
            ("witness", "pin", str(witness.pin)),
        ]
    if certificate is not None:
        rows += [
            ("certificate", "kind", certificate.kind),
            ("certificate", "minor_rows", _tuple_to(certificate.minor_rows)),
            ("certificate", "minor_cols", _tuple_to(certificate.minor_cols)),
            ("certificate", "minor_valuation", str(certificate.minor_valuation)),
            ("certificate", "residual_level", str(certificate.residual_level)),
        ]
    return rows


def _witness_from(cfg: PrimeConfig, fields: dict) -> Optional[Witness]:
    if not fields:
        return None
    point = tuple(parse_base_literal(cfg, lit) for lit in fields["point"].split(";"))
    return Witness(
        point=point,
        residual_level=int(fields["residual_level"]),
        weights=_tuple_from(fields["weights"]),
        scaled=_tuple_from(fields["scaled"]),
        pin=int(fields["pin"]),
    )


def _certificate_from(fields: dict) -> Optional[HenselCertificate]:
    if not fields:
        return None
    return HenselCertificate(
        kind=fields["kind"],
        minor_rows=_tuple_from(fields["minor_rows"]),
        minor_cols=_tuple_from(fields["minor_cols"]),
        minor_valuation=int(fields["minor_valuation"]),
        residual_level=int(fields["residual_level"]),
    )


# =========================
# Informe de clasificacion
# =========================
def report_frame(report: ClassificationReport) -> pd.DataFrame:
    rows = []
    if report.kind is not None:
        rows.append(("summary", "type", report.kind.value))
    rows += [
        ("summary", "verdict", report.verdict.value),
        ("summary", "xbeta", report.xbeta.value),
    ]
    for step in report.case_path:
        payload = {"rule": step.rule, "inputs": step.inputs, "outcome": step.outcome}
        rows.append(("step", step.lemma, json.dumps(payload, sort_keys=True, default=str)))
    rows += _witness_rows(report.witness, report.certificate)
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def report_to_csv(report: ClassificationReport) -> str:
    return report_frame(report).to_csv(index=False)


def report_from_csv(text: str, cfg: PrimeConfig) -> ClassificationReport:
    """
    Inversa de report_to_csv (cfg hace falta para leer los literales del testigo).

    Raises:
        ParseError: si faltan columnas o registros obligatorios.
    """
    df = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
    if list(df.columns) != REPORT_COLUMNS:
        raise ParseError(1, 1, f"expected columns {REPORT_COLUMNS}, got {list(df.columns)}")
    summary, witness, certificate = {}, {}, {}
    steps = []
    for row in df.itertuples(index=False):
        if row.record == "summary":
            summary[row.key] = row.value
        elif row.record == "step":
            payload = json.loads(row.value)
            steps.append(LemmaStep(row.key, payload["rule"], _untuple(payload["inputs"]), payload["outcome"]))
        elif row.record == "witness":
            witness[row.key] = row.value
        elif row.record == "certificate":
            certificate[row.key] = row.value
        else:
            raise ParseError(0, 0, f"unknown record {row.record!r}")
    if "verdict" not in summary or "xbeta" not in summary:
        raise ParseError(0, 0, "report is missing verdict or xbeta")
    return ClassificationReport(
        verdict=Verdict(summary["verdict"]),
        xbeta=XBeta(summary["xbeta"]),
        case_path=tuple(steps),
        witness=_witness_from(cfg, witness),
        certificate=_certificate_from(certificate),
        kind=StratumType(summary["type"]) if "type" in summary else None,
    )


def format_report(report: ClassificationReport, output: str = "text") -> str:
    if output == "csv":
        return report_to_csv(report)
    return report.to_text()


# =========================
# Busqueda
# =========================
def search_frame(result: SearchResult) -> pd.DataFrame:
    rows = [
        ("summary", "status", result.status),
        ("summary", "depth", str(result.depth)),
        ("summary", "nodes", str(result.nodes)),
        ("summary", "weights_scanned", str(result.weights_scanned)),
        ("summary", "exhausted", str(result.exhausted).lower()),
    ]
    rows += _witness_rows(result.witness, result.certificate)
    for rej in result.rejected:
        rows.append(("rejected", str(rej.residual_level), f"t={rej.minor_valuation} {rej.reason}"))
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def format_search(result: SearchResult, output: str = "text") -> str:
    if output == "csv":
        return search_frame(result).to_csv(index=False)
    return result.to_text()
